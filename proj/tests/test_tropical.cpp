#include <doctest.h>

#include "hyperflex/tropical.hpp"
#include "hyperflex/specialize.hpp"

#include "test_support.hpp"

using namespace hyperflex;
using namespace hyperflex::testing;

namespace {

PatchworkFamily worked_family() {
    EllipticPiece p1 = EllipticPiece::from_roots(1, Rat(1), Rat(1), Rat(2));
    EllipticPiece p2 = EllipticPiece::from_roots(2, Rat(1, 12), Rat(3), Rat(4));
    return assemble_family({p1, p2});
}

} // namespace

TEST_CASE("tropicalize the worked g=2 family") {
    TropicalPlaneCurve t = tropicalize(worked_family());
    // default nu = (0,2,6) at odd indices: a_i = (nu(2i+1)-nu(2i-1))/2
    REQUIRE(t.vertices.size() == 2);
    CHECK(t.vertices[0].x == Rat(1));
    CHECK(t.vertices[0].y == Rat(1, 2)); // (1*1 - 0)/2
    CHECK(t.vertices[1].x == Rat(2));
    CHECK(t.vertices[1].y == Rat(2)); // (3*2 - 2)/2
    // one bounded edge with direction (2, 3), weight 1
    long bounded = 0;
    for (const auto& e : t.edges)
        if (e.to >= 0) {
            ++bounded;
            CHECK(e.dir_x == 2);
            CHECK(e.dir_y == 3);
            CHECK(e.weight == 1);
            CHECK(*e.length == Rat(1, 2)); // (a_2 - a_1)/2
        }
    CHECK(bounded == 1);
    CHECK(t.edges.size() == 1 + 2 + 2); // bounded + two diagonal rays + two down rays
    CHECK(t.is_balanced());
}

TEST_CASE("tropicalize a hand-solved nu") {
    // nu = (0, 0, 1) at odd indices (no even coefficients): vertices solve
    // 2y = x - 0 = 3x - 0 and 2y = 3x - 0 = 5x - 1
    EllipticPiece p1 = EllipticPiece::from_roots(1, Rat(1), Rat(1), Rat(-1));   // x(x^2-1): even term 0
    EllipticPiece p2 = EllipticPiece::from_roots(2, Rat(-1), Rat(2), Rat(-2)); // lead = 1/((2)(-2)) = -1/4 -> adjust
    // gluing needs lead1 = lead2 * r21 * r22 = lead2 * (-4): lead2 = -1/4
    p2 = EllipticPiece::from_roots(2, Rat(-1, 4), Rat(2), Rat(-2));
    NuFunction nu;
    nu.g = 2;
    nu.values = {{1, 0}, {3, 0}, {5, 1}};
    PatchworkFamily fam = assemble_family({p1, p2}, nu);
    TropicalPlaneCurve t = tropicalize(fam);
    CHECK(t.vertices[0].x == Rat(0));
    CHECK(t.vertices[0].y == Rat(0));
    CHECK(t.vertices[1].x == Rat(1, 2));
    CHECK(t.vertices[1].y == Rat(3, 4)); // 2y = 3x at x=1/2
    CHECK(t.is_balanced());
}

TEST_CASE("skeleton of the worked family") {
    MetrizedComplex sk = build_skeleton(worked_family());
    CHECK(sk.g == 2);
    CHECK(sk.type_one_count() == 6); // 2g+2
    CHECK(sk.finite_edge_count() == 1);
    CHECK(sk.finite_edge_lengths[0] == Rat(1, 2)); // (0 - 4 + 6)/4
    REQUIRE(sk.marked_sets.size() == 2);
    // v_1: 0 is type-I, infinity is the attachment towards v_2
    int attachments = 0;
    for (const auto& m : sk.marked_sets[0])
        if (m.attachment) ++attachments;
    CHECK(attachments == 1);
    // Gamma variant drops non-attachment marks
    auto gamma = sk.gamma_marked_sets();
    CHECK(gamma[0].size() == 1);
    CHECK(gamma[1].size() == 1);
    CHECK(sk.vertex_x_valuation(1) == Rat(1));
    CHECK(sk.vertex_x_valuation(2) == Rat(2));
}

TEST_CASE("skeleton of a g=1 family") {
    EllipticPiece p = EllipticPiece::from_roots(1, Rat(1), Rat(1), Rat(2));
    MetrizedComplex sk = build_skeleton(assemble_family({p}));
    CHECK(sk.g == 1);
    CHECK(sk.type_one_count() == 4);
    CHECK(sk.finite_edge_count() == 0);
    for (const auto& m : sk.marked_sets[0]) CHECK(!m.attachment);
}

TEST_CASE("newton polygon of the family equation") {
    PatchworkFamily fam = worked_family();
    auto segs = t_newton_polygon(family_f_xt(fam));
    REQUIRE(segs.size() == 2);
    CHECK(segs[0].slope == Rat(1));
    CHECK(segs[1].slope == Rat(2));
    // residuals recover the pieces' root structure
    CHECK(segs[0].residual == qp({2, -3, 1}));            // (z-1)(z-2)
    CHECK(segs[1].residual == QPoly{Rat(1), Rat(-7, 12), Rat(1, 12)}); // (1/12)(z-3)(z-4)
}

TEST_CASE("specialize_divisor routing") {
    MetrizedComplex sk = build_skeleton(worked_family());
    SUBCASE("degree preservation and interior landing") {
        SpecPoint pt;
        pt.t_exponent = Rat(-1); // vertex 1 has x-valuation a_1 = 1
        pt.lead_support = qp({-5, 1}); // alpha = 5, f_piece(5) = 5*4*3 > 0: two real points
        pt.mult = 1;
        ComplexDivisor d = specialize_divisor({pt}, sk);
        CHECK(d.total_degree() == 2);
        CHECK(d.vertex_weight[0] == 2);
        CHECK(d.curve_parts[0].interior.real_degree() == 2);
        CHECK(d.curve_parts[0].interior_degree() == 2);
    }
    SUBCASE("off-curve valuation is surfaced") {
        SpecPoint pt;
        pt.t_exponent = Rat(-3, 2); // between the two vertices: on an edge
        pt.lead_support = qp({-5, 1});
        CHECK_THROWS_AS(specialize_divisor({pt}, sk), valuation_off_curve);
    }
    SUBCASE("conjugate leading pair") {
        SpecPoint pt;
        pt.t_exponent = Rat(-2);
        pt.lead_support = qp({1, 0, 1}); // alpha = +-i
        pt.mult = 2;
        ComplexDivisor d = specialize_divisor({pt}, sk);
        CHECK(d.total_degree() == 8); // 2 roots x 2 sheets x mult 2
        CHECK(d.vertex_weight[1] == 8);
        CHECK(d.curve_parts[1].interior.real_degree() == 0);
    }
}

TEST_CASE("inflection specialization of the worked family") {
    PatchworkFamily fam = worked_family();
    MetrizedComplex sk = build_skeleton(fam);
    int k = 3, g = 2;
    ComplexDivisor d = specialize_family_inflection(fam, k, sk);
    CHECK(d.total_degree() == g * (2 * k - g + 1) * (2 * k - g + 1)); // 50
    CHECK(d.respects_marked_points(sk));
    // graph weight at each vertex is 4(k+1)(k-g)
    CHECK(d.vertex_weight[0] == 16);
    CHECK(d.vertex_weight[1] == 16);
    // every type-I point carries C(g+1,2)
    for (const auto& [name, w] : d.type_one_weight) CHECK(w == 3);
    // every slope of the Wronskian Newton polygon hits a vertex; checked by
    // construction (family_s_points would have thrown otherwise)
    auto pts = family_s_points(fam, k);
    long total = 0;
    for (const auto& p : pts) total += 2 * p.mult * p.lead_support.degree();
    CHECK(total == 32); // 4 g (k+1)(k-g)
}

TEST_CASE("residuals of the Wronskian NP match the per-piece interior Wronskians") {
    PatchworkFamily fam = worked_family();
    int k = 3;
    XTPoly h = family_s_support(fam, k);
    auto segs = t_newton_polygon(h);
    REQUIRE(segs.size() == 2);
    for (std::size_t i = 0; i < 2; ++i) {
        EllipticPiece piece = initial_degeneration(fam, static_cast<int>(i) + 1);
        EllipticSeries es = make_elliptic_series(piece, k, 2);
        EllipticInflectionReport rep = elliptic_inflection(es);
        // same monic support polynomial, exactly
        CHECK(segs[i].residual.monic() == rep.s_support);
    }
}
