#include <doctest.h>

#include "hyperflex/inflection.hpp"
#include "hyperflex/local_expansion.hpp"
#include "hyperflex/resultant.hpp"

#include "test_support.hpp"

using namespace hyperflex;
using namespace hyperflex::testing;

namespace {

HyperellipticCurve worked_g2() {
    return HyperellipticCurve(from_roots({Rat(0), Rat(1), Rat(2), Rat(3), Rat(4)}));
}

} // namespace

TEST_CASE("canonical basis") {
    HyperellipticCurve c2 = worked_g2();
    CHECK(canonical_basis(c2.eq(), 3).elements.size() == 5); // {1,x,x^2,x^3,y}
    CHECK(canonical_basis(c2.eq(), 2).elements.size() == 3); // {1,x,x^2}
    HyperellipticCurve c1(from_roots({Rat(0), Rat(1), Rat(2)}));
    CHECK(canonical_basis(c1.eq(), 3).elements.size() == 6); // {1,x,x^2,x^3,y,xy}
    CHECK(canonical_basis(c2.eq(), 3).rank == 4);
}

TEST_CASE("wronskian_Q for g=2, k=3 is the 4th-derivative factor") {
    HyperellipticCurve hc = worked_g2();
    const QCurve& c = hc.eq();
    // Q * y = y'''' : iterate ff_derivative four times on y
    QFFE d = QFFE::y(c);
    for (int i = 0; i < 4; ++i) d = d.derivative();
    QRatFunc q = wronskian_Q(c, 3);
    CHECK(d.a().is_zero());
    CHECK(q == d.b());
}

TEST_CASE("wronskian_Q is 1 for k = g") {
    HyperellipticCurve hc = worked_g2();
    CHECK(wronskian_Q(hc.eq(), 2) == QRatFunc(1));
}

TEST_CASE("Toeplitz form cross-check (g=2, k=4 and k=5)") {
    HyperellipticCurve hc = worked_g2();
    const QCurve& c = hc.eq();
    for (int k : {4, 5}) {
        int g = 2;
        int m = k - g;
        // precompute y^(j) = B_j y
        std::vector<QRatFunc> yder(static_cast<std::size_t>(2 * k + 1));
        QFFE cur = QFFE::y(c);
        for (std::size_t j = 0; j < yder.size(); ++j) {
            CHECK(cur.a().is_zero());
            yder[j] = cur.b();
            cur = cur.derivative();
        }
        auto fact = [](long n) {
            Rat f(1);
            for (long i = 2; i <= n; ++i) f *= Rat(i);
            return f;
        };
        std::vector<std::vector<QRatFunc>> mat(static_cast<std::size_t>(m));
        for (long i = 1; i <= m; ++i)
            for (long j = 1; j <= m; ++j) {
                long idx = k + 1 + j - i;
                QRatFunc entry = yder[static_cast<std::size_t>(idx)] *
                                 QRatFunc(QPoly(fact(k + j) / fact(idx)));
                mat[static_cast<std::size_t>(i - 1)].push_back(entry);
            }
        QRatFunc toeplitz = bareiss_determinant(std::move(mat));
        QRatFunc q = wronskian_Q(c, k);
        CHECK(toeplitz == q);
    }
}

TEST_CASE("block determinant equals the full Wronskian up to a constant") {
    HyperellipticCurve hc = worked_g2();
    const QCurve& c = hc.eq();
    int k = 3, g = 2;
    SeriesBasis basis = canonical_basis(c, k);
    QFFE w = full_wronskian(c, basis.elements);
    // w must equal const * Q(x) * y^{k-g}; here k-g = 1 so w = c Q y
    QRatFunc q = wronskian_Q(c, k);
    CHECK(w.a().is_zero());
    QRatFunc ratio = w.b() / q;
    CHECK(ratio.num().degree() == 0);
    CHECK(ratio.den().degree() == 0);
    // the poly-block Wronskian of {1..x^k} is prod_{i<=k} i! = 12
    CHECK(ratio == QRatFunc(QPoly(Rat(12))));
}

TEST_CASE("basis change scales the Wronskian by det M") {
    HyperellipticCurve hc = worked_g2();
    const QCurve& c = hc.eq();
    SeriesBasis basis = canonical_basis(c, 3);
    QFFE w0 = full_wronskian(c, basis.elements);
    for (int trial = 0; trial < 3; ++trial) {
        auto nb = basis.elements;
        for (int step = 0; step < 8; ++step) {
            std::size_t i = rng()() % nb.size(), j = rng()() % nb.size();
            if (i == j) continue;
            long mcoef = static_cast<long>(rng()() % 5) - 2;
            nb[i] = nb[i] + nb[j] * QRatFunc(QPoly(Rat(mcoef)));
        }
        QFFE w1 = full_wronskian(c, nb);
        // unimodular row operations: same Wronskian exactly
        CHECK(w1 == w0);
    }
}

TEST_CASE("inflection divisor: g=2 examples") {
    HyperellipticCurve hc = worked_g2();
    SUBCASE("k=2 (k <= g): Inf = 3 R_pi, degree 18") {
        InflectionReport rep = inflection_divisor(hc, 2);
        CHECK(rep.total_degree == 18); // k(k+1)(g+1)
        CHECK(rep.ram_weight == 3);    // C(3,2)
        CHECK(rep.s_degree == 0);
        CHECK(rep.R.degree() == 18);
        CHECK(rep.m_infinity_extra == 0);
        CHECK(rep.real_degree == 18); // k(k+1) n = 2*3*3
        CHECK(rep.distinct_real_points == 6);
    }
    SUBCASE("k=3: total 50 = g(2k-g+1)^2, deg R = 18") {
        InflectionReport rep = inflection_divisor(hc, 3);
        CHECK(rep.total_degree == 50);
        CHECK(rep.ram_weight == 3);
        CHECK(rep.R.degree() == 18);
        CHECK(rep.s_degree == 32); // 4 g (k+1)(k-g)
        CHECK(rep.m_infinity_extra == 0);
        CHECK(rep.s_support.degree() == 16);
    }
    SUBCASE("k=3 real part against the numeric oracle") {
        InflectionReport rep = inflection_divisor(hc, 3);
        // oracle: count real roots of h with f > 0 numerically
        long oracle_pairs = 0;
        auto zs = numeric_roots(rep.s_support);
        for (const auto& z : zs) {
            if (std::abs(z.imag()) > 1e-7) continue;
            double fv = hc.f().eval(Rat(0)).to_double(); // placeholder, recomputed below
            (void)fv;
            double x = z.real();
            double f = 1;
            // f = x(x-1)(x-2)(x-3)(x-4)
            f = x * (x - 1) * (x - 2) * (x - 3) * (x - 4);
            if (f > 0) ++oracle_pairs;
        }
        CHECK(rep.real_degree == 18 + 2 * oracle_pairs);
        CHECK(rep.distinct_real_points == 6 + 2 * oracle_pairs);
        // and the exact count agrees with the summary
        auto [deg_r, per_comp] = real_inflection_summary(hc, 3);
        CHECK(deg_r == rep.real_degree);
        long sum = 0;
        for (long v : per_comp) sum += v;
        CHECK(sum == deg_r);
        CHECK(deg_r >= 18); // g(g+1) n(X), the paper lower bound
    }
}

TEST_CASE("real summary examples") {
    SUBCASE("g=2, k=2: 18 = k(k+1)n") {
        auto [deg_r, per] = real_inflection_summary(worked_g2(), 2);
        CHECK(deg_r == 18);
        CHECK(per == std::vector<long>{6, 6, 6});
    }
    SUBCASE("g=3, k=3, n=1: 12 = k(k+1)n") {
        // f = x(x^2+1)(x^2+2)(x^2+3): 1 real root
        QPoly f = qp({0, 1}) * qp({1, 0, 1}) * qp({2, 0, 1}) * qp({3, 0, 1});
        HyperellipticCurve hc(f);
        REQUIRE(hc.real_component_count() == 1);
        auto [deg_r, per] = real_inflection_summary(hc, 3);
        CHECK(deg_r == 12);
        CHECK(per == std::vector<long>{12});
    }
}

TEST_CASE("parity vectors") {
    HyperellipticCurve hc(from_roots({Rat(0), Rat(1), Rat(2)})); // g=1, n=2
    SUBCASE("kD concentrated at infinity is even") {
        Divisor d;
        d.add_real(RealPoint::infinity(), 6);
        auto par = parity_vector(d, hc);
        CHECK(par == std::vector<int>{0, 0});
    }
    SUBCASE("single simple point") {
        Divisor d;
        d.add_real(RealPoint::finite(AlgNum(Rat(1, 2)), +1), 1); // x=1/2 in [0,1]
        auto par = parity_vector(d, hc);
        CHECK(par == std::vector<int>{1, 0});
    }
    SUBCASE("R_pi on a two-component g=1 curve is (0,0)") {
        Divisor d = hc.ramification_divisor();
        auto par = parity_vector(d, hc);
        CHECK(par == std::vector<int>{0, 0});
    }
}

TEST_CASE("elliptic complete trichotomy") {
    CHECK(elliptic_complete_trichotomy(1, {0}, 6) == std::vector<long>{6});
    CHECK(elliptic_complete_trichotomy(2, {0, 0}, 6) == std::vector<long>{6, 6});
    CHECK(elliptic_complete_trichotomy(2, {1, 1}, 4) == std::vector<long>{0, 0});
    CHECK(elliptic_complete_trichotomy(2, {1, 0}, 5) == std::vector<long>{5, 0});
    CHECK_THROWS_AS(elliptic_complete_trichotomy(2, {1, 0}, 4), input_error);
}

TEST_CASE("g=1 dichotomy: 2k distinct real points per component") {
    SUBCASE("n=1") {
        HyperellipticCurve hc(qp({0, 1, 0, 1})); // x(x^2+1)
        for (int k = 2; k <= 4; ++k) {
            InflectionReport rep = inflection_divisor(hc, k);
            CHECK(rep.distinct_real_points == 2 * k);
            CHECK(rep.per_component_distinct == std::vector<long>{2 * k});
        }
    }
    SUBCASE("n=2") {
        HyperellipticCurve hc(from_roots({Rat(0), Rat(1), Rat(2)}));
        for (int k = 2; k <= 4; ++k) {
            InflectionReport rep = inflection_divisor(hc, k);
            CHECK(rep.distinct_real_points == 4 * k);
            CHECK(rep.per_component_distinct == std::vector<long>{2 * k, 2 * k});
        }
    }
}

TEST_CASE("degree identity on random separable curves") {
    int done = 0;
    while (done < 6) {
        int g = 1 + static_cast<int>(rng()() % 3);
        std::vector<Rat> roots{Rat(0)};
        for (int i = 0; i < g; ++i) roots.push_back(Rat(static_cast<long>(rng()() % 13) + 1 + 13 * i));
        QPoly f = from_roots(roots);
        for (long i = static_cast<long>(roots.size()); i < 2 * g + 1; i += 2)
            f = f * qp({1 + static_cast<long>(rng()() % 5), 0, 1});
        if (f.degree() != 2 * g + 1) continue;
        HyperellipticCurve hc(f);
        int k = g + 1 + static_cast<int>(rng()() % 2);
        InflectionOptions opts;
        opts.real_analysis = false;
        InflectionReport rep = inflection_divisor(hc, k, opts);
        CHECK(rep.total_degree == static_cast<long>(g) * (2 * k - g + 1) * (2 * k - g + 1));
        CHECK(rep.ram_weight == binomial2(g + 1));
        ++done;
    }
}

TEST_CASE("resultant of the curve against the Wronskian factor (derived oracle)") {
    // the S-divisor lifts into U cap V(alpha); projecting the intersection of
    // y^2 - f with y^{k-g} h(x) onto x must reproduce h^2 up to f-factors
    HyperellipticCurve hc = worked_g2();
    InflectionReport rep = inflection_divisor(hc, 3);
    QPoly h = rep.s_support;
    // Res_y(y^2 - f, h(x) y) = h(x)^2 * Res_y(y^2 - f, y) up to sign = h^2 f
    XYPoly p{-hc.f(), QPoly(Rat(0)), QPoly(Rat(1))};
    XYPoly q{QPoly(Rat(0)), h};
    QPoly r = resultant_eliminate_y(p, q);
    QPoly expect = h * h * hc.f();
    CHECK((r == expect || r == -expect));
}
