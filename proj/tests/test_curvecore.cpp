#include <doctest.h>

#include "hyperflex/curve.hpp"
#include "hyperflex/local_expansion.hpp"
#include "hyperflex/resultant.hpp"

#include "test_support.hpp"

using namespace hyperflex;
using namespace hyperflex::testing;

namespace {

HyperellipticCurve g1_two_components() {
    // f = x(x-1)(x-2)
    return HyperellipticCurve(from_roots({Rat(0), Rat(1), Rat(2)}));
}

HyperellipticCurve g1_one_component() {
    // f = x(x^2+1)
    return HyperellipticCurve(qp({0, 1, 0, 1}));
}

HyperellipticCurve g2_worked() {
    // f = x(x-1)(x-2)(x-3)(x-4)
    return HyperellipticCurve(from_roots({Rat(0), Rat(1), Rat(2), Rat(3), Rat(4)}));
}

} // namespace

TEST_CASE("real_component_count") {
    CHECK(g1_one_component().real_component_count() == 1);
    CHECK(g1_two_components().real_component_count() == 2);
    CHECK(g2_worked().real_component_count() == 3);
    CHECK_THROWS_AS(HyperellipticCurve(from_roots({Rat(0), Rat(1), Rat(1)})), nonseparable_error);
}

TEST_CASE("topological_type") {
    CHECK(g2_worked().topological_type() == std::tuple<int, int, int>{2, 3, 0});
    // 3 real roots: (2, 2, 1)
    HyperellipticCurve c2(from_roots({Rat(0), Rat(1), Rat(2)}) * qp({1, 0, 1}));
    CHECK(c2.topological_type() == std::tuple<int, int, int>{2, 2, 1});
    // 1 real root: (2, 1, 1)
    HyperellipticCurve c1(qp({0, 1}) * qp({1, 0, 1}) * qp({2, 0, 1}));
    CHECK(c1.topological_type() == std::tuple<int, int, int>{2, 1, 1});
}

TEST_CASE("ramification_divisor") {
    SUBCASE("g=1 three real roots") {
        Divisor d = g1_two_components().ramification_divisor();
        CHECK(d.degree() == 4);
        CHECK(d.real_degree() == 4);
        CHECK(d.distinct_real_points() == 4);
    }
    SUBCASE("g=2 all real") {
        Divisor d = g2_worked().ramification_divisor();
        CHECK(d.degree() == 6);
        CHECK(d.real_degree() == 6);
    }
    SUBCASE("g=2 with conjugate pair") {
        HyperellipticCurve c(from_roots({Rat(0), Rat(1), Rat(2)}) * qp({1, 0, 1}));
        Divisor d = c.ramification_divisor();
        CHECK(d.degree() == 6);
        CHECK(d.real_degree() == 4);
    }
}

TEST_CASE("component indexing") {
    HyperellipticCurve c = g2_worked(); // positive intervals: [0,1], [2,3], [4,inf)
    CHECK(c.component_of_x(AlgNum(Rat(1, 2))) == 0);
    CHECK(c.component_of_x(AlgNum(Rat(5, 2))) == 1);
    CHECK(c.component_of_x(AlgNum(Rat(7))) == 2);
    CHECK(c.component_of_infinity() == 2);
    CHECK(c.component_of_x(AlgNum(Rat(0))) == 0);
    CHECK(c.component_of_x(AlgNum(Rat(4))) == 2);
    CHECK_THROWS_AS(c.component_of_x(AlgNum(Rat(3, 2))), input_error);
}

TEST_CASE("ff arithmetic and derivative") {
    HyperellipticCurve hc = g2_worked();
    const QCurve& c = hc.eq();
    QFFE y = QFFE::y(c);
    QFFE x = QFFE::x(c);

    SUBCASE("y' = (f'/2f) y") {
        QFFE dy = y.derivative();
        CHECK(dy.a().is_zero());
        QRatFunc expect(c.f.derivative(), c.f * Rat(2));
        CHECK(dy.b() == expect);
    }
    SUBCASE("(x^3)' = 3x^2") {
        QFFE x3 = QFFE::xpow(c, 3);
        CHECK(x3.derivative() == QFFE::xpow(c, 2) * QRatFunc(QPoly(Rat(3))));
    }
    SUBCASE("(xy)' = (1 + x f'/(2f)) y") {
        QFFE xy = x * y;
        QFFE d = xy.derivative();
        CHECK(d.a().is_zero());
        QRatFunc expect = QRatFunc(1) + QRatFunc::x() * QRatFunc(c.f.derivative(), c.f * Rat(2));
        CHECK(d.b() == expect);
    }
    SUBCASE("Leibniz rule on random elements") {
        for (int trial = 0; trial < 5; ++trial) {
            QFFE u(&c, QRatFunc(qp({1, 2}) * QPoly(random_rat())), QRatFunc(QPoly(random_rat())));
            QFFE v(&c, QRatFunc(QPoly(random_rat())), QRatFunc(qp({0, 1}) * QPoly(random_rat())));
            CHECK((u * v).derivative() == u.derivative() * v + u * v.derivative());
        }
    }
    SUBCASE("(y^2)' both ways") {
        QFFE y2 = y * y;
        CHECK(y2.a() == QRatFunc(c.f));
        QFFE direct = y2.derivative();
        QFFE via_product = y.derivative() * y + y * y.derivative();
        CHECK(direct == via_product);
        CHECK(direct.a() == QRatFunc(c.f.derivative()));
    }
    SUBCASE("involution antisymmetry") {
        QFFE e(&c, QRatFunc(qp({1, 1})), QRatFunc(qp({2, 0, 1})));
        CHECK(e.derivative().conj_h() == e.conj_h().derivative());
    }
    SUBCASE("field inverse") {
        QFFE e = x + y;
        QFFE p = e * e.inverse();
        CHECK(p == QFFE::one(c));
    }
}

TEST_CASE("local expansions give divisor orders") {
    HyperellipticCurve hc = g2_worked();
    const QCurve& c = hc.eq();
    QFFE x = QFFE::x(c);
    QFFE y = QFFE::y(c);

    // div(x) = 2*0 - 2*inf
    CHECK(local_valuation(c, x, ExpansionPoint::ramified(Rat(0))) == 2);
    CHECK(local_valuation(c, x, ExpansionPoint::infinity()) == -2);
    // div(y) has pole order 2g+1 = 5 at infinity, order 1 at branch points
    CHECK(local_valuation(c, y, ExpansionPoint::infinity()) == -5);
    CHECK(local_valuation(c, y, ExpansionPoint::ramified(Rat(0))) == 1);
    CHECK(local_valuation(c, y, ExpansionPoint::ramified(Rat(3))) == 1);
    // x^2 y at (0,0): 2*2 + 1 = 5
    CHECK(local_valuation(c, QFFE::xpow(c, 2) * y, ExpansionPoint::ramified(Rat(0))) == 5);
    // unramified point x=5 (f(5) = 120 > 0): x - 5 vanishes to order 1
    QFFE xm5 = x - QFFE(&c, QRatFunc(QPoly(Rat(5))), QRatFunc(0));
    CHECK(local_valuation(c, xm5, ExpansionPoint::unramified(Rat(5), +1)) == 1);
    // y - sqrt(f(5)) vanishes at (5, +sqrt(120)) but not at (5, -sqrt(120));
    // exercised through y^2 - f(5) which vanishes to order 1 on each sheet
    QFFE y2mf5 = y * y - QFFE(&c, QRatFunc(QPoly(Rat(120))), QRatFunc(0));
    CHECK(local_valuation(c, y2mf5, ExpansionPoint::unramified(Rat(5), +1)) == 1);
    CHECK(local_valuation(c, y2mf5, ExpansionPoint::unramified(Rat(5), -1)) == 1);
}

TEST_CASE("principal divisors have degree zero") {
    HyperellipticCurve hc = g1_two_components();
    const QCurve& c = hc.eq();
    QFFE y = QFFE::y(c);
    // div(y) = 1*(0,0) + 1*(1,0) + 1*(2,0) - 3*inf
    long total = 0;
    for (Rat r : {Rat(0), Rat(1), Rat(2)})
        total += local_valuation(c, y, ExpansionPoint::ramified(r));
    total += local_valuation(c, y, ExpansionPoint::infinity());
    CHECK(total == 0);

    // div of A(x) = (x-5)/(x-7): zeros over x=5, poles over x=7, balanced at inf
    QFFE e(&c, QRatFunc(qp({-5, 1}), qp({-7, 1})), QRatFunc(0));
    long deg = 0;
    for (int br : {+1, -1}) {
        deg += local_valuation(c, e, ExpansionPoint::unramified(Rat(5), br));
        deg += local_valuation(c, e, ExpansionPoint::unramified(Rat(7), br));
    }
    deg += local_valuation(c, e, ExpansionPoint::infinity());
    CHECK(deg == 0);
}

TEST_CASE("vanishing sequences") {
    SUBCASE("basis {1, x, x^2} at a branch point of a g=1 curve") {
        HyperellipticCurve hc = g1_two_components();
        const QCurve& c = hc.eq();
        std::vector<QFFE> basis{QFFE::one(c), QFFE::x(c), QFFE::xpow(c, 2)};
        auto seq = vanishing_sequence(c, basis, ExpansionPoint::ramified(Rat(1)));
        CHECK(seq == std::vector<long>{0, 2, 4});
    }
    SUBCASE("basis {1, x} at a generic rational point") {
        HyperellipticCurve hc = g1_two_components();
        const QCurve& c = hc.eq();
        std::vector<QFFE> basis{QFFE::one(c), QFFE::x(c)};
        auto seq = vanishing_sequence(c, basis, ExpansionPoint::unramified(Rat(5), +1));
        CHECK(seq == std::vector<long>{0, 1});
    }
    SUBCASE("pole normalization at infinity") {
        HyperellipticCurve hc = g2_worked();
        const QCurve& c = hc.eq();
        // basis of L(3D), k=3, g=2: {1, x, x^2, x^3, y}, generic pole order 2k=6
        std::vector<QFFE> basis{QFFE::one(c), QFFE::x(c), QFFE::xpow(c, 2), QFFE::xpow(c, 3),
                                QFFE::y(c)};
        auto seq = vanishing_sequence(c, basis, ExpansionPoint::infinity(), 6);
        CHECK(seq == std::vector<long>{0, 1, 2, 4, 6});
        CHECK(weight_of_sequence(seq) == 3); // C(g+1, 2)
    }
    SUBCASE("invariance under unimodular change of basis") {
        HyperellipticCurve hc = g2_worked();
        const QCurve& c = hc.eq();
        std::vector<QFFE> basis{QFFE::one(c), QFFE::x(c), QFFE::xpow(c, 2)};
        auto ref = vanishing_sequence(c, basis, ExpansionPoint::ramified(Rat(2)));
        for (int trial = 0; trial < 3; ++trial) {
            // random integer unimodular 3x3 (product of elementary operations)
            std::vector<QFFE> nb = basis;
            for (int step = 0; step < 6; ++step) {
                std::size_t i = rng()() % 3, j = rng()() % 3;
                if (i == j) continue;
                long m = static_cast<long>(rng()() % 5) - 2;
                nb[i] = nb[i] + nb[j] * QRatFunc(QPoly(Rat(m)));
            }
            CHECK(vanishing_sequence(c, nb, ExpansionPoint::ramified(Rat(2))) == ref);
        }
    }
    SUBCASE("dependent set is rejected") {
        HyperellipticCurve hc = g1_two_components();
        const QCurve& c = hc.eq();
        std::vector<QFFE> dep{QFFE::one(c), QFFE::x(c), QFFE::x(c) + QFFE::one(c)};
        CHECK_THROWS_AS(vanishing_sequence(c, dep, ExpansionPoint::unramified(Rat(5), 1)),
                        computation_error);
    }
}

TEST_CASE("resultants") {
    // p = y^2 - x, q = y - 1, eliminate y -> +-(x - 1)
    XYPoly p{QPoly{Rat(0), Rat(-1)}, QPoly(Rat(0)), QPoly(Rat(1))}; // -x + y^2
    XYPoly q{QPoly(Rat(-1)), QPoly(Rat(1))};                        // -1 + y
    QPoly r = resultant_eliminate_y(p, q);
    CHECK((r == qp({-1, 1}) || r == qp({1, -1})));

    // p = y^2 - f, q = y: eliminate y -> +-f
    QPoly f = from_roots({Rat(0), Rat(1), Rat(2)});
    XYPoly p2{-f, QPoly(Rat(0)), QPoly(Rat(1))};
    XYPoly q2{QPoly(Rat(0)), QPoly(Rat(1))};
    QPoly r2 = resultant_eliminate_y(p2, q2);
    CHECK((r2 == f || r2 == -f));

    // degree bound: deg Res_y(p, q) <= deg_x p * deg_y q + deg_x q * deg_y p
    CHECK_THROWS_AS(resultant_eliminate_y(XYPoly{QPoly(Rat(2))}, XYPoly{QPoly(Rat(3))}),
                    input_error);
}

TEST_CASE("series matches Taylor data of the rational function") {
    QRatFunc r(qp({1, 2, 1}), qp({3, 1}));
    QPoly shift{Rat(2), Rat(1)}; // x = 2 + tau
    Series<Rat> num = Series<Rat>::from_poly(r.num().compose(shift)).truncated(24);
    Series<Rat> den = Series<Rat>::from_poly(r.den().compose(shift)).truncated(24);
    Series<Rat> s = num / den;
    QRatFunc d = r;
    Rat fact(1);
    for (long e = 0; e < 8; ++e) {
        if (e > 0) {
            d = d.derivative();
            fact *= Rat(e);
        }
        CHECK(s.coeff(e) == d.eval(Rat(2)) / fact);
    }
}
