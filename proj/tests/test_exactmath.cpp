#include <doctest.h>

#include "hyperflex/poly.hpp"
#include "hyperflex/rational_function.hpp"
#include "hyperflex/roots.hpp"

#include "test_support.hpp"

using namespace hyperflex;
using namespace hyperflex::testing;

TEST_CASE("rational basics") {
    Rat a(1, 2), b(3, 4);
    CHECK(a + b == Rat(5, 4));
    CHECK(a * b == Rat(3, 8));
    CHECK((a - b).sign() == -1);
    CHECK(Rat(-4, -8) == Rat(1, 2));
    CHECK(Rat::parse("22/7") == Rat(22, 7));
    CHECK(Rat::parse("-5") == Rat(-5));
    CHECK(Rat(9, 4).sqrt_exact().value() == Rat(3, 2));
    CHECK(!Rat(2).sqrt_exact().has_value());
    CHECK(Rat(2, 3).pow(-2) == Rat(9, 4));
    CHECK(Rat(100, 7).str() == "100/7");
}

TEST_CASE("poly arithmetic and division") {
    QPoly p = qp({-2, 0, 1});         // x^2 - 2
    QPoly q = qp({1, 1});             // x + 1
    CHECK((p * q).degree() == 3);
    CHECK(p.eval(Rat(3)) == Rat(7));
    auto [quot, rem] = (p * q + qp({5})).divmod(q);
    CHECK(quot == p);
    CHECK(rem == qp({5}));
    CHECK(p.derivative() == qp({0, 2}));
    QPoly f = from_roots({Rat(1), Rat(2), Rat(3)});
    CHECK(f.eval(Rat(2)).is_zero());
    CHECK(gcd(f, f.derivative()).degree() == 0);
    QPoly g = from_roots({Rat(1), Rat(1), Rat(4)});
    CHECK(gcd(g, g.derivative()) == qp({-1, 1}));
}

TEST_CASE("squarefree decomposition (Yun)") {
    QPoly p = from_roots({Rat(1), Rat(1), Rat(-2)});
    auto dec = squarefree_decomposition(p);
    REQUIRE(dec.size() == 2);
    CHECK(dec[0].first == qp({2, 1}));
    CHECK(dec[0].second == 1);
    CHECK(dec[1].first == qp({-1, 1}));
    CHECK(dec[1].second == 2);
}

TEST_CASE("sturm_count examples") {
    CHECK(sturm_count(qp({-2, 0, 1}), Rat(0), Rat(2)) == 1);
    CHECK(sturm_count(qp({1, 0, 1}), Rat(-10), Rat(10)) == 0);
    QPoly f = from_roots({Rat(0), Rat(1), Rat(2), Rat(3), Rat(4)});
    CHECK(sturm_count(f, Rat(-1), Rat(5)) == 5);
    CHECK_THROWS_AS(sturm_count(f, Rat(0), Rat(5)), input_error);
}

TEST_CASE("sturm beyond the Cauchy bound counts all distinct real roots") {
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rat> roots;
        int nroots = 1 + static_cast<int>(rng()() % 5);
        for (int i = 0; i < nroots; ++i) roots.push_back(random_rat());
        QPoly p = from_roots(roots);
        std::sort(roots.begin(), roots.end());
        long distinct = static_cast<long>(std::unique(roots.begin(), roots.end()) - roots.begin());
        Rat m = cauchy_root_bound(p);
        CHECK(sturm_count(p, -m, m) == distinct);
        CHECK(sturm_count_all(p) == distinct);
    }
}

TEST_CASE("isolate_real_roots examples") {
    SUBCASE("(x-1)^2 (x+2)") {
        QPoly p = from_roots({Rat(1), Rat(1), Rat(-2)});
        auto roots = isolate_real_roots(p);
        REQUIRE(roots.size() == 2);
        CHECK(roots[0].multiplicity == 1);
        CHECK(roots[0].lo < Rat(-2));
        CHECK(roots[0].hi > Rat(-2));
        CHECK(roots[1].multiplicity == 2);
        CHECK(roots[1].lo < Rat(1));
        CHECK(roots[1].hi > Rat(1));
    }
    SUBCASE("x^2 + 1") {
        CHECK(isolate_real_roots(qp({1, 0, 1})).empty());
    }
    SUBCASE("multiplicity bookkeeping") {
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Rat> roots;
            int nroots = 1 + static_cast<int>(rng()() % 4);
            for (int i = 0; i < nroots; ++i) roots.push_back(Rat(static_cast<long>(rng()() % 7) - 3));
            QPoly p = from_roots(roots) * qp({1, 0, 1});
            auto isolated = isolate_real_roots(p);
            long total = 0;
            for (const auto& r : isolated) total += r.multiplicity;
            CHECK(total + 2 == p.degree());
            for (std::size_t i = 0; i + 1 < isolated.size(); ++i)
                CHECK(isolated[i].hi <= isolated[i + 1].lo);
        }
    }
}

TEST_CASE("sign_at_root examples") {
    QPoly sqrt2 = qp({-2, 0, 1});
    auto roots = isolate_real_roots(sqrt2);
    REQUIRE(roots.size() == 2);
    const IsolatedRoot& r = roots[1]; // sqrt(2) in (0,..)
    CHECK(r.lo >= Rat(0));
    CHECK(sign_at_root(qp({-3, 1}), r) == -1); // sqrt(2) - 3 < 0
    CHECK(sign_at_root(sqrt2, r) == 0);
    CHECK(sign_at_root(qp({-1, 1}), r) == 1); // sqrt(2) > 1
}

TEST_CASE("algebraic number comparisons") {
    auto roots2 = isolate_real_roots(qp({-2, 0, 1}));
    auto roots3 = isolate_real_roots(qp({-3, 0, 1}));
    AlgNum s2(roots2[1]), s3(roots3[1]), s2b(roots2[1]);
    CHECK(compare(s2, s3) == -1);
    CHECK(compare(s3, s2) == 1);
    CHECK(compare(s2, s2b) == 0);
    AlgNum q(Rat(3, 2));
    CHECK(compare(q, s2) == 1); // 1.5 > sqrt(2)
    AlgNum z(Rat(0));
    CHECK(compare(z, s2) == -1);
}

TEST_CASE("rational function reduction") {
    QRatFunc f(qp({0, 1}));            // x
    QRatFunc g(qp({-1, 1}), qp({1, 1})); // (x-1)/(x+1)
    QRatFunc h = f * g;
    CHECK(h.num() == qp({0, -1, 1}));
    CHECK(h.den() == qp({1, 1}));
    QRatFunc s = g + g;
    CHECK(s.num() == qp({-2, 2}));
    QRatFunc d = g.derivative();
    // ((x-1)/(x+1))' = 2/(x+1)^2
    CHECK(d.num() == qp({2}));
    CHECK(d.den() == qp({1, 2, 1}));
    CHECK(g.order_at(Rat(1)) == 1);
    CHECK(g.order_at(Rat(-1)) == -1);
}

TEST_CASE("rational functions in t as scalars") {
    TScalar t = TScalar::x();
    TPoly p{t, TScalar(Rat(2)) * t * t}; // t + 2t^2 x
    TPoly q = p * p;
    CHECK(q.degree() == 2);
    CHECK(q.coeff(0) == t * t);
}
