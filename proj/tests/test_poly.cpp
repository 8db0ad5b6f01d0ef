#include <catch2/catch_amalgamated.hpp>

#include "genus2/tower.hpp"
#include "helpers.hpp"

using namespace genus2;

TEST_CASE("poly arithmetic basics", "[poly]") {
    const FieldCtx* F5 = field(5);
    Poly f = Poly::from_ints(F5, {1, 0, 1});  // x^2 + 1

    CHECK(poly_pow(f, 0) == Poly::from_ints(F5, {1}));
    CHECK(poly_pow(f, 2) == Poly::from_ints(F5, {1, 0, 2, 0, 1}));  // x^4 + 2x^2 + 1

    const FieldCtx* F3 = field(3);
    Poly g = Poly::from_ints(F3, {0, -1, 0, 0, 0, 1});  // x^5 - x
    CHECK(poly_pow(g, 1) == g);

    CHECK(poly_pow(f, 3).deg() == 6);  // deg(f^e) = e deg(f)

    // division invariant: a = q*b + r with deg r < deg b
    auto rng = g2test::rng();
    for (int t = 0; t < 50; ++t) {
        Poly a = g2test::random_poly(F5, 7, rng), b = g2test::random_poly(F5, 3, rng);
        auto [q, r] = divrem(a, b);
        CHECK(q * b + r == a);
        CHECK(r.deg() < b.deg());
    }

    // product degree adds (no zero divisors)
    for (int t = 0; t < 20; ++t) {
        Poly a = g2test::random_poly(F5, 4, rng), b = g2test::random_poly(F5, 5, rng);
        CHECK((a * b).deg() == 9);
    }
}

TEST_CASE("gcd and squarefree detection", "[poly]") {
    const FieldCtx* F7 = field(7);
    Poly x = Poly::x(F7);
    Poly f = (x - Poly::from_ints(F7, {1})) * (x - Poly::from_ints(F7, {1})) * (x - Poly::from_ints(F7, {2}));
    CHECK_FALSE(is_squarefree(f));
    CHECK(is_squarefree(Poly::from_ints(F7, {0, -1, 0, 0, 0, 1})));

    // gcd(f, f') is constant iff f squarefree: 1000 random polynomials per field
    for (auto [p, k] : std::vector<std::pair<u64, unsigned>>{{3, 1}, {5, 1}, {7, 1}, {3, 2}, {5, 2}}) {
        const FieldCtx* F = field(p, k);
        auto rng = g2test::rng(p * 100 + k);
        for (int t = 0; t < 1000; ++t) {
            Poly g = g2test::random_poly(F, 2 + (int)(rng() % 5), rng);
            bool sf = is_squarefree(g);
            Fe d = discriminant(g);
            CHECK(d.is_zero() == !sf);
        }
    }
}

TEST_CASE("discriminant values", "[poly]") {
    const FieldCtx* F7 = field(7);
    CHECK(discriminant(Poly::from_ints(F7, {-1, 0, 1})) == Fe::from_int(F7, 4));  // x^2-1: (1-(-1))^2

    // x(x-1)(x+1) = x^3 - x over F_7: roots {0,1,-1}, product of squared diffs = 4
    Poly f = Poly::from_ints(F7, {0, -1, 0, 1});
    CHECK(discriminant(f) == Fe::from_int(F7, 4));

    Poly sq = Poly::from_ints(F7, {1, 2, 1});  // (x+1)^2
    CHECK(discriminant(sq).is_zero());

    // monic split f: disc equals the product of squared root differences exactly
    auto rng = g2test::rng(42);
    for (auto p : {7ull, 11ull, 13ull}) {
        const FieldCtx* F = field(p);
        for (int t = 0; t < 25; ++t) {
            // build monic from 4 distinct random roots
            std::vector<Fe> roots;
            while (roots.size() < 4) {
                Fe r = g2test::random_fe(F, rng);
                bool dup = false;
                for (auto& s : roots) dup |= (s == r);
                if (!dup) roots.push_back(r);
            }
            Poly f2 = Poly::from_ints(F, {1});
            for (auto& r : roots) f2 = f2 * (Poly::x(F) - Poly::constant(r));
            Fe prod = Fe::one(F);
            for (size_t i = 0; i < roots.size(); ++i)
                for (size_t j = i + 1; j < roots.size(); ++j) {
                    Fe d = roots[i] - roots[j];
                    prod = prod * d * d;
                }
            CHECK(discriminant(f2) == prod);
        }
    }
}

TEST_CASE("splitting data", "[poly]") {
    const FieldCtx* F7 = field(7);

    auto [m1, r1] = splitting_data(Poly::from_ints(F7, {-1, 0, 1}));  // x^2 - 1
    CHECK(m1 == 1);
    REQUIRE(r1.size() == 2);
    CHECK(r1[0] == Fe::from_int(F7, 1));
    CHECK(r1[1] == Fe::from_int(F7, 6));

    auto [m2, r2] = splitting_data(Poly::from_ints(F7, {1, 0, 1}));  // x^2 + 1, -1 non-square mod 7
    CHECK(m2 == 2);
    REQUIRE(r2.size() == 2);
    for (auto& r : r2) CHECK(r * r == Fe::from_int(r.F, -1));

    auto [m3, r3] = splitting_data(Poly::from_ints(F7, {0, -1, 0, 0, 0, 1}));  // x^5 - x
    CHECK(m3 == 2);
    REQUIRE(r3.size() == 5);
    const FieldCtx* F49 = field(7, 2);
    std::vector<Fe> expect = {Fe::zero(F49), embed(Fe::from_int(F7, 1), F49), embed(Fe::from_int(F7, -1), F49)};
    for (auto& e : expect) {
        bool found = false;
        for (auto& r : r3) found |= (r == e);
        CHECK(found);
    }

    CHECK_THROWS_AS(splitting_data(Poly::from_ints(F7, {1, 2, 1})), singular_error);

    // roots satisfy f(r)=0 and lc * prod(x - r_i) reproduces f
    auto rng = g2test::rng(5);
    for (auto [p, k] : std::vector<std::pair<u64, unsigned>>{{5, 1}, {11, 1}, {3, 2}}) {
        const FieldCtx* F = field(p, k);
        for (int t = 0; t < 10; ++t) {
            Poly f = g2test::random_squarefree(F, 5, rng);
            auto [m, roots] = splitting_data(f);
            REQUIRE((int)roots.size() == f.deg());
            const FieldCtx* E = roots[0].F;
            Poly fe = embed(f, E);
            Poly rebuilt = Poly::constant(fe.lc());
            for (auto& r : roots) {
                CHECK(eval(fe, r).is_zero());
                rebuilt = rebuilt * (Poly::x(E) - Poly::constant(r));
            }
            CHECK(rebuilt == fe);
            for (size_t i = 0; i + 1 < roots.size(); ++i) CHECK(roots[i] != roots[i + 1]);
        }
    }
}

TEST_CASE("factor degrees by DDF", "[poly]") {
    const FieldCtx* F7 = field(7);
    // x^5 - x = x(x-1)(x+1)(x^2+1) over F_7
    auto degs = factor_degrees(Poly::from_ints(F7, {0, -1, 0, 0, 0, 1}));
    std::map<int, int> got(degs.begin(), degs.end());
    CHECK(got[1] == 3);
    CHECK(got[2] == 1);
}
