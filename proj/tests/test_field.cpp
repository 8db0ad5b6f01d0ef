#include <catch2/catch_amalgamated.hpp>
#include <set>

#include "genus2/tower.hpp"
#include "helpers.hpp"

using namespace genus2;
using g2test::random_fe;
using g2test::random_nonzero;

TEST_CASE("legendre symbol", "[field]") {
    CHECK(legendre_symbol(0, 7) == 0);

    // independent oracle: exhaustive squares mod 11
    std::set<u64> squares11;
    for (u64 x = 1; x < 11; ++x) squares11.insert(x * x % 11);
    CHECK(squares11 == std::set<u64>{1, 3, 4, 5, 9});
    CHECK(squares11.count(10) == 0);  // -1 mod 11
    CHECK(legendre_symbol(-1, 11) == -1);

    std::set<u64> squares13;
    for (u64 x = 1; x < 13; ++x) squares13.insert(x * x % 13);
    CHECK(squares13.count(10) == 1);  // -3 mod 13
    CHECK(legendre_symbol(-3, 13) == 1);

    for (u64 p : {3ull, 5ull, 7ull, 11ull, 13ull, 17ull}) {
        std::set<u64> sq;
        for (u64 x = 1; x < p; ++x) sq.insert(mulmod(x, x, p));
        for (i64 a = -20; a <= 20; ++a) {
            i64 r = ((a % (i64)p) + (i64)p) % (i64)p;
            int expect = r == 0 ? 0 : (sq.count((u64)r) ? 1 : -1);
            CHECK(legendre_symbol(a, p) == expect);
        }
    }

    CHECK_THROWS_AS(legendre_symbol(1, 2), invalid_field_error);
    CHECK_THROWS_AS(legendre_symbol(1, 15), invalid_field_error);
}

TEST_CASE("field context construction", "[field]") {
    const FieldCtx* F7 = field(7);
    CHECK(F7->p == 7);
    CHECK(F7->k == 1);
    CHECK(F7->size == 7);

    const FieldCtx* F49 = field(7, 2);
    CHECK(F49->size == 49);
    CHECK(F49->modulus.size() == 3);
    CHECK(F49->modulus.back() == 1);

    // deterministic: same pointer on repeated lookup
    CHECK(field(7, 2) == F49);

    // the stored modulus is irreducible: no roots in F_p
    for (u64 x = 0; x < 7; ++x) {
        u64 v = (F49->modulus[0] + x * F49->modulus[1] + x * x) % 7;
        CHECK(v != 0);
    }

    CHECK_THROWS_AS(field(2), invalid_field_error);
    CHECK_THROWS_AS(field(9), invalid_field_error);
    CHECK_THROWS_AS(field_with_modulus(5, {1, 0, 1, 0, 1}), invalid_field_error);  // x^4+x^2+1 reducible
}

TEST_CASE("field axioms and Frobenius", "[field]") {
    auto g = g2test::rng();
    for (auto [p, k] : std::vector<std::pair<u64, unsigned>>{{5, 1}, {7, 2}, {3, 4}, {11, 2}, {13, 3}}) {
        const FieldCtx* F = field(p, k);
        for (int trial = 0; trial < 50; ++trial) {
            Fe a = random_fe(F, g), b = random_fe(F, g), c = random_fe(F, g);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + (-a) == Fe::zero(F));
            if (!a.is_zero()) CHECK(a * inv(a) == Fe::one(F));
            CHECK(pow(a, F->size) == a);  // a^{p^k} = a

            Fe fr = a;
            for (unsigned i = 0; i < k; ++i) fr = frobenius(fr);
            CHECK(fr == a);  // Frobenius applied k times is the identity

            CHECK(inv_frobenius(frobenius(a)) == a);
        }
        // Frobenius is additive and multiplicative (a bijection of the field)
        Fe a = random_fe(F, g), b = random_fe(F, g);
        CHECK(frobenius(a + b) == frobenius(a) + frobenius(b));
        CHECK(frobenius(a * b) == frobenius(a) * frobenius(b));
    }
}

TEST_CASE("square roots", "[field]") {
    const FieldCtx* F7 = field(7);
    CHECK(sqrt_in_field(Fe::zero(F7)) == Fe::zero(F7));
    auto r = sqrt_in_field(Fe::from_int(F7, 4));
    REQUIRE(r.has_value());
    CHECK(*r == Fe::from_int(F7, 2));  // not 5: deterministic tie-break
    CHECK_FALSE(sqrt_in_field(Fe::from_int(F7, 3)).has_value());  // squares mod 7 are {1,2,4}

    for (auto [p, k] : std::vector<std::pair<u64, unsigned>>{{7, 1}, {5, 2}, {3, 3}, {13, 2}}) {
        const FieldCtx* F = field(p, k);
        u64 with_root = 0;
        for (u64 i = 0; i < F->size; ++i) {
            Fe a = Fe::from_index(F, i);
            auto s = sqrt_in_field(a);
            if (s.has_value()) {
                ++with_root;
                CHECK(*s * *s == a);
                CHECK_FALSE(lex_less(-*s, *s));  // returned root is the lex-smaller one
            }
        }
        CHECK(with_root == (F->size + 1) / 2);  // 0 plus (q-1)/2 nonzero squares
    }
}

TEST_CASE("Tonelli-Shanks path beyond the scan limit", "[field]") {
    const FieldCtx* F = field(10007, 2);  // q > 10^4 forces the exponent method
    auto g = g2test::rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        Fe a = random_fe(F, g);
        Fe sq = a * a;
        auto r = sqrt_in_field(sq);
        REQUIRE(r.has_value());
        CHECK(*r * *r == sq);
        CHECK((*r == a || *r == -a));
        CHECK_FALSE(lex_less(-*r, *r));
    }
}

TEST_CASE("element ordering and indexing", "[field]") {
    const FieldCtx* F = field(5, 2);
    for (u64 i = 0; i < F->size; ++i) {
        CHECK(Fe::from_index(F, i).index() == i);
        if (i > 0) CHECK(lex_less(Fe::from_lex_index(F, i - 1), Fe::from_lex_index(F, i)));
    }
}

TEST_CASE("embedding and descent", "[field]") {
    auto g = g2test::rng(11);
    for (auto [p, k, d] : std::vector<std::tuple<u64, unsigned, unsigned>>{
             {7, 1, 2}, {7, 2, 3}, {5, 2, 2}, {3, 2, 3}, {13, 1, 4}}) {
        const FieldCtx* base = field(p, k);
        const FieldCtx* big = field(p, k * d);
        for (int trial = 0; trial < 20; ++trial) {
            Fe a = random_fe(base, g), b = random_fe(base, g);
            Fe ea = embed(a, big), eb = embed(b, big);
            CHECK(embed(a * b, big) == ea * eb);  // ring homomorphism
            CHECK(embed(a + b, big) == ea + eb);
            CHECK(get_embedding(base, big).descend(ea) == a);  // round trip
        }
        // an element outside the subfield is rejected
        if (d > 1) {
            bool found_outside = false;
            for (u64 i = 0; i < 200 && i < big->size; ++i) {
                Fe x = Fe::from_index(big, i);
                if (frobenius_iter(x, k) != x) {
                    CHECK_THROWS_AS(get_embedding(base, big).descend(x), invalid_field_error);
                    found_outside = true;
                    break;
                }
            }
            CHECK(found_outside);
        }
    }
}

TEST_CASE("subfield degree and nth roots", "[field]") {
    const FieldCtx* F = field(7, 2);
    CHECK(subfield_degree(Fe::from_int(F, 3)) == 1);

    // x^2 = -1 has no root in F_7 but two in F_49
    Fe minus1 = Fe::from_int(field(7), -1);
    auto [d, roots] = nth_roots_min_ext(minus1, 2);
    CHECK(d == 2);
    REQUIRE(roots.size() == 2);
    for (auto& r : roots) CHECK(r * r == embed(minus1, roots[0].F));

    // p-th roots go through the inverse Frobenius and are unique
    const FieldCtx* F9 = field(3, 2);
    auto g = g2test::rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        Fe a = random_fe(F9, g);
        auto cubes = nth_roots(a, 3);
        REQUIRE(cubes.size() == 1);
        CHECK(pow(cubes[0], 3) == a);
    }
}
