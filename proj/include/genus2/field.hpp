/*
   Copyright 2026 the genus2 authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef GENUS2_FIELD_HPP
#define GENUS2_FIELD_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace genus2 {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// ---------------------------------------------------------------------------
// Arithmetic mod p (p odd prime, p < 2^62)

inline u64 addmod(u64 a, u64 b, u64 p) {
    u64 s = a + b;
    return s >= p ? s - p : s;
}

inline u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

inline u64 mulmod(u64 a, u64 b, u64 p) { return (u64)((u128)a * b % p); }

inline u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline u64 invmod(u64 a, u64 p) {
    if (a % p == 0) throw invalid_field_error("inverse of zero");
    return powmod(a, p - 2, p);
}

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

/// Euler's criterion. Returns 0 iff p | a, 1 for nonzero squares, -1 otherwise.
inline int legendre_symbol(i64 a, u64 p) {
    if (p < 3 || !is_prime_u64(p)) throw invalid_field_error("legendre_symbol: p must be an odd prime");
    i64 r = a % (i64)p;
    if (r < 0) r += (i64)p;
    if (r == 0) return 0;
    u64 e = powmod((u64)r, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

// ---------------------------------------------------------------------------
// Dense polynomials over F_p as coefficient vectors (constant term first).
// Internal machinery used for modulus construction and element arithmetic.

namespace modp {

inline void trim(std::vector<u64>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int deg(const std::vector<u64>& a) { return (int)a.size() - 1; }

inline std::vector<u64> add(const std::vector<u64>& a, const std::vector<u64>& b, u64 p) {
    std::vector<u64> r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        u64 x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
        r[i] = addmod(x, y, p);
    }
    trim(r);
    return r;
}

inline std::vector<u64> sub(const std::vector<u64>& a, const std::vector<u64>& b, u64 p) {
    std::vector<u64> r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        u64 x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
        r[i] = submod(x, y, p);
    }
    trim(r);
    return r;
}

inline std::vector<u64> mul(const std::vector<u64>& a, const std::vector<u64>& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    std::vector<u64> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (u64)(((u128)a[i] * b[j] + r[i + j]) % p);
    }
    trim(r);
    return r;
}

/// In-place remainder by a monic divisor.
inline void rem_monic(std::vector<u64>& a, const std::vector<u64>& m, u64 p) {
    int dm = deg(m);
    while (deg(a) >= dm) {
        u64 c = a.back();
        int shift = deg(a) - dm;
        if (c != 0) {
            for (int i = 0; i < dm; ++i)
                if (m[i]) a[i + shift] = submod(a[i + shift], mulmod(c, m[i], p), p);
        }
        a.pop_back();
        trim(a);
    }
}

inline std::vector<u64> mulmod_poly(const std::vector<u64>& a, const std::vector<u64>& b,
                                    const std::vector<u64>& m, u64 p) {
    auto r = mul(a, b, p);
    rem_monic(r, m, p);
    return r;
}

inline std::vector<u64> powmod_poly(std::vector<u64> base, u64 e, const std::vector<u64>& m, u64 p) {
    std::vector<u64> r{1};
    rem_monic(base, m, p);
    while (e) {
        if (e & 1) r = mulmod_poly(r, base, m, p);
        base = mulmod_poly(base, base, m, p);
        e >>= 1;
    }
    return r;
}

inline std::vector<u64> gcd_monic(std::vector<u64> a, std::vector<u64> b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // reduce a mod b (b not necessarily monic)
        u64 lc_inv = invmod(b.back(), p);
        std::vector<u64> r = a;
        while (deg(r) >= deg(b)) {
            u64 c = mulmod(r.back(), lc_inv, p);
            int shift = deg(r) - deg(b);
            for (size_t i = 0; i < b.size(); ++i)
                r[i + shift] = submod(r[i + shift], mulmod(c, b[i], p), p);
            trim(r);
        }
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        u64 inv = invmod(a.back(), p);
        for (auto& c : a) c = mulmod(c, inv, p);
    }
    return a;
}

/// Extended gcd against a modulus: returns u with u*a = gcd (mod m), gcd monic.
inline std::pair<std::vector<u64>, std::vector<u64>> extgcd_mod(const std::vector<u64>& a,
                                                                const std::vector<u64>& m, u64 p) {
    std::vector<u64> r0 = m, r1 = a, s0{}, s1{1};
    trim(r1);
    while (!r1.empty()) {
        // divide r0 by r1
        std::vector<u64> q{};
        std::vector<u64> r = r0;
        u64 lc_inv = invmod(r1.back(), p);
        while (deg(r) >= deg(r1)) {
            u64 c = mulmod(r.back(), lc_inv, p);
            int shift = deg(r) - deg(r1);
            if ((int)q.size() < shift + 1) q.resize(shift + 1, 0);
            q[shift] = addmod(q[shift], c, p);
            for (size_t i = 0; i < r1.size(); ++i)
                r[i + shift] = submod(r[i + shift], mulmod(c, r1[i], p), p);
            trim(r);
        }
        auto s2 = sub(s0, mul(q, s1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (!r0.empty() && r0.back() != 1) {
        u64 inv = invmod(r0.back(), p);
        for (auto& c : r0) c = mulmod(c, inv, p);
        for (auto& c : s0) c = mulmod(c, inv, p);
    }
    return {r0, s0};
}

}  // namespace modp

// ---------------------------------------------------------------------------
// Field contexts

/// Immutable description of F_{p^k} as F_p[x]/(modulus). Contexts are interned
/// in a global registry and referenced by plain pointer; they live for the
/// whole process, so elements can hold raw pointers safely across threads.
struct FieldCtx {
    u64 p = 0;
    unsigned k = 1;
    std::vector<u64> modulus;  // monic, degree k, constant term first
    u64 size = 0;              // p^k, or 0 if it does not fit in 62 bits

    bool is_prime_field() const { return k == 1; }
};

namespace detail {

inline u64 pow_checked(u64 p, unsigned k) {
    u128 s = 1;
    for (unsigned i = 0; i < k; ++i) {
        s *= p;
        if (s >= ((u128)1 << 62)) return 0;
    }
    return (u64)s;
}

inline bool is_irreducible(const std::vector<u64>& f, u64 p) {
    int k = modp::deg(f);
    if (k <= 0) return false;
    if (k == 1) return true;
    // x^{p^j} mod f by iterated p-th powers
    std::vector<u64> t{0, 1};
    std::vector<std::vector<u64>> frob_pows(k + 1);
    frob_pows[0] = t;
    for (int j = 1; j <= k; ++j) {
        t = modp::powmod_poly(t, p, f, p);
        frob_pows[j] = t;
    }
    // x^{p^k} == x required
    if (modp::sub(frob_pows[k], {0, 1}, p) != std::vector<u64>{}) return false;
    // gcd(x^{p^{k/l}} - x, f) must be constant for every prime l | k
    std::vector<int> prime_divisors;
    int kk = k;
    for (int l = 2; l * l <= kk; ++l) {
        if (kk % l == 0) {
            prime_divisors.push_back(l);
            while (kk % l == 0) kk /= l;
        }
    }
    if (kk > 1) prime_divisors.push_back(kk);
    for (int l : prime_divisors) {
        auto g = modp::gcd_monic(modp::sub(frob_pows[k / l], {0, 1}, p), f, p);
        if (modp::deg(g) > 0) return false;
    }
    return true;
}

}  // namespace detail

/// Builds the deterministic modulus: the monic irreducible of degree k whose
/// coefficient vector (c_0,...,c_{k-1}) is least in base-p counting order.
inline std::vector<u64> deterministic_modulus(u64 p, unsigned k) {
    if (k == 1) return {0, 1};  // x
    u64 bound = detail::pow_checked(p, k);
    for (u64 c = 0; bound == 0 || c < bound; ++c) {
        std::vector<u64> f(k + 1, 0);
        u64 t = c;
        for (unsigned i = 0; i < k; ++i) {
            f[i] = t % p;
            t /= p;
        }
        f[k] = 1;
        if (detail::is_irreducible(f, p)) return f;
    }
    throw internal_error("no irreducible modulus found");
}

namespace detail {

struct CtxRegistry {
    std::mutex mu;
    std::map<std::pair<std::pair<u64, unsigned>, std::vector<u64>>, std::unique_ptr<FieldCtx>> by_key;

    static CtxRegistry& instance() {
        static CtxRegistry r;
        return r;
    }
};

}  // namespace detail

/// Interns F_p[x]/(modulus); validates p and irreducibility.
inline const FieldCtx* field_with_modulus(u64 p, const std::vector<u64>& modulus) {
    if (p < 3) throw invalid_field_error("characteristic two (or smaller) is not supported");
    if (!is_prime_u64(p)) throw invalid_field_error("p is not prime");
    std::vector<u64> m = modulus;
    for (auto& c : m) c %= p;
    if (m.empty() || m.back() != 1) throw invalid_field_error("modulus must be monic");
    unsigned k = (unsigned)(m.size() - 1);
    if (k < 1) throw invalid_field_error("modulus must have degree >= 1");
    if (k > 1 && !detail::is_irreducible(m, p)) throw invalid_field_error("modulus is reducible");

    auto& reg = detail::CtxRegistry::instance();
    std::lock_guard<std::mutex> lock(reg.mu);
    auto key = std::make_pair(std::make_pair(p, k), m);
    auto it = reg.by_key.find(key);
    if (it != reg.by_key.end()) return it->second.get();
    auto ctx = std::make_unique<FieldCtx>();
    ctx->p = p;
    ctx->k = k;
    ctx->modulus = m;
    ctx->size = detail::pow_checked(p, k);
    auto* ptr = ctx.get();
    reg.by_key.emplace(std::move(key), std::move(ctx));
    return ptr;
}

/// F_{p^k} with the deterministic modulus.
inline const FieldCtx* field(u64 p, unsigned k = 1) {
    static std::mutex mu;
    static std::map<std::pair<u64, unsigned>, const FieldCtx*> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({p, k});
        if (it != cache.end()) return it->second;
    }
    if (p < 3) throw invalid_field_error("characteristic two (or smaller) is not supported");
    if (!is_prime_u64(p)) throw invalid_field_error("p is not prime");
    if (k < 1) throw invalid_field_error("extension degree must be >= 1");
    auto* ctx = field_with_modulus(p, deterministic_modulus(p, k));
    std::lock_guard<std::mutex> lock(mu);
    cache[{p, k}] = ctx;
    return ctx;
}

// ---------------------------------------------------------------------------
// Field elements

/// An element of F_{p^k} in the polynomial basis: k residues mod p, constant
/// term first. Value type; the context pointer is shared and immutable.
struct Fe {
    const FieldCtx* F = nullptr;
    std::vector<u64> c;

    Fe() = default;
    Fe(const FieldCtx* ctx, std::vector<u64> coeffs) : F(ctx), c(std::move(coeffs)) {
        c.resize(F->k, 0);
        for (auto& x : c) x %= F->p;
    }

    static Fe zero(const FieldCtx* ctx) { return Fe(ctx, std::vector<u64>(ctx->k, 0)); }
    static Fe one(const FieldCtx* ctx) {
        std::vector<u64> v(ctx->k, 0);
        v[0] = 1 % ctx->p;
        return Fe(ctx, v);
    }
    static Fe from_int(const FieldCtx* ctx, i64 n) {
        i64 r = n % (i64)ctx->p;
        if (r < 0) r += (i64)ctx->p;
        std::vector<u64> v(ctx->k, 0);
        v[0] = (u64)r;
        return Fe(ctx, v);
    }
    /// Element number i in counting order: base-p digits of i, constant term first.
    static Fe from_index(const FieldCtx* ctx, u64 i) {
        std::vector<u64> v(ctx->k, 0);
        for (unsigned j = 0; j < ctx->k; ++j) {
            v[j] = i % ctx->p;
            i /= ctx->p;
        }
        return Fe(ctx, v);
    }
    /// Element number i in lexicographic order on (c_0,...,c_{k-1}).
    static Fe from_lex_index(const FieldCtx* ctx, u64 i) {
        std::vector<u64> v(ctx->k, 0);
        for (unsigned j = ctx->k; j-- > 0;) {
            v[j] = i % ctx->p;
            i /= ctx->p;
        }
        return Fe(ctx, v);
    }

    u64 index() const {
        u64 i = 0;
        for (unsigned j = F->k; j-- > 0;) i = i * F->p + c[j];
        return i;
    }

    bool is_zero() const {
        for (u64 x : c)
            if (x) return false;
        return true;
    }

    bool operator==(const Fe& o) const { return F == o.F && c == o.c; }
    bool operator!=(const Fe& o) const { return !(*this == o); }
};

/// Total order used everywhere a deterministic choice is needed:
/// lexicographic on the coefficient vector, constant term first.
inline bool lex_less(const Fe& a, const Fe& b) { return a.c < b.c; }

inline void check_same_field(const Fe& a, const Fe& b) {
    if (a.F != b.F) throw invalid_field_error("elements from different field contexts");
}

inline Fe operator+(const Fe& a, const Fe& b) {
    check_same_field(a, b);
    Fe r = a;
    for (unsigned i = 0; i < a.F->k; ++i) r.c[i] = addmod(a.c[i], b.c[i], a.F->p);
    return r;
}

inline Fe operator-(const Fe& a, const Fe& b) {
    check_same_field(a, b);
    Fe r = a;
    for (unsigned i = 0; i < a.F->k; ++i) r.c[i] = submod(a.c[i], b.c[i], a.F->p);
    return r;
}

inline Fe operator-(const Fe& a) {
    Fe r = a;
    for (unsigned i = 0; i < a.F->k; ++i) r.c[i] = a.c[i] ? a.F->p - a.c[i] : 0;
    return r;
}

inline Fe operator*(const Fe& a, const Fe& b) {
    check_same_field(a, b);
    const FieldCtx* F = a.F;
    if (F->k == 1) {
        Fe r = Fe::zero(F);
        r.c[0] = mulmod(a.c[0], b.c[0], F->p);
        return r;
    }
    auto prod = modp::mul(a.c, b.c, F->p);
    modp::rem_monic(prod, F->modulus, F->p);
    prod.resize(F->k, 0);
    return Fe(F, std::move(prod));
}

inline Fe inv(const Fe& a) {
    if (a.is_zero()) throw invalid_field_error("inverse of zero");
    const FieldCtx* F = a.F;
    if (F->k == 1) {
        Fe r = Fe::zero(F);
        r.c[0] = invmod(a.c[0], F->p);
        return r;
    }
    auto ac = a.c;
    modp::trim(ac);
    auto [g, u] = modp::extgcd_mod(ac, F->modulus, F->p);
    if (modp::deg(g) != 0) throw internal_error("gcd with irreducible modulus not constant");
    u.resize(F->k, 0);
    return Fe(F, std::move(u));
}

inline Fe operator/(const Fe& a, const Fe& b) { return a * inv(b); }

inline Fe pow(const Fe& a, u64 e) {
    Fe r = Fe::one(a.F), base = a;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

/// Absolute Frobenius x -> x^p.
inline Fe frobenius(const Fe& a) { return pow(a, a.F->p); }

/// Inverse of Frobenius: x -> x^{p^{k-1}}.
inline Fe inv_frobenius(const Fe& a) {
    Fe r = a;
    for (unsigned i = 0; i + 1 < a.F->k; ++i) r = frobenius(r);
    return r;
}

inline Fe frobenius_iter(const Fe& a, unsigned times) {
    Fe r = a;
    for (unsigned i = 0; i < times; ++i) r = frobenius(r);
    return r;
}

/// Multiplicative character a^{(q-1)/2}; 1 for nonzero squares, -1 otherwise, 0 at 0.
inline int quadratic_character(const Fe& a) {
    if (a.is_zero()) return 0;
    if (a.F->size == 0) throw invalid_field_error("field too large for character computation");
    Fe e = pow(a, (a.F->size - 1) / 2);
    return e == Fe::one(a.F) ? 1 : -1;
}

namespace detail {

inline Fe sqrt_tonelli(const Fe& a) {
    const FieldCtx* F = a.F;
    u64 q = F->size;
    // q odd; write q - 1 = 2^s * t
    u64 t = q - 1;
    int s = 0;
    while ((t & 1) == 0) t >>= 1, ++s;
    // deterministic non-residue: least in lex order
    Fe z = Fe::zero(F);
    for (u64 i = 1; i < q; ++i) {
        z = Fe::from_lex_index(F, i);
        if (quadratic_character(z) == -1) break;
    }
    Fe m_c = pow(z, t);
    Fe x = pow(a, (t + 1) / 2);
    Fe b = pow(a, t);
    int m = s;
    Fe one = Fe::one(F);
    while (b != one) {
        Fe bb = b;
        int i = 0;
        while (bb != one) {
            bb = bb * bb;
            ++i;
            if (i == m) throw internal_error("sqrt of non-square");
        }
        Fe g = m_c;
        for (int j = 0; j < m - i - 1; ++j) g = g * g;
        x = x * g;
        m_c = g * g;
        b = b * m_c;
        m = i;
    }
    return x;
}

}  // namespace detail

/// Deterministic square root: the lex-smaller of the two roots, or nullopt.
inline std::optional<Fe> sqrt_in_field(const Fe& a) {
    const FieldCtx* F = a.F;
    if (a.is_zero()) return Fe::zero(F);
    if (F->size == 0) throw invalid_field_error("field too large for sqrt");
    if (quadratic_character(a) != 1) return std::nullopt;
    Fe r = Fe::zero(F);
    if (F->size <= 10000) {
        bool found = false;
        for (u64 i = 0; i < F->size; ++i) {
            Fe x = Fe::from_lex_index(F, i);
            if (x * x == a) {
                r = x;
                found = true;
                break;  // lex scan: first hit is the lex-least root
            }
        }
        if (!found) throw internal_error("square root scan failed");
        return r;
    }
    r = detail::sqrt_tonelli(a);
    Fe n = -r;
    return lex_less(n, r) ? n : r;
}

inline std::string to_string(const Fe& a) {
    std::ostringstream os;
    if (a.F->k == 1) {
        os << a.c[0];
    } else {
        os << "[";
        for (unsigned i = 0; i < a.F->k; ++i) os << (i ? "," : "") << a.c[i];
        os << "]";
    }
    return os.str();
}

struct FeHash {
    size_t operator()(const Fe& a) const {
        size_t h = 1469598103934665603ull;
        for (u64 x : a.c) {
            h ^= (size_t)x;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace genus2

#endif
