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

#ifndef GENUS2_POLY_HPP
#define GENUS2_POLY_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include "field.hpp"

namespace genus2 {

/// Dense univariate polynomial over one field context, constant term first,
/// trailing zeros trimmed. The zero polynomial has an empty vector.
struct Poly {
    const FieldCtx* F = nullptr;
    std::vector<Fe> c;

    Poly() = default;
    explicit Poly(const FieldCtx* ctx) : F(ctx) {}
    Poly(const FieldCtx* ctx, std::vector<Fe> coeffs) : F(ctx), c(std::move(coeffs)) { trim(); }
    static Poly from_ints(const FieldCtx* ctx, const std::vector<i64>& v) {
        std::vector<Fe> c;
        c.reserve(v.size());
        for (i64 x : v) c.push_back(Fe::from_int(ctx, x));
        return Poly(ctx, std::move(c));
    }
    static Poly x(const FieldCtx* ctx) { return Poly(ctx, {Fe::zero(ctx), Fe::one(ctx)}); }
    static Poly constant(const Fe& a) { return Poly(a.F, {a}); }
    static Poly zero(const FieldCtx* ctx) { return Poly(ctx); }

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    int deg() const { return (int)c.size() - 1; }
    bool is_zero() const { return c.empty(); }
    Fe lc() const {
        if (c.empty()) throw internal_error("leading coefficient of zero polynomial");
        return c.back();
    }
    Fe coeff(size_t i) const { return i < c.size() ? c[i] : Fe::zero(F); }

    bool operator==(const Poly& o) const { return F == o.F && c == o.c; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
};

inline void check_same_field(const Poly& a, const Poly& b) {
    if (a.F != b.F) throw invalid_field_error("polynomials from different field contexts");
}

inline Poly operator+(const Poly& a, const Poly& b) {
    check_same_field(a, b);
    std::vector<Fe> r(std::max(a.c.size(), b.c.size()), Fe::zero(a.F));
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
    return Poly(a.F, std::move(r));
}

inline Poly operator-(const Poly& a, const Poly& b) {
    check_same_field(a, b);
    std::vector<Fe> r(std::max(a.c.size(), b.c.size()), Fe::zero(a.F));
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
    return Poly(a.F, std::move(r));
}

inline Poly operator-(const Poly& a) {
    std::vector<Fe> r = a.c;
    for (auto& x : r) x = -x;
    return Poly(a.F, std::move(r));
}

inline Poly operator*(const Poly& a, const Poly& b) {
    check_same_field(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(a.F);
    std::vector<Fe> r(a.c.size() + b.c.size() - 1, Fe::zero(a.F));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (size_t j = 0; j < b.c.size(); ++j) r[i + j] = r[i + j] + a.c[i] * b.c[j];
    }
    return Poly(a.F, std::move(r));
}

inline Poly operator*(const Fe& s, const Poly& a) {
    std::vector<Fe> r = a.c;
    for (auto& x : r) x = s * x;
    return Poly(a.F, std::move(r));
}

/// Division with remainder; divisor may be non-monic.
inline std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    check_same_field(a, b);
    if (b.is_zero()) throw invalid_field_error("division by zero polynomial");
    Poly q(a.F), r = a;
    if (a.deg() < b.deg()) return {q, r};
    q.c.assign(a.deg() - b.deg() + 1, Fe::zero(a.F));
    Fe lc_inv = inv(b.lc());
    while (!r.is_zero() && r.deg() >= b.deg()) {
        Fe f = r.lc() * lc_inv;
        int shift = r.deg() - b.deg();
        q.c[shift] = q.c[shift] + f;
        for (int i = 0; i <= b.deg(); ++i) r.c[i + shift] = r.c[i + shift] - f * b.c[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

inline Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).second; }
inline Poly operator/(const Poly& a, const Poly& b) { return divrem(a, b).first; }

inline Poly monic(const Poly& a) {
    if (a.is_zero()) return a;
    return inv(a.lc()) * a;
}

inline Poly gcd(Poly a, Poly b) {
    check_same_field(a, b);
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

inline Poly derivative(const Poly& a) {
    if (a.deg() < 1) return Poly(a.F);
    std::vector<Fe> r(a.deg(), Fe::zero(a.F));
    for (int i = 1; i <= a.deg(); ++i) r[i - 1] = Fe::from_int(a.F, i) * a.c[i];
    return Poly(a.F, std::move(r));
}

inline Fe eval(const Poly& a, const Fe& x) {
    Fe r = Fe::zero(a.F);
    for (size_t i = a.c.size(); i-- > 0;) r = r * x + a.c[i];
    return r;
}

/// Exact e-th power by repeated squaring on dense coefficient vectors.
inline Poly poly_pow(const Poly& f, u64 e) {
    Poly r = Poly::constant(Fe::one(f.F));
    Poly base = f;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

inline Poly powmod(Poly base, u64 e, const Poly& m) {
    Poly r = Poly::constant(Fe::one(base.F));
    base = base % m;
    while (e) {
        if (e & 1) r = (r * base) % m;
        base = (base * base) % m;
        e >>= 1;
    }
    return r;
}

inline bool is_squarefree(const Poly& f) {
    if (f.deg() < 1) return true;
    Poly d = derivative(f);
    if (d.is_zero()) return false;
    return gcd(f, d).deg() == 0;
}

// ---------------------------------------------------------------------------
// Resultant and discriminant

/// Resultant by the Euclidean remainder sequence.
inline Fe resultant(Poly a, Poly b) {
    check_same_field(a, b);
    const FieldCtx* F = a.F;
    if (a.is_zero() || b.is_zero()) return Fe::zero(F);
    Fe acc = Fe::one(F);
    bool negate = false;
    while (b.deg() > 0) {
        Poly r = a % b;
        if (r.is_zero()) return Fe::zero(F);
        // res(a,b) = (-1)^{deg a * deg b} lc(b)^{deg a - deg r} res(b, r)
        if ((a.deg() & 1) && (b.deg() & 1)) negate = !negate;
        acc = acc * pow(b.lc(), (u64)(a.deg() - r.deg()));
        a = std::move(b);
        b = std::move(r);
    }
    // b is a nonzero constant: res(a, b) = b^{deg a}
    acc = acc * pow(b.lc(), (u64)a.deg());
    return negate ? -acc : acc;
}

/// Discriminant normalized so that for monic f it equals the product of
/// squared root differences exactly: disc(f) = (-1)^{n(n-1)/2} res(f,f') / lc(f).
inline Fe discriminant(const Poly& f) {
    if (f.deg() < 2) throw invalid_field_error("discriminant needs degree >= 2");
    Fe r = resultant(f, derivative(f));
    r = r * inv(f.lc());
    int n = f.deg();
    if (((u64)n * (n - 1) / 2) & 1) r = -r;
    return r;
}

// ---------------------------------------------------------------------------
// Distinct-degree data and deterministic root extraction

/// Degrees d (with multiplicity of factors) of the irreducible factors of a
/// squarefree monic polynomial, by distinct-degree factorization.
inline std::vector<std::pair<int, int>> factor_degrees(Poly f) {
    const FieldCtx* F = f.F;
    if (F->size == 0) throw invalid_field_error("field too large for factorization");
    if (!is_squarefree(f)) throw singular_error("repeated roots: polynomial is not squarefree");
    f = monic(f);
    std::vector<std::pair<int, int>> out;
    Poly h = Poly::x(F);
    int d = 0;
    while (f.deg() > 0) {
        ++d;
        if (2 * d > f.deg()) {
            out.emplace_back(f.deg(), 1);
            break;
        }
        h = powmod(h, F->size, f);
        Poly g = gcd(h - Poly::x(F), f);
        if (g.deg() > 0) {
            out.emplace_back(d, g.deg() / d);
            f = f / g;
            h = h % f;
        }
    }
    return out;
}

namespace detail {

inline u64 splitmix64(u64 x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Splits a monic product of distinct linear factors into its roots.
/// Deterministic: the probe sequence is fixed, the result is sorted.
inline void extract_roots(const Poly& g, std::vector<Fe>& out, u64& probe) {
    const FieldCtx* F = g.F;
    if (g.deg() == 0) return;
    if (g.deg() == 1) {
        out.push_back(-g.c[0]);
        return;
    }
    u64 q = F->size;
    for (;;) {
        Fe delta = Fe::from_index(F, splitmix64(probe++) % q);
        Poly shifted = Poly(F, {delta, Fe::one(F)});
        Poly w = powmod(shifted, (q - 1) / 2, g) - Poly::constant(Fe::one(F));
        Poly d = gcd(w, g);
        if (d.deg() > 0 && d.deg() < g.deg()) {
            extract_roots(d, out, probe);
            extract_roots(g / d, out, probe);
            return;
        }
    }
}

}  // namespace detail

/// All roots of f lying in its own coefficient field, sorted lexicographically.
inline std::vector<Fe> roots_in_field(const Poly& f) {
    const FieldCtx* F = f.F;
    if (f.is_zero()) throw invalid_field_error("roots of the zero polynomial");
    if (F->size == 0) throw invalid_field_error("field too large for root finding");
    Poly g = monic(f);
    // strip repeated factors so the linear part is squarefree
    Poly d = derivative(g);
    if (!d.is_zero()) {
        Poly common = gcd(g, d);
        if (common.deg() > 0) g = g / common;
    } else {
        // g = h(x^p); roots of g are p-th roots of roots of h
        std::vector<Fe> sub;
        Poly h(F);
        h.c.assign(g.deg() / F->p + 1, Fe::zero(F));
        for (int i = 0; i * (int)F->p <= g.deg(); ++i) h.c[i] = g.coeff(i * F->p);
        h.trim();
        auto inner = roots_in_field(h);
        std::vector<Fe> res;
        for (auto& r : inner) {
            Fe root = r;
            for (unsigned j = 0; j + 1 < F->k; ++j) root = frobenius(root);  // p-th root
            res.push_back(root);
        }
        std::sort(res.begin(), res.end(), lex_less);
        return res;
    }
    Poly xq = powmod(Poly::x(F), F->size, g);
    Poly lin = gcd(xq - Poly::x(F), g);
    std::vector<Fe> out;
    u64 probe = 0;
    detail::extract_roots(lin, out, probe);
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

}  // namespace genus2

#endif
