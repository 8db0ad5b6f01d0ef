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

#ifndef GENUS2_CURVE_HPP
#define GENUS2_CURVE_HPP

#include <array>

#include "tower.hpp"

namespace genus2 {

// ---------------------------------------------------------------------------
// Points of P^1 and Mobius transformations

/// A point of P^1, stored as (num : den) with den normalized to 1 for finite
/// points and (1 : 0) for infinity.
struct P1Point {
    Fe num, den;

    P1Point(const Fe& n, const Fe& d) : num(n), den(d) {
        if (den.is_zero()) {
            if (num.is_zero()) throw invalid_field_error("(0:0) is not a point of P^1");
            num = Fe::one(num.F);
        } else {
            num = num / den;
            den = Fe::one(den.F);
        }
    }
    static P1Point finite(const Fe& x) { return P1Point(x, Fe::one(x.F)); }
    static P1Point infinity(const FieldCtx* F) { return P1Point(Fe::one(F), Fe::zero(F)); }

    bool is_infinity() const { return den.is_zero(); }
    const FieldCtx* ctx() const { return num.F; }

    bool operator==(const P1Point& o) const { return num == o.num && den == o.den; }
    bool operator!=(const P1Point& o) const { return !(*this == o); }
};

/// Finite points first in lex order on the x-coordinate; infinity last.
inline bool p1_less(const P1Point& a, const P1Point& b) {
    if (a.is_infinity()) return false;
    if (b.is_infinity()) return true;
    return lex_less(a.num, b.num);
}

/// An element of PGL_2 acting as x -> (ax+b)/(cx+d). Equality is projective.
struct Mobius {
    Fe a, b, c, d;

    Mobius(const Fe& a_, const Fe& b_, const Fe& c_, const Fe& d_) : a(a_), b(b_), c(c_), d(d_) {
        if ((a * d - b * c).is_zero()) throw invalid_field_error("degenerate Mobius map");
    }
    static Mobius identity(const FieldCtx* F) {
        return Mobius(Fe::one(F), Fe::zero(F), Fe::zero(F), Fe::one(F));
    }
    const FieldCtx* ctx() const { return a.F; }

    P1Point operator()(const P1Point& x) const {
        return P1Point(a * x.num + b * x.den, c * x.num + d * x.den);
    }

    Mobius inverse() const { return Mobius(d, -b, -c, a); }

    /// Scales so the first nonzero entry of (a,b,c,d) is 1.
    Mobius normalized() const {
        for (const Fe* e : {&a, &b, &c, &d}) {
            if (!e->is_zero()) {
                Fe s = inv(*e);
                return Mobius(s * a, s * b, s * c, s * d);
            }
        }
        throw internal_error("zero Mobius matrix");
    }

    bool operator==(const Mobius& o) const {
        Mobius x = normalized(), y = o.normalized();
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    bool operator!=(const Mobius& o) const { return !(*this == o); }
};

/// Composition as maps: (m1 * m2)(x) = m1(m2(x)).
inline Mobius operator*(const Mobius& m1, const Mobius& m2) {
    return Mobius(m1.a * m2.a + m1.b * m2.c, m1.a * m2.b + m1.b * m2.d,
                  m1.c * m2.a + m1.d * m2.c, m1.c * m2.b + m1.d * m2.d);
}

namespace detail {

/// The unique map sending (p0, p1, p2) to (0, 1, infinity).
inline Mobius to_standard_triple(const P1Point& p0, const P1Point& p1, const P1Point& p2) {
    const FieldCtx* F = p0.ctx();
    Fe one = Fe::one(F), zero = Fe::zero(F);
    if (p0.is_infinity()) {
        // x -> (p1 - p2)/(x - p2)
        return Mobius(zero, p1.num - p2.num, one, -p2.num);
    }
    if (p1.is_infinity()) {
        // x -> (x - p0)/(x - p2)
        return Mobius(one, -p0.num, one, -p2.num);
    }
    if (p2.is_infinity()) {
        // x -> (x - p0)/(p1 - p0)
        return Mobius(one, -p0.num, zero, p1.num - p0.num);
    }
    // x -> ((x - p0)(p1 - p2)) / ((x - p2)(p1 - p0))
    Fe s = p1.num - p2.num, t = p1.num - p0.num;
    return Mobius(s, -p0.num * s, t, -p2.num * t);
}

}  // namespace detail

/// The unique Mobius map with src[i] -> dst[i] for three distinct points each.
inline Mobius mobius_through(const std::array<P1Point, 3>& src, const std::array<P1Point, 3>& dst) {
    Mobius f = detail::to_standard_triple(src[0], src[1], src[2]);
    Mobius g = detail::to_standard_triple(dst[0], dst[1], dst[2]);
    return g.inverse() * f;
}

// ---------------------------------------------------------------------------
// Genus-2 curves  y^2 + g(x) y = f(x),  deg g <= 3, deg f <= 6

struct Genus2Curve {
    const FieldCtx* F = nullptr;
    Poly g, f;

    Genus2Curve(const FieldCtx* ctx, Poly g_, Poly f_) : F(ctx), g(std::move(g_)), f(std::move(f_)) {
        if (g.F != F || f.F != F) throw invalid_field_error("curve coefficients in wrong field");
        if (g.deg() > 3) throw invalid_field_error("deg g must be <= 3");
        if (f.deg() > 6) throw invalid_field_error("deg f must be <= 6");
        Poly big = squared_model();
        if (big.deg() != 5 && big.deg() != 6) throw singular_error("f + g^2/4 must have degree 5 or 6");
        if (!is_squarefree(big)) throw singular_error("curve is singular: f + g^2/4 has a repeated root");
    }

    static Genus2Curve from_f(const FieldCtx* ctx, const Poly& f) {
        return Genus2Curve(ctx, Poly::zero(ctx), f);
    }
    static Genus2Curve from_ints(const FieldCtx* ctx, const std::vector<i64>& fc,
                                 const std::vector<i64>& gc = {}) {
        return Genus2Curve(ctx, Poly::from_ints(ctx, gc), Poly::from_ints(ctx, fc));
    }

    /// F = f + g^2/4, the right-hand side after completing the square.
    Poly squared_model() const {
        if (g.is_zero()) return f;
        Fe quarter = inv(Fe::from_int(F, 4));
        return f + quarter * (g * g);
    }

    bool operator==(const Genus2Curve& o) const { return F == o.F && g == o.g && f == o.f; }
};

/// The substitution y -> y - g/2, yielding y^2 = f + g^2/4.
inline Genus2Curve complete_square(const Genus2Curve& C) {
    if (C.g.is_zero()) return C;
    return Genus2Curve(C.F, Poly::zero(C.F), C.squared_model());
}

/// Change of variable x -> m(x) on a completed-square model: the new right-hand
/// side is (cx+d)^6 F((ax+b)/(cx+d)); the y-rescaling by (cx+d)^3 is implicit,
/// so quadratic twists are identified.
inline Genus2Curve apply_mobius(const Genus2Curve& C, const Mobius& m) {
    if (!C.g.is_zero()) throw invalid_field_error("apply_mobius expects a completed-square model");
    if (m.ctx() != C.F) throw invalid_field_error("Mobius map in wrong field");
    const FieldCtx* F = C.F;
    Poly num(F, {m.b, m.a});  // a x + b
    Poly den(F, {m.d, m.c});  // c x + d
    std::vector<Poly> num_pow(7, Poly::constant(Fe::one(F))), den_pow(7, Poly::constant(Fe::one(F)));
    for (int i = 1; i <= 6; ++i) {
        num_pow[i] = num_pow[i - 1] * num;
        den_pow[i] = den_pow[i - 1] * den;
    }
    Poly out = Poly::zero(F);
    for (int i = 0; i <= 6; ++i) {
        Fe fi = C.f.coeff(i);
        if (fi.is_zero()) continue;
        out = out + fi * (num_pow[i] * den_pow[6 - i]);
    }
    if (out.deg() < 5 || !is_squarefree(out))
        throw singular_error("transformed model is singular");
    return Genus2Curve::from_f(F, out);
}

/// The six Weierstrass points over the splitting field of F = f + g^2/4
/// (including infinity when deg F = 5), sorted deterministically.
inline std::vector<P1Point> weierstrass_points(const Genus2Curve& C) {
    Poly big = C.squared_model();
    auto [m, roots] = splitting_data(big);
    (void)m;
    const FieldCtx* E = roots.empty() ? C.F : roots[0].F;
    std::vector<P1Point> pts;
    pts.reserve(6);
    for (auto& r : roots) pts.push_back(P1Point::finite(r));
    if (big.deg() == 5) pts.push_back(P1Point::infinity(E));
    if (pts.size() != 6) throw singular_error("curve does not have six Weierstrass points");
    std::sort(pts.begin(), pts.end(), p1_less);
    return pts;
}

/// Moves a degree-5 model to degree 6 via x -> r + 1/x for the least r (in lex
/// order) that is not a root; returns the new model and the witness map.
/// Extends the base field once if every element is a root (only possible for
/// p^k < 7).
inline std::pair<Genus2Curve, Mobius> sextic_normalize(const Genus2Curve& C) {
    if (!C.g.is_zero()) throw invalid_field_error("sextic_normalize expects a completed-square model");
    if (C.f.deg() == 6) return {C, Mobius::identity(C.F)};
    if (C.f.deg() != 5) throw invalid_field_error("sextic_normalize expects degree 5 or 6");
    const FieldCtx* F = C.F;
    Poly f = C.f;
    if (F->size <= 5) {
        bool all_roots = true;
        for (u64 i = 0; i < F->size && all_roots; ++i)
            all_roots = eval(f, Fe::from_lex_index(F, i)).is_zero();
        if (all_roots) {
            const FieldCtx* E = field(F->p, F->k * 2);
            return sextic_normalize(Genus2Curve::from_f(E, embed(f, E)));
        }
    }
    for (u64 i = 0; i < F->size; ++i) {
        Fe r = Fe::from_lex_index(F, i);
        if (!eval(f, r).is_zero()) {
            Mobius m(r, Fe::one(F), Fe::one(F), Fe::zero(F));  // x -> (r x + 1)/x = r + 1/x
            return {apply_mobius(C, m), m};
        }
    }
    throw internal_error("no non-root found for sextic normalization");
}

}  // namespace genus2

#endif
