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

#ifndef GENUS2_TOWER_HPP
#define GENUS2_TOWER_HPP

#include <map>
#include <mutex>

#include "poly.hpp"

namespace genus2 {

/// Embedding F_{p^k} -> F_{p^K} (k | K), determined by sending the generator
/// of the source field to the lex-least root of the source modulus in the
/// target.
class Embedding {
  public:
    Embedding(const FieldCtx* src, const FieldCtx* dst) : src_(src), dst_(dst) {
        if (src->p != dst->p) throw invalid_field_error("embedding across different characteristics");
        if (dst->k % src->k != 0) throw invalid_field_error("source degree does not divide target degree");
        if (src == dst) {
            identity_ = true;
            return;
        }
        Poly src_mod(dst);
        for (u64 coef : src->modulus) src_mod.c.push_back(Fe::from_int(dst, (i64)coef));
        src_mod.trim();
        auto roots = roots_in_field(src_mod);
        if (roots.empty()) throw internal_error("source modulus has no root in target field");
        Fe rho = roots.front();  // lex-least, deterministic
        powers_.push_back(Fe::one(dst));
        for (unsigned j = 1; j < src->k; ++j) powers_.push_back(powers_.back() * rho);
    }

    const FieldCtx* src() const { return src_; }
    const FieldCtx* dst() const { return dst_; }

    Fe apply(const Fe& a) const {
        if (a.F != src_) throw invalid_field_error("embedding applied to element of wrong field");
        if (identity_) return a;
        Fe r = Fe::zero(dst_);
        for (unsigned j = 0; j < src_->k; ++j) {
            if (a.c[j] == 0) continue;
            Fe term = powers_[j];
            for (auto& x : term.c) x = mulmod(x, a.c[j], dst_->p);
            r = r + term;
        }
        return r;
    }

    /// Preimage of an element known to lie in the embedded subfield;
    /// throws if it does not. Solves the K x k linear system directly.
    Fe descend(const Fe& b) const {
        if (b.F != dst_) throw invalid_field_error("descend applied to element of wrong field");
        if (identity_) return b;
        u64 p = dst_->p;
        unsigned K = dst_->k, k = src_->k;
        // augmented matrix, rows = big-field coordinates
        std::vector<std::vector<u64>> m(K, std::vector<u64>(k + 1, 0));
        for (unsigned j = 0; j < k; ++j)
            for (unsigned i = 0; i < K; ++i) m[i][j] = powers_[j].c[i];
        for (unsigned i = 0; i < K; ++i) m[i][k] = b.c[i];
        std::vector<int> pivot_col_of_row(K, -1);
        unsigned row = 0;
        for (unsigned col = 0; col < k && row < K; ++col) {
            unsigned sel = row;
            while (sel < K && m[sel][col] == 0) ++sel;
            if (sel == K) continue;
            std::swap(m[sel], m[row]);
            u64 piv_inv = invmod(m[row][col], p);
            for (unsigned j = col; j <= k; ++j) m[row][j] = mulmod(m[row][j], piv_inv, p);
            for (unsigned i = 0; i < K; ++i) {
                if (i == row || m[i][col] == 0) continue;
                u64 f = m[i][col];
                for (unsigned j = col; j <= k; ++j)
                    m[i][j] = submod(m[i][j], mulmod(f, m[row][j], p), p);
            }
            pivot_col_of_row[row] = (int)col;
            ++row;
        }
        std::vector<u64> sol(k, 0);
        for (unsigned i = 0; i < row; ++i) sol[pivot_col_of_row[i]] = m[i][k];
        // inconsistent rows below the pivot block mean b is outside the subfield
        for (unsigned i = row; i < K; ++i)
            if (m[i][k] != 0) throw invalid_field_error("element does not lie in the subfield");
        return Fe(src_, sol);
    }

  private:
    const FieldCtx* src_;
    const FieldCtx* dst_;
    bool identity_ = false;
    std::vector<Fe> powers_;
};

inline const Embedding& get_embedding(const FieldCtx* src, const FieldCtx* dst) {
    static std::mutex mu;
    static std::map<std::pair<const FieldCtx*, const FieldCtx*>, std::unique_ptr<Embedding>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({src, dst});
    if (it != cache.end()) return *it->second;
    auto e = std::make_unique<Embedding>(src, dst);
    auto& ref = *e;
    cache.emplace(std::make_pair(src, dst), std::move(e));
    return ref;
}

inline Fe embed(const Fe& a, const FieldCtx* dst) {
    if (a.F == dst) return a;
    return get_embedding(a.F, dst).apply(a);
}

inline Poly embed(const Poly& f, const FieldCtx* dst) {
    if (f.F == dst) return f;
    const Embedding& e = get_embedding(f.F, dst);
    std::vector<Fe> c;
    c.reserve(f.c.size());
    for (auto& x : f.c) c.push_back(e.apply(x));
    return Poly(dst, std::move(c));
}

/// Smallest deterministic field containing both operands' contexts.
inline const FieldCtx* common_field(const FieldCtx* a, const FieldCtx* b) {
    if (a->p != b->p) throw invalid_field_error("different characteristics have no common field");
    if (a == b) return a;
    unsigned k = (unsigned)std::lcm(a->k, b->k);
    if (a->k == k && a == field(a->p, k)) return a;
    if (b->k == k && b == field(b->p, k)) return b;
    return field(a->p, k);
}

/// Least j | k with a^{p^j} = a: the degree of the subfield generated by a.
inline unsigned subfield_degree(const Fe& a) {
    for (unsigned j = 1; j <= a.F->k; ++j) {
        if (a.F->k % j != 0) continue;
        if (frobenius_iter(a, j) == a) return j;
    }
    throw internal_error("subfield degree not found");
}

/// All solutions of x^n = a inside a's own field, sorted lexicographically.
/// Handles p | n through the inverse Frobenius (x -> x^p is bijective).
inline std::vector<Fe> nth_roots(const Fe& a, u64 n) {
    const FieldCtx* F = a.F;
    if (n == 0) throw invalid_field_error("0th root");
    if (a.is_zero()) return {Fe::zero(F)};
    u64 n0 = n;
    Fe b = a;
    while (n0 % F->p == 0) {
        n0 /= F->p;
        b = inv_frobenius(b);  // unique p-th root
    }
    if (n0 == 1) return {b};
    Poly f(F);
    f.c.assign(n0 + 1, Fe::zero(F));
    f.c[0] = -b;
    f.c[n0] = Fe::one(F);
    return roots_in_field(f);  // x^{n0} - b, separable since p does not divide n0
}

/// Minimal d >= 1 such that x^n = a has a solution over F_{p^{k d}}, together
/// with all roots there (sorted). Used by the weighted-projective canonical form.
inline std::pair<unsigned, std::vector<Fe>> nth_roots_min_ext(const Fe& a, u64 n) {
    for (unsigned d = 1; d <= n; ++d) {
        const FieldCtx* ext = field(a.F->p, a.F->k * d);
        if (ext->size == 0) break;
        Fe ae = embed(a, ext);
        auto roots = nth_roots(ae, n);
        if (!roots.empty()) return {d, roots};
    }
    throw internal_error("no extension of degree <= n contains an nth root");
}

/// (m, roots): m is the lcm of the irreducible-factor degrees of squarefree f,
/// and roots are the deg(f) distinct roots of f in F_{p^{k m}}, sorted.
inline std::pair<unsigned, std::vector<Fe>> splitting_data(const Poly& f) {
    if (f.deg() < 1) throw invalid_field_error("splitting_data needs positive degree");
    auto degs = factor_degrees(f);  // throws singular_error if not squarefree
    unsigned m = 1;
    for (auto [d, cnt] : degs) m = (unsigned)std::lcm(m, (unsigned)d);
    const FieldCtx* ext = field(f.F->p, f.F->k * m);
    if (ext->size == 0) throw invalid_field_error("splitting field too large");
    Poly fe = embed(monic(f), ext);
    auto roots = roots_in_field(fe);
    if ((int)roots.size() != f.deg()) throw internal_error("splitting field does not split f");
    return {m, roots};
}

}  // namespace genus2

#endif
