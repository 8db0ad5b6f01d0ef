#ifndef GENUS2_TEST_HELPERS_HPP
#define GENUS2_TEST_HELPERS_HPP

#include <random>

#include "genus2/poly.hpp"

namespace g2test {

using namespace genus2;

inline std::mt19937_64 rng(u64 seed = 0xC0FFEE) { return std::mt19937_64(seed); }

inline Fe random_fe(const FieldCtx* F, std::mt19937_64& g) {
    return Fe::from_index(F, g() % F->size);
}

inline Fe random_nonzero(const FieldCtx* F, std::mt19937_64& g) {
    for (;;) {
        Fe a = random_fe(F, g);
        if (!a.is_zero()) return a;
    }
}

inline Poly random_poly(const FieldCtx* F, int deg, std::mt19937_64& g) {
    std::vector<Fe> c;
    for (int i = 0; i < deg; ++i) c.push_back(random_fe(F, g));
    c.push_back(random_nonzero(F, g));
    return Poly(F, std::move(c));
}

inline Poly random_squarefree(const FieldCtx* F, int deg, std::mt19937_64& g) {
    for (;;) {
        Poly f = random_poly(F, deg, g);
        if (is_squarefree(f)) return f;
    }
}

}  // namespace g2test

#endif
