#pragma once

#include <cstdlib>
#include <random>
#include <string>

#include "wh/algebra.hpp"

namespace wh::test {

// Seed from WH_SEED when set, fixed otherwise.
inline std::mt19937_64 rng() {
    const char* s = std::getenv("WH_SEED");
    return std::mt19937_64(s ? std::stoull(s) : 20240607ULL);
}

inline Poly random_poly(std::mt19937_64& g, int terms, int maxdeg, Vars v = Vars::qt) {
    std::uniform_int_distribution<int> e(0, maxdeg), c(-5, 5);
    Poly p(v);
    for (int i = 0; i < terms; ++i) p += Poly::monomial(c(g), e(g), e(g), v);
    return p;
}

inline Rat ratio(const Int& a, const Int& b) {
    Rat r(a, b);
    r.canonicalize();
    return r;
}

inline RatFun qvar() { return RatFun::variable(0, Vars::qt); }
inline RatFun tvar() { return RatFun::variable(1, Vars::qt); }
inline RatFun one() { return RatFun::constant(1, Vars::qt); }

}  // namespace wh::test
