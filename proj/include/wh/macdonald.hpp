#pragma once

#include "wh/symfunc.hpp"

namespace wh {

struct MacdonaldPoly {
    Partition label;
    SymFunc1 expansion;  // Schur basis over Q(q, t)
};

// Modified Macdonald polynomial H_lambda(Z; q, t), memoized.
const MacdonaldPoly& macdonald_H(const Partition& lambda);

// prod over boxes (q^{a+1} - u t^l)(q^a - u^{-1} t^{l+1}) for arbitrary
// values of u, q, t in a common two-variable field.
RatFun hook_pair_product(const std::vector<Hook>& boxes, const RatFun& u, const RatFun& q, const RatFun& t);

RatFun N_pairing(const Partition& lambda);
RatFun N_deformed(const Partition& lambda, const RatFun& u, const RatFun& q, const RatFun& t);

// <f, g[(q-1)(1-t)Z]>
RatFun qt_inner1(const SymFunc1& f, const SymFunc1& g);

}  // namespace wh
