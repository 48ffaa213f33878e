#pragma once

#include "wh/macdonald.hpp"

namespace wh {

struct WreathMacPoly {
    BiPartition label;
    int core = 0;
    SymFunc2 expansion;  // Schur basis over Q(q, t)
};

struct PairingData {
    BiPartition label;
    int core = 0;
    RatFun total;  // <H, H>_{q,t}
    RatFun cot1;   // cot part at u = 1
    RatFun nabla;  // total / cot1
};

bool induced_order_geq(const BiPartition& alpha, const BiPartition& beta, int e);

const WreathMacPoly& wreath_H(const BiPartition& alpha, int e);

// Matrices [[1,-x],[-x,1]] for x = q or t.
Matrix2 triangularity_matrix(int var_index);
// [[0,-1],[-1,0]] [[1,-q],[-q,1]] [[1,-t],[-t,1]]
Matrix2 qt_pairing_matrix();

RatFun qt_inner2(const SymFunc2& f, const SymFunc2& g);

const PairingData& wreath_N(const BiPartition& alpha, int e);

// Product over even-hook boxes of brace(alpha, e).
RatFun wreath_N_cot(const BiPartition& alpha, int e, const RatFun& u, const RatFun& q, const RatFun& t);

}  // namespace wh
