#include "wh/wreath_macdonald.hpp"

#include <mutex>

namespace wh {

namespace {

RatFun qv() { return RatFun::variable(0, Vars::qt); }
RatFun tv() { return RatFun::variable(1, Vars::qt); }
RatFun one() { return RatFun::constant(1, Vars::qt); }

WreathMacPoly solve_wreath(const BiPartition& alpha, int e) {
    int n = alpha.size();
    const auto& bs = bipartitions_of(n);
    std::size_t k = bs.size();
    std::vector<SymFunc2> rows_q, rows_t;
    Matrix2 mq = triangularity_matrix(0), mt = triangularity_matrix(1);
    for (const auto& beta : bs) {
        rows_q.push_back(alphabet_substitute(schur2(beta), mq));
        rows_t.push_back(alphabet_substitute(schur2(beta), mt));
    }
    BiPartition ad = alpha.dual();

    std::vector<std::vector<RatFun>> a;
    std::vector<RatFun> b;
    auto constrain = [&](const std::vector<SymFunc2>& rows, const BiPartition& bound) {
        for (const auto& gamma : bs) {
            if (induced_order_geq(gamma, bound, e)) continue;
            std::vector<RatFun> row;
            for (std::size_t i = 0; i < k; ++i) row.push_back(rows[i].coeff(gamma));
            a.push_back(std::move(row));
            b.emplace_back(Vars::qt);
        }
    };
    constrain(rows_q, alpha);
    constrain(rows_t, ad);
    std::vector<RatFun> norm(k, RatFun(Vars::qt));
    norm[0] = one();  // bs[0] == ((n), empty)
    a.push_back(norm);
    b.push_back(one());

    std::vector<RatFun> x = solve_unique(a, b);
    WreathMacPoly h{alpha, e, SymFunc2(Basis2::schur2, Vars::qt)};
    for (std::size_t i = 0; i < k; ++i) h.expansion.add(bs[i], x[i]);
    return h;
}

std::mutex wreath_mutex;

}  // namespace

bool induced_order_geq(const BiPartition& alpha, const BiPartition& beta, int e) {
    if (alpha.size() != beta.size()) throw std::invalid_argument("order on 2-partitions of different sizes");
    return dominance_geq(brace(alpha, e), brace(beta, e));
}

Matrix2 triangularity_matrix(int var_index) {
    RatFun x = -RatFun::variable(var_index, Vars::qt);
    return matrix2(one(), x, x, one());
}

Matrix2 qt_pairing_matrix() {
    RatFun m1 = RatFun::constant(-1, Vars::qt);
    Matrix2 swap = matrix2(RatFun(Vars::qt), m1, m1, RatFun(Vars::qt));
    return swap * triangularity_matrix(0) * triangularity_matrix(1);
}

const WreathMacPoly& wreath_H(const BiPartition& alpha, int e) {
    static std::map<std::pair<BiPartition, int>, WreathMacPoly> cache;
    {
        std::lock_guard<std::mutex> lock(wreath_mutex);
        auto it = cache.find({alpha, e});
        if (it != cache.end()) return it->second;
    }
    WreathMacPoly h = solve_wreath(alpha, e);
    std::lock_guard<std::mutex> lock(wreath_mutex);
    return cache.emplace(std::make_pair(alpha, e), std::move(h)).first->second;
}

RatFun qt_inner2(const SymFunc2& f, const SymFunc2& g) {
    static const Matrix2 m = qt_pairing_matrix();
    return hall_inner(f, alphabet_substitute(g, m));
}

RatFun wreath_N_cot(const BiPartition& alpha, int e, const RatFun& u, const RatFun& q, const RatFun& t) {
    std::vector<Hook> even;
    for (const auto& h : hooks(brace(alpha, e)))
        if (h.hook % 2 == 0) even.push_back(h);
    return hook_pair_product(even, u, q, t);
}

const PairingData& wreath_N(const BiPartition& alpha, int e) {
    static std::map<std::pair<BiPartition, int>, PairingData> cache;
    {
        std::lock_guard<std::mutex> lock(wreath_mutex);
        auto it = cache.find({alpha, e});
        if (it != cache.end()) return it->second;
    }
    const WreathMacPoly& h = wreath_H(alpha, e);
    PairingData d{alpha, e, qt_inner2(h.expansion, h.expansion), RatFun(Vars::qt), RatFun(Vars::qt)};
    d.cot1 = wreath_N_cot(alpha, e, one(), qv(), tv());
    d.nabla = d.total / d.cot1;
    std::lock_guard<std::mutex> lock(wreath_mutex);
    return cache.emplace(std::make_pair(alpha, e), std::move(d)).first->second;
}

}  // namespace wh
