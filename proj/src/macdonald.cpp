#include "wh/macdonald.hpp"

#include <mutex>

namespace wh {

namespace {

RatFun qv() { return RatFun::variable(0, Vars::qt); }
RatFun tv() { return RatFun::variable(1, Vars::qt); }
RatFun one() { return RatFun::constant(1, Vars::qt); }

// Row i: coefficients of s[c Z] for the i-th Schur function of degree n.
std::vector<SymFunc1> plethysm_rows(int n, const RatFun& c) {
    std::vector<SymFunc1> rows;
    for (const auto& mu : partitions_of(n)) rows.push_back(scalar_plethysm1(schur1(mu), c));
    return rows;
}

MacdonaldPoly solve_macdonald(const Partition& lambda) {
    int n = lambda.size();
    const auto& ps = partitions_of(n);
    std::size_t k = ps.size();
    auto rows_q = plethysm_rows(n, one() - qv());
    auto rows_t = plethysm_rows(n, one() - tv());
    Partition ld = lambda.dual();

    std::vector<std::vector<RatFun>> a;
    std::vector<RatFun> b;
    auto constrain = [&](const std::vector<SymFunc1>& rows, const Partition& bound) {
        for (const auto& nu : ps) {
            if (dominance_geq(nu, bound)) continue;
            std::vector<RatFun> row;
            for (std::size_t i = 0; i < k; ++i) row.push_back(rows[i].coeff(nu));
            a.push_back(std::move(row));
            b.emplace_back(Vars::qt);
        }
    };
    constrain(rows_q, lambda);
    constrain(rows_t, ld);
    std::vector<RatFun> norm(k, RatFun(Vars::qt));
    norm[0] = one();  // ps[0] == (n)
    a.push_back(norm);
    b.push_back(one());

    std::vector<RatFun> x = solve_unique(a, b);
    MacdonaldPoly h{lambda, SymFunc1(Basis1::schur, Vars::qt)};
    for (std::size_t i = 0; i < k; ++i) h.expansion.add(ps[i], x[i]);
    return h;
}

std::mutex mac_mutex;

}  // namespace

const MacdonaldPoly& macdonald_H(const Partition& lambda) {
    static std::map<Partition, MacdonaldPoly> cache;
    {
        std::lock_guard<std::mutex> lock(mac_mutex);
        auto it = cache.find(lambda);
        if (it != cache.end()) return it->second;
    }
    MacdonaldPoly h = solve_macdonald(lambda);
    std::lock_guard<std::mutex> lock(mac_mutex);
    return cache.emplace(lambda, std::move(h)).first->second;
}

RatFun hook_pair_product(const std::vector<Hook>& boxes, const RatFun& u, const RatFun& q, const RatFun& t) {
    RatFun r = RatFun::constant(1, q.vars());
    RatFun uinv = u.inverse();
    for (const auto& h : boxes) {
        r *= q.pow(h.arm + 1) - u * t.pow(h.leg);
        r *= q.pow(h.arm) - uinv * t.pow(h.leg + 1);
    }
    return r;
}

RatFun N_pairing(const Partition& lambda) { return hook_pair_product(hooks(lambda), one(), qv(), tv()); }

RatFun N_deformed(const Partition& lambda, const RatFun& u, const RatFun& q, const RatFun& t) {
    return hook_pair_product(hooks(lambda), u, q, t);
}

RatFun qt_inner1(const SymFunc1& f, const SymFunc1& g) {
    RatFun c = (qv() - one()) * (one() - tv());
    return hall_inner(f, scalar_plethysm1(g, c));
}

}  // namespace wh
