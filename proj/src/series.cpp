#include "wh/series.hpp"

#include <algorithm>
#include <map>

namespace wh {

namespace {

RatFun zv() { return RatFun::variable(0, Vars::zw); }
RatFun wv() { return RatFun::variable(1, Vars::zw); }

SymFunc2 factor_to_zw(const SymFunc2& f) {
    return map_coeffs(f, [](const RatFun& c) { return qt_to_z2w2(c); }, Vars::zw);
}

std::vector<BiPartition> bipartitions_upto(int maxdeg) {
    std::vector<BiPartition> out;
    for (int n = 0; n <= maxdeg; ++n)
        for (const auto& a : bipartitions_of(n)) out.push_back(a);
    return out;
}

std::vector<Partition> partitions_upto(int maxdeg) {
    std::vector<Partition> out;
    for (int n = 0; n <= maxdeg; ++n)
        for (const auto& a : partitions_of(n)) out.push_back(a);
    return out;
}

// Evaluates fn over all indices in parallel, keeping input order.
template <class Index, class Fn>
std::vector<SeriesTerm> build_terms(const std::vector<Index>& idx, Fn fn) {
    std::vector<SeriesTerm> out(idx.size());
    std::vector<std::string> errors(idx.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(idx.size()); ++i) {
        try {
            out[i] = fn(idx[i]);
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    }
    for (const auto& e : errors)
        if (!e.empty()) throw MathError(e);
    return out;
}

}  // namespace

RatFun qt_to_z2w2(const RatFun& f) { return f.substitute_monomials(Exp{2, 0}, Exp{0, 2}, Vars::zw); }

std::vector<SeriesTerm> omega_e_terms(int e, const SeriesParams& p) {
    if (p.k < 1 || p.maxdeg < 0) throw std::invalid_argument("series needs k >= 1 and maxdeg >= 0");
    RatFun u = zv() * wv(), q = zv() * zv(), t = wv() * wv();
    return build_terms(bipartitions_upto(p.maxdeg), [&](const BiPartition& alpha) {
        RatFun top = N_deformed(brace(alpha, e), u, q, t).pow(p.g + p.k - 1);
        RatFun total(Vars::zw), deformed(Vars::zw);
        if (alpha.size() == 0) {
            total = RatFun::constant(1, Vars::zw);
            deformed = total;
        } else {
            const PairingData& d = wreath_N(alpha, e);
            total = qt_to_z2w2(d.total);
            deformed = qt_to_z2w2(d.nabla) * wreath_N_cot(alpha, e, u, q, t);
        }
        RatFun coeff = top / (total * deformed.pow(p.k - 1));
        SymFunc2 factor = alpha.size() == 0 ? constant2(RatFun::constant(1, Vars::zw))
                                            : factor_to_zw(wreath_H(alpha, e).expansion);
        return SeriesTerm{alpha, alpha.size(), coeff, factor};
    });
}

std::vector<SeriesTerm> omega_star_terms(const SeriesParams& p) {
    if (p.k < 1 || p.maxdeg < 0) throw std::invalid_argument("series needs k >= 1 and maxdeg >= 0");
    RatFun u = zv() * wv(), q = zv() * zv(), t = wv() * wv();
    return build_terms(partitions_upto(p.maxdeg), [&](const Partition& lambda) {
        if (lambda.empty())
            return SeriesTerm{lambda, 0, RatFun::constant(1, Vars::zw), constant2(RatFun::constant(1, Vars::zw))};
        RatFun coeff = N_deformed(lambda, u, q, t).pow(2 * p.g + p.k - 1) / qt_to_z2w2(N_pairing(lambda));
        SymFunc1 h = map_coeffs(macdonald_H(lambda).expansion, [](const RatFun& c) { return qt_to_z2w2(c); }, Vars::zw);
        return SeriesTerm{lambda, lambda.size(), coeff, embed_diagonal(h)};
    });
}

std::vector<SeriesTerm> invert_series(const std::vector<SeriesTerm>& terms, int maxdeg) {
    std::vector<const SeriesTerm*> base;
    Vars v = Vars::zw;
    for (const auto& t : terms) {
        v = t.coeff.vars();
        if (t.degree == 0) {
            if (!t.coeff.is_one()) throw MathError("series inverse needs constant term 1");
            continue;
        }
        base.push_back(&t);
    }
    struct Partial {
        std::vector<int> picks;
        int degree;
    };
    std::vector<Partial> multisets{{{}, 0}};
    for (std::size_t pos = 0; pos < multisets.size(); ++pos) {
        Partial cur = multisets[pos];
        std::size_t start = cur.picks.empty() ? 0 : static_cast<std::size_t>(cur.picks.back());
        for (std::size_t i = start; i < base.size(); ++i) {
            if (cur.degree + base[i]->degree > maxdeg) continue;
            Partial next = cur;
            next.picks.push_back(static_cast<int>(i));
            next.degree += base[i]->degree;
            multisets.push_back(next);
        }
    }
    return build_terms(multisets, [&](const Partial& m) {
        RatFun coeff = RatFun::constant(1, v);
        SymFunc2 factor = constant2(RatFun::constant(1, v));
        std::vector<Partition> labels;
        for (int i : m.picks) {
            const SeriesTerm& t = *base[i];
            coeff *= t.coeff;
            factor = factor * t.factor;
            if (const auto* lp = std::get_if<Partition>(&t.index)) labels.push_back(*lp);
        }
        Int w = 1;
        for (std::size_t j = 2; j <= m.picks.size(); ++j) w *= static_cast<unsigned long>(j);
        if (m.picks.size() % 2 == 1) w = -w;
        std::map<int, int> mult;
        for (int i : m.picks) ++mult[i];
        Int nfact = 1;
        for (auto [i, c] : mult)
            for (int j = 2; j <= c; ++j) nfact *= j;
        Rat weight(w, nfact);
        weight.canonicalize();
        coeff = coeff.scaled(weight);
        std::sort(labels.begin(), labels.end(), std::greater<>());
        return SeriesTerm{labels, m.degree, coeff, factor};
    });
}

std::vector<SeriesTerm> omega_star_inverse(const SeriesParams& p) { return invert_series(omega_star_terms(p), p.maxdeg); }

std::vector<SeriesTerm> omega_one_param(OneParam which, const SeriesParams& p) {
    if (p.k < 1 || p.maxdeg < 0) throw std::invalid_argument("series needs k >= 1 and maxdeg >= 0");
    RatFun q = RatFun::variable(0, Vars::qt);
    RatFun one = RatFun::constant(1, Vars::qt);
    int hook_exp = 2 * p.g + 2 * p.k - 2;
    if (which == OneParam::star) {
        return build_terms(partitions_upto(p.maxdeg), [&](const Partition& lambda) {
            RatFun hq = hook_poly(lambda) * q.pow(-lambda.n());
            RatFun coeff = q.pow((2 - 2 * p.g - p.k) * lambda.size()) * (hq * hq).pow(hook_exp);
            SymFunc1 s = scalar_plethysm1(schur1(lambda), one / (one - q));
            return SeriesTerm{lambda, lambda.size(), coeff, embed_diagonal(s)};
        });
    }
    int e = which == OneParam::omega1 ? 1 : 0;
    Matrix2 pm = inverse(triangularity_matrix(0));
    return build_terms(bipartitions_upto(p.maxdeg), [&](const BiPartition& alpha) {
        Partition lambda = brace(alpha, e);
        RatFun hq = hook_poly(lambda) * q.pow(-lambda.n());
        RatFun coeff = q.pow(p.k * alpha.size() + (1 - p.g - p.k) * lambda.size()) * hq.pow(hook_exp);
        return SeriesTerm{alpha, alpha.size(), coeff, alphabet_substitute(schur2(alpha), pm)};
    });
}

}  // namespace wh
