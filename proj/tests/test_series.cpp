#include "doctest.h"
#include "test_util.hpp"
#include "wh/series.hpp"

using namespace wh;

namespace {

// Pairs Omega(a) * Omega(b) against s_{alpha_1}(X_1) ... s_{alpha_{2k}}(X_{2k})
// in total degree D, with every alpha_j running over 2-partitions of D.
// Returns false on the first pairing that differs from the unit series.
bool product_is_unit(const std::vector<SeriesTerm>& a, const std::vector<SeriesTerm>& b, int k, int maxdeg) {
    RatFun zero(Vars::zw), unit = RatFun::constant(1, Vars::zw);
    for (int D = 0; D <= maxdeg; ++D) {
        const auto& labels = bipartitions_of(D);
        std::vector<RatFun> coeffs;
        std::vector<std::vector<RatFun>> inner;
        for (const auto& x : a)
            for (const auto& y : b) {
                if (x.degree + y.degree != D) continue;
                SymFunc2 f = x.factor * y.factor;
                coeffs.push_back(x.coeff * y.coeff);
                inner.emplace_back();
                for (const auto& l : labels) inner.back().push_back(hall_inner(f, schur2(l, Vars::zw)));
            }
        std::vector<std::size_t> pick(2 * k, 0);
        while (true) {
            RatFun total(Vars::zw);
            for (std::size_t i = 0; i < coeffs.size(); ++i) {
                RatFun v = coeffs[i];
                for (std::size_t j : pick) v *= inner[i][j];
                total += v;
            }
            if (total != (D == 0 ? unit : zero)) return false;
            std::size_t i = 0;
            while (i < pick.size() && ++pick[i] == labels.size()) pick[i++] = 0;
            if (i == pick.size()) break;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("term counts") {
    SeriesParams p{0, 1, 1};
    CHECK(omega_e_terms(0, p).size() == 3);
    CHECK(omega_e_terms(1, p).size() == 3);
    SeriesParams p2{0, 1, 2};
    CHECK(omega_star_terms(p2).size() == 4);
    CHECK(omega_one_param(OneParam::star, p2).size() == 4);
    CHECK(omega_e_terms(0, p2).size() == 1 + 2 + 5);
}

TEST_CASE("constant terms are one") {
    SeriesParams p{1, 2, 2};
    for (const auto& terms : {omega_e_terms(0, p), omega_star_terms(p), omega_star_inverse(p)}) {
        REQUIRE_FALSE(terms.empty());
        CHECK(terms.front().degree == 0);
        CHECK(terms.front().coeff == RatFun::constant(1, Vars::zw));
    }
    auto odd = omega_e_terms(1, p);
    CHECK(odd.front().degree == 0);
    CHECK_FALSE(odd.front().coeff.is_one());
}

TEST_CASE("series inverse") {
    for (auto [g, k] : std::vector<std::pair<int, int>>{{0, 1}, {1, 1}, {0, 2}}) {
        SeriesParams p{g, k, 2};
        auto s = omega_star_terms(p);
        auto inv = omega_star_inverse(p);
        CHECK(product_is_unit(s, inv, k, 2));
        CHECK(product_is_unit(inv, s, k, 2));
    }
}

TEST_CASE("inverse of a one-term series is a geometric series") {
    SeriesParams p{0, 1, 3};
    auto s = omega_star_terms(p);
    std::vector<SeriesTerm> one_term(s.begin(), s.begin() + 2);
    auto inv = invert_series(one_term, 3);
    REQUIRE(inv.size() == 4);
    RatFun c = one_term[1].coeff;
    for (int j = 0; j <= 3; ++j) {
        CHECK(inv[j].degree == j);
        CHECK(inv[j].coeff == (j % 2 ? -c.pow(j) : c.pow(j)));
    }
}

TEST_CASE("argument checks") {
    CHECK_THROWS_AS(omega_e_terms(0, SeriesParams{0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(omega_star_terms(SeriesParams{0, 1, -1}), std::invalid_argument);
}
