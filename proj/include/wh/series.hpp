#pragma once

#include <variant>
#include <vector>

#include "wh/types.hpp"
#include "wh/wreath_macdonald.hpp"

namespace wh {

using SeriesIndex = std::variant<BiPartition, Partition, std::vector<Partition>>;

struct SeriesTerm {
    SeriesIndex index;
    int degree = 0;
    RatFun coeff;
    SymFunc2 factor;  // same function in every alphabet, Schur basis
};

struct SeriesParams {
    int g = 0;
    int k = 1;
    int maxdeg = 0;
};

// Two-parameter series in (z, w).
std::vector<SeriesTerm> omega_e_terms(int e, const SeriesParams& p);
std::vector<SeriesTerm> omega_star_terms(const SeriesParams& p);
std::vector<SeriesTerm> omega_star_inverse(const SeriesParams& p);

// Formal inverse of a series whose constant term is 1, indexed by multisets
// of the nonempty indices of the input.
std::vector<SeriesTerm> invert_series(const std::vector<SeriesTerm>& terms, int maxdeg);

enum class OneParam { omega0, omega1, star };
// One-parameter series in q (variables (q, t), t unused).
std::vector<SeriesTerm> omega_one_param(OneParam which, const SeriesParams& p);

// Maps of (q, t)-rational functions into the (z, w) world.
RatFun qt_to_z2w2(const RatFun& f);

}  // namespace wh
