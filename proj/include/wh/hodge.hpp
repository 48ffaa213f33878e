#pragma once

#include <string>
#include <vector>

#include "wh/series.hpp"
#include "wh/types.hpp"

namespace wh {

struct ProblemSpec {
    int g = 0;
    int k = 1;
    int n = 1;
    std::vector<SimpleType> classes;

    int N() const { return n / 2; }
    bool odd() const { return n % 2 == 1; }
    bool ccl_ok() const;
    // Throws std::invalid_argument describing the first problem found.
    void validate() const;
    std::string str() const;
};

struct CheckResult {
    std::string name;
    bool ok = true;
    std::string detail;
    bool informational = false;  // reported, never counted as a failure
};

struct HodgeResult {
    RatFun HB{Vars::zw};
    int d = 0;
    RatFun E{Vars::qt};
    RatFun MHP{Vars::qt};
    std::vector<CheckResult> checks;
    std::vector<std::string> warnings;

    bool all_ok() const;
    const CheckResult* check(const std::string& name) const;
};

int dimension_d(const ProblemSpec& spec);

// Pairing of the product of three diagonal series with prod_j h_j, keeping
// only triples whose degrees add up to N. The serial variant is the
// reference the parallel one is tested against.
RatFun pair_triples(const std::vector<SeriesTerm>& a, const std::vector<SeriesTerm>& b,
                    const std::vector<SeriesTerm>& c, const std::vector<SymFunc2>& h, int N);
RatFun pair_triples_serial(const std::vector<SeriesTerm>& a, const std::vector<SeriesTerm>& b,
                           const std::vector<SeriesTerm>& c, const std::vector<SymFunc2>& h, int N);

// h_{beta*} for every class, in the given variables.
std::vector<SymFunc2> class_functions(const ProblemSpec& spec, Vars v);

RatFun hb_polynomial(const ProblemSpec& spec);
RatFun e_poly_from_hb(const RatFun& hb, int d);
RatFun e_poly_from_counting(const ProblemSpec& spec);
RatFun mixed_hodge_poly(const RatFun& hb, int d);

// Full computation with the property checks. Without cross checks only the
// checks on HB itself are run and E, MHP are taken from HB alone.
HodgeResult compute_HB(const ProblemSpec& spec, bool cross_checks = true);

}  // namespace wh
