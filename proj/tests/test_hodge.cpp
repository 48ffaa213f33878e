#include <fstream>

#include "doctest.h"
#include "test_util.hpp"
#include "wh/hodge.hpp"
#include "wh/series.hpp"

using namespace wh;
using wh::test::qvar;
using wh::test::tvar;

namespace {

ProblemSpec spec(int g, int k, int n, const std::vector<std::string>& cls) {
    ProblemSpec s{g, k, n, {}};
    for (const auto& c : cls) s.classes.push_back(parse_class(c));
    return s;
}

nlohmann::json fixture(const std::string& name) {
    std::ifstream in(std::string(WH_FIXTURE_DIR) + "/" + name);
    REQUIRE(in.good());
    return nlohmann::json::parse(in);
}

}  // namespace

TEST_CASE("dimension") {
    CHECK(dimension_d(spec(0, 2, 4, {"0,0:1 1", "0,0:1 1", "2,0:", "2,0:"})) == 8);
    CHECK(dimension_d(spec(0, 2, 5, {"0,0:1 1", "1,0:1", "2,0:", "2,0:"})) == 24);
    for (int g = 0; g <= 3; ++g)
        for (int k = 1; k <= 3; ++k)
            CHECK(dimension_d(spec(g, k, 1, std::vector<std::string>(2 * k, "0,0:"))) == 2 * (g + k - 1));
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(spec(0, 1, 4, {"0,0:1 1"}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(spec(0, 1, 4, {"0,0:1 1", "1,0:"}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(spec(-1, 1, 1, {"0,0:", "0,0:"}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(spec(0, 0, 1, {}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(spec(0, 1, 0, {"0,0:", "0,0:"}).validate(), std::invalid_argument);
    CHECK_NOTHROW(spec(0, 1, 4, {"0,0:1 1", "1,0:1"}).validate());
    CHECK(spec(0, 1, 4, {"0,0:1 1", "1,0:1"}).ccl_ok());
    CHECK_FALSE(spec(0, 1, 4, {"0,0:1 1", "0,1:1"}).ccl_ok());
}

TEST_CASE("parallel triple pairing equals the serial reference") {
    for (const auto& s : {spec(0, 2, 4, {"0,0:1 1", "0,0:1 1", "2,0:", "2,0:"}),
                          spec(0, 2, 5, {"0,0:1 1", "1,0:1", "2,0:", "2,0:"}), spec(1, 1, 3, {"0,0:1", "1,0:"})}) {
        SeriesParams p{s.g, s.k, s.N()};
        auto first = omega_e_terms(s.odd() ? 1 : 0, p);
        auto second = s.odd() ? omega_e_terms(0, p) : first;
        auto inv = omega_star_inverse(p);
        auto h = class_functions(s, Vars::zw);
        CHECK(pair_triples(first, second, inv, h, s.N()) == pair_triples_serial(first, second, inv, h, s.N()));
    }
}

TEST_CASE("fixture polynomial in rank four") {
    auto j = fixture("hb_n4.json");
    std::vector<std::string> cls = j.at("classes");
    HodgeResult r = compute_HB(spec(j.at("g"), j.at("k"), j.at("n"), cls));
    CHECK(r.HB == RatFun(poly_from_json(j.at("hb"), Vars::zw)));
    CHECK(r.d == j.at("d").get<int>());
    CHECK(r.all_ok());
}

TEST_CASE("rank one is a torus") {
    RatFun q = qvar(), t = tvar();
    for (int g = 0; g <= 2; ++g)
        for (int k = 1; k <= 2; ++k) {
            if (g + k - 1 == 0) continue;
            HodgeResult r = compute_HB(spec(g, k, 1, std::vector<std::string>(2 * k, "0,0:")));
            int m = 2 * (g + k - 1);
            CHECK(r.d == m);
            CHECK(r.E == (q - RatFun::constant(1)).pow(m));
            CHECK(r.MHP == (t + q * t * t).pow(m));
            CHECK(r.all_ok());
        }
}

TEST_CASE("E-polynomial fixtures") {
    for (const auto& j : fixture("e_polynomials.json")) {
        std::vector<std::string> cls = j.at("classes");
        ProblemSpec s = spec(j.at("g"), j.at("k"), j.at("n"), cls);
        RatFun want = ratfun_from_json(j.at("e_poly"), Vars::qt);
        CHECK(e_poly_from_counting(s) == want);
        HodgeResult r = compute_HB(s);
        CHECK(r.E == want);
        CHECK(r.all_ok());
    }
}

TEST_CASE("checks without cross checks") {
    HodgeResult r = compute_HB(spec(1, 1, 2, {"0,0:1", "1,0:"}), false);
    CHECK(r.check("polynomial") != nullptr);
    CHECK(r.check("e_poly_routes_agree") == nullptr);
    CHECK(r.all_ok());
}

TEST_CASE("non-CCL classes give a warning") {
    HodgeResult r = compute_HB(spec(1, 1, 2, {"0,0:1", "0,1:"}), false);
    CHECK_FALSE(r.warnings.empty());
}
