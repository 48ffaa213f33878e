#include <sstream>

#include "doctest.h"
#include "test_util.hpp"
#include "wh/cli.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    args.insert(args.begin(), "wreath-hodge");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    std::ostringstream out, err;
    int code = wh::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("compute prints JSON") {
    Run r = cli({"compute", "--g", "1", "--k", "1", "--n", "2", "--class", "0,0:1", "--class", "1,0:", "--json",
                 "--check-all"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("d") == 4);
    CHECK(j.at("e_poly").dump() == R"([[4,0,"2"],[3,0,"-2"],[1,0,"-2"],[0,0,"2"]])");
    CHECK(j.at("e_leading_coefficient") == "2");
    CHECK(j.at("checks").at("e_poly_routes_agree").at("ok") == true);
    CHECK(j.at("warnings").empty());
}

TEST_CASE("compute text output") {
    Run r = cli({"compute", "--g", "2", "--k", "1", "--n", "1", "--class", "0,0:", "--class", "0,0:"});
    CHECK(r.code == 0);
    CHECK(r.out.find("d = 4") != std::string::npos);
    CHECK(r.out.find("checks:") != std::string::npos);
}

TEST_CASE("exit codes for bad input") {
    CHECK(cli({}).code == 3);
    CHECK(cli({"compute", "--g", "0", "--k", "1", "--n", "2"}).code == 3);
    CHECK(cli({"compute", "--g", "0", "--k", "1", "--n", "2", "--class", "0,0:1", "--class", "0,0:1 1"}).code == 3);
    CHECK(cli({"compute", "--g", "0", "--k", "1", "--n", "2", "--class", "x", "--class", "1,0:"}).code == 3);
    CHECK(cli({"compute", "--g", "x", "--k", "1", "--n", "1", "--class", "0,0:", "--class", "0,0:"}).code == 3);
    CHECK(cli({"oracle", "--q", "7", "--eigs", "1", "--eigs", "1"}).code == 3);
    CHECK(cli({"oracle", "--q", "7", "--eigs", "2"}).code == 3);
    CHECK(cli({"wreath-mac", "--size", "1", "--core", "2"}).code == 3);
    CHECK(cli({"frobnicate"}).code == 3);
}

TEST_CASE("help") { CHECK(cli({"--help"}).code == 0); }

TEST_CASE("oracle compares with the formula") {
    Run r = cli({"oracle", "--q", "7", "--g", "1", "--eigs", "2", "--eigs", "1", "--class", "0,0:1", "--class", "1,0:",
                 "--json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("count") == "4104");
    CHECK(j.at("verdict") == "PASS");
    Run t = cli({"oracle", "--q", "5", "--n", "1", "--g", "1", "--eigs", "", "--eigs", ""});
    CHECK(t.code == 0);
    CHECK(t.out == "count = 16\n");
}

TEST_CASE("wreath-mac") {
    Run r = cli({"wreath-mac", "--size", "1", "--core", "0", "--json"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.size() == 2);
    CHECK(j[0].contains("pairing"));
    Run t = cli({"wreath-mac", "--size", "2", "--core", "1"});
    CHECK(t.code == 0);
    CHECK(t.out.find("nabla") != std::string::npos);
}

TEST_CASE("selftest") {
    Run r = cli({"selftest", "--criterion", "9"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("PASS 9", 0) == 0);
    CHECK(cli({"selftest", "--filter", "no-such-criterion"}).code == 2);
}
