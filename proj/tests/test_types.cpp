#include "doctest.h"
#include "test_util.hpp"
#include "wh/types.hpp"

using namespace wh;

TEST_CASE("class type parsing") {
    SimpleType a = parse_class("1,0:2 1");
    CHECK(a.m_plus == 1);
    CHECK(a.m_minus == 0);
    CHECK(a.m_star == std::vector<int>{2, 1});
    CHECK(a.size() == 4);
    CHECK(parse_class("0,0:1 2") == SimpleType(0, 0, {2, 1}));
    CHECK(parse_class("2,0:").m_star.empty());
    CHECK(parse_class(a.str()) == a);
    for (const char* bad : {"", "1,0", "1:0,", "a,0:", "-1,0:", "1,0:0", "1,0:x", "1,-2:", "1;0:"})
        CHECK_THROWS_AS(parse_class(bad), std::invalid_argument);
}

TEST_CASE("dual types") {
    TypeData t = simple_dual(parse_class("1,1:2 1"));
    CHECK(t.plus == BiPartition{Partition{1}, Partition{}});
    CHECK(t.minus == BiPartition{Partition{1}, Partition{}});
    CHECK(t.star == std::vector<Partition>{Partition{2}, Partition{1}});
    CHECK(t.size() == 5);
    CHECK_THROWS(TypeData({}, {}, {Partition{}}));
}

TEST_CASE("type statistics") {
    CHECK(star_N({Partition{1}, Partition{1}, Partition{2}}) == 2);
    CHECK(star_N({}) == 1);
    CHECK(star_K({Partition{1}, Partition{2}}) == 2);
    CHECK(star_K({Partition{1}}) == -1);
    CHECK(star_K({}) == 1);
}

TEST_CASE("class functions have the right degree") {
    for (const char* c : {"0,0:1 1", "1,0:1", "2,0:", "0,0:2"}) {
        TypeData t = simple_dual(parse_class(c));
        SymFunc2 h = convert_basis(h_of_type(t), Basis2::schur2);
        REQUIRE_FALSE(h.is_zero());
        for (const auto& [alpha, coeff] : h.terms) CHECK(alpha.size() == t.size());
    }
}
