#include "doctest.h"
#include "test_util.hpp"
#include "wh/wreath_macdonald.hpp"

using namespace wh;
using wh::test::one;
using wh::test::qvar;
using wh::test::tvar;

TEST_CASE("wreath polynomials are orthogonal") {
    for (int e : {0, 1})
        for (int n = 1; n <= 2; ++n)
            for (const auto& a : bipartitions_of(n))
                for (const auto& b : bipartitions_of(n)) {
                    RatFun v = qt_inner2(wreath_H(a, e).expansion, wreath_H(b, e).expansion);
                    if (a == b)
                        CHECK(v == wreath_N(a, e).total);
                    else
                        CHECK(v.is_zero());
                }
}

TEST_CASE("pairing splits into cot part and remainder") {
    RatFun q = qvar(), t = tvar();
    for (int e : {0, 1})
        for (int n = 1; n <= 2; ++n)
            for (const auto& a : bipartitions_of(n)) {
                const PairingData& d = wreath_N(a, e);
                CHECK(d.label == a);
                CHECK(d.core == e);
                CHECK(d.cot1 == wreath_N_cot(a, e, one(), q, t));
                CHECK(d.nabla * d.cot1 == d.total);
                CHECK(d.nabla.num().is_monomial());
            }
}

TEST_CASE("induced order") {
    for (int e : {0, 1})
        for (int n = 1; n <= 3; ++n)
            for (const auto& a : bipartitions_of(n)) {
                CHECK(induced_order_geq(a, a, e));
                for (const auto& b : bipartitions_of(n))
                    if (a != b && induced_order_geq(a, b, e)) CHECK_FALSE(induced_order_geq(b, a, e));
            }
}

TEST_CASE("triangularity matrices") {
    RatFun q = qvar();
    Matrix2 m = triangularity_matrix(0);
    CHECK(m[0][0] == one());
    CHECK(m[0][1] == -q);
    Matrix2 p = m * inverse(m);
    CHECK(p[0][0] == one());
    CHECK(p[0][1].is_zero());
    CHECK(p[1][0].is_zero());
    CHECK(p[1][1] == one());
}

TEST_CASE("size one expansions are single Schur functions up to units") {
    for (int e : {0, 1})
        for (const auto& a : bipartitions_of(1)) {
            const auto& h = wreath_H(a, e).expansion;
            CHECK(h.terms.size() <= 2);
            CHECK_FALSE(h.is_zero());
        }
}
