#include "doctest.h"
#include "test_util.hpp"
#include "wh/macdonald.hpp"

using namespace wh;
using wh::test::one;
using wh::test::qvar;
using wh::test::tvar;

TEST_CASE("small modified Macdonald polynomials") {
    RatFun q = qvar(), t = tvar();
    CHECK(macdonald_H(Partition{1}).expansion == schur1(Partition{1}));
    CHECK(macdonald_H(Partition{2}).expansion == schur1(Partition{2}) + scale(schur1(Partition{1, 1}), q));
    CHECK(macdonald_H(Partition{1, 1}).expansion == schur1(Partition{2}) + scale(schur1(Partition{1, 1}), t));
    const auto& h21 = macdonald_H(Partition{2, 1}).expansion;
    CHECK(h21.coeff(Partition{3}) == one());
    CHECK(h21.coeff(Partition{2, 1}) == q + t);
    CHECK(h21.coeff(Partition{1, 1, 1}) == q * t);
}

TEST_CASE("q and t exchange under transpose") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& l : partitions_of(n)) {
            SymFunc1 a = macdonald_H(l).expansion;
            SymFunc1 b = map_coeffs(macdonald_H(l.dual()).expansion, [](const RatFun& c) { return c.swapped(); },
                                    Vars::qt);
            CHECK(a == b);
        }
}

TEST_CASE("coefficients at q = t = 1 give the regular representation") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& l : partitions_of(n))
            for (const auto& [mu, c] : macdonald_H(l).expansion.terms) {
                Rat f = sn_char(mu, Partition(std::vector<int>(n, 1)));
                CHECK(c.evaluate(1, 1) == f);
            }
}

TEST_CASE("orthogonality and self pairing") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& a : partitions_of(n))
            for (const auto& b : partitions_of(n)) {
                RatFun v = qt_inner1(macdonald_H(a).expansion, macdonald_H(b).expansion);
                if (a == b)
                    CHECK(v == N_pairing(a));
                else
                    CHECK(v.is_zero());
            }
}

TEST_CASE("deformed pairing at u = 1") {
    RatFun q = qvar(), t = tvar();
    for (int n = 1; n <= 4; ++n)
        for (const auto& l : partitions_of(n)) {
            CHECK(N_deformed(l, one(), q, t) == hook_pair_product(hooks(l), one(), q, t));
            CHECK(N_deformed(l, one(), q, t) == N_pairing(l));
        }
}
