#include "doctest.h"
#include "test_util.hpp"
#include "wh/symfunc.hpp"

using namespace wh;
using wh::test::one;
using wh::test::qvar;

TEST_CASE("symmetric group character orthogonality") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& a : partitions_of(n))
            for (const auto& b : partitions_of(n)) {
                Rat s = 0;
                for (const auto& rho : partitions_of(n)) s += wh::test::ratio(sn_char(a, rho) * sn_char(b, rho), z_lambda(rho));
                CHECK(s == Rat(a == b ? 1 : 0));
            }
    CHECK(sn_char(Partition{2, 1}, Partition{1, 1, 1}) == 2);
    CHECK(sn_char(Partition{1, 1, 1}, Partition{2, 1}) == -1);
}

TEST_CASE("basis changes round trip") {
    for (int n = 0; n <= 4; ++n)
        for (const auto& l : partitions_of(n)) {
            SymFunc1 s = schur1(l);
            CHECK(convert_basis(convert_basis(s, Basis1::power), Basis1::schur) == s);
            CHECK(convert_basis(convert_basis(complete1(l), Basis1::schur), Basis1::complete) == complete1(l));
        }
}

TEST_CASE("Hall inner product") {
    for (const auto& a : partitions_of(4))
        for (const auto& b : partitions_of(4)) {
            CHECK(hall_inner(schur1(a), schur1(b)) == RatFun::constant(a == b ? 1 : 0));
            CHECK(hall_inner(power1(a), power1(b)) == RatFun::constant(a == b ? Rat(z_lambda(a)) : Rat(0)));
        }
    for (const auto& a : bipartitions_of(2))
        for (const auto& b : bipartitions_of(2))
            CHECK(hall_inner(schur2(a), schur2(b)) == RatFun::constant(a == b ? 1 : 0));
}

TEST_CASE("products") {
    SymFunc1 p = schur1(Partition{1}) * schur1(Partition{1});
    CHECK(p == schur1(Partition{2}) + schur1(Partition{1, 1}));
    SymFunc1 h = convert_basis(schur1(Partition{1}) * schur1(Partition{2, 1}), Basis1::schur);
    CHECK(h == schur1(Partition{3, 1}) + schur1(Partition{2, 2}) + schur1(Partition{2, 1, 1}));
}

TEST_CASE("hyperoctahedral character orthogonality") {
    for (int m = 1; m <= 4; ++m)
        for (const auto& a : bipartitions_of(m))
            for (const auto& b : bipartitions_of(m)) {
                Rat s = 0;
                for (const auto& beta : bipartitions_of(m))
                    s += wh::test::ratio(wreath_char(a, beta) * wreath_char(b, beta), z_bipartition(beta));
                CHECK(s == Rat(a == b ? 1 : 0));
            }
}

TEST_CASE("scalar plethysm") {
    RatFun q = qvar();
    CHECK(plethystic_value(schur1(Partition{1}), one() / (one() - q)) == one() / (one() - q));
    CHECK(plethystic_value(schur1(Partition{1, 1}), one() / (one() - q)) == q / ((one() - q) * (one() - q * q)));
    SymFunc1 p2 = power1(Partition{2});
    CHECK(scalar_plethysm1(p2, q) == scale(p2, q * q));
}

TEST_CASE("diagonal embedding") {
    SymFunc2 e = embed_diagonal(schur1(Partition{1, 1}));
    SymFunc2 want = schur2({Partition{1, 1}, Partition{}}) + schur2({Partition{1}, Partition{1}}) +
                    schur2({Partition{}, Partition{1, 1}});
    CHECK(convert_basis(e, Basis2::schur2) == want);
}
