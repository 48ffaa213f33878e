#include <algorithm>

#include "doctest.h"
#include "test_util.hpp"
#include "wh/oracle.hpp"

using namespace wh;

TEST_CASE("genericity") {
    CHECK(genericity_check(7, {{2}, {1}}, true).ok);
    CHECK(genericity_check(7, {{2}, {1}}, false).ok);
    Genericity bad = genericity_check(7, {{1}, {1}}, false);
    CHECK_FALSE(bad.ok);
    CHECK_FALSE(bad.witness.empty());
    CHECK(genericity_check(13, {{2}, {5}}, true).ok);
}

TEST_CASE("finite general linear groups") {
    FiniteGL G(2, 5);
    CHECK(G.order() == 480);
    CHECK(G.class_count() == 24);
    long total = 0;
    for (int c = 0; c < G.class_count(); ++c) total += G.class_size(c);
    CHECK(total == G.order());
    auto g = wh::test::rng();
    std::uniform_int_distribution<long> pick(0, G.order() - 1);
    for (int i = 0; i < 50; ++i) {
        const auto& x = G.elements()[pick(g)];
        const auto& y = G.elements()[pick(g)];
        CHECK(G.mul(x, G.inv(x)) == G.identity());
        CHECK(G.sigma(G.sigma(x)) == x);
        CHECK(G.sigma(G.mul(x, y)) == G.mul(G.sigma(x), G.sigma(y)));
        CHECK(G.det(G.mul(x, y)) == G.det(x) * G.det(y) % 5);
        CHECK(G.class_of(G.mul(G.mul(y, x), G.inv(y))) == G.class_of(x));
        CHECK(G.index_of(x) >= 0);
    }
    FiniteGL T(1, 7);
    CHECK(T.order() == 6);
    CHECK(T.class_count() == 6);
}

TEST_CASE("twisted classes") {
    for (int q : {5, 7}) {
        FiniteGL G(2, q);
        auto rep = G.twisted_rep({2});
        auto orbit = twisted_class(G, rep, ClassMode::orbit);
        auto geo = twisted_class(G, rep, ClassMode::geometric);
        long stab = 0;
        for (const auto& g : G.elements())
            if (G.mul(G.mul(g, rep), G.inv(G.sigma(g))) == rep) ++stab;
        CHECK(static_cast<long>(orbit.size()) * stab == G.order());
        CHECK(std::includes(geo.begin(), geo.end(), orbit.begin(), orbit.end()));
        for (long i : geo) {
            const auto& x = G.elements()[i];
            CHECK(G.class_of(G.mul(x, G.sigma(x))) == G.class_of(G.mul(rep, G.sigma(rep))));
        }
    }
    FiniteGL T(1, 5);
    CHECK(twisted_class(T, T.twisted_rep({}), ClassMode::geometric).size() == 4);
    CHECK(twisted_class(T, T.twisted_rep({}), ClassMode::orbit).size() == 2);
}

TEST_CASE("commutator counts") {
    FiniteGL G(2, 3);
    ClassFunction c = commutator_counts(G);
    Int total = 0;
    for (int i = 0; i < G.class_count(); ++i) total += c[i] * G.class_size(i);
    CHECK(total == Int(G.order()) * G.order());
    CHECK(c[G.class_of(G.identity())] == Int(G.order()) * G.class_count());
}

TEST_CASE("serial and parallel pair distributions agree") {
    for (int q : {5, 7}) {
        FiniteGL G(2, q);
        auto c1 = twisted_class(G, G.twisted_rep({2}), ClassMode::geometric);
        auto c2 = twisted_class(G, G.twisted_rep({1}), ClassMode::geometric);
        ClassFunction a = pair_distribution(G, c1, c2), b = pair_distribution_serial(G, c1, c2);
        CHECK(a == b);
        Int total = 0;
        for (int i = 0; i < G.class_count(); ++i) total += a[i] * G.class_size(i);
        CHECK(total == Int(c1.size()) * c2.size());
    }
}

TEST_CASE("convolution agrees with direct enumeration") {
    FiniteGL G(2, 3);
    for (int a : {1, 2})
        for (int b : {1, 2}) {
            auto c1 = twisted_class(G, G.twisted_rep({a}), ClassMode::geometric);
            auto c2 = twisted_class(G, G.twisted_rep({b}), ClassMode::orbit);
            for (int g : {0, 1}) {
                std::vector<std::vector<long>> cls = {c1, c2};
                CHECK(count_solutions(G, g, cls) == count_solutions_direct(G, g, cls));
            }
        }
    FiniteGL T(1, 5);
    auto t = twisted_class(T, T.twisted_rep({}), ClassMode::geometric);
    auto o = twisted_class(T, T.twisted_rep({}), ClassMode::orbit);
    for (int g : {0, 1, 2}) {
        std::vector<std::vector<long>> cls = {t, o, t, t};
        CHECK(count_points(T, g, cls).solutions == count_solutions_direct(T, g, cls));
    }
}

TEST_CASE("point count in rank two") {
    FiniteGL G(2, 7);
    std::vector<std::vector<long>> cls = {twisted_class(G, G.twisted_rep({2}), ClassMode::geometric),
                                          twisted_class(G, G.twisted_rep({1}), ClassMode::geometric)};
    CHECK(count_points(G, 1, cls).points == 4104);
    std::vector<std::vector<long>> odd = {cls[0]};
    CHECK_THROWS(count_points(G, 1, odd));
}

TEST_CASE("dihedral Frobenius counts") {
    for (int m : {3, 4, 5, 6})
        for (int g : {0, 1}) {
            std::vector<int> cls = {0, 0};
            CHECK(frobenius_count(dihedral_table(m), g, cls) == dihedral_direct_count(m, g, cls));
        }
    CharTable t = dihedral_table(4);
    CHECK(t.class_sizes.size() == 2);
    CHECK(dihedral_table(5).class_sizes.size() == 1);
}

TEST_CASE("hyperoctahedral characters from matrices") {
    BiPartition triv{Partition{2}, Partition{}};
    for (const auto& b : bipartitions_of(2)) CHECK(wreath_group_char(triv, b) == 1);
    BiPartition std1{Partition{1}, Partition{}};
    CHECK(wreath_group_char(std1, BiPartition{Partition{1}, Partition{}}) == 1);
    CHECK(wreath_group_char(BiPartition{Partition{}, Partition{1}}, BiPartition{Partition{}, Partition{1}}) == -1);
}
