#include <algorithm>

#include "doctest.h"
#include "test_util.hpp"
#include "wh/partitions.hpp"

using namespace wh;

TEST_CASE("enumeration counts") {
    const int p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
    for (int n = 0; n <= 8; ++n) CHECK(static_cast<int>(partitions_of(n).size()) == p[n]);
    for (int n = 0; n <= 6; ++n) {
        int want = 0;
        for (int i = 0; i <= n; ++i) want += p[i] * p[n - i];
        CHECK(static_cast<int>(bipartitions_of(n).size()) == want);
    }
    CHECK(partitions_of(4).front() == Partition{4});
}

TEST_CASE("parsing") {
    CHECK(parse_partition("3+1+1") == Partition{3, 1, 1});
    CHECK(parse_partition("[1,3,1]") == Partition{3, 1, 1});
    CHECK(parse_partition("") == Partition{});
    CHECK(parse_partition("[]") == Partition{});
    CHECK(parse_bipartition("([2],[1,1])") == BiPartition{Partition{2}, Partition{1, 1}});
    CHECK_THROWS(parse_partition("3+x"));
    CHECK_THROWS(Partition({2, -1}));
}

TEST_CASE("dual, n and dominance") {
    Partition l{4, 2, 1};
    CHECK(l.dual() == Partition{3, 2, 1, 1});
    CHECK(l.n() == 4);
    CHECK(l.dual().dual() == l);
    CHECK(dominance_geq(Partition{3, 1}, Partition{2, 2}));
    CHECK_FALSE(dominance_geq(Partition{2, 2}, Partition{3, 1}));
    CHECK_FALSE(dominance_geq(Partition{3, 3}, Partition{4, 1, 1}));
    CHECK_FALSE(dominance_geq(Partition{4, 1, 1}, Partition{3, 3}));
}

TEST_CASE("2-core and 2-quotient examples") {
    auto a = core2_quotient2(Partition{2, 2, 1});
    CHECK(a.core == 1);
    CHECK(a.quotient == BiPartition{Partition{}, Partition{2}});
    auto b = core2_quotient2(Partition{3, 2});
    CHECK(b.core == 1);
    CHECK(b.quotient == BiPartition{Partition{1, 1}, Partition{}});
    auto c = core2_quotient2(Partition{5});
    CHECK(c.core == 1);
    CHECK(c.quotient == BiPartition{Partition{2}, Partition{}});
    CHECK(core2_quotient2(Partition{2, 1}).core == 2);
    CHECK(core2_quotient2(Partition{2, 1}).quotient.size() == 0);
}

TEST_CASE("brace inverts core and quotient") {
    for (int e : {0, 1})
        for (int n = 0; n <= 6; ++n)
            for (const auto& a : bipartitions_of(n)) {
                Partition l = brace(a, e);
                CHECK(l.size() == 2 * n + e);
                auto cq = core2_quotient2(l);
                CHECK(cq.core == e);
                CHECK(cq.quotient == a);
            }
}

TEST_CASE("hooks") {
    Partition l{3, 1};
    std::vector<int> hs;
    for (const auto& h : hooks(l)) {
        CHECK(h.hook == h.arm + h.leg + 1);
        hs.push_back(h.hook);
    }
    std::sort(hs.begin(), hs.end());
    CHECK(hs == std::vector<int>{1, 1, 2, 4});
    RatFun q = wh::test::qvar(), one = wh::test::one();
    CHECK(hook_poly(Partition{2}) == (one - q) * (one - q * q));
}

TEST_CASE("centralizer orders") {
    CHECK(z_lambda(Partition{2, 1, 1}) == 4);
    CHECK(z_lambda(Partition{3, 3}) == 18);
    CHECK(z_lambda(Partition{}) == 1);
    Int total = 0;
    for (const auto& l : partitions_of(5)) total += Int(120) / z_lambda(l);
    CHECK(total == 120);
    Int sum = 0;
    for (const auto& a : bipartitions_of(3)) sum += Int(48) / z_bipartition(a);
    CHECK(sum == 48);
}
