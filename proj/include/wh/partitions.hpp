#pragma once

#include <compare>
#include <string>
#include <vector>

#include "wh/algebra.hpp"

namespace wh {

class Partition {
public:
    Partition() = default;
    // Sorts and drops zero parts; throws on negative parts.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](int i) const { return i < length() ? parts_[i] : 0; }

    Partition dual() const;
    // n(lambda) = sum (i-1) lambda_i
    int n() const;

    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }
    bool operator==(const Partition& o) const { return parts_ == o.parts_; }

    std::string str() const;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

struct BiPartition {
    Partition first;
    Partition second;

    int size() const { return first.size() + second.size(); }
    BiPartition dual() const { return {second.dual(), first.dual()}; }
    int length() const { return first.length() + second.length(); }

    auto operator<=>(const BiPartition&) const = default;
    bool operator==(const BiPartition&) const = default;

    std::string str() const;
};

struct Hook {
    int arm;
    int leg;
    int hook;
};

// All partitions of n, in reverse lexicographic order ((n) first).
const std::vector<Partition>& partitions_of(int n);
// All 2-partitions of n, in a fixed order.
const std::vector<BiPartition>& bipartitions_of(int n);

bool dominance_geq(const Partition& lambda, const Partition& mu);

struct CoreQuotient {
    int core;  // the 2-core is (core, core-1, ..., 1)
    BiPartition quotient;
};

CoreQuotient core2_quotient2(const Partition& lambda);
// Partition with 2-core (e) and 2-quotient alpha, e in {0, 1}.
Partition brace(const BiPartition& alpha, int e);

std::vector<Hook> hooks(const Partition& lambda);
// prod over boxes (1 - q^h)
RatFun hook_poly(const Partition& lambda);

// z_lambda = prod i^{m_i} m_i!
Int z_lambda(const Partition& lambda);
// 2^{l} z_{first} z_{second}
Int z_bipartition(const BiPartition& alpha);

// "3+1+1", "[3,1,1]", "3,1,1" or "" / "[]" for the empty partition.
Partition parse_partition(const std::string& s);
// "([2],[1,1])"
BiPartition parse_bipartition(const std::string& s);

}  // namespace wh
