#pragma once

#include <string>
#include <vector>

#include "wh/symfunc.hpp"

namespace wh {

struct TypeData {
    BiPartition plus;
    BiPartition minus;
    std::vector<Partition> star;  // sorted, no empty entries

    TypeData() = default;
    TypeData(BiPartition p, BiPartition m, std::vector<Partition> s);

    int size() const;
    bool operator==(const TypeData&) const = default;
    std::string str() const;
};

struct SimpleType {
    int m_plus = 0;
    int m_minus = 0;
    std::vector<int> m_star;  // sorted decreasing, positive

    SimpleType() = default;
    SimpleType(int p, int m, std::vector<int> s);

    int size() const;
    bool operator==(const SimpleType&) const = default;
    std::string str() const;
};

// "m+,m-:m1 m2 ..."
SimpleType parse_class(const std::string& s);

TypeData simple_dual(const SimpleType& beta);

SymFunc2 h_of_type(const TypeData& omega, Vars v = Vars::qt);
SymFunc2 s_of_type(const TypeData& omega, Vars v = Vars::qt);

struct TypeStatistics {
    Int N;  // prod of multiplicity factorials of the star part
    Int K;  // (-1)^l l!
    Int z;  // z_plus z_minus prod z_i
};

TypeStatistics type_statistics(const TypeData& omega);
Int star_N(const std::vector<Partition>& star);
Int star_K(const std::vector<Partition>& star);

struct BracedType {
    Partition plus;
    Partition minus;
    std::vector<Partition> star;
    int size() const;
};

// eps in {-1, 0, 1}
BracedType type_brace(int eps, const TypeData& omega);
BiPartition type_bracket(const TypeData& omega);

}  // namespace wh
