#include "wh/types.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace wh {

TypeData::TypeData(BiPartition p, BiPartition m, std::vector<Partition> s)
    : plus(std::move(p)), minus(std::move(m)), star(std::move(s)) {
    for (const auto& x : star)
        if (x.empty()) throw std::invalid_argument("empty partition in type");
    std::sort(star.begin(), star.end(), std::greater<>());
}

int TypeData::size() const {
    int s = plus.size() + minus.size();
    for (const auto& x : star) s += x.size();
    return s;
}

std::string TypeData::str() const {
    std::ostringstream os;
    os << plus.str() << minus.str() << "(";
    for (std::size_t i = 0; i < star.size(); ++i) os << (i ? "," : "") << star[i].str();
    os << ")";
    return os.str();
}

SimpleType::SimpleType(int p, int m, std::vector<int> s) : m_plus(p), m_minus(m), m_star(std::move(s)) {
    if (m_plus < 0 || m_minus < 0) throw std::invalid_argument("negative multiplicity in class type");
    for (int x : m_star)
        if (x <= 0) throw std::invalid_argument("nonpositive multiplicity in class type");
    std::sort(m_star.begin(), m_star.end(), std::greater<>());
}

int SimpleType::size() const {
    int s = m_plus + m_minus;
    for (int x : m_star) s += x;
    return s;
}

std::string SimpleType::str() const {
    std::ostringstream os;
    os << m_plus << "," << m_minus << ":";
    for (std::size_t i = 0; i < m_star.size(); ++i) os << (i ? " " : "") << m_star[i];
    return os.str();
}

SimpleType parse_class(const std::string& s) {
    auto colon = s.find(':');
    auto comma = s.find(',');
    if (colon == std::string::npos || comma == std::string::npos || comma > colon)
        throw std::invalid_argument("class must look like \"m+,m-:m1 m2 ...\": " + s);
    auto to_int = [&](const std::string& x) {
        std::size_t pos = 0;
        int v = std::stoi(x, &pos);
        while (pos < x.size() && x[pos] == ' ') ++pos;
        if (pos != x.size()) throw std::invalid_argument("bad integer in class: " + s);
        return v;
    };
    try {
        int p = to_int(s.substr(0, comma));
        int m = to_int(s.substr(comma + 1, colon - comma - 1));
        std::vector<int> star;
        std::istringstream is(s.substr(colon + 1));
        std::string tok;
        while (is >> tok) star.push_back(to_int(tok));
        return SimpleType(p, m, star);
    } catch (const std::logic_error&) {
        throw std::invalid_argument("class must look like \"m+,m-:m1 m2 ...\": " + s);
    }
}

TypeData simple_dual(const SimpleType& beta) {
    std::vector<Partition> star;
    for (int m : beta.m_star) star.push_back(Partition{m});
    return TypeData(BiPartition{Partition{beta.m_plus}, Partition()}, BiPartition{Partition{beta.m_minus}, Partition()},
                    star);
}

namespace {

SymFunc2 of_type(const TypeData& omega, Vars v, bool complete) {
    auto two = [&](const BiPartition& a) { return complete ? complete2(a, v) : schur2(a, v); };
    SymFunc2 r = two(omega.plus) * two(omega.minus);
    for (const auto& x : omega.star) {
        SymFunc1 f = complete ? complete1(x, v) : schur1(x, v);
        r = r * embed_diagonal(f);
    }
    return r;
}

}  // namespace

SymFunc2 h_of_type(const TypeData& omega, Vars v) { return of_type(omega, v, true); }

SymFunc2 s_of_type(const TypeData& omega, Vars v) { return of_type(omega, v, false); }

Int star_N(const std::vector<Partition>& star) {
    std::map<Partition, int> mult;
    for (const auto& x : star) ++mult[x];
    Int n = 1;
    for (const auto& [k, m] : mult)
        for (int i = 2; i <= m; ++i) n *= i;
    return n;
}

Int star_K(const std::vector<Partition>& star) {
    Int k = 1;
    for (std::size_t i = 2; i <= star.size(); ++i) k *= static_cast<unsigned long>(i);
    return star.size() % 2 == 0 ? k : Int(-k);
}

TypeStatistics type_statistics(const TypeData& omega) {
    Int z = z_bipartition(omega.plus) * z_bipartition(omega.minus);
    for (const auto& x : omega.star) z *= z_lambda(x);
    return {star_N(omega.star), star_K(omega.star), z};
}

int BracedType::size() const {
    int s = plus.size() + minus.size();
    for (const auto& x : star) s += x.size();
    return s;
}

BracedType type_brace(int eps, const TypeData& omega) {
    if (eps < -1 || eps > 1) throw std::invalid_argument("eps must be -1, 0 or 1");
    BracedType r;
    r.plus = brace(omega.plus, eps == 1 ? 1 : 0);
    r.minus = brace(omega.minus, eps == -1 ? 1 : 0);
    for (const auto& x : omega.star) {
        r.star.push_back(x);
        r.star.push_back(x);
    }
    std::sort(r.star.begin(), r.star.end(), std::greater<>());
    return r;
}

BiPartition type_bracket(const TypeData& omega) {
    std::vector<int> pos, neg;
    for (const BiPartition* b : {&omega.plus, &omega.minus}) {
        for (int p : b->first.parts()) pos.push_back(p);
        for (int p : b->second.parts()) neg.push_back(p);
    }
    for (const auto& x : omega.star)
        for (int p : x.parts()) pos.push_back(p);
    return {Partition(pos), Partition(neg)};
}

}  // namespace wh
