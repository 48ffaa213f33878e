#pragma once

#include <array>
#include <functional>
#include <map>

#include "wh/algebra.hpp"
#include "wh/partitions.hpp"

namespace wh {

enum class Basis1 { schur, power, complete, monomial };
enum class Basis2 { schur2, power2, wreath_power };

// Symmetric function in one alphabet.
struct SymFunc1 {
    Basis1 basis = Basis1::schur;
    Vars vars = Vars::qt;
    std::map<Partition, RatFun> terms;

    SymFunc1() = default;
    SymFunc1(Basis1 b, Vars v) : basis(b), vars(v) {}

    void add(const Partition& key, const RatFun& c);
    RatFun coeff(const Partition& key) const;
    bool is_zero() const { return terms.empty(); }
};

// Symmetric function in two alphabets x0, x1.
struct SymFunc2 {
    Basis2 basis = Basis2::schur2;
    Vars vars = Vars::qt;
    std::map<BiPartition, RatFun> terms;

    SymFunc2() = default;
    SymFunc2(Basis2 b, Vars v) : basis(b), vars(v) {}

    void add(const BiPartition& key, const RatFun& c);
    RatFun coeff(const BiPartition& key) const;
    bool is_zero() const { return terms.empty(); }
};

using Matrix2 = std::array<std::array<RatFun, 2>, 2>;

Matrix2 matrix2(const RatFun& a, const RatFun& b, const RatFun& c, const RatFun& d);
Matrix2 operator*(const Matrix2& x, const Matrix2& y);
Matrix2 inverse(const Matrix2& m);

// Character of the irreducible S_n representation lambda on cycle type rho.
Int sn_char(const Partition& lambda, const Partition& rho);

SymFunc1 schur1(const Partition& lambda, Vars v = Vars::qt);
SymFunc1 power1(const Partition& lambda, Vars v = Vars::qt);
SymFunc1 complete1(const Partition& lambda, Vars v = Vars::qt);
SymFunc1 constant1(const RatFun& c);

SymFunc2 schur2(const BiPartition& alpha, Vars v = Vars::qt);
SymFunc2 complete2(const BiPartition& alpha, Vars v = Vars::qt);
SymFunc2 wreath_power(const BiPartition& alpha, Vars v = Vars::qt);
SymFunc2 constant2(const RatFun& c);

SymFunc1 convert_basis(const SymFunc1& f, Basis1 target);
SymFunc2 convert_basis(const SymFunc2& f, Basis2 target);

SymFunc1 operator+(const SymFunc1& f, const SymFunc1& g);
SymFunc1 operator-(const SymFunc1& f, const SymFunc1& g);
SymFunc1 operator*(const SymFunc1& f, const SymFunc1& g);
SymFunc1 scale(const SymFunc1& f, const RatFun& c);
bool operator==(const SymFunc1& f, const SymFunc1& g);

SymFunc2 operator+(const SymFunc2& f, const SymFunc2& g);
SymFunc2 operator-(const SymFunc2& f, const SymFunc2& g);
SymFunc2 operator*(const SymFunc2& f, const SymFunc2& g);
SymFunc2 scale(const SymFunc2& f, const RatFun& c);
bool operator==(const SymFunc2& f, const SymFunc2& g);

// Applies a coefficient map to every coefficient.
SymFunc1 map_coeffs(const SymFunc1& f, const std::function<RatFun(const RatFun&)>& fn, Vars target);
SymFunc2 map_coeffs(const SymFunc2& f, const std::function<RatFun(const RatFun&)>& fn, Vars target);

// u[c Z]: p_r -> c(q^r, t^r) p_r. Result in the basis of f.
SymFunc1 scalar_plethysm1(const SymFunc1& f, const RatFun& c);
// f[c] for a scalar c: p_r -> c(q^r, t^r).
RatFun plethystic_value(const SymFunc1& f, const RatFun& c);
// u(M X): p_r(x_i) -> sum_j M[i][j](q^r, t^r) p_r(x_j). Result in the basis of f.
SymFunc2 alphabet_substitute(const SymFunc2& f, const Matrix2& m);
// u(z) -> u[x0 + x1], in Schur basis.
SymFunc2 embed_diagonal(const SymFunc1& f);

RatFun hall_inner(const SymFunc1& f, const SymFunc1& g);
RatFun hall_inner(const SymFunc2& f, const SymFunc2& g);

// Coefficient of s_alpha in the wreath power sum p_beta.
Int wreath_char(const BiPartition& alpha, const BiPartition& beta);

std::string str(const SymFunc1& f);
std::string str(const SymFunc2& f);

}  // namespace wh
