#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace wh {

using Int = mpz_class;
using Rat = mpq_class;

// Which pair of names the two variables carry.
enum class Vars { qt, zw };

const char* var_name(Vars v, int index);

struct Exp {
    int a = 0;
    int b = 0;
    auto operator<=>(const Exp&) const = default;
};

struct Term {
    Exp e;
    Rat c;
};

class MathError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Sparse Laurent polynomial in two variables with rational coefficients.
// Terms are kept sorted by (a, b) with no zero coefficients.
class Poly {
public:
    explicit Poly(Vars v = Vars::qt) : vars_(v) {}

    static Poly constant(const Rat& c, Vars v = Vars::qt);
    static Poly monomial(const Rat& c, int a, int b, Vars v = Vars::qt);
    static Poly variable(int index, Vars v = Vars::qt);
    static Poly from_terms(std::vector<Term> terms, Vars v);

    Vars vars() const { return vars_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_integral() const;
    bool has_negative_exponents() const;

    Rat coeff(int a, int b) const;
    Rat constant_term() const { return coeff(0, 0); }
    // Leading term under graded lex with the first variable below the second.
    const Term& leading() const;
    Exp min_exp() const;
    Exp max_exp() const;
    int total_degree() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly scaled(const Rat& c) const;
    Poly shifted(int da, int db) const;
    Poly pow(unsigned e) const;

    // x^a y^b -> X^(a*ia.a + b*ib.a) Y^(a*ia.b + b*ib.b) in the target ring.
    Poly substitute_monomials(Exp image0, Exp image1, Vars target) const;
    Poly with_vars(Vars v) const;
    Rat evaluate(const Rat& x, const Rat& y) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Monomials in descending graded lex order.
    std::vector<Term> sorted_terms() const;
    std::string str() const;

private:
    Vars vars_;
    std::vector<Term> terms_;
};

Vars common_vars(const Poly& x, const Poly& y);

// Primitive gcd of two polynomials with nonnegative exponents, up to sign
// and rational content. Result has integer coefficients and positive leading
// coefficient.
Poly poly_gcd(const Poly& f, const Poly& g);

// f / g when the division is exact; throws MathError otherwise.
Poly poly_divexact(const Poly& f, const Poly& g);

// Element of the fraction field, kept reduced. The denominator is a primitive
// integer polynomial with no monomial factor and positive leading
// coefficient; monomial and rational factors live in the numerator.
class RatFun {
public:
    explicit RatFun(Vars v = Vars::qt) : num_(v), den_(Poly::constant(1, v)) {}
    RatFun(const Poly& p);  // NOLINT(google-explicit-constructor)
    RatFun(const Poly& num, const Poly& den);
    static RatFun constant(const Rat& c, Vars v = Vars::qt);
    static RatFun variable(int index, Vars v = Vars::qt);
    static RatFun monomial(const Rat& c, int a, int b, Vars v = Vars::qt);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    Vars vars() const { return num_.vars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_one() && num_.is_one(); }
    bool is_poly() const { return den_.is_one(); }
    // Returns the numerator, throwing if the denominator is not 1.
    const Poly& as_poly() const;

    RatFun operator-() const;
    RatFun operator+(const RatFun& o) const;
    RatFun operator-(const RatFun& o) const;
    RatFun operator*(const RatFun& o) const;
    RatFun operator/(const RatFun& o) const;
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }
    RatFun scaled(const Rat& c) const;
    RatFun inverse() const;
    RatFun pow(int e) const;

    // q -> q^r, t -> t^r.
    RatFun adams(int r) const;
    RatFun substitute_monomials(Exp image0, Exp image1, Vars target) const;
    RatFun swapped() const;
    RatFun with_vars(Vars v) const;
    Rat evaluate(const Rat& x, const Rat& y) const;

    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    std::string str() const;

private:
    struct Raw {};
    RatFun(Raw, Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();

    Poly num_;
    Poly den_;
};

enum class SubstMode { E, MHP };

// z^a w^b -> q^((d+a-b)/2) (E) or (-1)^a t^(d+a) q^((d+a-b)/2) (MHP).
// Result variables are (q, t).
RatFun substitute_powers(const RatFun& p, SubstMode mode, int d);

// z^a w^b -> q^((a-b)/2).
RatFun half_specialize(const RatFun& p);

// JSON: list of [a, b, "num/den"] in descending graded lex order. A
// non-polynomial RatFun is written as {"num": [...], "den": [...]}.
nlohmann::json to_json(const Poly& p);
nlohmann::json to_json(const RatFun& f);
Poly poly_from_json(const nlohmann::json& j, Vars v);
RatFun ratfun_from_json(const nlohmann::json& j, Vars v);

// Solves A x = b over the fraction field. All solutions must be unique;
// throws MathError on rank deficiency or inconsistency.
std::vector<RatFun> solve_unique(const std::vector<std::vector<RatFun>>& a,
                                 const std::vector<RatFun>& b);

}  // namespace wh
