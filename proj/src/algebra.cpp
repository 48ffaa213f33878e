#include "wh/algebra.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

namespace wh {

const char* var_name(Vars v, int index) {
    if (v == Vars::qt) return index == 0 ? "q" : "t";
    return index == 0 ? "z" : "w";
}

namespace {

bool grlex_less(const Exp& x, const Exp& y) {
    if (x.a + x.b != y.a + y.b) return x.a + x.b < y.a + y.b;
    if (x.b != y.b) return x.b < y.b;
    return x.a < y.a;
}

void canonicalize(std::vector<Term>& ts) {
    std::sort(ts.begin(), ts.end(), [](const Term& x, const Term& y) { return x.e < y.e; });
    std::vector<Term> out;
    out.reserve(ts.size());
    for (auto& t : ts) {
        if (!out.empty() && out.back().e == t.e) {
            out.back().c += t.c;
        } else {
            if (!out.empty() && sgn(out.back().c) == 0) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && sgn(out.back().c) == 0) out.pop_back();
    ts = std::move(out);
}

Int lcm_of_denominators(const std::vector<Term>& ts) {
    Int l = 1;
    for (const auto& t : ts) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.c.get_den_mpz_t());
    return l;
}

// Positive rational content: gcd of numerators over lcm of denominators.
Rat rational_content(const std::vector<Term>& ts) {
    Int g = 0;
    for (const auto& t : ts) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_num_mpz_t());
    Rat c(g, lcm_of_denominators(ts));
    c.canonicalize();
    return c;
}

Rat rat_pow(const Rat& x, int e) {
    Rat r = 1;
    Rat base = x;
    if (e < 0) {
        if (sgn(x) == 0) throw MathError("zero raised to a negative power");
        base = 1 / x;
        e = -e;
    }
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Dense integer polynomials used by the gcd.

using UPoly = std::vector<Int>;

void utrim(UPoly& f) {
    while (!f.empty() && sgn(f.back()) == 0) f.pop_back();
}

int udeg(const UPoly& f) { return static_cast<int>(f.size()) - 1; }

Int ucontent(const UPoly& f) {
    Int g = 0;
    for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

void udivide_int(UPoly& f, const Int& c) {
    for (auto& x : f) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
}

UPoly umul(const UPoly& f, const UPoly& g) {
    if (f.empty() || g.empty()) return {};
    UPoly r(f.size() + g.size() - 1);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (sgn(f[i]) == 0) continue;
        for (std::size_t j = 0; j < g.size(); ++j)
            mpz_addmul(r[i + j].get_mpz_t(), f[i].get_mpz_t(), g[j].get_mpz_t());
    }
    utrim(r);
    return r;
}

void usub_inplace(UPoly& f, const UPoly& g) {
    if (f.size() < g.size()) f.resize(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) f[i] -= g[i];
    utrim(f);
}

Int umaxnorm(const UPoly& f) {
    Int m = 0;
    for (const auto& c : f)
        if (abs(c) > m) m = abs(c);
    return m;
}

Int ueval(const UPoly& f, const Int& x) {
    Int r = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) r = r * x + *it;
    return r;
}

std::optional<UPoly> udivexact(UPoly f, const UPoly& g) {
    utrim(f);
    if (f.empty()) return UPoly{};
    if (g.empty()) return std::nullopt;
    int df = udeg(f), dg = udeg(g);
    if (df < dg) return std::nullopt;
    UPoly q(df - dg + 1);
    const Int& lc = g.back();
    for (int i = df; i >= dg; --i) {
        if (sgn(f[i]) == 0) continue;
        if (!mpz_divisible_p(f[i].get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
        Int c;
        mpz_divexact(c.get_mpz_t(), f[i].get_mpz_t(), lc.get_mpz_t());
        for (int j = 0; j <= dg; ++j) mpz_submul(f[i - dg + j].get_mpz_t(), c.get_mpz_t(), g[j].get_mpz_t());
        q[i - dg] = c;
    }
    utrim(f);
    if (!f.empty()) return std::nullopt;
    utrim(q);
    return q;
}

// Symmetric x-adic digits of an integer.
UPoly interpolate_int(Int h, const Int& x) {
    UPoly out;
    Int half = x / 2;
    while (sgn(h) != 0) {
        Int r;
        mpz_fdiv_r(r.get_mpz_t(), h.get_mpz_t(), x.get_mpz_t());
        if (r > half) r -= x;
        out.push_back(r);
        h -= r;
        mpz_divexact(h.get_mpz_t(), h.get_mpz_t(), x.get_mpz_t());
    }
    return out;
}

void upositive(UPoly& f) {
    if (!f.empty() && sgn(f.back()) < 0)
        for (auto& c : f) c = -c;
}

UPoly uprem(UPoly f, const UPoly& g) {
    const Int& lc = g.back();
    int dg = udeg(g);
    while (!f.empty() && udeg(f) >= dg) {
        Int c = f.back();
        int shift = udeg(f) - dg;
        for (auto& x : f) x *= lc;
        for (int j = 0; j <= dg; ++j) mpz_submul(f[shift + j].get_mpz_t(), c.get_mpz_t(), g[j].get_mpz_t());
        utrim(f);
    }
    return f;
}

UPoly ugcd_prs(UPoly f, UPoly g) {
    if (udeg(f) < udeg(g)) std::swap(f, g);
    while (!g.empty()) {
        UPoly r = uprem(f, g);
        f = std::move(g);
        if (!r.empty()) {
            Int c = ucontent(r);
            udivide_int(r, c);
        }
        g = std::move(r);
    }
    if (!f.empty()) udivide_int(f, ucontent(f));
    upositive(f);
    return f;
}

Int next_eval_point(const Int& x) {
    Int s = sqrt(x);
    s = sqrt(s);
    return 73794 * x * s / 27011;
}

Int initial_eval_point(const Int& nf, const Int& ng, const Int& lf, const Int& lg) {
    Int b = 2 * std::min(nf, ng) + 29;
    Int c1 = std::min(b, Int(99 * sqrt(b)));
    Int c2 = 2 * std::min(Int(nf / abs(lf)), Int(ng / abs(lg))) + 2;
    return std::max(c1, c2);
}

// Gcd including the integer content gcd; positive leading coefficient.
UPoly ugcd(UPoly f, UPoly g) {
    utrim(f);
    utrim(g);
    if (f.empty() && g.empty()) return {};
    if (f.empty()) {
        upositive(g);
        return g;
    }
    if (g.empty()) {
        upositive(f);
        return f;
    }
    Int cf = ucontent(f), cg = ucontent(g), c;
    mpz_gcd(c.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
    udivide_int(f, cf);
    udivide_int(g, cg);
    if (udeg(f) == 0 || udeg(g) == 0) return {c};
    Int x = initial_eval_point(umaxnorm(f), umaxnorm(g), f.back(), g.back());
    for (int attempt = 0; attempt < 6; ++attempt) {
        Int ff = ueval(f, x), gg = ueval(g, x);
        if (sgn(ff) != 0 && sgn(gg) != 0) {
            Int h;
            mpz_gcd(h.get_mpz_t(), ff.get_mpz_t(), gg.get_mpz_t());
            UPoly hp = interpolate_int(h, x);
            utrim(hp);
            if (!hp.empty()) {
                udivide_int(hp, ucontent(hp));
                upositive(hp);
                if (udivexact(f, hp) && udivexact(g, hp)) {
                    for (auto& v : hp) v *= c;
                    return hp;
                }
            }
        }
        x = next_eval_point(x);
    }
    UPoly r = ugcd_prs(f, g);
    for (auto& v : r) v *= c;
    return r;
}

// Bivariate: outer index is the exponent of the second variable, inner
// polynomials are in the first variable.
using BPoly = std::vector<UPoly>;

void btrim(BPoly& f) {
    for (auto& u : f) utrim(u);
    while (!f.empty() && f.back().empty()) f.pop_back();
}

int bdeg(const BPoly& f) { return static_cast<int>(f.size()) - 1; }

Int bcontent(const BPoly& f) {
    Int g = 0;
    for (const auto& u : f) {
        Int c = ucontent(u);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    return g;
}

void bdivide_int(BPoly& f, const Int& c) {
    for (auto& u : f) udivide_int(u, c);
}

Int bmaxnorm(const BPoly& f) {
    Int m = 0;
    for (const auto& u : f) m = std::max(m, umaxnorm(u));
    return m;
}

bool bconstant(const BPoly& f) { return f.size() == 1 && f[0].size() == 1; }

UPoly beval_inner(const BPoly& f, const Int& x) {
    UPoly r(f.size());
    for (std::size_t j = 0; j < f.size(); ++j) r[j] = ueval(f[j], x);
    utrim(r);
    return r;
}

BPoly binterp(const UPoly& h, const Int& x) {
    BPoly r(h.size());
    for (std::size_t j = 0; j < h.size(); ++j) r[j] = interpolate_int(h[j], x);
    btrim(r);
    return r;
}

std::optional<BPoly> bdivexact(BPoly f, const BPoly& g) {
    btrim(f);
    if (f.empty()) return BPoly{};
    if (g.empty()) return std::nullopt;
    int df = bdeg(f), dg = bdeg(g);
    if (df < dg) return std::nullopt;
    BPoly q(df - dg + 1);
    for (int i = df; i >= dg; --i) {
        utrim(f[i]);
        if (f[i].empty()) continue;
        auto c = udivexact(f[i], g.back());
        if (!c) return std::nullopt;
        for (int j = 0; j <= dg; ++j) usub_inplace(f[i - dg + j], umul(*c, g[j]));
        q[i - dg] = std::move(*c);
    }
    btrim(f);
    if (!f.empty()) return std::nullopt;
    btrim(q);
    return q;
}

void bpositive(BPoly& f) {
    if (!f.empty() && sgn(f.back().back()) < 0)
        for (auto& u : f)
            for (auto& c : u) c = -c;
}

BPoly bscale_poly(const BPoly& f, const UPoly& c) {
    BPoly r(f.size());
    for (std::size_t j = 0; j < f.size(); ++j) r[j] = umul(f[j], c);
    btrim(r);
    return r;
}

UPoly bcontent_poly(const BPoly& f) {
    UPoly g;
    for (const auto& u : f) g = ugcd(g, u);
    return g;
}

BPoly bprimitive_poly(const BPoly& f) {
    UPoly c = bcontent_poly(f);
    BPoly r(f.size());
    for (std::size_t j = 0; j < f.size(); ++j) r[j] = *udivexact(f[j], c);
    return r;
}

BPoly bprem(BPoly f, const BPoly& g) {
    const UPoly& lc = g.back();
    int dg = bdeg(g);
    while (!f.empty() && bdeg(f) >= dg) {
        UPoly c = f.back();
        int shift = bdeg(f) - dg;
        for (auto& u : f) u = umul(u, lc);
        for (int j = 0; j <= dg; ++j) usub_inplace(f[shift + j], umul(c, g[j]));
        btrim(f);
    }
    return f;
}

BPoly bgcd_prs(const BPoly& f0, const BPoly& g0) {
    UPoly c = ugcd(bcontent_poly(f0), bcontent_poly(g0));
    BPoly f = bprimitive_poly(f0), g = bprimitive_poly(g0);
    if (bdeg(f) < bdeg(g)) std::swap(f, g);
    while (!g.empty() && bdeg(g) > 0) {
        BPoly r = bprem(f, g);
        f = std::move(g);
        if (!r.empty()) r = bprimitive_poly(r);
        g = std::move(r);
    }
    BPoly res;
    if (g.empty()) {
        res = bprimitive_poly(f);
    } else {
        res = BPoly{UPoly{1}};
    }
    res = bscale_poly(res, c);
    bpositive(res);
    return res;
}

BPoly bgcd(BPoly f, BPoly g) {
    btrim(f);
    btrim(g);
    if (f.empty()) {
        bpositive(g);
        return g;
    }
    if (g.empty()) {
        bpositive(f);
        return f;
    }
    Int cf = bcontent(f), cg = bcontent(g), c;
    mpz_gcd(c.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
    bdivide_int(f, cf);
    bdivide_int(g, cg);
    if (bconstant(f) || bconstant(g)) return BPoly{UPoly{c}};
    if (f.size() == 1 && g.size() == 1) {
        UPoly h = ugcd(f[0], g[0]);
        for (auto& v : h) v *= c;
        return BPoly{h};
    }
    Int x = initial_eval_point(bmaxnorm(f), bmaxnorm(g), f.back().back(), g.back().back());
    for (int attempt = 0; attempt < 6; ++attempt) {
        UPoly ff = beval_inner(f, x), gg = beval_inner(g, x);
        if (!ff.empty() && !gg.empty()) {
            UPoly h = ugcd(ff, gg);
            BPoly hp = binterp(h, x);
            if (!hp.empty()) {
                bdivide_int(hp, bcontent(hp));
                bpositive(hp);
                if (bdivexact(f, hp) && bdivexact(g, hp)) {
                    for (auto& u : hp)
                        for (auto& v : u) v *= c;
                    return hp;
                }
            }
        }
        x = next_eval_point(x);
    }
    BPoly r = bgcd_prs(f, g);
    for (auto& u : r)
        for (auto& v : u) v *= c;
    return r;
}

// Requires integer coefficients and nonnegative exponents.
BPoly to_bpoly(const Poly& p) {
    BPoly r;
    if (p.is_zero()) return r;
    Exp mx = p.max_exp();
    r.assign(mx.b + 1, UPoly());
    for (const auto& t : p.terms()) {
        auto& u = r[t.e.b];
        if (static_cast<int>(u.size()) <= t.e.a) u.resize(t.e.a + 1);
        u[t.e.a] = t.c.get_num();
    }
    btrim(r);
    return r;
}

Poly from_bpoly(const BPoly& f, Vars v) {
    std::vector<Term> ts;
    for (std::size_t j = 0; j < f.size(); ++j)
        for (std::size_t i = 0; i < f[j].size(); ++i)
            if (sgn(f[j][i]) != 0) ts.push_back({Exp{static_cast<int>(i), static_cast<int>(j)}, Rat(f[j][i])});
    return Poly::from_terms(std::move(ts), v);
}

// Splits p = c * m * P with m a monomial, c > 0 rational and P primitive
// integer with nonnegative exponents and no monomial factor.
struct Split {
    Rat c;
    Exp m;
    Poly prim;
};

Split split(const Poly& p) {
    Split s{Rat(1), p.min_exp(), Poly(p.vars())};
    s.c = rational_content(p.terms());
    std::vector<Term> ts;
    ts.reserve(p.size());
    for (const auto& t : p.terms()) ts.push_back({Exp{t.e.a - s.m.a, t.e.b - s.m.b}, t.c / s.c});
    s.prim = Poly::from_terms(std::move(ts), p.vars());
    return s;
}

}  // namespace

// ---------------------------------------------------------------------------

Poly Poly::constant(const Rat& c, Vars v) { return monomial(c, 0, 0, v); }

Poly Poly::monomial(const Rat& c, int a, int b, Vars v) {
    Poly p(v);
    if (sgn(c) != 0) p.terms_.push_back({Exp{a, b}, c});
    return p;
}

Poly Poly::variable(int index, Vars v) { return index == 0 ? monomial(1, 1, 0, v) : monomial(1, 0, 1, v); }

Poly Poly::from_terms(std::vector<Term> terms, Vars v) {
    Poly p(v);
    canonicalize(terms);
    p.terms_ = std::move(terms);
    return p;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].e == Exp{}); }

bool Poly::is_one() const { return terms_.size() == 1 && terms_[0].e == Exp{} && terms_[0].c == 1; }

bool Poly::is_integral() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.c.get_den() == 1; });
}

bool Poly::has_negative_exponents() const {
    return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.e.a < 0 || t.e.b < 0; });
}

Rat Poly::coeff(int a, int b) const {
    Exp e{a, b};
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e, [](const Term& t, const Exp& x) { return t.e < x; });
    if (it != terms_.end() && it->e == e) return it->c;
    return 0;
}

const Term& Poly::leading() const {
    if (terms_.empty()) throw MathError("leading term of zero polynomial");
    const Term* best = &terms_[0];
    for (const auto& t : terms_)
        if (grlex_less(best->e, t.e)) best = &t;
    return *best;
}

Exp Poly::min_exp() const {
    if (terms_.empty()) return {};
    Exp m = terms_[0].e;
    for (const auto& t : terms_) {
        m.a = std::min(m.a, t.e.a);
        m.b = std::min(m.b, t.e.b);
    }
    return m;
}

Exp Poly::max_exp() const {
    if (terms_.empty()) return {};
    Exp m = terms_[0].e;
    for (const auto& t : terms_) {
        m.a = std::max(m.a, t.e.a);
        m.b = std::max(m.b, t.e.b);
    }
    return m;
}

int Poly::total_degree() const {
    if (terms_.empty()) throw MathError("degree of zero polynomial");
    int d = terms_[0].e.a + terms_[0].e.b;
    for (const auto& t : terms_) d = std::max(d, t.e.a + t.e.b);
    return d;
}

Vars common_vars(const Poly& x, const Poly& y) {
    if (x.vars() == y.vars()) return x.vars();
    if (x.is_constant()) return y.vars();
    if (y.is_constant()) return x.vars();
    throw MathError("mixing polynomials in different variables");
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r(common_vars(*this, o));
    r.terms_.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin(), j = o.terms_.begin();
    while (i != terms_.end() || j != o.terms_.end()) {
        if (j == o.terms_.end() || (i != terms_.end() && i->e < j->e)) {
            r.terms_.push_back(*i++);
        } else if (i == terms_.end() || j->e < i->e) {
            r.terms_.push_back(*j++);
        } else {
            Rat c = i->c + j->c;
            if (sgn(c) != 0) r.terms_.push_back({i->e, c});
            ++i;
            ++j;
        }
    }
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    Vars v = common_vars(*this, o);
    if (is_zero() || o.is_zero()) return Poly(v);
    if (is_monomial()) return o.scaled(terms_[0].c).shifted(terms_[0].e.a, terms_[0].e.b).with_vars(v);
    if (o.is_monomial()) return scaled(o.terms_[0].c).shifted(o.terms_[0].e.a, o.terms_[0].e.b).with_vars(v);
    Int dx = lcm_of_denominators(terms_), dy = lcm_of_denominators(o.terms_);
    auto integral = [](const std::vector<Term>& ts, const Int& d) {
        std::vector<Int> out(ts.size());
        for (std::size_t i = 0; i < ts.size(); ++i) {
            mpz_divexact(out[i].get_mpz_t(), d.get_mpz_t(), ts[i].c.get_den_mpz_t());
            out[i] *= ts[i].c.get_num();
        }
        return out;
    };
    std::vector<Int> cx = integral(terms_, dx), cy = integral(o.terms_, dy);
    Exp lo1 = min_exp(), hi1 = max_exp(), lo2 = o.min_exp(), hi2 = o.max_exp();
    long wa = hi1.a + hi2.a - lo1.a - lo2.a + 1;
    long wb = hi1.b + hi2.b - lo1.b - lo2.b + 1;
    Int den = dx * dy;
    Poly r(v);
    if (wa * wb <= (1L << 22)) {
        std::vector<Int> acc(static_cast<std::size_t>(wa * wb));
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            for (std::size_t j = 0; j < o.terms_.size(); ++j) {
                long ia = terms_[i].e.a + o.terms_[j].e.a - lo1.a - lo2.a;
                long ib = terms_[i].e.b + o.terms_[j].e.b - lo1.b - lo2.b;
                mpz_addmul(acc[ia * wb + ib].get_mpz_t(), cx[i].get_mpz_t(), cy[j].get_mpz_t());
            }
        }
        for (long ia = 0; ia < wa; ++ia) {
            for (long ib = 0; ib < wb; ++ib) {
                Int& c = acc[ia * wb + ib];
                if (sgn(c) == 0) continue;
                Rat q(c, den);
                q.canonicalize();
                r.terms_.push_back({Exp{static_cast<int>(ia + lo1.a + lo2.a), static_cast<int>(ib + lo1.b + lo2.b)}, q});
            }
        }
        return r;
    }
    std::map<Exp, Int> acc;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        for (std::size_t j = 0; j < o.terms_.size(); ++j) {
            Exp e{terms_[i].e.a + o.terms_[j].e.a, terms_[i].e.b + o.terms_[j].e.b};
            mpz_addmul(acc[e].get_mpz_t(), cx[i].get_mpz_t(), cy[j].get_mpz_t());
        }
    for (auto& [e, c] : acc) {
        if (sgn(c) == 0) continue;
        Rat q(c, den);
        q.canonicalize();
        r.terms_.push_back({e, q});
    }
    return r;
}

Poly Poly::scaled(const Rat& c) const {
    if (sgn(c) == 0) return Poly(vars_);
    Poly r = *this;
    for (auto& t : r.terms_) t.c *= c;
    return r;
}

Poly Poly::shifted(int da, int db) const {
    Poly r = *this;
    for (auto& t : r.terms_) {
        t.e.a += da;
        t.e.b += db;
    }
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly r = constant(1, vars_);
    Poly base = *this;
    while (e > 0) {
        if (e & 1U) r = r * base;
        e >>= 1U;
        if (e > 0) base = base * base;
    }
    return r;
}

Poly Poly::substitute_monomials(Exp image0, Exp image1, Vars target) const {
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_)
        ts.push_back({Exp{t.e.a * image0.a + t.e.b * image1.a, t.e.a * image0.b + t.e.b * image1.b}, t.c});
    return from_terms(std::move(ts), target);
}

Poly Poly::with_vars(Vars v) const {
    Poly r = *this;
    r.vars_ = v;
    return r;
}

Rat Poly::evaluate(const Rat& x, const Rat& y) const {
    Rat s = 0;
    for (const auto& t : terms_) s += t.c * rat_pow(x, t.e.a) * rat_pow(y, t.e.b);
    return s;
}

bool Poly::operator==(const Poly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    if (!terms_.empty() && vars_ != o.vars_ && !is_constant()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].e != o.terms_[i].e || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

std::vector<Term> Poly::sorted_terms() const {
    std::vector<Term> ts = terms_;
    std::sort(ts.begin(), ts.end(), [](const Term& x, const Term& y) { return grlex_less(y.e, x.e); });
    return ts;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : sorted_terms()) {
        Rat c = t.c;
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        c = abs(c);
        bool has_mono = t.e.a != 0 || t.e.b != 0;
        bool wrote = false;
        if (c != 1 || !has_mono) {
            os << c.get_str();
            wrote = true;
        }
        auto factor = [&](int idx, int e) {
            if (e == 0) return;
            if (wrote) os << "*";
            os << var_name(vars_, idx);
            if (e != 1) os << "^" << e;
            wrote = true;
        };
        factor(0, t.e.a);
        factor(1, t.e.b);
    }
    return os.str();
}

Poly poly_gcd(const Poly& f, const Poly& g) {
    Vars v = common_vars(f, g);
    if (f.has_negative_exponents() || g.has_negative_exponents())
        throw MathError("gcd of Laurent polynomials");
    if (f.is_zero() && g.is_zero()) return Poly(v);
    if (f.is_zero() || g.is_zero()) {
        Split s = split(f.is_zero() ? g : f);
        Poly r = s.prim.shifted(s.m.a, s.m.b);
        return sgn(r.leading().c) < 0 ? -r : r;
    }
    Split sf = split(f), sg = split(g);
    Exp m{std::min(sf.m.a, sg.m.a), std::min(sf.m.b, sg.m.b)};
    Poly r = from_bpoly(bgcd(to_bpoly(sf.prim), to_bpoly(sg.prim)), v).shifted(m.a, m.b);
    return sgn(r.leading().c) < 0 ? -r : r;
}

Poly poly_divexact(const Poly& f, const Poly& g) {
    Vars v = common_vars(f, g);
    if (g.is_zero()) throw MathError("division by zero");
    if (f.is_zero()) return Poly(v);
    if (g.is_monomial()) return f.scaled(1 / g.terms()[0].c).shifted(-g.terms()[0].e.a, -g.terms()[0].e.b).with_vars(v);
    Split sf = split(f), sg = split(g);
    auto q = bdivexact(to_bpoly(sf.prim), to_bpoly(sg.prim));
    if (!q) throw MathError("inexact polynomial division");
    return from_bpoly(*q, v).scaled(sf.c / sg.c).shifted(sf.m.a - sg.m.a, sf.m.b - sg.m.b);
}

// ---------------------------------------------------------------------------

RatFun::RatFun(const Poly& p) : num_(p), den_(Poly::constant(1, p.vars())) {}

RatFun::RatFun(const Poly& num, const Poly& den) : num_(num), den_(den) {
    Vars v = common_vars(num, den);
    num_ = num_.with_vars(v);
    den_ = den_.with_vars(v);
    normalize();
}

RatFun RatFun::constant(const Rat& c, Vars v) { return RatFun(Poly::constant(c, v)); }

RatFun RatFun::variable(int index, Vars v) { return RatFun(Poly::variable(index, v)); }

RatFun RatFun::monomial(const Rat& c, int a, int b, Vars v) { return RatFun(Poly::monomial(c, a, b, v)); }

const Poly& RatFun::as_poly() const {
    if (!den_.is_one()) throw MathError("rational function is not a polynomial: " + str());
    return num_;
}

void RatFun::normalize() {
    Vars v = common_vars(num_, den_);
    if (den_.is_zero()) throw MathError("division by zero");
    if (num_.is_zero()) {
        num_ = Poly(v);
        den_ = Poly::constant(1, v);
        return;
    }
    if (den_.is_monomial()) {
        const Term& t = den_.terms()[0];
        num_ = num_.scaled(1 / t.c).shifted(-t.e.a, -t.e.b).with_vars(v);
        den_ = Poly::constant(1, v);
        return;
    }
    Split sd = split(den_), sn = split(num_);
    Poly g = poly_gcd(sn.prim, sd.prim);
    Poly n = sn.prim, d = sd.prim;
    if (!g.is_one()) {
        n = poly_divexact(n, g);
        d = poly_divexact(d, g);
    }
    Rat c = sn.c / sd.c;
    if (sgn(d.leading().c) < 0) {
        d = -d;
        c = -c;
    }
    num_ = n.scaled(c).shifted(sn.m.a - sd.m.a, sn.m.b - sd.m.b).with_vars(v);
    den_ = d.with_vars(v);
    if (den_.is_constant()) den_ = Poly::constant(1, v);
}

RatFun RatFun::operator-() const { return RatFun(Raw{}, -num_, den_); }

RatFun RatFun::operator+(const RatFun& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_.is_one() && o.den_.is_one()) return RatFun(Raw{}, num_ + o.num_, den_);
    if (den_ == o.den_) return RatFun(num_ + o.num_, den_);
    Poly g = poly_gcd(den_, o.den_);
    if (g.is_one()) {
        Vars v = common_vars(num_, o.num_);
        return RatFun(Raw{}, (num_ * o.den_ + o.num_ * den_).with_vars(v), (den_ * o.den_).with_vars(v));
    }
    Poly d1 = poly_divexact(den_, g), d2 = poly_divexact(o.den_, g);
    return RatFun(num_ * d2 + o.num_ * d1, den_ * d2);
}

RatFun RatFun::operator-(const RatFun& o) const { return *this + (-o); }

RatFun RatFun::operator*(const RatFun& o) const {
    if (is_zero() || o.is_zero()) return RatFun(Poly(common_vars(num_, o.num_)));
    if (den_.is_one() && o.den_.is_one()) return RatFun(Raw{}, num_ * o.num_, den_.with_vars(common_vars(num_, o.num_)));
    // Cross-cancel: each pair is already coprime within itself.
    auto cancel = [](const Poly& n, const Poly& d, Poly& n_out, Poly& d_out) {
        if (d.is_one()) {
            n_out = n;
            d_out = d;
            return;
        }
        Split s = split(n);
        Poly g = poly_gcd(s.prim, d);
        if (g.is_one()) {
            n_out = n;
            d_out = d;
        } else {
            n_out = poly_divexact(n, g);
            d_out = poly_divexact(d, g);
        }
    };
    Poly n1, d2, n2, d1;
    cancel(num_, o.den_, n1, d2);
    cancel(o.num_, den_, n2, d1);
    Vars v = common_vars(num_, o.num_);
    Poly d = (d1 * d2).with_vars(v);
    Poly n = (n1 * n2).with_vars(v);
    if (d.is_constant()) return RatFun(n, d);
    if (sgn(d.leading().c) < 0) return RatFun(Raw{}, -n, -d);
    return RatFun(Raw{}, n, d);
}

RatFun RatFun::operator/(const RatFun& o) const { return *this * o.inverse(); }

RatFun RatFun::scaled(const Rat& c) const {
    if (sgn(c) == 0) return RatFun(Poly(vars()));
    return RatFun(Raw{}, num_.scaled(c), den_);
}

RatFun RatFun::inverse() const {
    if (is_zero()) throw MathError("division by zero");
    Split sn = split(num_);
    Poly d = sn.prim;
    Rat c = 1 / sn.c;
    if (sgn(d.leading().c) < 0) {
        d = -d;
        c = -c;
    }
    Poly n = den_.scaled(c).shifted(-sn.m.a, -sn.m.b);
    if (d.is_constant()) return RatFun(Raw{}, n, Poly::constant(1, vars()));
    return RatFun(Raw{}, n, d);
}

RatFun RatFun::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    return RatFun(Raw{}, num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

RatFun RatFun::adams(int r) const {
    if (r == 1) return *this;
    return substitute_monomials(Exp{r, 0}, Exp{0, r}, vars());
}

RatFun RatFun::substitute_monomials(Exp image0, Exp image1, Vars target) const {
    return RatFun(num_.substitute_monomials(image0, image1, target), den_.substitute_monomials(image0, image1, target));
}

RatFun RatFun::swapped() const { return substitute_monomials(Exp{0, 1}, Exp{1, 0}, vars()); }

RatFun RatFun::with_vars(Vars v) const { return RatFun(Raw{}, num_.with_vars(v), den_.with_vars(v)); }

Rat RatFun::evaluate(const Rat& x, const Rat& y) const {
    Rat d = den_.evaluate(x, y);
    if (sgn(d) == 0) throw MathError("evaluation at a pole");
    return num_.evaluate(x, y) / d;
}

std::string RatFun::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

// ---------------------------------------------------------------------------

RatFun substitute_powers(const RatFun& p, SubstMode mode, int d) {
    if (d % 2 != 0) throw MathError("odd dimension in power substitution");
    const Poly& poly = p.as_poly();
    std::vector<Term> ts;
    for (const auto& t : poly.terms()) {
        if ((t.e.a + t.e.b) % 2 != 0) throw MathError("monomial of odd total degree: " + poly.str());
        int qe = (d + t.e.a - t.e.b) / 2;
        if (mode == SubstMode::E) {
            ts.push_back({Exp{qe, 0}, t.c});
        } else {
            Rat c = (t.e.a % 2 == 0) ? t.c : Rat(-t.c);
            ts.push_back({Exp{qe, d + t.e.a}, c});
        }
    }
    return RatFun(Poly::from_terms(std::move(ts), Vars::qt));
}

RatFun half_specialize(const RatFun& p) {
    // z -> s, w -> 1/s first; the reduced result is then even in s.
    RatFun r = p.substitute_monomials(Exp{1, 0}, Exp{-1, 0}, Vars::qt);
    auto map = [](const Poly& x) {
        std::vector<Term> ts;
        for (const auto& t : x.terms()) {
            if (t.e.a % 2 != 0) throw MathError("half specialization is not a function of q");
            ts.push_back({Exp{t.e.a / 2, 0}, t.c});
        }
        return Poly::from_terms(std::move(ts), Vars::qt);
    };
    return RatFun(map(r.num()), map(r.den()));
}

nlohmann::json to_json(const Poly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& t : p.sorted_terms()) arr.push_back({t.e.a, t.e.b, t.c.get_str()});
    return arr;
}

nlohmann::json to_json(const RatFun& f) {
    if (f.is_poly()) return to_json(f.num());
    return {{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

Poly poly_from_json(const nlohmann::json& j, Vars v) {
    if (!j.is_array()) throw MathError("polynomial JSON must be an array");
    std::vector<Term> ts;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 3) throw MathError("polynomial JSON term must be [a, b, coeff]");
        Rat c(e[2].get<std::string>());
        c.canonicalize();
        ts.push_back({Exp{e[0].get<int>(), e[1].get<int>()}, c});
    }
    return Poly::from_terms(std::move(ts), v);
}

RatFun ratfun_from_json(const nlohmann::json& j, Vars v) {
    if (j.is_object()) return RatFun(poly_from_json(j.at("num"), v), poly_from_json(j.at("den"), v));
    return RatFun(poly_from_json(j, v));
}

// ---------------------------------------------------------------------------

std::vector<RatFun> solve_unique(const std::vector<std::vector<RatFun>>& a, const std::vector<RatFun>& b) {
    std::size_t m = a.size();
    if (b.size() != m) throw MathError("system shape mismatch");
    if (m == 0) return {};
    std::size_t n = a[0].size();
    Vars v = b.empty() ? Vars::qt : b[0].vars();
    for (const auto& row : a)
        if (!row.empty()) v = row[0].vars();

    // Clear denominators row by row.
    std::vector<std::vector<Poly>> mat(m, std::vector<Poly>(n + 1, Poly(v)));
    for (std::size_t i = 0; i < m; ++i) {
        if (a[i].size() != n) throw MathError("ragged system");
        Poly l = Poly::constant(1, v);
        auto absorb = [&](const RatFun& x) {
            if (x.den().is_one()) return;
            Poly g = poly_gcd(l, x.den());
            l = l * poly_divexact(x.den(), g);
        };
        for (const auto& x : a[i]) absorb(x);
        absorb(b[i]);
        for (std::size_t j = 0; j <= n; ++j) {
            const RatFun& x = j < n ? a[i][j] : b[i];
            if (x.is_zero()) continue;
            mat[i][j] = (x.num() * poly_divexact(l, x.den())).with_vars(v);
        }
    }

    Poly prev = Poly::constant(1, v);
    std::size_t r = 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t best = m;
        for (std::size_t p = r; p < m; ++p)
            if (!mat[p][c].is_zero() && (best == m || mat[p][c].size() < mat[best][c].size())) best = p;
        if (best == m) throw MathError("linear system does not have a unique solution");
        std::swap(mat[r], mat[best]);
        for (std::size_t i = r + 1; i < m; ++i) {
            for (std::size_t j = c + 1; j <= n; ++j) {
                Poly x = mat[r][c] * mat[i][j] - mat[i][c] * mat[r][j];
                mat[i][j] = poly_divexact(x, prev);
            }
            mat[i][c] = Poly(v);
        }
        prev = mat[r][c];
        ++r;
    }
    for (std::size_t i = r; i < m; ++i)
        if (!mat[i][n].is_zero()) throw MathError("inconsistent linear system");

    std::vector<RatFun> x(n, RatFun(v));
    for (std::size_t ii = n; ii-- > 0;) {
        RatFun s(mat[ii][n]);
        for (std::size_t k = ii + 1; k < n; ++k)
            if (!mat[ii][k].is_zero()) s -= RatFun(mat[ii][k]) * x[k];
        x[ii] = s / RatFun(mat[ii][ii]);
    }
    return x;
}

}  // namespace wh
