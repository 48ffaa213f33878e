#include "wh/hodge.hpp"

#include <sstream>

namespace wh {

bool ProblemSpec::ccl_ok() const {
    for (const auto& c : classes)
        if (c.m_minus != 0) return false;
    return true;
}

void ProblemSpec::validate() const {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    if (g < 0) throw std::invalid_argument("g must be nonnegative");
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (static_cast<int>(classes.size()) != 2 * k)
        throw std::invalid_argument("expected " + std::to_string(2 * k) + " classes, got " +
                                    std::to_string(classes.size()));
    for (const auto& c : classes)
        if (c.size() != N())
            throw std::invalid_argument("class " + c.str() + " has size " + std::to_string(c.size()) +
                                        ", expected " + std::to_string(N()));
}

std::string ProblemSpec::str() const {
    std::ostringstream os;
    os << "g=" << g << " k=" << k << " n=" << n << " classes=[";
    for (std::size_t i = 0; i < classes.size(); ++i) os << (i ? " | " : "") << classes[i].str();
    os << "]";
    return os.str();
}

bool HodgeResult::all_ok() const {
    for (const auto& c : checks)
        if (!c.ok && !c.informational) return false;
    return true;
}

const CheckResult* HodgeResult::check(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

int dimension_d(const ProblemSpec& spec) {
    int n2 = spec.n * spec.n;
    int d = (2 * spec.g - 2) * n2;
    for (const auto& c : spec.classes) {
        int dim = c.m_plus * (2 * c.m_plus + 1);
        dim += spec.odd() ? c.m_minus * (2 * c.m_minus + 1) : c.m_minus * (2 * c.m_minus - 1);
        for (int m : c.m_star) dim += m * m;
        d += n2 - dim;
    }
    return d;
}

std::vector<SymFunc2> class_functions(const ProblemSpec& spec, Vars v) {
    std::vector<SymFunc2> out;
    for (const auto& c : spec.classes) out.push_back(h_of_type(simple_dual(c), v));
    return out;
}

namespace {

struct Triple {
    std::size_t a, b, c;
};

std::vector<Triple> triples_of_degree(const std::vector<SeriesTerm>& a, const std::vector<SeriesTerm>& b,
                                      const std::vector<SeriesTerm>& c, int N) {
    std::vector<Triple> out;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            for (std::size_t l = 0; l < c.size(); ++l)
                if (a[i].degree + b[j].degree + c[l].degree == N) out.push_back({i, j, l});
    return out;
}

// Distinct class functions with multiplicities.
std::vector<std::pair<const SymFunc2*, int>> group_functions(const std::vector<SymFunc2>& h) {
    std::vector<std::pair<const SymFunc2*, int>> out;
    for (const auto& f : h) {
        bool found = false;
        for (auto& [p, m] : out)
            if (*p == f) {
                ++m;
                found = true;
                break;
            }
        if (!found) out.push_back({&f, 1});
    }
    return out;
}

RatFun triple_value(const SeriesTerm& x, const SeriesTerm& y, const SeriesTerm& z,
                    const std::vector<std::pair<const SymFunc2*, int>>& hs) {
    SymFunc2 f = x.factor * y.factor * z.factor;
    RatFun r = x.coeff * y.coeff * z.coeff;
    for (const auto& [h, m] : hs) {
        if (r.is_zero()) break;
        r *= hall_inner(f, *h).pow(m);
    }
    return r;
}

// Adds a list of rational functions pairwise to keep intermediate
// denominators small.
RatFun tree_sum(std::vector<RatFun> xs, Vars v) {
    if (xs.empty()) return RatFun(v);
    while (xs.size() > 1) {
        std::vector<RatFun> next;
        for (std::size_t i = 0; i + 1 < xs.size(); i += 2) next.push_back(xs[i] + xs[i + 1]);
        if (xs.size() % 2 == 1) next.push_back(xs.back());
        xs = std::move(next);
    }
    return xs[0];
}

Vars vars_of(const std::vector<SymFunc2>& h) { return h.empty() ? Vars::qt : h[0].vars; }

}  // namespace

RatFun pair_triples_serial(const std::vector<SeriesTerm>& a, const std::vector<SeriesTerm>& b,
                           const std::vector<SeriesTerm>& c, const std::vector<SymFunc2>& h, int N) {
    auto hs = group_functions(h);
    std::vector<RatFun> parts;
    for (const auto& t : triples_of_degree(a, b, c, N)) parts.push_back(triple_value(a[t.a], b[t.b], c[t.c], hs));
    return tree_sum(std::move(parts), vars_of(h));
}

RatFun pair_triples(const std::vector<SeriesTerm>& a, const std::vector<SeriesTerm>& b,
                    const std::vector<SeriesTerm>& c, const std::vector<SymFunc2>& h, int N) {
    auto hs = group_functions(h);
    auto ts = triples_of_degree(a, b, c, N);
    std::vector<RatFun> parts(ts.size(), RatFun(vars_of(h)));
    std::vector<std::string> errors(ts.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(ts.size()); ++i) {
        try {
            parts[i] = triple_value(a[ts[i].a], b[ts[i].b], c[ts[i].c], hs);
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    }
    for (const auto& e : errors)
        if (!e.empty()) throw MathError(e);
    return tree_sum(std::move(parts), vars_of(h));
}

RatFun hb_polynomial(const ProblemSpec& spec) {
    spec.validate();
    SeriesParams p{spec.g, spec.k, spec.N()};
    auto first = omega_e_terms(spec.odd() ? 1 : 0, p);
    auto second = spec.odd() ? omega_e_terms(0, p) : first;
    auto inv = omega_star_inverse(p);
    return pair_triples(first, second, inv, class_functions(spec, Vars::zw), spec.N());
}

RatFun e_poly_from_hb(const RatFun& hb, int d) { return substitute_powers(hb, SubstMode::E, d); }

RatFun mixed_hodge_poly(const RatFun& hb, int d) { return substitute_powers(hb, SubstMode::MHP, d); }

RatFun e_poly_from_counting(const ProblemSpec& spec) {
    spec.validate();
    int d = dimension_d(spec);
    if (d % 2 != 0) throw MathError("odd dimension");
    SeriesParams p{spec.g, spec.k, spec.N()};
    auto first = omega_one_param(spec.odd() ? OneParam::omega1 : OneParam::omega0, p);
    auto second = spec.odd() ? omega_one_param(OneParam::omega0, p) : first;
    auto inv = invert_series(omega_one_param(OneParam::star, p), spec.N());
    RatFun r = pair_triples(first, second, inv, class_functions(spec, Vars::qt), spec.N());
    return r * RatFun::monomial(1, d / 2, 0, Vars::qt);
}

namespace {

std::string poly_witness(const Term& t, Vars v) {
    std::ostringstream os;
    os << t.c.get_str() << "*" << var_name(v, 0) << "^" << t.e.a << "*" << var_name(v, 1) << "^" << t.e.b;
    return os.str();
}

void check_hb(HodgeResult& r) {
    auto add = [&](std::string name, bool ok, std::string detail) {
        r.checks.push_back({std::move(name), ok, std::move(detail)});
    };
    bool poly = r.HB.is_poly() && !r.HB.num().has_negative_exponents();
    add("polynomial", poly, poly ? "" : r.HB.str());
    if (!poly) return;
    const Poly& hb = r.HB.num();
    Exp mx = hb.is_zero() ? Exp{0, 0} : hb.max_exp();
    add("degree_bound", mx.a <= r.d && mx.b <= r.d,
        "deg_z=" + std::to_string(mx.a) + " deg_w=" + std::to_string(mx.b) + " d=" + std::to_string(r.d));
    r.checks.push_back({"degree_equals_d", mx.a == r.d && mx.b == r.d,
                        "deg_z=" + std::to_string(mx.a) + " deg_w=" + std::to_string(mx.b), true});
    std::string odd, neg;
    for (const auto& t : hb.terms()) {
        if ((t.e.a + t.e.b) % 2 != 0 && odd.empty()) odd = poly_witness(t, Vars::zw);
        Rat c = t.e.a % 2 == 0 ? t.c : Rat(-t.c);
        if (c < 0 && neg.empty()) neg = poly_witness(t, Vars::zw);
    }
    add("even_total_degree", odd.empty(), odd);
    add("nonnegative_at_minus_z", neg.empty(), neg);
    add("symmetric", r.HB.swapped() == r.HB, "");
    std::vector<Term> ts;
    for (const auto& t : hb.terms()) ts.push_back({t.e, (t.e.a + t.e.b) % 2 == 0 ? t.c : Rat(-t.c)});
    RatFun flipped(Poly::from_terms(std::move(ts), Vars::zw));
    add("invariant_under_negation", flipped == r.HB, "");
}

}  // namespace

HodgeResult compute_HB(const ProblemSpec& spec, bool cross_checks) {
    spec.validate();
    HodgeResult r;
    if (!spec.ccl_ok())
        r.warnings.push_back("a class has eigenvalue multiplicity m- > 0; the point-counting formula does not apply");
    r.d = dimension_d(spec);
    r.HB = hb_polynomial(spec);
    check_hb(r);
    const CheckResult* even = r.check("even_total_degree");
    if (!even || !even->ok || r.d % 2 != 0) return r;

    r.E = e_poly_from_hb(r.HB, r.d);
    r.MHP = mixed_hodge_poly(r.HB, r.d);
    if (!cross_checks) return r;
    RatFun route_b = e_poly_from_counting(spec);
    r.checks.push_back({"e_poly_routes_agree", route_b == r.E, route_b == r.E ? "" : route_b.str()});

    RatFun q_inv = r.E.substitute_monomials(Exp{-1, 0}, Exp{0, 1}, Vars::qt);
    r.checks.push_back({"e_poly_palindromic", q_inv * RatFun::monomial(1, r.d, 0, Vars::qt) == r.E, ""});

    std::vector<Term> ts;
    for (const auto& t : r.MHP.num().terms()) ts.push_back({Exp{t.e.a, 0}, t.e.b % 2 == 0 ? t.c : Rat(-t.c)});
    RatFun at_minus_one(Poly::from_terms(std::move(ts), Vars::qt));
    r.checks.push_back({"mhp_specializes_to_e", at_minus_one == r.E, ""});

    // q^a t^b -> q^(d-a) t^(d+b-2a)
    RatFun dual = r.MHP.substitute_monomials(Exp{-1, -2}, Exp{0, 1}, Vars::qt) *
                  RatFun::monomial(1, r.d, r.d, Vars::qt);
    r.checks.push_back({"curious_poincare", dual == r.MHP, ""});
    return r;
}

}  // namespace wh
