#include "wh/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "wh/hodge.hpp"
#include "wh/oracle.hpp"

#ifndef WH_FIXTURE_DIR
#define WH_FIXTURE_DIR "fixtures"
#endif

namespace wh {

namespace {

using nlohmann::json;

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

json load(const std::string& dir, const std::string& name) {
    std::ifstream is(dir + "/" + name);
    if (!is) throw Failure("cannot open fixture " + dir + "/" + name);
    try {
        return json::parse(is);
    } catch (const json::exception& e) {
        throw Failure("bad fixture " + name + ": " + e.what());
    }
}

RatFun qt(const json& j) { return RatFun(poly_from_json(j, Vars::qt)); }

SymFunc2 schur_table(const json& j) {
    SymFunc2 f(Basis2::schur2, Vars::qt);
    for (const auto& [k, v] : j.items()) f.add(parse_bipartition(k), qt(v));
    return f;
}

SymFunc1 schur_table1(const json& j) {
    SymFunc1 f(Basis1::schur, Vars::qt);
    for (const auto& [k, v] : j.items()) f.add(parse_partition(k), qt(v));
    return f;
}

ProblemSpec spec_from_json(const json& j) {
    ProblemSpec s{j.at("g").get<int>(), j.at("k").get<int>(), j.at("n").get<int>(), {}};
    for (const auto& c : j.at("classes")) s.classes.push_back(parse_class(c.get<std::string>()));
    return s;
}

ProblemSpec spec_of(int g, int k, int n, std::vector<std::string> classes) {
    ProblemSpec s{g, k, n, {}};
    for (const auto& c : classes) s.classes.push_back(parse_class(c));
    return s;
}

const HodgeResult& cached_result(const ProblemSpec& s) {
    static std::map<std::string, HodgeResult> cache;
    auto it = cache.find(s.str());
    if (it != cache.end()) return it->second;
    return cache.emplace(s.str(), compute_HB(s)).first->second;
}

std::vector<ProblemSpec> property_configs(const std::string& dir) {
    std::vector<ProblemSpec> out{spec_from_json(load(dir, "hb_n4.json")), spec_from_json(load(dir, "hb_n5.json"))};
    out.push_back(spec_of(2, 1, 1, {"0,0:", "0,0:"}));
    out.push_back(spec_of(1, 1, 2, {"0,0:1", "1,0:"}));
    out.push_back(spec_of(0, 2, 3, {"0,0:1", "0,0:1", "0,0:1", "1,0:"}));
    out.push_back(spec_of(0, 2, 3, {"0,0:1", "0,0:1", "0,0:1", "0,0:1"}));
    out.push_back(spec_of(1, 1, 3, {"0,0:1", "1,0:"}));
    out.push_back(spec_of(1, 1, 4, {"0,0:1 1", "2,0:"}));
    out.push_back(spec_of(0, 2, 4, {"0,0:1 1", "1,0:1", "0,0:2", "2,0:"}));
    out.push_back(spec_of(1, 1, 5, {"0,0:1 1", "1,0:1"}));
    out.push_back(spec_of(0, 2, 5, {"0,0:1 1", "0,0:1 1", "0,0:1 1", "2,0:"}));
    return out;
}

RatFun at_t_inverse_q(const RatFun& f) { return f.substitute_monomials(Exp{1, 0}, Exp{-1, 0}, Vars::qt); }

SymFunc1 at_t_inverse_q(const SymFunc1& f) {
    return map_coeffs(f, [](const RatFun& c) { return at_t_inverse_q(c); }, Vars::qt);
}

SymFunc2 at_t_inverse_q(const SymFunc2& f) {
    return map_coeffs(f, [](const RatFun& c) { return at_t_inverse_q(c); }, Vars::qt);
}

// ---------------------------------------------------------------------------

std::string wreath_tables(const std::string& dir) {
    json j = load(dir, "wreath_tables.json");
    int n = 0;
    for (int e : {0, 1}) {
        for (const auto& [label, table] : j.at("wreath_size1").items()) {
            BiPartition a = parse_bipartition(label);
            require(wreath_H(a, e).expansion == schur_table(table), "size 1 core " + std::to_string(e) + " " + label);
            ++n;
        }
        for (const auto& [label, table] : j.at("wreath_size2_core" + std::to_string(e)).items()) {
            BiPartition a = parse_bipartition(label);
            require(wreath_H(a, e).expansion == schur_table(table),
                    "size 2 core " + std::to_string(e) + " " + label + ": got " + str(wreath_H(a, e).expansion));
            ++n;
        }
    }
    return std::to_string(n) + " expansions equal";
}

std::string pairing_tables(const std::string& dir) {
    json j = load(dir, "wreath_tables.json");
    int n = 0;
    for (int e : {0, 1})
        for (const auto& [label, v] : j.at("pairing_size1").items()) {
            require(wreath_N(parse_bipartition(label), e).total == qt(v), "size 1 pairing " + label);
            ++n;
        }
    json swap = j.at("pairing_size2_core1_exchanged_labels");
    std::string x = swap[0].get<std::string>(), y = swap[1].get<std::string>();
    for (const auto& [label, v] : j.at("pairing_size2_core0").items()) {
        BiPartition a = parse_bipartition(label);
        require(wreath_N(a, 0).total == qt(v), "core 0 pairing " + label + ": got " + wreath_N(a, 0).total.str());
        std::string other = label == x ? y : label == y ? x : label;
        BiPartition b = parse_bipartition(other);
        require(wreath_N(b, 1).total == qt(v), "core 1 pairing " + other + ": got " + wreath_N(b, 1).total.str());
        n += 2;
    }
    for (const auto& [label, table] : j.at("macdonald_size2").items()) {
        Partition l = parse_partition(label);
        const auto& h = macdonald_H(l).expansion;
        require(h == schur_table1(table), "Macdonald " + label);
        RatFun want = qt(j.at("macdonald_pairing_size2").at(label));
        require(N_pairing(l) == want, "Macdonald pairing product " + label);
        require(qt_inner1(h, h) == want, "Macdonald self-pairing " + label);
        n += 3;
    }
    return std::to_string(n) + " values equal; core 1 exchanges " + x + " and " + y;
}

std::string reference_polynomials(const std::string& dir) {
    std::ostringstream os;
    for (const char* name : {"hb_n4.json", "hb_n5.json"}) {
        json j = load(dir, name);
        ProblemSpec s = spec_from_json(j);
        auto t0 = std::chrono::steady_clock::now();
        const HodgeResult& r = cached_result(s);
        double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        Poly want = poly_from_json(j.at("hb"), Vars::zw);
        require(r.HB == RatFun(want), std::string(name) + ": polynomial differs");
        require(r.d == j.at("d").get<int>(), std::string(name) + ": d differs");
        require(sec < 60, std::string(name) + ": slower than 60 s");
        os << "n=" << s.n << " " << want.size() << " terms " << sec << "s; ";
    }
    return os.str();
}

std::string hb_properties(const std::string& dir) {
    static const std::vector<std::string> names = {"polynomial", "degree_bound", "even_total_degree",
                                                   "nonnegative_at_minus_z", "symmetric"};
    int configs = 0, equal_degree = 0;
    for (const auto& s : property_configs(dir)) {
        require(s.ccl_ok() && s.n <= 5, "config outside the tested range: " + s.str());
        const HodgeResult& r = cached_result(s);
        for (const auto& name : names) {
            const CheckResult* c = r.check(name);
            require(c && c->ok, s.str() + ": " + name + " fails " + (c ? c->detail : "(missing)"));
        }
        const CheckResult* eq = r.check("degree_equals_d");
        if (eq && eq->ok) ++equal_degree;
        ++configs;
    }
    return std::to_string(configs) + " configs; degree equals d in " + std::to_string(equal_degree);
}

std::string e_polynomial_routes(const std::string& dir) {
    int configs = 0;
    for (const auto& s : property_configs(dir)) {
        const HodgeResult& r = cached_result(s);
        for (const char* name : {"e_poly_routes_agree", "e_poly_palindromic", "mhp_specializes_to_e"}) {
            const CheckResult* c = r.check(name);
            require(c && c->ok, s.str() + ": " + name + " fails " + (c ? c->detail : "(missing)"));
        }
        ++configs;
    }
    return std::to_string(configs) + " configs";
}

std::string rank_three(const std::string& dir) {
    int n = 0;
    for (const auto& j : load(dir, "e_polynomials.json")) {
        ProblemSpec s = spec_from_json(j);
        if (s.n != 3) continue;
        RatFun want = qt(j.at("e_poly"));
        RatFun got = e_poly_from_counting(s);
        require(got == want, s.str() + ": got " + got.str());
        ++n;
    }
    require(n == 2, "expected two rank-three fixtures");
    return "2 polynomials equal";
}

std::string finite_field_oracle(const std::string& dir) {
    std::ostringstream os;
    auto classes = [](const FiniteGL& G, const std::vector<std::vector<int>>& eigs) {
        std::vector<std::vector<long>> out;
        for (const auto& e : eigs) out.push_back(twisted_class(G, G.twisted_rep(e), ClassMode::geometric));
        return out;
    };
    {
        FiniteGL G(2, 7);
        require(genericity_check(7, {{2}, {1}}, true).ok, "q=7 classes not strongly generic");
        Int got = count_points(G, 1, classes(G, {{2}, {1}})).points;
        require(got == 4104, "q=7 count " + got.get_str());
        ProblemSpec s = spec_of(1, 1, 2, {"0,0:1", "1,0:"});
        Rat formula = e_poly_from_counting(s).evaluate(7, 0);
        require(formula == Rat(got), "q=7 formula value " + formula.get_str());
        os << "q=7: " << got << "; ";
    }
    {
        FiniteGL G(2, 11);
        require(genericity_check(11, {{2}, {1}}, true).ok, "q=11 classes not strongly generic");
        Int got = count_points(G, 1, classes(G, {{2}, {1}})).points;
        Rat formula = e_poly_from_counting(spec_of(1, 1, 2, {"0,0:1", "1,0:"})).evaluate(11, 0);
        require(formula == Rat(got), "q=11 count " + got.get_str() + " vs formula " + formula.get_str());
        os << "q=11: " << got << "; ";
    }
    {
        FiniteGL G(2, 13);
        require(genericity_check(13, {{2}, {5}}, true).ok, "q=13 classes not strongly generic");
        Int got = count_points(G, 1, classes(G, {{2}, {5}})).points;
        Int want = 4826809 - 3 * 28561 + 4 * 2197 - 3 * 169 + 1;
        require(got == want, "q=13 count " + got.get_str());
        os << "q=13: " << got << "; ";
    }
    for (int q : {5, 7}) {
        FiniteGL G(1, q);
        for (auto [g, k] : std::vector<std::pair<int, int>>{{0, 1}, {1, 1}, {0, 2}}) {
            std::vector<std::vector<long>> cl(2 * k, twisted_class(G, G.twisted_rep({}), ClassMode::geometric));
            Int got = count_points(G, g, cl).points;
            Int want = 1;
            for (int i = 0; i < 2 * (g + k - 1); ++i) want *= q - 1;
            require(got == want, "n=1 q=" + std::to_string(q) + " count " + got.get_str());
            ProblemSpec s = spec_of(g, k, 1, std::vector<std::string>(2 * k, "0,0:"));
            require(e_poly_from_counting(s).evaluate(q, 0) == Rat(got), "n=1 formula mismatch");
        }
    }
    os << "n=1: 6 counts";
    (void)dir;
    return os.str();
}

std::string specializations(const std::string&) {
    RatFun q = RatFun::variable(0, Vars::qt), one = RatFun::constant(1, Vars::qt);
    int checks = 0;
    for (int n = 1; n <= 2; ++n) {
        for (const auto& l : partitions_of(n)) {
            RatFun sv = plethystic_value(schur1(l), one / (one - q));
            SymFunc1 want = scale(scalar_plethysm1(schur1(l), one / (one - q)), one / sv);
            require(at_t_inverse_q(macdonald_H(l).expansion) == want, "Macdonald at t=1/q " + l.str());
            require(at_t_inverse_q(N_pairing(l)) == q.pow(-n) * (one / sv).pow(2), "pairing at t=1/q " + l.str());
            checks += 2;
        }
        Matrix2 p = inverse(triangularity_matrix(0));
        for (const auto& a : bipartitions_of(n)) {
            RatFun norm = plethystic_value(schur1(a.first), one / (one - q * q)) *
                          plethystic_value(schur1(a.second), q / (one - q * q));
            SymFunc2 want = scale(alphabet_substitute(schur2(a), p), one / norm);
            for (int e : {0, 1}) {
                require(at_t_inverse_q(wreath_H(a, e).expansion) == want, "wreath at t=1/q " + a.str());
                require(at_t_inverse_q(wreath_N(a, e).total) == q.pow(-n) * (one / norm).pow(2),
                        "wreath pairing at t=1/q " + a.str());
                checks += 2;
            }
        }
    }
    auto compare = [&](const std::vector<SeriesTerm>& two, const std::vector<SeriesTerm>& onep, int k,
                       const std::string& what) {
        require(two.size() == onep.size(), what + ": term counts differ");
        for (std::size_t i = 0; i < two.size(); ++i) {
            require(two[i].index == onep[i].index, what + ": index order differs");
            SymFunc2 f2 = map_coeffs(two[i].factor, [](const RatFun& c) { return half_specialize(c); }, Vars::qt);
            require(!onep[i].factor.terms.empty(), what + ": empty factor");
            const auto& [key, c1] = *onep[i].factor.terms.begin();
            RatFun f = f2.coeff(key) / c1;
            require(f2 == scale(onep[i].factor, f), what + ": factors not proportional");
            require(half_specialize(two[i].coeff) * f.pow(2 * k) == onep[i].coeff, what + ": coefficient mismatch");
            ++checks;
        }
    };
    for (auto [g, k] : std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 1}}) {
        SeriesParams sp{g, k, 2};
        std::string tag = " g=" + std::to_string(g) + " k=" + std::to_string(k);
        compare(omega_e_terms(0, sp), omega_one_param(OneParam::omega0, sp), k, "series 0" + tag);
        compare(omega_e_terms(1, sp), omega_one_param(OneParam::omega1, sp), k, "series 1" + tag);
        compare(omega_star_terms(sp), omega_one_param(OneParam::star, sp), k, "series star" + tag);
    }
    return std::to_string(checks) + " identities";
}

std::string hook_identities(const std::string&) {
    RatFun q = RatFun::variable(0, Vars::qt), one = RatFun::constant(1, Vars::qt);
    int checks = 0;
    for (int n = 0; n <= 6; ++n)
        for (const auto& l : partitions_of(n)) {
            int sum = 0;
            for (const auto& h : hooks(l)) sum += h.hook;
            require(sum == l.size() + l.n() + l.dual().n(), "hook sum " + l.str());
            RatFun sv = plethystic_value(schur1(l), one / (one - q));
            require(sv == q.pow(l.n()) / hook_poly(l), "principal specialization " + l.str());
            checks += 2;
        }
    for (int n = 0; n <= 10; ++n)
        for (const auto& l : partitions_of(n)) {
            CoreQuotient cq = core2_quotient2(l);
            if (cq.core > 1) continue;
            require(brace(cq.quotient, cq.core) == l, "core and quotient round trip " + l.str());
            ++checks;
        }
    return std::to_string(checks) + " identities";
}

std::string character_cross_check(const std::string&) {
    int checks = 0;
    for (int m = 0; m <= 3; ++m)
        for (const auto& a : bipartitions_of(m))
            for (const auto& b : bipartitions_of(m)) {
                Int x = wreath_char(a, b), y = wreath_group_char(a, b);
                require(x == y, "character " + a.str() + " at " + b.str() + ": " + x.get_str() + " vs " + y.get_str());
                ++checks;
            }
    for (int m : {5, 6})
        for (int g : {0, 1}) {
            std::vector<std::vector<int>> choices =
                m % 2 ? std::vector<std::vector<int>>{{0, 0}} : std::vector<std::vector<int>>{{0, 0}, {0, 1}, {1, 1}};
            for (const auto& cls : choices) {
                Int f = frobenius_count(dihedral_table(m), g, cls), d = dihedral_direct_count(m, g, cls);
                require(f == d, "dihedral m=" + std::to_string(m) + " g=" + std::to_string(g) + ": " + f.get_str() +
                                    " vs " + d.get_str());
                ++checks;
            }
        }
    return std::to_string(checks) + " values equal";
}

using Runner = std::function<std::string(const std::string&)>;

const std::map<int, Runner>& runners() {
    static const std::map<int, Runner> r = {
        {1, wreath_tables},         {2, pairing_tables},        {3, reference_polynomials},
        {4, hb_properties}, {5, e_polynomial_routes},   {6, rank_three},
        {7, finite_field_oracle},   {8, specializations}, {9, hook_identities},
        {10, character_cross_check},
    };
    return r;
}

}  // namespace

std::string default_fixture_dir() {
    if (const char* env = std::getenv("WH_FIXTURES")) return env;
    return WH_FIXTURE_DIR;
}

const std::vector<CriterionInfo>& acceptance_criteria() {
    static const std::vector<CriterionInfo> c = {
        {1, "wreath-macdonald-tables", {"wreath", "macdonald"}, 1},
        {2, "pairing-tables", {"wreath", "macdonald", "pairing"}, 1},
        {3, "reference-polynomials", {"hodge"}, 120},
        {4, "hb-properties", {"hodge"}, 300},
        {5, "e-polynomial-routes", {"hodge", "series"}, 120},
        {6, "rank-three-e-polynomials", {"hodge", "series"}, 10},
        {7, "finite-field-oracle", {"oracle"}, 120},
        {8, "specializations", {"series", "wreath", "macdonald"}, 30},
        {9, "hook-identities", {"partitions"}, 5},
        {10, "character-cross-check", {"oracle", "wreath"}, 30},
    };
    return c;
}

std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids, const std::string& filter,
                                            const std::string& fixture_dir, std::ostream& out) {
    std::vector<CriterionResult> results;
    for (const auto& info : acceptance_criteria()) {
        if (!ids.empty() && std::find(ids.begin(), ids.end(), info.id) == ids.end()) continue;
        if (!filter.empty()) {
            bool hit = info.name.find(filter) != std::string::npos;
            for (const auto& t : info.tags) hit = hit || t.find(filter) != std::string::npos;
            if (!hit) continue;
        }
        CriterionResult r{info.id, info.name, false, "", 0};
        auto t0 = std::chrono::steady_clock::now();
        try {
            r.detail = runners().at(info.id)(fixture_dir);
            r.pass = true;
        } catch (const std::exception& e) {
            r.detail = e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (r.pass && r.seconds > info.budget_seconds) {
            r.pass = false;
            r.detail += "; exceeded the " + std::to_string(info.budget_seconds) + " s budget";
        }
        out << (r.pass ? "PASS" : "FAIL") << " " << r.id << " " << r.name << " (" << r.seconds << " s): " << r.detail
            << std::endl;
        results.push_back(r);
    }
    return results;
}

}  // namespace wh
