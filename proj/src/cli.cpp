#include "wh/cli.hpp"

#include <sstream>

#include "CLI11.hpp"
#include "wh/acceptance.hpp"
#include "wh/hodge.hpp"
#include "wh/oracle.hpp"

namespace wh {

namespace {

using nlohmann::json;

struct BadInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) {
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::logic_error&) {
            pos = 0;
        }
        if (pos != tok.size()) throw BadInput("not an integer: " + tok);
        out.push_back(v);
    }
    return out;
}

ProblemSpec make_spec(int g, int k, int n, const std::vector<std::string>& classes) {
    ProblemSpec s{g, k, n, {}};
    for (const auto& c : classes) s.classes.push_back(parse_class(c));
    s.validate();
    return s;
}

json checks_json(const HodgeResult& r) {
    json c = json::object();
    for (const auto& x : r.checks) {
        json e = {{"ok", x.ok}};
        if (!x.detail.empty()) e["detail"] = x.detail;
        if (x.informational) e["informational"] = true;
        c[x.name] = e;
    }
    return c;
}

int do_compute(int g, int k, int n, const std::vector<std::string>& classes, bool as_json, bool check_all,
               std::ostream& out, std::ostream& err) {
    ProblemSpec s = make_spec(g, k, n, classes);
    HodgeResult r = compute_HB(s, check_all);
    for (const auto& w : r.warnings) err << "warning: " << w << "\n";
    bool have_e = r.check("even_total_degree") && r.check("even_total_degree")->ok && r.d % 2 == 0;
    if (as_json) {
        json j = {{"hb", to_json(r.HB)}, {"d", r.d}, {"checks", checks_json(r)}, {"warnings", r.warnings}};
        j["e_poly"] = have_e ? to_json(r.E) : json(nullptr);
        j["mhp"] = have_e ? to_json(r.MHP) : json(nullptr);
        if (have_e && !r.E.is_zero()) j["e_leading_coefficient"] = r.E.num().sorted_terms().front().c.get_str();
        out << j.dump() << "\n";
    } else {
        out << s.str() << "\n";
        out << "d = " << r.d << "\n";
        out << "HB(z,w) = " << r.HB.str() << "\n";
        if (have_e) {
            out << "E(q) = " << r.E.str() << "\n";
            out << "MHP(q,t) = " << r.MHP.str() << "\n";
        }
        out << "checks:\n";
        for (const auto& c : r.checks)
            out << "  " << c.name << ": " << (c.ok ? "ok" : c.informational ? "no" : "FAILED")
                << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
    }
    return r.all_ok() ? exit_ok : exit_check_failed;
}

int do_oracle(int q, int n, int g, const std::vector<std::string>& eigs, bool strong, bool orbit,
              const std::vector<std::string>& classes, bool as_json, std::ostream& out) {
    if (eigs.empty() || eigs.size() % 2 != 0) throw BadInput("need an even, nonzero number of --eigs");
    std::vector<std::vector<int>> tuples;
    for (const auto& e : eigs) tuples.push_back(parse_ints(e));
    FiniteGL G(n, q);
    for (const auto& t : tuples)
        if (static_cast<int>(t.size()) != n / 2) throw BadInput("each --eigs needs n/2 values");
    Genericity gen = genericity_check(q, tuples, strong);
    if (!gen.ok) throw BadInput(std::string(strong ? "not strongly generic: " : "not generic: ") + gen.witness);

    std::vector<std::vector<long>> cls;
    for (const auto& t : tuples)
        cls.push_back(twisted_class(G, G.twisted_rep(t), orbit ? ClassMode::orbit : ClassMode::geometric));
    PointCount pc = count_points(G, g, cls);

    json j = {{"q", q}, {"n", n}, {"g", g}, {"count", pc.points.get_str()}, {"solutions", pc.solutions.get_str()}};
    int status = exit_ok;
    if (!classes.empty()) {
        ProblemSpec s = make_spec(g, static_cast<int>(eigs.size()) / 2, n, classes);
        Rat formula = e_poly_from_counting(s).evaluate(q, 0);
        bool pass = formula == Rat(pc.points);
        j["formula"] = formula.get_str();
        j["verdict"] = pass ? "PASS" : "FAIL";
        if (!pass) status = exit_check_failed;
    }
    if (as_json) {
        out << j.dump() << "\n";
    } else {
        out << "count = " << pc.points << "\n";
        if (j.contains("formula")) out << "formula = " << j["formula"].get<std::string>() << "\n"
                                       << j["verdict"].get<std::string>() << "\n";
    }
    return status;
}

int do_wreath(int size, int core, bool as_json, std::ostream& out) {
    if (size < 0 || (core != 0 && core != 1)) throw BadInput("need size >= 0 and core 0 or 1");
    json arr = json::array();
    for (const auto& a : bipartitions_of(size)) {
        const auto& h = wreath_H(a, core);
        if (as_json) {
            json terms = json::object();
            for (const auto& [k, c] : h.expansion.terms) terms[k.str()] = to_json(c);
            json e = {{"label", a.str()}, {"schur", terms}};
            if (size > 0) {
                const auto& d = wreath_N(a, core);
                e["pairing"] = to_json(d.total);
                e["nabla"] = to_json(d.nabla);
            }
            arr.push_back(e);
        } else {
            out << "H" << a.str() << " = " << str(h.expansion) << "\n";
            if (size > 0) {
                const auto& d = wreath_N(a, core);
                out << "  N = " << d.total.str() << "\n  nabla = " << d.nabla.str() << "\n";
            }
        }
    }
    if (as_json) out << arr.dump() << "\n";
    return exit_ok;
}

int do_selftest(const std::string& filter, const std::vector<int>& ids, const std::string& fixtures, bool as_json,
                std::ostream& out) {
    std::ostringstream lines;
    auto results = run_acceptance(ids, filter, fixtures, as_json ? lines : out);
    bool ok = !results.empty();
    json arr = json::array();
    for (const auto& r : results) {
        ok = ok && r.pass;
        arr.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}});
    }
    if (as_json) out << arr.dump() << "\n";
    if (results.empty()) out << "no criterion matched\n";
    return ok ? exit_ok : exit_check_failed;
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Wreath Macdonald polynomials and twisted character varieties"};
    app.require_subcommand(1);

    int g = 0, k = 1, n = 1;
    std::vector<std::string> classes;
    bool as_json = false, check_all = false;
    auto* compute = app.add_subcommand("compute", "HB(z,w), d, E-polynomial and mixed Hodge polynomial");
    compute->add_option("--g", g, "genus")->required();
    compute->add_option("--k", k, "half the number of punctures")->required();
    compute->add_option("--n", n, "rank")->required();
    compute->add_option("--class", classes, "class type \"m+,m-:m1 m2 ...\", 2k times")->required();
    compute->add_flag("--json", as_json, "JSON output");
    compute->add_flag("--check-all", check_all, "also compare with the counting formula and duality checks");

    int q = 0, on = 2, og = 0;
    std::vector<std::string> eigs, oclasses;
    bool strong = false, orbit = false, ojson = false;
    auto* oracle = app.add_subcommand("oracle", "count points over a prime field by enumeration");
    oracle->add_option("--q", q, "odd prime")->required();
    oracle->add_option("--n", on, "rank, 1 or 2");
    oracle->add_option("--g", og, "genus");
    oracle->add_option("--eigs", eigs, "eigenvalue tuple of one class, 2k times")->required()->allow_extra_args(false);
    oracle->add_option("--class", oclasses, "class types to compare with the formula");
    oracle->add_flag("--strong-check", strong, "require strong genericity");
    oracle->add_flag("--orbit", orbit, "use single twisted orbits instead of full classes");
    oracle->add_flag("--json", ojson, "JSON output");

    int size = 1, core = 0;
    bool wjson = false;
    auto* wreath = app.add_subcommand("wreath-mac", "wreath Macdonald polynomials and self-pairings");
    wreath->add_option("--size", size, "size of the 2-partitions");
    wreath->add_option("--core", core, "2-core, 0 or 1");
    wreath->add_flag("--json", wjson, "JSON output");

    std::string filter, fixtures = default_fixture_dir();
    std::vector<int> ids;
    bool sjson = false;
    auto* selftest = app.add_subcommand("selftest", "run the acceptance criteria");
    selftest->add_option("--filter", filter, "only criteria whose name or tag contains this");
    selftest->add_option("--criterion", ids, "only these criterion numbers");
    selftest->add_option("--fixtures", fixtures, "fixture directory");
    selftest->add_flag("--json", sjson, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_bad_input;
    }

    try {
        if (*compute) return do_compute(g, k, n, classes, as_json, check_all, out, err);
        if (*oracle) return do_oracle(q, on, og, eigs, strong, orbit, oclasses, ojson, out);
        if (*wreath) return do_wreath(size, core, wjson, out);
        if (*selftest) return do_selftest(filter, ids, fixtures, sjson, out);
    } catch (const MathError& e) {
        err << "error: " << e.what() << "\n";
        return exit_math_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_bad_input;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_math_error;
    }
    return exit_bad_input;
}

}  // namespace wh
