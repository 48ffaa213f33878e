#include <omp.h>

#include <chrono>
#include <functional>
#include <iostream>

#include "CLI11.hpp"
#include "wh/hodge.hpp"
#include "wh/oracle.hpp"
#include "wh/series.hpp"

namespace {

double best_of(int reps, const std::function<void()>& f) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
        best = std::min(best, dt.count());
    }
    return best;
}

void report(const std::string& name, double serial, double parallel, bool same) {
    std::cout << name << ": serial " << serial << " s, parallel " << parallel << " s, speedup "
              << (parallel > 0 ? serial / parallel : 0) << (same ? "" : "  MISMATCH") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs OpenMP kernels"};
    int reps = 3, q = 11, n = 5;
    app.add_option("--reps", reps, "repetitions, best time is reported");
    app.add_option("--q", q, "prime for the pair distribution");
    app.add_option("--n", n, "rank for the triple pairing, 4 or 5");
    CLI11_PARSE(app, argc, argv);

    std::cout << "threads: " << omp_get_max_threads() << "\n";
    bool ok = true;

    wh::ProblemSpec spec = n == 4 ? wh::ProblemSpec{0, 2, 4, {}} : wh::ProblemSpec{0, 2, 5, {}};
    for (const char* c : n == 4 ? std::vector<const char*>{"0,0:1 1", "0,0:1 1", "2,0:", "2,0:"}
                                : std::vector<const char*>{"0,0:1 1", "1,0:1", "2,0:", "2,0:"})
        spec.classes.push_back(wh::parse_class(c));
    wh::SeriesParams p{spec.g, spec.k, spec.N()};
    auto first = wh::omega_e_terms(spec.odd() ? 1 : 0, p);
    auto second = spec.odd() ? wh::omega_e_terms(0, p) : first;
    auto inv = wh::omega_star_inverse(p);
    auto h = wh::class_functions(spec, wh::Vars::zw);
    wh::RatFun rs, rp;
    double ts = best_of(reps, [&] { rs = wh::pair_triples_serial(first, second, inv, h, spec.N()); });
    double tp = best_of(reps, [&] { rp = wh::pair_triples(first, second, inv, h, spec.N()); });
    ok = ok && rs == rp;
    report("pair_triples n=" + std::to_string(n), ts, tp, rs == rp);

    wh::FiniteGL G(2, q);
    auto c1 = wh::twisted_class(G, G.twisted_rep({1}), wh::ClassMode::geometric);
    auto c2 = wh::twisted_class(G, G.twisted_rep({2}), wh::ClassMode::geometric);
    wh::ClassFunction ds, dp;
    ts = best_of(reps, [&] { ds = wh::pair_distribution_serial(G, c1, c2); });
    tp = best_of(reps, [&] { dp = wh::pair_distribution(G, c1, c2); });
    ok = ok && ds == dp;
    report("pair_distribution q=" + std::to_string(q), ts, tp, ds == dp);
    return ok ? 0 : 1;
}
