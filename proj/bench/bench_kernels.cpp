// Serial-versus-parallel timing for the OpenMP kernels. The parallel
// variants run identical per-iteration arithmetic, so max|diff| is expected
// to print as exactly zero; the interesting column is the speedup.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <vector>

#include <omp.h>

#include "qwalk/analysis.hpp"
#include "qwalk/enumerate.hpp"
#include "qwalk/evolution.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/graph_io.hpp"
#include "qwalk/hamiltonian.hpp"
#include "qwalk/spectral.hpp"

using namespace qwalk;

namespace {

Graph random_connected(int n, double extra, std::mt19937& rng) {
    Graph g(n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        g.add_edge(pick(rng), v);
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v) && coin(rng) < extra)
                g.add_edge(u, v);
    return g;
}

template <typename F> double time_best_of(int reps, F&& f) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const double t0 = omp_get_wtime();
        f();
        best = std::min(best, omp_get_wtime() - t0);
    }
    return best;
}

void row(const char* name, double serial, double parallel, double max_diff) {
    std::printf("%-22s %10.4f ms %10.4f ms %8.2fx   max|diff| %.3g\n", name, serial * 1e3,
                parallel * 1e3, serial / parallel, max_diff);
}

} // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-22s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");
    std::mt19937 rng(12345);

    // propagator on a mid-sized dense-ish graph
    {
        const Graph g = random_connected(220, 0.08, rng);
        const auto dec = decompose(build(g, MatrixKind::Adjacency));
        TransitionMatrix us, up;
        const double ts = time_best_of(3, [&] { us = transition_matrix_serial(dec, 1.3); });
        const double tp = time_best_of(3, [&] { up = transition_matrix(dec, 1.3); });
        row("transition_matrix", ts, tp, (us.entries - up.entries).cwiseAbs().maxCoeff());
    }

    // fidelity sweep with many samples
    {
        const Graph g = random_connected(120, 0.1, rng);
        const auto dec = decompose(build(g, MatrixKind::Laplacian));
        std::vector<double> times(20000);
        for (size_t i = 0; i < times.size(); ++i)
            times[i] = 6.2831853e-4 * static_cast<double>(i);
        std::vector<double> fs, fp;
        const double ts = time_best_of(3, [&] { fs = fidelity_scan_serial(dec, 0, 1, times); });
        const double tp = time_best_of(3, [&] { fp = fidelity_scan(dec, 0, 1, times); });
        double diff = 0;
        for (size_t i = 0; i < fs.size(); ++i)
            diff = std::max(diff, std::abs(fs[i] - fp[i]));
        row("fidelity_scan", ts, tp, diff);
    }

    // per-line graph analysis over a generated corpus
    {
        std::string corpus;
        enumerate_labeled_graphs(6, true, [&](const Graph& g) {
            corpus += to_graph6(g) + "\n";
        });
        auto run = [&](int jobs) {
            std::istringstream in(corpus);
            std::ostringstream out, err;
            search_stream(in, out, err, MatrixKind::Adjacency, {}, jobs);
            return out.str();
        };
        std::string o1, op;
        const double ts = time_best_of(1, [&] { o1 = run(1); });
        const double tp = time_best_of(1, [&] { op = run(0); });
        row("search_stream", ts, tp, o1 == op ? 0.0 : 1.0);
    }
    return 0;
}
