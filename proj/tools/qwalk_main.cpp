#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "qwalk/analysis.hpp"
#include "qwalk/enumerate.hpp"
#include "qwalk/evolution.hpp"
#include "qwalk/graph_io.hpp"
#include "qwalk/hamiltonian.hpp"

namespace {

struct CommonOpts {
    std::string gen, graph6, edges;
    std::string model = "adjacency";
    qwalk::Tolerances tol;
};

void add_input_options(CLI::App* sub, CommonOpts& o) {
    sub->add_option("--gen", o.gen, "generator spec, e.g. p4, c5, k3, q3, star:5, p3power:2");
    sub->add_option("--graph6", o.graph6, "graph6 string (short form, n <= 62)");
    sub->add_option("--edges", o.edges, "edge-list file ('-' for stdin): 'n m' header, 'u v [w]' rows");
}

void add_model_options(CLI::App* sub, CommonOpts& o) {
    sub->add_option("--model", o.model, "matrix model")
        ->check(CLI::IsMember({"adjacency", "laplacian", "signless"}))
        ->capture_default_str();
    sub->add_option("--tol-cluster", o.tol.cluster, "eigenvalue clustering gap")->capture_default_str();
    sub->add_option("--tol-support", o.tol.support, "support membership threshold")->capture_default_str();
    sub->add_option("--tol-mat", o.tol.mat, "matrix comparison tolerance")->capture_default_str();
    sub->add_option("--tol-rank", o.tol.rank, "Krylov rank threshold")->capture_default_str();
    sub->add_option("--tol-charpoly", o.tol.charpoly, "charpoly residual tolerance")->capture_default_str();
    sub->add_option("--tol-period", o.tol.period, "period verification tolerance")->capture_default_str();
    sub->add_option("--tol-pst", o.tol.pst, "PST fidelity tolerance")->capture_default_str();
    sub->add_option("--pst-grid", o.tol.pst_grid, "fallback grid resolution over (0, 2pi]")->capture_default_str();
}

// Exactly one input source; returns the graph and a label for reports.
std::pair<qwalk::Graph, std::string> load_graph(const CommonOpts& o) {
    const int given = !o.gen.empty() + !o.graph6.empty() + !o.edges.empty();
    if (given != 1)
        throw std::invalid_argument("provide exactly one of --gen, --graph6, --edges");
    if (!o.gen.empty())
        return {qwalk::parse_generator_spec(o.gen), o.gen};
    if (!o.graph6.empty())
        return {qwalk::parse_graph6(o.graph6), o.graph6};
    if (o.edges == "-")
        return {qwalk::parse_edge_list(std::cin), "stdin"};
    std::ifstream in(o.edges);
    if (!in)
        throw std::invalid_argument("cannot open edge-list file \"" + o.edges + "\"");
    return {qwalk::parse_edge_list(in), o.edges};
}

qwalk::MatrixKind resolve_kind(const CommonOpts& o, const qwalk::Graph& g) {
    qwalk::MatrixKind kind = qwalk::matrix_kind_from_string(o.model);
    if (kind == qwalk::MatrixKind::Adjacency && g.is_weighted())
        kind = qwalk::MatrixKind::WeightedAdjacency;
    return kind;
}

int run(int argc, char** argv) {
    CLI::App app{"continuous-time quantum walk analyzer"};
    app.require_subcommand(1);

    CommonOpts an_opts;
    bool dump_matrix = false;
    CLI::App* analyze = app.add_subcommand("analyze", "full periodicity/PST/bounds report (JSON)");
    add_input_options(analyze, an_opts);
    add_model_options(analyze, an_opts);
    analyze->add_flag("--dump-matrix", dump_matrix, "include Hamiltonian entries in the report");

    CommonOpts ev_opts;
    int ev_from = 0, ev_to = 0, ev_samples = 201;
    double ev_tmax = 0;
    CLI::App* evolve = app.add_subcommand("evolve", "fidelity curve |U(t)_ab|^2 (CSV)");
    add_input_options(evolve, ev_opts);
    add_model_options(evolve, ev_opts);
    evolve->add_option("--from", ev_from, "source vertex")->capture_default_str();
    evolve->add_option("--to", ev_to, "target vertex")->required();
    evolve->add_option("--t-max", ev_tmax, "end of the sampled time interval")->required();
    evolve->add_option("--samples", ev_samples, "number of samples on [0, t-max]")->capture_default_str();

    CommonOpts se_opts;
    int se_jobs = 0;
    CLI::App* search = app.add_subcommand("search", "graph6 lines on stdin -> one JSON record per line");
    add_model_options(search, se_opts);
    search->add_option("--jobs", se_jobs, "worker threads (0 = all)")->capture_default_str();

    std::string gen_family;
    long gen_param = 0;
    bool gen_counts = false;
    CLI::App* generate = app.add_subcommand("generate", "emit a named family member (graph6 or edge list)");
    generate->add_option("family", gen_family, "p3power | hypercube | path | cycle | star")
        ->required()
        ->check(CLI::IsMember({"p3power", "hypercube", "path", "cycle", "star"}));
    generate->add_option("param", gen_param, "family parameter")->required();
    generate->add_flag("--counts", gen_counts, "print vertex/edge counts instead of the graph");

    int enum_n = 0;
    bool enum_connected = false;
    CLI::App* enumerate = app.add_subcommand("enumerate", "all labeled graphs on n <= 7 vertices (graph6 lines)");
    enumerate->add_option("n", enum_n, "vertex count")->required();
    enumerate->add_flag("--connected", enum_connected, "connected graphs only");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (*analyze) {
        auto [g, label] = load_graph(an_opts);
        const qwalk::MatrixKind kind = resolve_kind(an_opts, g);
        qwalk::json j = analysis_json(qwalk::analyze_graph(g, kind, an_opts.tol, label));
        if (dump_matrix) {
            const qwalk::Hamiltonian h = qwalk::build(g, kind);
            qwalk::json rows = qwalk::json::array();
            for (int i = 0; i < h.size(); ++i) {
                qwalk::json row = qwalk::json::array();
                for (int k = 0; k < h.size(); ++k)
                    row.push_back(h.entries(i, k).get_str());
                rows.push_back(std::move(row));
            }
            j["matrix"] = std::move(rows);
        }
        std::cout << j.dump(2) << '\n';
    } else if (*evolve) {
        auto [g, label] = load_graph(ev_opts);
        const qwalk::Hamiltonian h = qwalk::build(g, resolve_kind(ev_opts, g));
        const auto dec = qwalk::decompose(h, ev_opts.tol);
        const auto curve = qwalk::fidelity_curve(dec, ev_from, ev_to, ev_tmax, ev_samples);
        qwalk::write_fidelity_csv(std::cout, curve);
    } else if (*search) {
        qwalk::search_stream(std::cin, std::cout, std::cerr,
                             qwalk::matrix_kind_from_string(se_opts.model), se_opts.tol,
                             se_jobs);
    } else if (*generate) {
        const std::string spec = gen_family + ":" + std::to_string(gen_param);
        const qwalk::Graph g = qwalk::parse_generator_spec(spec);
        if (gen_counts) {
            std::cout << "n=" << g.vertex_count() << " m=" << g.edge_count();
            if (gen_family == "p3power")
                std::cout << " d=" << 2 * gen_param; // corner-to-corner distance
            std::cout << '\n';
        } else if (g.vertex_count() <= 62) {
            std::cout << qwalk::to_graph6(g) << '\n';
        } else {
            std::cout << qwalk::to_edge_list(g);
        }
    } else if (*enumerate) {
        qwalk::enumerate_labeled_graphs(enum_n, enum_connected, [](const qwalk::Graph& g) {
            std::cout << qwalk::to_graph6(g) << '\n';
        });
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const qwalk::consistency_error& e) {
        std::cerr << "consistency violation: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
