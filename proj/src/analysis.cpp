#include "qwalk/analysis.hpp"

#include <cmath>
#include <istream>
#include <ostream>

#include <omp.h>

#include "qwalk/graph_io.hpp"
#include "qwalk/hamiltonian.hpp"
#include "qwalk/spectral.hpp"

namespace qwalk {

GraphAnalysis analyze_graph(const Graph& g, MatrixKind kind, const Tolerances& tol,
                            std::string source) {
    GraphAnalysis a;
    a.source = std::move(source);
    a.model = kind;
    a.n = g.vertex_count();
    a.m = g.edge_count();
    a.connected = is_connected(g);
    a.weighted = g.is_weighted();
    a.tol = tol;

    const Hamiltonian h = build(g, kind);
    const SpectralDecomposition dec = decompose(h, tol);
    a.thetas = dec.thetas;
    a.multiplicities = dec.multiplicities;
    a.charpoly.reserve(dec.charpoly.coeffs.size());
    for (const auto& c : dec.charpoly.coeffs)
        a.charpoly.push_back(c.get_str());
    for (int r : dec.wide_clusters)
        a.warnings.push_back("eigenvalue cluster at " + std::to_string(dec.thetas[r]) +
                             " is wide relative to the merge gap; consider --tol-cluster");

    const bool boundable = a.connected && !a.weighted &&
                           (kind == MatrixKind::Adjacency || kind == MatrixKind::Laplacian);
    if (!a.connected)
        a.warnings.push_back("graph is disconnected; eccentricity bound checks skipped");

    a.vertices.reserve(a.n);
    for (int v = 0; v < a.n; ++v) {
        VertexAnalysis va;
        va.result = analyze_vertex(dec, kind, v, tol);
        va.support_thetas.reserve(va.result.support.size());
        for (int idx : va.result.support.indices)
            va.support_thetas.push_back(dec.thetas[idx]);
        if (boundable && va.result.periodic()) {
            const auto& cert = *va.result.certificate;
            va.bound = kind == MatrixKind::Adjacency ? check_adjacency_bound(g, v, cert)
                                                     : check_laplacian_bound(g, v, cert);
        }
        a.vertices.push_back(std::move(va));
    }

    // PST candidates: pairs of periodic vertices sharing tau_min (transfer
    // forces a common period).
    for (int u = 0; u < a.n; ++u) {
        if (!a.vertices[u].result.periodic())
            continue;
        const double tau_u = a.vertices[u].result.certificate->tau_min;
        for (int v = u + 1; v < a.n; ++v) {
            if (!a.vertices[v].result.periodic())
                continue;
            const double tau_v = a.vertices[v].result.certificate->tau_min;
            if (std::abs(tau_u - tau_v) > 1e-9 * (1.0 + tau_u))
                continue;
            const PstReport report = detect_pst(dec, kind, u, v, tol);
            if (report.pst)
                a.pst_pairs.push_back(report);
        }
    }
    return a;
}

json classification_json(const SupportClassification& cls) {
    json j;
    j["class"] = to_string(cls.cls);
    j["certified"] = cls.certified;
    if (cls.cls != SupportClass::Unstructured) {
        j["delta"] = cls.delta;
        j["alpha"] = cls.alpha;
        j["betas"] = cls.betas;
    }
    if (!cls.note.empty())
        j["note"] = cls.note;
    return j;
}

json support_json(const EigenvalueSupport& supp, const std::vector<double>& thetas) {
    json j;
    j["size"] = supp.size();
    j["eigenvalues"] = thetas;
    j["norms"] = supp.norms;
    return j;
}

json certificate_json(const PeriodicityCertificate& cert,
                      const std::vector<double>& support_thetas) {
    json j;
    j["vertex"] = cert.vertex;
    j["model"] = to_string(cert.model);
    j["class"] = to_string(cert.classification.cls);
    j["delta"] = cert.classification.delta;
    j["alpha"] = cert.classification.alpha;
    j["betas"] = cert.classification.betas;
    j["g"] = json{{"num", cert.g.num}, {"den", cert.g.den}};
    j["tau_min"] = cert.tau_min;
    j["verified_modulus"] = cert.verified_modulus;
    j["support"] = support_json(cert.support, support_thetas);
    return j;
}

json bound_json(const BoundReport& r) {
    json j;
    j["model"] = to_string(r.model);
    j["eccentricity"] = r.eccentricity;
    j["support_size"] = r.support_size;
    j["edge_count"] = r.edge_count;
    j["lemma2_ok"] = r.lemma2_ok;
    j["lemma2_stated_ok"] = r.lemma2_stated_ok;
    j["support_bound_ok"] = r.support_bound_ok;
    j["theorem_lhs"] = r.theorem_lhs;
    j["theorem_rhs"] = r.theorem_rhs;
    j["theorem_ok"] = r.theorem_ok;
    j["degenerate"] = r.degenerate;
    j["tightness"] = r.tightness;
    return j;
}

json pst_json(const PstReport& r) {
    json j;
    j["source"] = r.source;
    j["target"] = r.target;
    j["time"] = r.time;
    j["fidelity"] = r.fidelity;
    return j;
}

json vertex_json(const VertexAnalysis& v) {
    json j;
    j["vertex"] = v.result.support.vertex;
    j["support"] = support_json(v.result.support, v.support_thetas);
    j["classification"] = classification_json(v.result.classification);
    j["periodic"] = v.result.periodic();
    if (v.result.periodic())
        j["certificate"] = certificate_json(*v.result.certificate, v.support_thetas);
    else
        j["certificate"] = nullptr;
    if (v.result.failed_modulus)
        j["failed_modulus"] = *v.result.failed_modulus;
    j["bound"] = v.bound ? bound_json(*v.bound) : json(nullptr);
    return j;
}

namespace {

json tolerances_json(const Tolerances& t) {
    json j;
    j["cluster"] = t.cluster;
    j["support"] = t.support;
    j["mat"] = t.mat;
    j["rank"] = t.rank;
    j["charpoly"] = t.charpoly;
    j["period"] = t.period;
    j["pst"] = t.pst;
    j["pst_grid"] = t.pst_grid;
    return j;
}

} // namespace

json analysis_json(const GraphAnalysis& a) {
    json j;
    j["graph"] = json{{"source", a.source},
                      {"n", a.n},
                      {"m", a.m},
                      {"connected", a.connected},
                      {"weighted", a.weighted}};
    j["model"] = to_string(a.model);
    j["tolerances"] = tolerances_json(a.tol);
    j["spectrum"] = json{{"eigenvalues", a.thetas},
                         {"multiplicities", a.multiplicities},
                         {"charpoly", a.charpoly}};
    json verts = json::array();
    for (const auto& v : a.vertices)
        verts.push_back(vertex_json(v));
    j["vertices"] = std::move(verts);
    json pst = json::array();
    for (const auto& p : a.pst_pairs)
        pst.push_back(pst_json(p));
    j["pst_pairs"] = std::move(pst);
    j["warnings"] = a.warnings;
    return j;
}

json search_record(const GraphAnalysis& a) {
    json j;
    j["source"] = a.source;
    j["n"] = a.n;
    j["m"] = a.m;
    j["model"] = to_string(a.model);
    json periodic = json::array();
    double max_tightness = 0;
    bool any_bound = false;
    for (const auto& v : a.vertices) {
        if (!v.result.periodic())
            continue;
        json entry = certificate_json(*v.result.certificate, v.support_thetas);
        if (v.bound) {
            entry["tightness"] = v.bound->tightness;
            entry["theorem_ok"] = v.bound->theorem_ok;
            any_bound = true;
            if (v.bound->tightness > max_tightness)
                max_tightness = v.bound->tightness;
        }
        periodic.push_back(std::move(entry));
    }
    j["periodic_vertices"] = std::move(periodic);
    json pst = json::array();
    for (const auto& p : a.pst_pairs)
        pst.push_back(pst_json(p));
    j["pst_pairs"] = std::move(pst);
    j["max_tightness"] = any_bound ? json(max_tightness) : json(nullptr);
    return j;
}

SearchStats search_stream(std::istream& in, std::ostream& out, std::ostream& err,
                          MatrixKind kind, const Tolerances& tol, int jobs) {
    const int threads = jobs >= 1 ? jobs : omp_get_max_threads();
    const std::size_t chunk_size = static_cast<std::size_t>(threads) * 64;
    SearchStats stats;
    std::vector<std::string> lines;
    std::string line;
    bool eof = false;
    while (!eof) {
        lines.clear();
        while (lines.size() < chunk_size && std::getline(in, line))
            lines.push_back(line);
        if (lines.size() < chunk_size)
            eof = true;
        if (lines.empty())
            break;
        const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(lines.size());
        std::vector<std::string> records(lines.size());
        std::vector<std::string> parse_errors(lines.size());
        std::vector<std::exception_ptr> failures(lines.size());
#pragma omp parallel for schedule(dynamic) num_threads(threads)
        for (std::ptrdiff_t i = 0; i < count; ++i) {
            try {
                const Graph g = parse_graph6(lines[i]);
                records[i] = search_record(analyze_graph(g, kind, tol, lines[i])).dump();
            } catch (const std::invalid_argument& e) {
                parse_errors[i] = e.what();
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
        for (std::ptrdiff_t i = 0; i < count; ++i) {
            if (failures[i])
                std::rethrow_exception(failures[i]);
            const std::uint64_t line_no = stats.lines + static_cast<std::uint64_t>(i) + 1;
            if (!parse_errors[i].empty()) {
                err << "warning: skipping line " << line_no << ": " << parse_errors[i]
                    << '\n';
                ++stats.skipped;
            } else {
                out << records[i] << '\n';
                ++stats.analyzed;
            }
        }
        stats.lines += lines.size();
    }
    return stats;
}

} // namespace qwalk
