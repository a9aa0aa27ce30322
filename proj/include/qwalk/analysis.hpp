#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "qwalk/bounds.hpp"
#include "qwalk/evolution.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/periodicity.hpp"
#include "qwalk/tolerances.hpp"

namespace qwalk {

using json = nlohmann::ordered_json;

struct VertexAnalysis {
    PeriodicityResult result;
    std::vector<double> support_thetas; // descending, resolved from the decomposition
    std::optional<BoundReport> bound;   // connected unweighted adjacency/Laplacian only
};

// Full per-graph pipeline output. PST pairs listed have both endpoints
// certified periodic with equal tau_min.
struct GraphAnalysis {
    std::string source;
    MatrixKind model = MatrixKind::Adjacency;
    int n = 0;
    long long m = 0;
    bool connected = false;
    bool weighted = false;
    Tolerances tol;
    std::vector<std::string> charpoly; // coefficients ascending, constant first
    std::vector<double> thetas;        // distinct eigenvalues, descending
    std::vector<int> multiplicities;
    std::vector<VertexAnalysis> vertices;
    std::vector<PstReport> pst_pairs;
    std::vector<std::string> warnings;
};

GraphAnalysis analyze_graph(const Graph& g, MatrixKind kind, const Tolerances& tol = {},
                            std::string source = "");

// JSON fragments shared verbatim by the analyze document and search records,
// so the two outputs agree field-for-field.
json classification_json(const SupportClassification& cls);
json support_json(const EigenvalueSupport& supp, const std::vector<double>& thetas);
json certificate_json(const PeriodicityCertificate& cert,
                      const std::vector<double>& support_thetas);
json bound_json(const BoundReport& r);
json pst_json(const PstReport& r);
json vertex_json(const VertexAnalysis& v);

// Pretty single-document report (cmd analyze).
json analysis_json(const GraphAnalysis& a);

// Flat one-line record (cmd search).
json search_record(const GraphAnalysis& a);

struct SearchStats {
    std::uint64_t lines = 0;
    std::uint64_t analyzed = 0;
    std::uint64_t skipped = 0;
};

// Reads graph6 lines from `in`, writes one JSONL record per valid line to
// `out` in input order, warns about malformed lines on `err` and skips them.
// Graphs are processed in parallel chunks; records are reordered before
// emission. Consistency violations propagate as exceptions.
SearchStats search_stream(std::istream& in, std::ostream& out, std::ostream& err,
                          MatrixKind kind, const Tolerances& tol = {}, int jobs = 0);

} // namespace qwalk
