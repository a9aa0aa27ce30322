#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qwalk/graph.hpp"
#include "qwalk/periodicity.hpp"
#include "qwalk/spectral.hpp"

namespace qwalk {

// Eccentricity-versus-size bound checks for one periodic vertex.
//
// The stated form of the support lemma is eccentricity <= |support|; its
// proof (and the main theorems) use eccentricity + 1 <= |support|. Both are
// recorded so the discrepancy stays auditable.
struct BoundReport {
    std::string label; // family/instance tag used by surveys
    int vertex = 0;
    MatrixKind model = MatrixKind::Adjacency;
    int eccentricity = 0;
    int support_size = 0;
    long long edge_count = 0;
    bool lemma2_ok = false;        // eccentricity + 1 <= |support| (proof strength)
    bool lemma2_stated_ok = false; // eccentricity <= |support|
    bool support_bound_ok = false; // adjacency: (|support|-1)^3 <= 54m; Laplacian: ^2 <= 9m
    double theorem_lhs = 0;        // (eps/3)^3 or (eps/3)^2
    double theorem_rhs = 0;        // 2m or m
    bool theorem_ok = false;       // decided in exact integer arithmetic
    bool degenerate = false;       // eccentricity 0 (single vertex): vacuous
    double tightness = 0;          // lhs/rhs
};

// Every pair of distinct support eigenvalues of a periodic vertex differs by
// at least 2pi/tau_min (up to 1e-9 slack).
bool check_lemma1(const PeriodicityCertificate& cert, const SpectralDecomposition& dec);

// Fragment: eccentricity and the two support-size inequalities only.
BoundReport check_lemma2(const Graph& g, int a, const EigenvalueSupport& supp);

// (eps/3)^3 < 2m, decided exactly as eps^3 < 54m. Requires an adjacency
// certificate for a on a connected graph.
BoundReport check_adjacency_bound(const Graph& g, int a, const PeriodicityCertificate& cert);

// (eps/3)^2 < m, decided exactly as eps^2 < 9m. Requires a Laplacian
// certificate.
BoundReport check_laplacian_bound(const Graph& g, int a, const PeriodicityCertificate& cert);

// Spectral tail bounds underpinning the theorems, on the
// multiplicity-expanded spectrum: theta_j^2 <= 2m/(j+1) for the adjacency
// model and lambda_j <= 2m/(j+1) for the Laplacian (descending order).
bool check_tail_bound(const SpectralDecomposition& dec, MatrixKind kind, long long m);

struct SurveyRow {
    std::string label;
    MatrixKind model = MatrixKind::Adjacency;
    double max_tightness = 0;
    int best_vertex = 0;
    int reports = 0;
};

// Per-label maximum tightness, sorted descending.
std::vector<SurveyRow> tightness_survey(const std::vector<BoundReport>& reports);

// Flat CSV, one row per report.
void write_bound_csv(std::ostream& os, const std::vector<BoundReport>& reports);
void write_survey_csv(std::ostream& os, const std::vector<SurveyRow>& rows);

} // namespace qwalk
