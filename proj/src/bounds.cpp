#include "qwalk/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace qwalk {

bool check_lemma1(const PeriodicityCertificate& cert, const SpectralDecomposition& dec) {
    if (cert.support.size() < 2)
        return true; // no pair to separate
    const double floor = 2.0 * std::numbers::pi / cert.tau_min - 1e-9;
    const auto& idx = cert.support.indices;
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = i + 1; j < idx.size(); ++j)
            if (std::abs(dec.thetas[idx[i]] - dec.thetas[idx[j]]) < floor)
                return false;
    return true;
}

BoundReport check_lemma2(const Graph& g, int a, const EigenvalueSupport& supp) {
    if (!is_connected(g))
        throw std::invalid_argument("lemma 2: eccentricity needs a connected graph");
    BoundReport r;
    r.vertex = a;
    r.eccentricity = eccentricity(g, a);
    r.support_size = supp.size();
    r.lemma2_ok = r.eccentricity + 1 <= r.support_size;
    r.lemma2_stated_ok = r.eccentricity <= r.support_size;
    return r;
}

namespace {

BoundReport check_bound(const Graph& g, int a, const PeriodicityCertificate& cert,
                        MatrixKind expected) {
    if (cert.model != expected)
        throw std::invalid_argument("bound check: certificate model is " +
                                    to_string(cert.model) + ", expected " +
                                    to_string(expected));
    if (cert.vertex != a)
        throw std::invalid_argument("bound check: certificate is for vertex " +
                                    std::to_string(cert.vertex) + ", not " +
                                    std::to_string(a));
    BoundReport r = check_lemma2(g, a, cert.support);
    r.model = expected;
    r.edge_count = static_cast<long long>(g.edges().size());
    const long long eps = r.eccentricity;
    const long long m = r.edge_count;
    const long long phi = r.support_size;
    if (expected == MatrixKind::Adjacency) {
        r.theorem_lhs = std::pow(eps / 3.0, 3);
        r.theorem_rhs = 2.0 * static_cast<double>(m);
        r.theorem_ok = eps * eps * eps < 54 * m; // (eps/3)^3 < 2m over the integers
        r.support_bound_ok = (phi - 1) * (phi - 1) * (phi - 1) <= 54 * m;
    } else {
        r.theorem_lhs = std::pow(eps / 3.0, 2);
        r.theorem_rhs = static_cast<double>(m);
        r.theorem_ok = eps * eps < 9 * m; // (eps/3)^2 < m over the integers
        r.support_bound_ok = (phi - 1) * (phi - 1) <= 9 * m;
    }
    if (eps == 0) {
        r.degenerate = true; // single vertex: both sides vanish
        r.theorem_ok = true;
        r.support_bound_ok = true;
    }
    r.tightness = r.theorem_rhs > 0 ? r.theorem_lhs / r.theorem_rhs : 0.0;
    return r;
}

} // namespace

BoundReport check_adjacency_bound(const Graph& g, int a, const PeriodicityCertificate& cert) {
    return check_bound(g, a, cert, MatrixKind::Adjacency);
}

BoundReport check_laplacian_bound(const Graph& g, int a, const PeriodicityCertificate& cert) {
    return check_bound(g, a, cert, MatrixKind::Laplacian);
}

bool check_tail_bound(const SpectralDecomposition& dec, MatrixKind kind, long long m) {
    std::vector<double> values;
    values.reserve(dec.dim());
    for (int r = 0; r < dec.count(); ++r)
        for (int k = 0; k < dec.multiplicities[r]; ++k)
            values.push_back(kind == MatrixKind::Adjacency
                                 ? dec.thetas[r] * dec.thetas[r]
                                 : dec.thetas[r]);
    std::sort(values.begin(), values.end(), std::greater<>());
    for (std::size_t j = 0; j < values.size(); ++j)
        if (values[j] > 2.0 * static_cast<double>(m) / (static_cast<double>(j) + 1.0) + 1e-9)
            return false;
    return true;
}

std::vector<SurveyRow> tightness_survey(const std::vector<BoundReport>& reports) {
    std::map<std::pair<std::string, MatrixKind>, SurveyRow> rows;
    for (const auto& r : reports) {
        auto& row = rows[{r.label, r.model}];
        if (row.reports == 0 || r.tightness > row.max_tightness) {
            row.max_tightness = r.tightness;
            row.best_vertex = r.vertex;
        }
        row.label = r.label;
        row.model = r.model;
        ++row.reports;
    }
    std::vector<SurveyRow> out;
    out.reserve(rows.size());
    for (auto& [key, row] : rows)
        out.push_back(std::move(row));
    std::stable_sort(out.begin(), out.end(), [](const SurveyRow& l, const SurveyRow& r) {
        return l.max_tightness > r.max_tightness;
    });
    return out;
}

void write_bound_csv(std::ostream& os, const std::vector<BoundReport>& reports) {
    os << "label,vertex,model,eccentricity,support_size,edge_count,lemma2_ok,"
          "lemma2_stated_ok,support_bound_ok,theorem_lhs,theorem_rhs,theorem_ok,"
          "degenerate,tightness\n";
    os.precision(17);
    for (const auto& r : reports)
        os << r.label << ',' << r.vertex << ',' << to_string(r.model) << ','
           << r.eccentricity << ',' << r.support_size << ',' << r.edge_count << ','
           << r.lemma2_ok << ',' << r.lemma2_stated_ok << ',' << r.support_bound_ok << ','
           << r.theorem_lhs << ',' << r.theorem_rhs << ',' << r.theorem_ok << ','
           << r.degenerate << ',' << r.tightness << '\n';
}

void write_survey_csv(std::ostream& os, const std::vector<SurveyRow>& rows) {
    os << "label,model,max_tightness,best_vertex,reports\n";
    os.precision(17);
    for (const auto& row : rows)
        os << row.label << ',' << to_string(row.model) << ',' << row.max_tightness << ','
           << row.best_vertex << ',' << row.reports << '\n';
}

} // namespace qwalk
