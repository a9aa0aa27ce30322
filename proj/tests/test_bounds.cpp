#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "qwalk/bounds.hpp"
#include "qwalk/enumerate.hpp"
#include "qwalk/evolution.hpp"

#include "support/random_graphs.hpp"

using namespace qwalk;

namespace {

PeriodicityCertificate certificate_for(const Graph& g, MatrixKind kind, int a) {
    const PeriodicityResult r = is_periodic(build(g, kind), a);
    REQUIRE(r.periodic());
    return *r.certificate;
}

} // namespace

TEST_SUITE_BEGIN("bounds");

TEST_CASE("eigenvalue gaps respect the period floor") {
    SUBCASE("P2: gap 2 equals 2pi/pi") {
        const Graph g = path(2);
        const auto h = build(g, MatrixKind::Adjacency);
        const auto dec = decompose(h);
        CHECK(check_lemma1(certificate_for(g, MatrixKind::Adjacency, 0), dec));
    }
    SUBCASE("hypercube(3): min gap 2 equals 2pi/pi") {
        const Graph g = hypercube(3);
        const auto dec = decompose(build(g, MatrixKind::Adjacency));
        CHECK(check_lemma1(certificate_for(g, MatrixKind::Adjacency, 0), dec));
    }
    SUBCASE("P3: min gap sqrt(2) equals 2pi/(pi sqrt(2))") {
        const Graph g = path(3);
        const auto dec = decompose(build(g, MatrixKind::Adjacency));
        CHECK(check_lemma1(certificate_for(g, MatrixKind::Adjacency, 0), dec));
    }
    SUBCASE("trivial single-eigenvalue support") {
        const Graph g(1);
        const auto dec = decompose(build(g, MatrixKind::Adjacency));
        CHECK(check_lemma1(certificate_for(g, MatrixKind::Adjacency, 0), dec));
    }
}

TEST_CASE("support size dominates eccentricity") {
    SUBCASE("hypercube(3): equality at eps + 1 = 4") {
        const Graph g = hypercube(3);
        const auto dec = decompose(build(g, MatrixKind::Adjacency));
        const BoundReport r = check_lemma2(g, 0, eigenvalue_support(dec, 0));
        CHECK(r.eccentricity == 3);
        CHECK(r.support_size == 4);
        CHECK(r.lemma2_ok);
        CHECK(r.lemma2_stated_ok);
    }
    SUBCASE("P3 end: equality at eps + 1 = 3") {
        const Graph g = path(3);
        const auto dec = decompose(build(g, MatrixKind::Adjacency));
        const BoundReport r = check_lemma2(g, 0, eigenvalue_support(dec, 0));
        CHECK(r.eccentricity == 2);
        CHECK(r.support_size == 3);
        CHECK(r.lemma2_ok);
    }
    SUBCASE("single vertex") {
        const Graph g(1);
        const auto dec = decompose(build(g, MatrixKind::Adjacency));
        const BoundReport r = check_lemma2(g, 0, eigenvalue_support(dec, 0));
        CHECK(r.eccentricity == 0);
        CHECK(r.support_size == 1);
        CHECK(r.lemma2_ok);
    }
    SUBCASE("disconnected graphs are rejected") {
        const Graph g(2);
        const auto dec = decompose(build(g, MatrixKind::Adjacency));
        CHECK_THROWS_AS(check_lemma2(g, 0, eigenvalue_support(dec, 0)),
                        std::invalid_argument);
    }
}

TEST_CASE("adjacency bound on fixtures") {
    SUBCASE("P3 square corner") {
        const Graph g = cartesian_power(path(3), 2);
        const BoundReport r =
            check_adjacency_bound(g, 0, certificate_for(g, MatrixKind::Adjacency, 0));
        CHECK(r.eccentricity == 4);
        CHECK(r.edge_count == 12);
        CHECK(r.theorem_lhs == doctest::Approx(std::pow(4.0 / 3.0, 3)));
        CHECK(r.theorem_rhs == 24.0);
        CHECK(r.theorem_ok);
        CHECK(r.support_bound_ok);
        CHECK(r.tightness == doctest::Approx(64.0 / 648.0));
        CHECK_FALSE(r.degenerate);
    }
    SUBCASE("P2") {
        const Graph g = path(2);
        const BoundReport r =
            check_adjacency_bound(g, 0, certificate_for(g, MatrixKind::Adjacency, 0));
        CHECK(r.theorem_lhs == doctest::Approx(1.0 / 27.0));
        CHECK(r.theorem_rhs == 2.0);
        CHECK(r.theorem_ok);
    }
    SUBCASE("hypercube(3)") {
        const Graph g = hypercube(3);
        const BoundReport r =
            check_adjacency_bound(g, 0, certificate_for(g, MatrixKind::Adjacency, 0));
        CHECK(r.theorem_lhs == doctest::Approx(1.0));
        CHECK(r.theorem_rhs == 24.0);
        CHECK(r.theorem_ok);
    }
    SUBCASE("model mismatch is rejected") {
        const Graph g = path(2);
        CHECK_THROWS_AS(
            check_adjacency_bound(g, 0, certificate_for(g, MatrixKind::Laplacian, 0)),
            std::invalid_argument);
    }
}

TEST_CASE("laplacian bound on fixtures") {
    SUBCASE("P2") {
        const Graph g = path(2);
        const BoundReport r =
            check_laplacian_bound(g, 0, certificate_for(g, MatrixKind::Laplacian, 0));
        CHECK(r.theorem_lhs == doctest::Approx(1.0 / 9.0));
        CHECK(r.theorem_rhs == 1.0);
        CHECK(r.theorem_ok);
        CHECK(r.tightness == doctest::Approx(1.0 / 9.0));
    }
    SUBCASE("C4") {
        const Graph g = cycle(4);
        const BoundReport r =
            check_laplacian_bound(g, 0, certificate_for(g, MatrixKind::Laplacian, 0));
        CHECK(r.eccentricity == 2);
        CHECK(r.theorem_lhs == doctest::Approx(4.0 / 9.0));
        CHECK(r.theorem_rhs == 4.0);
        CHECK(r.theorem_ok);
    }
    SUBCASE("single vertex is vacuous") {
        const Graph g(1);
        const BoundReport r =
            check_laplacian_bound(g, 0, certificate_for(g, MatrixKind::Laplacian, 0));
        CHECK(r.degenerate);
        CHECK(r.theorem_ok);
        CHECK(r.tightness == 0.0);
    }
}

TEST_CASE("no violations across all small connected graphs") {
    for (int n = 1; n <= 5; ++n) {
        enumerate_labeled_graphs(n, true, [](const Graph& g) {
            for (MatrixKind kind : {MatrixKind::Adjacency, MatrixKind::Laplacian}) {
                const Hamiltonian h = build(g, kind);
                const auto dec = decompose(h);
                for (int a = 0; a < h.size(); ++a) {
                    const PeriodicityResult r = analyze_vertex(dec, kind, a);
                    if (!r.periodic())
                        continue;
                    const BoundReport b = kind == MatrixKind::Adjacency
                                              ? check_adjacency_bound(g, a, *r.certificate)
                                              : check_laplacian_bound(g, a, *r.certificate);
                    CHECK(b.theorem_ok);
                    CHECK(b.lemma2_ok);
                    CHECK(b.support_bound_ok);
                    CHECK(check_lemma1(*r.certificate, dec));
                }
            }
        });
    }
}

TEST_CASE("spectral tail bounds") {
    SUBCASE("fixtures and exhaustive small graphs") {
        enumerate_labeled_graphs(5, true, [](const Graph& g) {
            for (MatrixKind kind : {MatrixKind::Adjacency, MatrixKind::Laplacian}) {
                const Hamiltonian h = build(g, kind);
                CHECK(check_tail_bound(decompose(h), kind, g.edge_count()));
            }
        });
    }
    SUBCASE("random larger graphs") {
        std::mt19937 rng(testing::test_seed() + 9);
        for (int i = 0; i < 10; ++i) {
            const Graph g = testing::random_connected_graph(6 + i, 0.3, rng);
            for (MatrixKind kind : {MatrixKind::Adjacency, MatrixKind::Laplacian})
                CHECK(check_tail_bound(decompose(build(g, kind)), kind, g.edge_count()));
        }
    }
    SUBCASE("a fabricated overweight spectrum fails") {
        // K2 spectrum {1,-1} claims edge count 0: 1 > 2*0/1
        const auto dec = decompose(build(path(2), MatrixKind::Adjacency));
        CHECK_FALSE(check_tail_bound(dec, MatrixKind::Adjacency, 0));
    }
}

TEST_CASE("metamorphic: adding an edge grows the right side, never eps") {
    std::mt19937 rng(testing::test_seed() + 10);
    for (int i = 0; i < 10; ++i) {
        Graph g = testing::random_connected_graph(6, 0.3, rng);
        std::vector<std::pair<int, int>> missing;
        for (int u = 0; u < 6; ++u)
            for (int v = u + 1; v < 6; ++v)
                if (!g.has_edge(u, v))
                    missing.emplace_back(u, v);
        if (missing.empty())
            continue;
        const auto [u, v] = missing[rng() % missing.size()];
        std::vector<int> before(6);
        for (int a = 0; a < 6; ++a)
            before[a] = eccentricity(g, a);
        const long long m_before = g.edge_count();
        g.add_edge(u, v);
        for (int a = 0; a < 6; ++a)
            CHECK(eccentricity(g, a) <= before[a]);
        CHECK(g.edge_count() == m_before + 1);
    }
}

TEST_CASE("tightness survey ranks families") {
    std::vector<BoundReport> reports;
    for (int k = 1; k <= 4; ++k) {
        const Graph g = cartesian_power(path(3), k);
        BoundReport r =
            check_adjacency_bound(g, 0, certificate_for(g, MatrixKind::Adjacency, 0));
        r.label = "p3power:" + std::to_string(k);
        reports.push_back(std::move(r));
    }
    // (2k/3)^3 / (2 * 2k 3^(k-1)) for k = 1..4: the sequence peaks at k = 2
    CHECK(reports[0].tightness == doctest::Approx(2.0 / 27.0));
    CHECK(reports[1].tightness == doctest::Approx(8.0 / 81.0));
    CHECK(reports[2].tightness == doctest::Approx(2.0 / 27.0));
    CHECK(reports[3].tightness == doctest::Approx(32.0 / 729.0));

    const std::vector<SurveyRow> rows = tightness_survey(reports);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].label == "p3power:2");
    CHECK(rows[0].max_tightness == doctest::Approx(8.0 / 81.0));
    CHECK(rows[1].max_tightness >= rows[2].max_tightness);
    CHECK(rows[2].max_tightness >= rows[3].max_tightness);

    CHECK(tightness_survey({}).empty());
    const auto single = tightness_survey({reports[0]});
    REQUIRE(single.size() == 1);
    CHECK(single[0].reports == 1);
    CHECK(single[0].best_vertex == 0);

    std::ostringstream bounds_csv, survey_csv;
    write_bound_csv(bounds_csv, reports);
    const std::string bounds_text = bounds_csv.str();
    CHECK(std::count(bounds_text.begin(), bounds_text.end(), '\n') == 5);
    CHECK(bounds_text.rfind("label,vertex,model,", 0) == 0);
    write_survey_csv(survey_csv, rows);
    const std::string survey_text = survey_csv.str();
    CHECK(std::count(survey_text.begin(), survey_text.end(), '\n') == 5);
}

TEST_SUITE_END();
