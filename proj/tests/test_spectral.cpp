#include "doctest.h"

#include <cmath>
#include <random>

#include "qwalk/enumerate.hpp"
#include "qwalk/spectral.hpp"

#include "support/random_graphs.hpp"

using namespace qwalk;

namespace {

// max-norm residuals of the idempotent algebra: sum E_r = I,
// E_r E_s = [r == s] E_r, and M = sum theta_r E_r.
void check_idempotent_algebra(const Hamiltonian& h, const SpectralDecomposition& dec,
                              double tol) {
    const int n = h.size();
    REQUIRE(dec.dim() == n);
    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd recon = Eigen::MatrixXd::Zero(n, n);
    int total_mult = 0;
    for (int r = 0; r < dec.count(); ++r) {
        sum += dec.idempotents[r];
        recon += dec.thetas[r] * dec.idempotents[r];
        total_mult += dec.multiplicities[r];
        for (int s = 0; s < dec.count(); ++s) {
            const Eigen::MatrixXd prod = dec.idempotents[r] * dec.idempotents[s];
            const Eigen::MatrixXd expected =
                r == s ? dec.idempotents[r] : Eigen::MatrixXd::Zero(n, n).eval();
            CHECK((prod - expected).cwiseAbs().maxCoeff() < tol);
        }
    }
    CHECK(total_mult == n);
    CHECK((sum - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() < tol);
    CHECK((recon - to_real(h.entries)).cwiseAbs().maxCoeff() < tol);
}

} // namespace

TEST_SUITE_BEGIN("spectral");

TEST_CASE("path and cycle decompositions") {
    const Tolerances tol;
    SUBCASE("P3 adjacency") {
        const Hamiltonian h = build(path(3), MatrixKind::Adjacency);
        const SpectralDecomposition dec = decompose(h, tol);
        REQUIRE(dec.count() == 3);
        CHECK(dec.thetas[0] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
        CHECK(dec.thetas[1] == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(dec.thetas[2] == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-12));
        CHECK(dec.spectral_radius == doctest::Approx(std::sqrt(2.0)));
        check_idempotent_algebra(h, dec, 1e-12);
    }
    SUBCASE("C4 adjacency merges the double eigenvalue") {
        const Hamiltonian h = build(cycle(4), MatrixKind::Adjacency);
        const SpectralDecomposition dec = decompose(h, tol);
        REQUIRE(dec.count() == 3);
        CHECK(dec.multiplicities == std::vector<int>{1, 2, 1});
        CHECK(dec.thetas[0] == doctest::Approx(2.0));
        CHECK(dec.thetas[1] == doctest::Approx(0.0));
        CHECK(dec.thetas[2] == doctest::Approx(-2.0));
        check_idempotent_algebra(h, dec, 1e-12);
    }
    SUBCASE("hypercube(6) at n = 64") {
        const Hamiltonian h = build(hypercube(6), MatrixKind::Adjacency);
        const SpectralDecomposition dec = decompose(h, tol);
        REQUIRE(dec.count() == 7); // 6 - 2k for k = 0..6
        for (int r = 0; r < 7; ++r) {
            CHECK(dec.thetas[r] == doctest::Approx(6.0 - 2.0 * r).epsilon(1e-10));
            // binomial(6, r) eigenvalue multiplicities
            const int binom[] = {1, 6, 15, 20, 15, 6, 1};
            CHECK(dec.multiplicities[r] == binom[r]);
        }
        check_idempotent_algebra(h, dec, 1e-10);
    }
}

TEST_CASE("idempotent algebra across models on random graphs") {
    std::mt19937 rng(testing::test_seed() + 3);
    for (int i = 0; i < 12; ++i) {
        const Graph g = testing::random_connected_graph(2 + i, 0.35, rng, i % 3 + 1);
        for (MatrixKind kind :
             {MatrixKind::Adjacency, MatrixKind::Laplacian, MatrixKind::SignlessLaplacian}) {
            const Hamiltonian h = build(g, kind);
            check_idempotent_algebra(h, decompose(h), 1e-9);
        }
    }
}

TEST_CASE("charpoly vanishes on every computed eigenvalue") {
    std::mt19937 rng(testing::test_seed() + 4);
    const Tolerances tol;
    for (int i = 0; i < 15; ++i) {
        const Graph g = testing::random_connected_graph(3 + i % 12, 0.3, rng);
        const Hamiltonian h = build(g, MatrixKind::Adjacency);
        const SpectralDecomposition dec = decompose(h, tol);
        const double scale = std::pow(1.0 + dec.spectral_radius, dec.charpoly.degree());
        for (double theta : dec.thetas)
            CHECK(std::abs(dec.charpoly.eval(theta)) < tol.charpoly * scale);
    }
}

TEST_CASE("eigenvalue support norms on fixtures") {
    const Tolerances tol;
    SUBCASE("P3") {
        const auto dec = decompose(build(path(3), MatrixKind::Adjacency), tol);
        const EigenvalueSupport end = eigenvalue_support(dec, 0);
        REQUIRE(end.size() == 3);
        CHECK(end.norms[0] == doctest::Approx(0.5));
        CHECK(end.norms[1] == doctest::Approx(std::sqrt(0.5)));
        CHECK(end.norms[2] == doctest::Approx(0.5));
        const EigenvalueSupport mid = eigenvalue_support(dec, 1);
        REQUIRE(mid.size() == 2); // theta = 0 drops out of the middle vertex
        CHECK(mid.indices == std::vector<int>{0, 2});
    }
    SUBCASE("C4") {
        const auto dec = decompose(build(cycle(4), MatrixKind::Adjacency), tol);
        const EigenvalueSupport s = eigenvalue_support(dec, 0);
        REQUIRE(s.size() == 3);
        CHECK(s.norms[0] == doctest::Approx(0.5));
        CHECK(s.norms[1] == doctest::Approx(std::sqrt(0.5)));
        CHECK(s.norms[2] == doctest::Approx(0.5));
    }
    SUBCASE("star center misses nothing but the zero rows") {
        const auto dec = decompose(build(star(3), MatrixKind::Adjacency), tol);
        const EigenvalueSupport center = eigenvalue_support(dec, 0);
        REQUIRE(center.size() == 2); // +-sqrt(3) only
        CHECK(dec.thetas[center.indices[0]] == doctest::Approx(std::sqrt(3.0)));
        CHECK(dec.thetas[center.indices[1]] == doctest::Approx(-std::sqrt(3.0)));
    }
}

TEST_CASE("krylov dimension equals support size") {
    SUBCASE("fixtures") {
        for (const Graph& g :
             {path(2), path(3), path(4), cycle(4), cycle(5), star(3), hypercube(3)}) {
            for (MatrixKind kind : {MatrixKind::Adjacency, MatrixKind::Laplacian}) {
                const Hamiltonian h = build(g, kind);
                const auto dec = decompose(h);
                for (int a = 0; a < h.size(); ++a)
                    CHECK(walk_module_dimension(h, a) == eigenvalue_support(dec, a).size());
            }
        }
    }
    SUBCASE("exhaustive over small connected graphs") {
        enumerate_labeled_graphs(5, true, [](const Graph& g) {
            const Hamiltonian h = build(g, MatrixKind::Adjacency);
            const auto dec = decompose(h);
            for (int a = 0; a < h.size(); ++a)
                CHECK(walk_module_dimension(h, a) == eigenvalue_support(dec, a).size());
        });
    }
    SUBCASE("isolated vertex has a one-dimensional module") {
        const Hamiltonian h = build(Graph(2), MatrixKind::Adjacency);
        CHECK(walk_module_dimension(h, 0) == 1);
        CHECK(eigenvalue_support(decompose(h), 0).size() == 1);
    }
}

TEST_CASE("clustering tolerance merges near eigenvalues") {
    // C5 has two double eigenvalues; a huge cluster tolerance collapses all
    // five into one cluster, a sane one keeps the three distinct levels.
    const Hamiltonian h = build(cycle(5), MatrixKind::Adjacency);
    CHECK(decompose(h).count() == 3);
    Tolerances coarse;
    coarse.cluster = 10.0;
    const auto merged = decompose(h, coarse);
    CHECK(merged.count() == 1);
    CHECK(merged.multiplicities[0] == 5);
}

TEST_CASE("chained merges across a wide ladder are flagged for audit") {
    // 13 disjoint weighted edges give eigenvalues +-100..+-112; a cluster gap
    // slightly above 1 swallows each consecutive integer, chaining a spread
    // far beyond the per-merge tolerance.
    Graph g(26);
    for (int i = 0; i <= 12; ++i)
        g.add_edge(2 * i, 2 * i + 1, 100 + i);
    Tolerances t;
    t.cluster = 0.01; // gap = 0.01 * (1 + 112) = 1.13
    const auto dec = decompose(build(g, MatrixKind::WeightedAdjacency), t);
    CHECK(dec.count() == 2);
    CHECK(dec.multiplicities == std::vector<int>{13, 13});
    CHECK_FALSE(dec.wide_clusters.empty());
}

TEST_SUITE_END();
