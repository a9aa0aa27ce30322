#pragma once

#include <vector>

#include <Eigen/Dense>

#include "qwalk/charpoly.hpp"
#include "qwalk/hamiltonian.hpp"
#include "qwalk/tolerances.hpp"

namespace qwalk {

// M = sum_r theta_r E_r over distinct eigenvalues theta_0 > ... > theta_t
// with orthogonal idempotents E_r, plus the exact integer characteristic
// polynomial of M.
struct SpectralDecomposition {
    std::vector<double> thetas;              // strictly decreasing
    std::vector<int> multiplicities;
    std::vector<Eigen::MatrixXd> idempotents;
    CharPoly charpoly;
    double spectral_radius = 0;
    std::vector<int> wide_clusters; // clusters whose internal spread exceeded 10x tol

    int count() const { return static_cast<int>(thetas.size()); } // t + 1
    int dim() const { return idempotents.empty() ? 0 : static_cast<int>(idempotents[0].rows()); }
};

Eigen::MatrixXd to_real(const IntMatrix& m);

// Symmetric eigendecomposition with gap-based single-linkage clustering:
// adjacent eigenvalues merge while the gap is below tol.cluster * (1 + rho).
SpectralDecomposition decompose(const Hamiltonian& h, const Tolerances& tol = {});

// Indices r with ||E_r e_a|| above the threshold, plus the norms for audit.
struct EigenvalueSupport {
    int vertex = 0;
    std::vector<int> indices;
    std::vector<double> norms; // aligned with indices

    int size() const { return static_cast<int>(indices.size()); }
};

EigenvalueSupport eigenvalue_support(const SpectralDecomposition& dec, int a,
                                     double support_tol = Tolerances{}.support);

// Dimension of span{e_a, M e_a, M^2 e_a, ...}, computed by orthogonalized
// iteration; equals the support size |Phi_a|.
int walk_module_dimension(const Hamiltonian& h, int a,
                          double rank_tol = Tolerances{}.rank);

} // namespace qwalk
