#include "qwalk/spectral.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace qwalk {

Eigen::MatrixXd to_real(const IntMatrix& m) {
    const int n = m.size();
    Eigen::MatrixXd r(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            r(i, j) = m(i, j).get_d();
    return r;
}

SpectralDecomposition decompose(const Hamiltonian& h, const Tolerances& tol) {
    const int n = h.size();
    if (n < 1)
        throw std::invalid_argument("decompose: empty Hamiltonian");

    SpectralDecomposition dec;
    dec.charpoly = char_poly(h);

    const Eigen::MatrixXd m = to_real(h.entries);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("decompose: symmetric eigensolver did not converge");

    // Eigen returns ascending order; walk it from the back for descending.
    const Eigen::VectorXd& vals = solver.eigenvalues();
    const Eigen::MatrixXd& vecs = solver.eigenvectors();
    dec.spectral_radius = std::max(std::abs(vals(0)), std::abs(vals(n - 1)));
    const double gap = tol.cluster * (1.0 + dec.spectral_radius);

    int hi = n - 1;
    while (hi >= 0) {
        int lo = hi;
        while (lo > 0 && vals(lo) - vals(lo - 1) < gap)
            --lo;
        const int count = hi - lo + 1;
        double mean = 0;
        for (int i = lo; i <= hi; ++i)
            mean += vals(i);
        mean /= count;
        Eigen::MatrixXd proj = Eigen::MatrixXd::Zero(n, n);
        for (int i = lo; i <= hi; ++i)
            proj.noalias() += vecs.col(i) * vecs.col(i).transpose();
        if (vals(hi) - vals(lo) > 10.0 * gap)
            dec.wide_clusters.push_back(dec.count());
        dec.thetas.push_back(mean);
        dec.multiplicities.push_back(count);
        dec.idempotents.push_back(std::move(proj));
        hi = lo - 1;
    }
    return dec;
}

EigenvalueSupport eigenvalue_support(const SpectralDecomposition& dec, int a,
                                     double support_tol) {
    if (a < 0 || a >= dec.dim())
        throw std::invalid_argument("eigenvalue_support: vertex out of range");
    EigenvalueSupport supp;
    supp.vertex = a;
    for (int r = 0; r < dec.count(); ++r) {
        const double norm = dec.idempotents[r].col(a).norm();
        if (norm > support_tol) {
            supp.indices.push_back(r);
            supp.norms.push_back(norm);
        }
    }
    return supp;
}

int walk_module_dimension(const Hamiltonian& h, int a, double rank_tol) {
    const int n = h.size();
    if (a < 0 || a >= n)
        throw std::invalid_argument("walk_module_dimension: vertex out of range");
    const Eigen::MatrixXd m = to_real(h.entries);
    // Orthogonalized power iteration: extend an orthonormal basis of
    // span{e_a, M e_a, ...} one vector at a time and stop when M maps the
    // span into itself. The raw power basis [e_a, M e_a, ..., M^(n-1) e_a]
    // is exponentially ill-conditioned, so a rank cut on it loses genuine
    // directions already around n = 14.
    Eigen::MatrixXd basis(n, n);
    basis.col(0) = Eigen::VectorXd::Unit(n, a);
    int dim = 1;
    while (dim < n) {
        Eigen::VectorXd w = m * basis.col(dim - 1);
        const double scale = w.norm();
        for (int pass = 0; pass < 2; ++pass) // twice for numerical hygiene
            w -= basis.leftCols(dim) * (basis.leftCols(dim).transpose() * w);
        if (w.norm() <= rank_tol * std::max(scale, 1.0))
            break;
        basis.col(dim++) = w / w.norm();
    }
    return dim;
}

} // namespace qwalk
