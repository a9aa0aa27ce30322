#pragma once

namespace qwalk {

// Numerical tolerances for the analysis pipeline. Defaults are sized for
// integer matrices with unit-scale entries and n up to a few dozen vertices.
struct Tolerances {
    double cluster = 1e-9;   // eigenvalue clustering, relative to 1 + spectral radius
    double support = 1e-8;   // ||E_r e_a|| threshold for support membership
    double mat = 1e-8;       // matrix identity checks (idempotents, unitarity)
    double rank = 1e-9;      // Krylov rank cutoff, relative to largest singular value
    double charpoly = 1e-6;  // residual scale for |p(theta)| consistency checks
    double period = 1e-6;    // periodicity verification: modulus > 1 - period
    double pst = 1e-6;       // PST verdict: fidelity > 1 - pst
    int pst_grid = 4096;     // fallback time-grid resolution over (0, 2pi]
};

} // namespace qwalk
