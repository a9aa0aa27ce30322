#pragma once

#include <complex>
#include <iosfwd>
#include <vector>

#include <Eigen/Dense>

#include "qwalk/periodicity.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/tolerances.hpp"

namespace qwalk {

// Propagator U(t) = exp(itM) = sum_r e^{i theta_r t} E_r.
struct TransitionMatrix {
    double time = 0;
    Eigen::MatrixXcd entries;
};

// Parallel over columns; transition_matrix_serial is the reference
// implementation with identical per-column arithmetic.
TransitionMatrix transition_matrix(const SpectralDecomposition& dec, double t);
TransitionMatrix transition_matrix_serial(const SpectralDecomposition& dec, double t);

std::complex<double> transition_amplitude(const SpectralDecomposition& dec, int a, int b,
                                          double t);

// |U(t)_{ab}|^2, symmetric in (a, b).
double fidelity(const SpectralDecomposition& dec, int a, int b, double t);

// Fidelity at each time in `times`; parallel over samples with a serial
// reference of identical arithmetic.
std::vector<double> fidelity_scan(const SpectralDecomposition& dec, int a, int b,
                                  const std::vector<double>& times);
std::vector<double> fidelity_scan_serial(const SpectralDecomposition& dec, int a, int b,
                                         const std::vector<double>& times);

struct FidelitySample {
    double t = 0;
    double fidelity = 0;
};

// Uniform sampling of |U(t)_{ab}|^2 on [0, t_max]; samples >= 2.
std::vector<FidelitySample> fidelity_curve(const SpectralDecomposition& dec, int a, int b,
                                           double t_max, int samples);

// CSV: header "t,fidelity", one full-precision row per sample.
void write_fidelity_csv(std::ostream& os, const std::vector<FidelitySample>& curve);

struct PstReport {
    int source = 0;
    int target = 0;
    bool pst = false;
    double time = 0;     // best tested time
    double fidelity = 0; // fidelity at that time
};

// Perfect state transfer detection between distinct vertices a and b.
// A periodicity certificate for a prunes the search to odd multiples
// k * tau_min/2 (k = 1,3,5,7) inside (0, 2pi]; a 4096-point grid over
// (0, 2pi] (whose argmax is polished by a bounded local search) acts as
// the fallback. A non-periodic source cannot host transfer.
PstReport detect_pst(const SpectralDecomposition& dec, MatrixKind model, int a, int b,
                     const Tolerances& tol = {});
PstReport detect_pst(const Hamiltonian& h, int a, int b, const Tolerances& tol = {});

} // namespace qwalk
