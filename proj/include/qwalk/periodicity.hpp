#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qwalk/spectral.hpp"
#include "qwalk/tolerances.hpp"

namespace qwalk {

// Raised when an outcome contradicts a proven structural fact (e.g. a
// quadratic support under the Laplacian); signals a bug or a genuine
// mathematical surprise, and maps to CLI exit code 2.
class consistency_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class SupportClass { Integer, Quadratic, Unstructured };

std::string to_string(SupportClass c);

// Outcome of testing the support against the integer / quadratic-integer
// dichotomy. On success every support eigenvalue is (alpha + beta_r
// sqrt(delta)) / 2 exactly, alpha shared, delta square-free (delta = 1 for
// the all-integer case with alpha = 0, beta_r = 2 theta_r).
struct SupportClassification {
    SupportClass cls = SupportClass::Unstructured;
    long long delta = 1;
    long long alpha = 0;
    std::vector<long long> betas; // aligned with the support, theta descending
    bool certified = false;       // every membership confirmed against the exact charpoly
    std::string note;             // audit trail for Unstructured oddities
};

SupportClassification classify_support(const SpectralDecomposition& dec,
                                       const EigenvalueSupport& supp, const CharPoly& cp);

// gcd of the normalized support differences (theta_0 - theta_r)/sqrt(delta)
// as an exact rational (num/den, den in {1,2}); num == 0 marks the trivial
// single-eigenvalue support, which is periodic at every time.
struct PeriodGcd {
    long long num = 0;
    long long den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

struct PeriodicityCertificate {
    int vertex = 0;
    MatrixKind model = MatrixKind::Adjacency;
    SupportClassification classification;
    EigenvalueSupport support;
    PeriodGcd g;
    double tau_min = 0;          // 2pi/(g sqrt(delta)); 0 for the trivial support
    double verified_modulus = 0; // |exp(i tau_min M)_aa| as measured
};

struct PeriodicityResult {
    EigenvalueSupport support;
    SupportClassification classification;
    std::optional<PeriodicityCertificate> certificate;
    // modulus measured at the candidate period when classification succeeded
    // but numerical verification did not
    std::optional<double> failed_modulus;

    bool periodic() const { return certificate.has_value(); }
};

// Computes g exactly from the classification, verifies the modulus at
// tau_min numerically, and withholds the certificate if verification fails
// (the classification theorem is only stated as necessary).
PeriodicityResult minimal_period(const SupportClassification& cls,
                                 const SpectralDecomposition& dec,
                                 const EigenvalueSupport& supp, MatrixKind model,
                                 const Tolerances& tol = {});

// Full per-vertex pipeline on an existing decomposition.
PeriodicityResult analyze_vertex(const SpectralDecomposition& dec, MatrixKind model, int a,
                                 const Tolerances& tol = {});

// Convenience wrapper: decompose + analyze_vertex.
PeriodicityResult is_periodic(const Hamiltonian& h, int a, const Tolerances& tol = {});

} // namespace qwalk
