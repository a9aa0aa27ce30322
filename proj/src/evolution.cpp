#include "qwalk/evolution.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace qwalk {

namespace {

std::vector<std::complex<double>> phases(const SpectralDecomposition& dec, double t) {
    std::vector<std::complex<double>> out(dec.count());
    for (int r = 0; r < dec.count(); ++r)
        out[r] = std::polar(1.0, dec.thetas[r] * t);
    return out;
}

void assemble_column(const SpectralDecomposition& dec,
                     const std::vector<std::complex<double>>& ph, int c,
                     Eigen::MatrixXcd& u) {
    u.col(c).setZero();
    for (int r = 0; r < dec.count(); ++r)
        u.col(c) += ph[r] * dec.idempotents[r].col(c);
}

} // namespace

TransitionMatrix transition_matrix_serial(const SpectralDecomposition& dec, double t) {
    if (!std::isfinite(t))
        throw std::invalid_argument("transition_matrix: time must be finite");
    const auto ph = phases(dec, t);
    TransitionMatrix u{t, Eigen::MatrixXcd(dec.dim(), dec.dim())};
    for (int c = 0; c < dec.dim(); ++c)
        assemble_column(dec, ph, c, u.entries);
    return u;
}

TransitionMatrix transition_matrix(const SpectralDecomposition& dec, double t) {
    if (!std::isfinite(t))
        throw std::invalid_argument("transition_matrix: time must be finite");
    const auto ph = phases(dec, t);
    TransitionMatrix u{t, Eigen::MatrixXcd(dec.dim(), dec.dim())};
#pragma omp parallel for schedule(static)
    for (int c = 0; c < dec.dim(); ++c)
        assemble_column(dec, ph, c, u.entries);
    return u;
}

std::complex<double> transition_amplitude(const SpectralDecomposition& dec, int a, int b,
                                          double t) {
    if (a < 0 || a >= dec.dim() || b < 0 || b >= dec.dim())
        throw std::invalid_argument("transition_amplitude: vertex out of range");
    std::complex<double> amp = 0;
    for (int r = 0; r < dec.count(); ++r)
        amp += std::polar(dec.idempotents[r](a, b), dec.thetas[r] * t);
    return amp;
}

double fidelity(const SpectralDecomposition& dec, int a, int b, double t) {
    return std::norm(transition_amplitude(dec, a, b, t));
}

namespace {

// Per-sample arithmetic shared by the parallel and serial scans.
double scan_sample(const std::vector<double>& thetas, const std::vector<double>& weights,
                   double t) {
    std::complex<double> amp = 0;
    for (std::size_t r = 0; r < thetas.size(); ++r)
        amp += std::polar(weights[r], thetas[r] * t);
    return std::norm(amp);
}

} // namespace

std::vector<double> fidelity_scan_serial(const SpectralDecomposition& dec, int a, int b,
                                         const std::vector<double>& times) {
    if (a < 0 || a >= dec.dim() || b < 0 || b >= dec.dim())
        throw std::invalid_argument("fidelity_scan: vertex out of range");
    std::vector<double> weights(dec.count());
    for (int r = 0; r < dec.count(); ++r)
        weights[r] = dec.idempotents[r](a, b);
    std::vector<double> out(times.size());
    for (std::size_t i = 0; i < times.size(); ++i)
        out[i] = scan_sample(dec.thetas, weights, times[i]);
    return out;
}

std::vector<double> fidelity_scan(const SpectralDecomposition& dec, int a, int b,
                                  const std::vector<double>& times) {
    if (a < 0 || a >= dec.dim() || b < 0 || b >= dec.dim())
        throw std::invalid_argument("fidelity_scan: vertex out of range");
    std::vector<double> weights(dec.count());
    for (int r = 0; r < dec.count(); ++r)
        weights[r] = dec.idempotents[r](a, b);
    std::vector<double> out(times.size());
    const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(times.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < count; ++i)
        out[i] = scan_sample(dec.thetas, weights, times[i]);
    return out;
}

std::vector<FidelitySample> fidelity_curve(const SpectralDecomposition& dec, int a, int b,
                                           double t_max, int samples) {
    if (samples < 2)
        throw std::invalid_argument("fidelity_curve: need at least 2 samples");
    if (!(t_max > 0))
        throw std::invalid_argument("fidelity_curve: t_max must be positive");
    std::vector<double> times(samples);
    for (int i = 0; i < samples; ++i)
        times[i] = t_max * i / (samples - 1);
    const std::vector<double> fids = fidelity_scan(dec, a, b, times);
    std::vector<FidelitySample> curve(samples);
    for (int i = 0; i < samples; ++i)
        curve[i] = {times[i], fids[i]};
    return curve;
}

void write_fidelity_csv(std::ostream& os, const std::vector<FidelitySample>& curve) {
    os << "t,fidelity\n";
    os.precision(17);
    for (const auto& s : curve)
        os << s.t << ',' << s.fidelity << '\n';
}

PstReport detect_pst(const SpectralDecomposition& dec, MatrixKind model, int a, int b,
                     const Tolerances& tol) {
    if (a == b)
        throw std::invalid_argument("detect_pst: vertices must be distinct");
    PstReport report;
    report.source = a;
    report.target = b;

    const PeriodicityResult source = analyze_vertex(dec, model, a, tol);
    if (!source.periodic())
        return report; // transfer implies the source is periodic

    constexpr double two_pi = 2.0 * std::numbers::pi;
    const double tau = source.certificate->tau_min;
    auto consider = [&](double t) {
        const double f = fidelity(dec, a, b, t);
        if (f > report.fidelity) {
            report.fidelity = f;
            report.time = t;
        }
    };
    for (int k : {1, 3, 5, 7}) {
        const double t = k * tau / 2.0;
        if (t > 0 && t <= two_pi + 1e-12)
            consider(t);
    }
    if (report.fidelity <= 1.0 - tol.pst) {
        // Grid fallback, then a bounded ternary polish around the argmax
        // (the raw grid pitch is too coarse to clear the PST threshold).
        std::vector<double> grid(tol.pst_grid);
        for (int i = 0; i < tol.pst_grid; ++i)
            grid[i] = two_pi * (i + 1) / tol.pst_grid;
        const std::vector<double> fids = fidelity_scan(dec, a, b, grid);
        int best = 0;
        for (int i = 1; i < tol.pst_grid; ++i)
            if (fids[i] > fids[best])
                best = i;
        if (fids[best] > report.fidelity) {
            double lo = std::max(0.0, grid[best] - two_pi / tol.pst_grid);
            double hi = std::min(two_pi, grid[best] + two_pi / tol.pst_grid);
            for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
                const double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
                if (fidelity(dec, a, b, m1) < fidelity(dec, a, b, m2))
                    lo = m1;
                else
                    hi = m2;
            }
            consider(0.5 * (lo + hi));
            consider(grid[best]);
        }
    }
    report.pst = report.fidelity > 1.0 - tol.pst;
    return report;
}

PstReport detect_pst(const Hamiltonian& h, int a, int b, const Tolerances& tol) {
    return detect_pst(decompose(h, tol), h.kind, a, b, tol);
}

} // namespace qwalk
