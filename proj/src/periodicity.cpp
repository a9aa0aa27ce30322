#include "qwalk/periodicity.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "qwalk/evolution.hpp"

namespace qwalk {

std::string to_string(SupportClass c) {
    switch (c) {
    case SupportClass::Integer: return "integer";
    case SupportClass::Quadratic: return "quadratic";
    case SupportClass::Unstructured: return "unstructured";
    }
    return "?";
}

namespace {

constexpr double kNearInt = 1e-6; // float filter ahead of exact certification

// Exact integer eigenvalue test behind a float filter.
bool certified_integer(const CharPoly& cp, double theta, long long& out) {
    if (std::abs(theta) > 1e15)
        return false;
    const long long cand = std::llround(theta);
    if (std::abs(theta - cand) > kNearInt)
        return false;
    if (!certify_integer_eigenvalue(cp, mpz_class(static_cast<long>(cand))))
        return false;
    out = cand;
    return true;
}

} // namespace

SupportClassification classify_support(const SpectralDecomposition& dec,
                                       const EigenvalueSupport& supp, const CharPoly& cp) {
    SupportClassification out;
    const int size = supp.size();
    if (size == 0) {
        out.note = "empty support";
        return out;
    }
    std::vector<double> theta(size);
    for (int i = 0; i < size; ++i)
        theta[i] = dec.thetas[supp.indices[i]];

    // All-integer attempt first; delta = 1, alpha = 0, beta_r = 2 theta_r.
    {
        std::vector<long long> ints(size);
        bool all = true;
        for (int i = 0; i < size && all; ++i)
            all = certified_integer(cp, theta[i], ints[i]);
        if (all) {
            out.cls = SupportClass::Integer;
            out.delta = 1;
            out.alpha = 0;
            out.betas.resize(size);
            for (int i = 0; i < size; ++i)
                out.betas[i] = 2 * ints[i];
            out.certified = true;
            return out;
        }
    }

    // Quadratic attempt: pair each non-integer support eigenvalue with a
    // conjugate from the full spectrum so that x^2 - s x + p divides the
    // charpoly exactly; all pairs must agree on alpha = s and on delta.
    long long alpha = 0, delta = 0;
    bool alpha_set = false;
    std::vector<long long> betas(size, 0);
    std::vector<long long> integer_members(size, 0);
    std::vector<bool> is_integer_member(size, false);

    for (int i = 0; i < size; ++i) {
        long long as_int = 0;
        if (certified_integer(cp, theta[i], as_int)) {
            is_integer_member[i] = true;
            integer_members[i] = as_int;
            continue;
        }
        bool paired = false;
        for (int j = 0; j < dec.count() && !paired; ++j) {
            const double partner = dec.thetas[j];
            const double s = theta[i] + partner;
            const double p = theta[i] * partner;
            if (std::abs(s) > 1e15 || std::abs(p) > 1e15)
                continue;
            const long long sr = std::llround(s), pr = std::llround(p);
            if (std::abs(s - sr) > kNearInt || std::abs(p - pr) > kNearInt)
                continue;
            const mpz_class disc = mpz_class(static_cast<long>(sr)) * static_cast<long>(sr) -
                                   4 * mpz_class(static_cast<long>(pr));
            if (disc <= 0 || mpz_perfect_square_p(disc.get_mpz_t()))
                continue;
            if (!certify_quadratic_factor(cp, mpz_class(static_cast<long>(sr)),
                                          mpz_class(static_cast<long>(pr)))) {
                out.note = "pair (" + std::to_string(sr) + "," + std::to_string(pr) +
                           ") passed the float filter but failed exact division";
                continue;
            }
            if (!disc.fits_slong_p()) {
                out.note = "discriminant too large for exact bookkeeping";
                continue;
            }
            const long long d = squarefree_part(disc.get_si());
            mpz_class f2 = disc / static_cast<long>(d);
            mpz_class f;
            mpz_sqrt(f.get_mpz_t(), f2.get_mpz_t());
            const long long beta =
                (2.0 * theta[i] - static_cast<double>(sr)) >= 0 ? f.get_si() : -f.get_si();
            if (alpha_set && alpha != sr) {
                out.note = "mixed alpha: " + std::to_string(alpha) + " vs " +
                           std::to_string(sr);
                return out; // Unstructured
            }
            if (alpha_set && delta != d) {
                out.note = "mixed delta: " + std::to_string(delta) + " vs " +
                           std::to_string(d);
                return out;
            }
            alpha = sr;
            delta = d;
            alpha_set = true;
            betas[i] = beta;
            paired = true;
        }
        if (!paired) {
            if (out.note.empty())
                out.note = "no certified quadratic conjugate for eigenvalue " +
                           std::to_string(theta[i]);
            return out;
        }
    }

    if (!alpha_set) {
        // every member certified integer yet the all-integer attempt failed
        out.note = "inconsistent integer certification";
        return out;
    }
    // Integer members (zero included) must sit on the same lattice:
    // (alpha + beta sqrt(delta))/2 with irrational sqrt(delta) forces
    // beta = 0 and alpha = 2 theta.
    for (int i = 0; i < size; ++i)
        if (is_integer_member[i] && 2 * integer_members[i] != alpha) {
            out.note = "integer support member " + std::to_string(integer_members[i]) +
                       " is not (alpha + 0*sqrt(delta))/2 with alpha = " +
                       std::to_string(alpha);
            return out;
        }

    out.cls = SupportClass::Quadratic;
    out.delta = delta;
    out.alpha = alpha;
    out.betas = std::move(betas);
    out.certified = true;
    out.note.clear();
    return out;
}

PeriodicityResult minimal_period(const SupportClassification& cls,
                                 const SpectralDecomposition& dec,
                                 const EigenvalueSupport& supp, MatrixKind model,
                                 const Tolerances& tol) {
    PeriodicityResult result;
    result.support = supp;
    result.classification = cls;
    if (cls.cls == SupportClass::Unstructured)
        return result;

    PeriodGcd g;
    double tau = 0;
    if (supp.size() > 1) {
        // gcd of (theta_0 - theta_r)/sqrt(delta) = (beta_0 - beta_r)/2 as
        // exact rationals; denominators are 1 or 2
        long long gn = 0, gd = 1;
        for (int r = 1; r < supp.size(); ++r) {
            long long num = std::abs(cls.betas[0] - cls.betas[r]);
            long long den = 2;
            if (num % 2 == 0) {
                num /= 2;
                den = 1;
            }
            if (gn == 0) {
                gn = num;
                gd = den;
            } else {
                gn = std::gcd(gn, num);
                gd = std::lcm(gd, den);
            }
        }
        g = PeriodGcd{gn, gd};
        tau = 2.0 * std::numbers::pi / (g.value() * std::sqrt(static_cast<double>(cls.delta)));
        if (tau > 2.0 * std::numbers::pi * (1.0 + 1e-12))
            throw consistency_error("minimal_period: tau exceeds 2pi, which the period "
                                    "lattice rules out for certified supports");
    }
    // else: e_a is an eigenvector and the modulus is 1 at every time;
    // reported as the degenerate certificate tau = 0, g = 0/1.

    const double modulus = std::abs(transition_amplitude(dec, supp.vertex, supp.vertex, tau));
    if (modulus <= 1.0 - tol.period) {
        result.failed_modulus = modulus;
        return result;
    }
    PeriodicityCertificate cert;
    cert.vertex = supp.vertex;
    cert.model = model;
    cert.classification = cls;
    cert.support = supp;
    cert.g = g;
    cert.tau_min = tau;
    cert.verified_modulus = modulus;
    result.certificate = std::move(cert);
    return result;
}

PeriodicityResult analyze_vertex(const SpectralDecomposition& dec, MatrixKind model, int a,
                                 const Tolerances& tol) {
    const EigenvalueSupport supp = eigenvalue_support(dec, a, tol.support);
    const SupportClassification cls = classify_support(dec, supp, dec.charpoly);
    if (model == MatrixKind::Laplacian && cls.cls == SupportClass::Quadratic)
        throw consistency_error(
            "Laplacian support of vertex " + std::to_string(a) +
            " classified quadratic; Laplacian supports of periodic vertices are integral");
    return minimal_period(cls, dec, supp, model, tol);
}

PeriodicityResult is_periodic(const Hamiltonian& h, int a, const Tolerances& tol) {
    const SpectralDecomposition dec = decompose(h, tol);
    return analyze_vertex(dec, h.kind, a, tol);
}

} // namespace qwalk
