#pragma once

// Explicit-formula machinery for the three families attached to a GL(3)
// form phi: the standard L-function, its symmetric square, and the
// Rankin-Selberg convolution phi x phibar.  Provides analytic conductors,
// random-matrix density kernels, the coefficient-form prime sums, the
// archimedean digamma terms, one-level sums over ingested zero data, and
// the GL(1) (Riemann zeta) self-consistency instance.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "gl3kuz/errors.hpp"
#include "gl3kuz/hecke.hpp"
#include "gl3kuz/numerics/gamma.hpp"
#include "gl3kuz/numerics/primes.hpp"
#include "gl3kuz/numerics/quadrature.hpp"
#include "gl3kuz/spectral.hpp"

namespace gl3kuz::density {

using Complex = std::complex<double>;
using spectral::SpectralParams;

enum class FamilyKind { Standard, Sym2, RankinSelberg };

enum class Symmetry { Unitary, Symplectic };

inline const char* family_name(FamilyKind f) {
    switch (f) {
        case FamilyKind::Standard: return "standard";
        case FamilyKind::Sym2: return "sym2";
        default: return "rankin_selberg";
    }
}

/// Archimedean shift multiset of the family: {a_k}, {a_j + a_k : j <= k},
/// or {a_j - a_k : all j, k}.
inline std::vector<Complex> family_shifts(const SpectralParams& nu, FamilyKind f) {
    const auto a = nu.alphas();
    std::vector<Complex> out;
    switch (f) {
        case FamilyKind::Standard:
            out.assign(a.begin(), a.end());
            break;
        case FamilyKind::Sym2:
            for (int j = 0; j < 3; ++j)
                for (int k = j; k < 3; ++k) out.push_back(a[j] + a[k]);
            break;
        case FamilyKind::RankinSelberg:
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k) out.push_back(a[j] - a[k]);
            break;
    }
    return out;
}

/// Analytic conductor: pi^{-(degree)} prod over shifts with |shift| >= 1/2
/// of |shift|/2 (empty product = 1); degree = 3, 5, 9 by family.
inline double analytic_conductor(const SpectralParams& nu, FamilyKind f) {
    const int pi_pow = f == FamilyKind::Standard ? 3 : (f == FamilyKind::Sym2 ? 5 : 9);
    double prod = 1.0;
    for (const auto& sh : family_shifts(nu, f)) {
        double m = std::abs(sh);
        if (m >= 0.5) prod *= m / 2.0;
    }
    return std::pow(numerics::kPi, -pi_pow) * prod;
}

/// Weighted mean of log analytic_conductor over an ensemble.
inline double average_log_conductor(const std::vector<std::pair<SpectralParams, double>>& ensemble,
                                    FamilyKind f) {
    if (ensemble.empty()) throw EmptyEnsemble("average_log_conductor: empty ensemble");
    double num = 0.0, den = 0.0;
    for (const auto& [nu, w] : ensemble) {
        if (w <= 0.0) throw DomainError("average_log_conductor: weights must be positive");
        num += w * std::log(analytic_conductor(nu, f));
        den += w;
    }
    return num / den;
}

// ---------------------------------------------------------------------------
// Test functions and random-matrix kernels.

/// Even Schwartz test function with band-limited Fourier transform.
/// Convention: psi_hat(u) = int psi(x) e^{-2 pi i u x} dx.
struct DensityTestFunction {
    std::function<double(double)> psi;
    std::function<double(double)> psi_hat;
    double delta;  // support bound of psi_hat

    DensityTestFunction(std::function<double(double)> p, std::function<double(double)> ph,
                        double delta_, bool verify = true)
        : psi(std::move(p)), psi_hat(std::move(ph)), delta(delta_) {
        if (delta <= 0.0) throw DomainError("DensityTestFunction: delta must be positive");
        if (verify) verify_pair();
    }

    // psi(x) = int_{-delta}^{delta} psi_hat(u) e^{2 pi i u x} du at 20 points.
    void verify_pair(double tol = 1e-6) const {
        for (int k = 0; k < 20; ++k) {
            double x = -4.75 + 0.5 * k;
            double direct = psi(x);
            double synth = fourier_eval(x).real();
            if (std::abs(direct - synth) > tol)
                throw FourierPairMismatch("DensityTestFunction: psi and psi_hat disagree at x=" +
                                          std::to_string(x));
        }
    }

    /// psi extended to complex arguments via the band-limited integral
    /// psi(z) = int psi_hat(u) e^{2 pi i u z} du (entire of exponential type).
    Complex fourier_eval(Complex z) const {
        auto f = [&](double u) { return psi_hat(u) * std::exp(2.0 * numerics::kPi * Complex(0.0, 1.0) * u * z); };
        return numerics::integrate_panels(f, -delta, delta, 1000 / 16 + 1);
    }
};

/// Fejer pair: psi(x) = (1/delta) (sin(pi delta x)/(pi x))^2,
/// psi_hat(u) = (1 - |u|/delta)_+.
inline DensityTestFunction fejer_test_function(double delta) {
    auto psi = [delta](double x) {
        if (std::abs(x) < 1e-8) {
            double t = numerics::kPi * delta * x;
            double s = delta * (1.0 - t * t / 6.0);
            return s * s / delta;  // (sin(pi d x)/(pi x))^2 / delta, series at 0
        }
        double s = std::sin(numerics::kPi * delta * x) / (numerics::kPi * x);
        return s * s / delta;
    };
    auto psi_hat = [delta](double u) { return std::max(0.0, 1.0 - std::abs(u) / delta); };
    return DensityTestFunction(psi, psi_hat, delta, /*verify=*/false);
}

/// Limiting density W(x): 1 for unitary, 1 - sin(2 pi x)/(2 pi x) for symplectic.
inline double rmt_density(Symmetry s, double x) {
    if (s == Symmetry::Unitary) return 1.0;
    if (std::abs(x) < 1e-8) {
        double t = 2.0 * numerics::kPi * x;
        return t * t / 6.0;  // 1 - sinc -> x^2 pi^2 2/3
    }
    return 1.0 - std::sin(2.0 * numerics::kPi * x) / (2.0 * numerics::kPi * x);
}

/// int psi(x) W(x) dx two ways: x-space quadrature (with an analytic
/// envelope correction for the slowly decaying tail) and the closed form
/// psi_hat(0) resp. psi_hat(0) - psi(0)/2.  Returns the closed form after
/// asserting agreement.
inline double rmt_density_pairing(const DensityTestFunction& psi, Symmetry s,
                                  double tol = 1e-6) {
    if (psi.delta >= 1.0 && s == Symmetry::Symplectic)
        throw DomainError("rmt_density_pairing: needs delta < 1");
    const double closed = s == Symmetry::Unitary
                              ? psi.psi_hat(0.0)
                              : psi.psi_hat(0.0) - 0.5 * psi.psi(0.0);

    const double X = 2.0e5;
    auto f = [&](double x) { return psi.psi(x) * rmt_density(s, x); };
    double quad = numerics::integrate_panels(f, -X, X, static_cast<std::int64_t>(X));
    // Tail: psi ~ c(x)/x^2 with oscillatory numerator; estimate the mean of
    // x^2 psi(x) over the last decade and add c_bar / X per side.
    double cbar = 0.0;
    int n = 0;
    for (double x = 0.55 * X; x <= X; x += 0.01 * X, ++n) cbar += x * x * psi.psi(x);
    cbar /= std::max(1, n);
    quad += 2.0 * cbar / X;  // int_X^inf cbar/x^2, both sides; W -> 1 at infinity
    if (std::abs(quad - closed) > tol)
        throw FourierPairMismatch("rmt_density_pairing: quadrature " + std::to_string(quad) +
                                  " vs closed form " + std::to_string(closed));
    return closed;
}

// ---------------------------------------------------------------------------
// Prime sums (coefficient form of the ell = 1, 2 contributions).

/// Supplies A(p^k1, p^k2); implemented by Hecke tables or ingested data.
struct CoefficientSource {
    std::function<Complex(std::int64_t p, int k1, int k2)> at;
};

inline CoefficientSource satake_source(const hecke::SatakeTriple& a) {
    return {[a](std::int64_t, int k1, int k2) { return hecke::coeff_prime_power(a, k1, k2); }};
}

/// Sigma^1: the ell = 1 prime sum in coefficient form.
///   standard:      - sum_p hat(lp/L) (lp/L) (A(1,p) + A(p,1)) / sqrt(p)
///   sym2:          - sum_p hat(lp/L) (lp/L) (A(1,p^2) + A(p^2,1)) / sqrt(p)
///   rankin_selberg: -2 sum_p hat(lp/L) (lp/L) (1 + A(p,p)) / sqrt(p)
inline double prime_sum_sigma1(FamilyKind f, const CoefficientSource& src,
                               const DensityTestFunction& psi, double logC,
                               std::uint64_t prime_cutoff) {
    if (logC <= 0.0) throw DomainError("prime_sum_sigma1: logC must be positive");
    const std::uint64_t needed =
        static_cast<std::uint64_t>(std::exp(std::min(psi.delta * logC, 40.0)));
    if (prime_cutoff < needed)
        throw IncompleteData("prime_sum_sigma1: prime_cutoff below psi_hat support exp(delta logC)");
    double acc = 0.0;
    numerics::for_each_prime(prime_cutoff, [&](std::uint64_t p) {
        const double lp = std::log(static_cast<double>(p));
        const double hat = psi.psi_hat(lp / logC);
        if (hat == 0.0) return;
        Complex coeff;
        double weight = 1.0;
        switch (f) {
            case FamilyKind::Standard:
                coeff = src.at(p, 0, 1) + src.at(p, 1, 0);
                break;
            case FamilyKind::Sym2:
                coeff = src.at(p, 0, 2) + src.at(p, 2, 0);
                break;
            case FamilyKind::RankinSelberg:
                coeff = 1.0 + src.at(p, 1, 1);
                weight = 2.0;
                break;
        }
        acc += weight * hat * (lp / logC) * coeff.real() / std::sqrt(static_cast<double>(p));
    });
    return -acc;
}

/// Sigma^2: the ell = 2 prime sum in coefficient form, with hat(2 lp / L)
/// and 1/p weights.
inline double prime_sum_sigma2(FamilyKind f, const CoefficientSource& src,
                               const DensityTestFunction& psi, double logC,
                               std::uint64_t prime_cutoff) {
    if (logC <= 0.0) throw DomainError("prime_sum_sigma2: logC must be positive");
    const std::uint64_t needed =
        static_cast<std::uint64_t>(std::exp(std::min(psi.delta * logC / 2.0, 40.0)));
    if (prime_cutoff < needed)
        throw IncompleteData("prime_sum_sigma2: prime_cutoff below exp(delta logC / 2)");
    double acc = 0.0;
    numerics::for_each_prime(prime_cutoff, [&](std::uint64_t p) {
        const double lp = std::log(static_cast<double>(p));
        const double hat = psi.psi_hat(2.0 * lp / logC);
        if (hat == 0.0) return;
        Complex coeff;
        double weight = 1.0;
        switch (f) {
            case FamilyKind::Standard:
                coeff = src.at(p, 0, 2) - src.at(p, 1, 0) + src.at(p, 2, 0) - src.at(p, 0, 1);
                break;
            case FamilyKind::Sym2:
                coeff = src.at(p, 2, 0) + src.at(p, 0, 4) - src.at(p, 1, 2) -
                        2.0 * src.at(p, 0, 3) + src.at(p, 0, 1) - src.at(p, 1, 0);
                coeff += src.at(p, 0, 2) + src.at(p, 4, 0) - src.at(p, 2, 1) -
                         2.0 * src.at(p, 3, 0) + src.at(p, 1, 0) - src.at(p, 0, 1);
                break;
            case FamilyKind::RankinSelberg:
                coeff = 2.0 + src.at(p, 2, 2) - src.at(p, 0, 3) - src.at(p, 3, 0);
                weight = 2.0;
                break;
        }
        acc += weight * hat * (lp / logC) * coeff.real() / static_cast<double>(p);
    });
    return -acc;
}

// ---------------------------------------------------------------------------
// Archimedean terms.

struct ArchimedeanTerm {
    double exact;         // A_{rho(phi)} / logC from the digamma integrals
    double approximation; // psi_hat(0) log(analytic conductor) / logC
};

/// The digamma integral of the H(infty) display for the family, divided by
/// logC, plus the conductor approximation for comparison.
inline ArchimedeanTerm archimedean_term(const SpectralParams& nu, FamilyKind f,
                                        const DensityTestFunction& psi, double logC) {
    if (!spectral::temperedness_check(nu, 1e-9))
        throw DomainError("archimedean_term: tempered nu required");
    const int pi_pow = f == FamilyKind::Standard ? 3 : (f == FamilyKind::Sym2 ? 5 : 9);
    const auto shifts = family_shifts(nu, f);
    // A = -(deg) psihat(0) log pi + sum_shifts Re int psi0(1/4 + sh/2 + i pi x/L) psi(x) dx.
    // For standard/sym2 the display pairs (1 +- 2 sh)/4 with weight 1/2; for
    // tempered shifts the minus-partner is the x -> -x conjugate of the plus
    // term, so the half-sum collapses to the real part of one integral.  The
    // Rankin-Selberg multiset contains each difference with its negative, so
    // the same collapse applies with weight 1.
    const double X = 4.0e4;
    double integral = 0.0;
    for (const auto& sh : shifts) {
        auto f1 = [&](double x) {
            Complex arg(0.25, numerics::kPi * x / logC);
            arg += sh / 2.0;  // sh is imaginary for tempered nu
            return (numerics::digamma(arg) * psi.psi(x)).real();
        };
        double part = numerics::integrate_panels(f1, -X, X, static_cast<std::int64_t>(X / 2));
        // slowly decaying tail ~ psi(x) log|x|: envelope correction as in rmt pairing
        double cbar = 0.0;
        int n = 0;
        for (double x = 0.55 * X; x <= X; x += 0.01 * X, ++n)
            cbar += x * x * psi.psi(x) * std::log(std::hypot(0.25, numerics::kPi * x / logC));
        cbar /= std::max(1, n);
        part += 2.0 * cbar / X;
        integral += part;
    }
    double exact =
        (-static_cast<double>(pi_pow) * psi.psi_hat(0.0) * std::log(numerics::kPi) + integral) /
        logC;
    double approx = psi.psi_hat(0.0) * std::log(analytic_conductor(nu, f)) / logC;
    return {exact, approx};
}

// ---------------------------------------------------------------------------
// Zero datasets and one-level sums.

struct ZeroDataset {
    std::vector<double> ordinates;  // positive, ascending
    double completeness_height = 0.0;

    static ZeroDataset load(std::istream& in) {
        ZeroDataset z;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::istringstream ss(line);
            double g;
            if (!(ss >> g)) throw DataFormatError("zero file: unparseable line: " + line);
            if (g <= 0.0) throw DataFormatError("zero file: ordinates must be positive");
            if (!z.ordinates.empty() && g < z.ordinates.back())
                throw DataFormatError("zero file: ordinates must be ascending");
            z.ordinates.push_back(g);
        }
        z.completeness_height = z.ordinates.empty() ? 0.0 : z.ordinates.back();
        return z;
    }

    static ZeroDataset load(const std::string& path) {
        std::ifstream f(path);
        if (!f) throw DataFormatError("zero file: cannot open " + path);
        return load(f);
    }
};

struct DLowLyingResult {
    double value = 0.0;
    bool complete = true;  // false: psi support extends past the dataset height
};

/// D = sum over zeros (counted with the symmetry gamma -> -gamma) of
/// psi(gamma logC / (2 pi)).  Ordinates are the positive ones; each
/// contributes psi at +gamma and -gamma (psi even: factor 2).
inline DLowLyingResult d_low_lying(const ZeroDataset& zeros, const DensityTestFunction& psi,
                                   double logC) {
    DLowLyingResult r;
    if (zeros.ordinates.empty()) return r;
    // Truncate where |psi| stays below 1e-12: sample the envelope.
    double xstop = 1.0;
    while (xstop < 1e9 && std::abs(psi.psi(xstop)) + std::abs(psi.psi(xstop * 1.37)) > 1e-12)
        xstop *= 1.3;
    const double gamma_stop = xstop * 2.0 * numerics::kPi / logC;
    if (gamma_stop > zeros.completeness_height) r.complete = false;
    double acc = 0.0;
    for (double g : zeros.ordinates) {
        if (g > gamma_stop) break;
        acc += 2.0 * psi.psi(g * logC / (2.0 * numerics::kPi));
    }
    r.value = acc;
    return r;
}

// ---------------------------------------------------------------------------
// GL(1) instance: the Riemann zeta explicit formula as a self-consistency
// residual, plus the Step-2 prime-sum limit.

/// 2 sum_{p, ell >= 1} p^{-ell/2} psi_hat(ell log p / L) (log p / L),
/// summed over the whole psi_hat support (the ell >= 3 tail matters at
/// desk-scale logC and is kept).
inline double zeta_prime_side(const DensityTestFunction& psi, double logC,
                              std::uint64_t prime_cutoff) {
    double acc = 0.0;
    numerics::for_each_prime(prime_cutoff, [&](std::uint64_t p) {
        const double lp = std::log(static_cast<double>(p));
        for (int ell = 1; ell * lp / logC < psi.delta; ++ell) {
            const double hat = psi.psi_hat(ell * lp / logC);
            if (hat == 0.0) break;
            acc += 2.0 * hat * (lp / logC) * std::exp(-0.5 * ell * lp);
        }
    });
    return acc;
}

/// Archimedean part of the zeta explicit formula:
///   psi_hat(0) log(pi)/L - (1/L) int Re psi0(1/4 + i pi x / L) psi(x) dx.
inline double zeta_archimedean(const DensityTestFunction& psi, double logC) {
    const double X = 4.0e4;
    auto f = [&](double x) {
        return (numerics::digamma(Complex(0.25, numerics::kPi * x / logC)) * psi.psi(x)).real();
    };
    double integral = numerics::integrate_panels(f, -X, X, static_cast<std::int64_t>(X / 2));
    double cbar = 0.0;
    int n = 0;
    for (double x = 0.55 * X; x <= X; x += 0.01 * X, ++n)
        cbar += x * x * psi.psi(x) * std::log(std::hypot(0.25, numerics::kPi * x / logC));
    cbar /= std::max(1, n);
    integral += 2.0 * cbar / X;
    return psi.psi_hat(0.0) * std::log(numerics::kPi) / logC - integral / logC;
}

struct ZetaCheckResult {
    double lhs;          // 2 psi(logC / (4 pi i))
    double prime_side;
    double archimedean;
    double zero_sum;
    double residual;     // |lhs - (prime + arch + zeros)|
};

/// The GL(1) explicit-formula identity with the first zeros of zeta.
inline ZetaCheckResult zeta_explicit_check(const ZeroDataset& zeros,
                                           const DensityTestFunction& psi, double logC,
                                           std::uint64_t prime_cutoff) {
    if (zeros.ordinates.empty())
        throw IncompleteData("zeta_explicit_check: no zeros supplied");
    ZetaCheckResult r{};
    r.lhs = 2.0 * psi.fourier_eval(Complex(0.0, -logC / (4.0 * numerics::kPi))).real();
    r.prime_side = zeta_prime_side(psi, logC, prime_cutoff);
    r.archimedean = zeta_archimedean(psi, logC);
    r.zero_sum = d_low_lying(zeros, psi, logC).value;
    r.residual = std::abs(r.lhs - (r.prime_side + r.archimedean + r.zero_sum));
    return r;
}

struct Step2Result {
    double value;
    double target;  // psi(0) / 2
};

/// 2 sum_p p^{-1} psi_hat(2 log p / L) (log p / L) -> psi(0)/2 as L grows.
inline Step2Result step2_limit(const DensityTestFunction& psi, double logC,
                               std::uint64_t prime_cutoff) {
    const std::uint64_t needed =
        static_cast<std::uint64_t>(std::exp(std::min(psi.delta * logC / 2.0, 40.0)));
    if (prime_cutoff < needed)
        throw IncompleteData("step2_limit: prime_cutoff below exp(delta logC / 2)");
    double acc = 0.0;
    numerics::for_each_prime(prime_cutoff, [&](std::uint64_t p) {
        const double lp = std::log(static_cast<double>(p));
        const double hat = psi.psi_hat(2.0 * lp / logC);
        if (hat == 0.0) return;
        acc += 2.0 * hat * (lp / logC) / static_cast<double>(p);
    });
    return {acc, 0.5 * psi.psi(0.0)};
}

// ---------------------------------------------------------------------------
// Per-form density prediction and ensemble report.

struct FormData {
    SpectralParams nu;
    double weight = 1.0;              // e.g. h_{T,R}/L_j, or uniform
    bool self_dual = false;           // switches the sym2 residue on
    CoefficientSource coefficients;   // local data for the prime sums
};

struct FormReport {
    double conductor;
    double sigma1, sigma2;
    double residue_term;  // 2 r psi(log c / (4 pi i))
    double predicted;     // psihat(0) - sigma1 - sigma2 + residue_term
    double sigma3 = 0.0;  // rankin_selberg only: the fluctuation sum
};

inline int family_residue(FamilyKind f, bool self_dual) {
    if (f == FamilyKind::RankinSelberg) return 1;
    if (f == FamilyKind::Sym2 && self_dual) return 1;
    return 0;
}

/// Sigma^3 fluctuation for the Rankin-Selberg family:
/// 2 sum_p [A(p,p)/sqrt p hat(lp/L) + (A(p^2,p^2)-A(1,p^3)-A(p^3,1))/p hat(2lp/L)] lp/L.
inline double sigma3_fluctuation(const CoefficientSource& src, const DensityTestFunction& psi,
                                 double logC, std::uint64_t prime_cutoff) {
    double acc = 0.0;
    numerics::for_each_prime(prime_cutoff, [&](std::uint64_t p) {
        const double lp = std::log(static_cast<double>(p));
        const double h1 = psi.psi_hat(lp / logC);
        const double h2 = psi.psi_hat(2.0 * lp / logC);
        if (h1 == 0.0 && h2 == 0.0) return;
        double term = 0.0;
        if (h1 != 0.0) term += src.at(p, 1, 1).real() / std::sqrt(static_cast<double>(p)) * h1;
        if (h2 != 0.0)
            term += (src.at(p, 2, 2) - src.at(p, 0, 3) - src.at(p, 3, 0)).real() /
                    static_cast<double>(p) * h2;
        acc += 2.0 * term * (lp / logC);
    });
    return acc;
}

struct EnsembleReport {
    std::vector<FormReport> forms;
    double weighted_average = 0.0;
    double rmt_unitary = 0.0;
    double rmt_symplectic = 0.0;
    double logC = 0.0;
};

/// Assembles psihat(0) - Sigma1 - Sigma2 + 2 r psi(log c/(4 pi i)) per form
/// and the weighted ensemble average, for comparison against the
/// random-matrix pairings.
inline EnsembleReport family_density_report(const std::vector<FormData>& ensemble, FamilyKind f,
                                            const DensityTestFunction& psi,
                                            std::uint64_t prime_cutoff) {
    if (ensemble.empty()) throw EmptyEnsemble("family_density_report: empty ensemble");
    std::vector<std::pair<SpectralParams, double>> weights;
    weights.reserve(ensemble.size());
    for (const auto& e : ensemble) weights.push_back({e.nu, e.weight});
    EnsembleReport rep;
    rep.logC = average_log_conductor(weights, f);

    double wsum = 0.0;
    for (const auto& e : ensemble) {
        FormReport fr{};
        fr.conductor = analytic_conductor(e.nu, f);
        fr.sigma1 = prime_sum_sigma1(f, e.coefficients, psi, rep.logC, prime_cutoff);
        fr.sigma2 = prime_sum_sigma2(f, e.coefficients, psi, rep.logC, prime_cutoff);
        const int r = family_residue(f, e.self_dual);
        if (r != 0) {
            double c = std::max(fr.conductor, 1.0000001);
            fr.residue_term =
                2.0 * r *
                psi.fourier_eval(Complex(0.0, -std::log(c) / (4.0 * numerics::kPi))).real();
        }
        fr.predicted = psi.psi_hat(0.0) - fr.sigma1 - fr.sigma2 + fr.residue_term;
        if (f == FamilyKind::RankinSelberg)
            fr.sigma3 = sigma3_fluctuation(e.coefficients, psi, rep.logC, prime_cutoff);
        rep.weighted_average += e.weight * fr.predicted;
        wsum += e.weight;
        rep.forms.push_back(fr);
    }
    rep.weighted_average /= wsum;
    rep.rmt_unitary = psi.psi_hat(0.0);
    rep.rmt_symplectic = psi.psi_hat(0.0) - 0.5 * psi.psi(0.0);
    return rep;
}

} // namespace gl3kuz::density
