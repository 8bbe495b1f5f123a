#pragma once

// Complex log-gamma and digamma on the principal branch.
//
// log_gamma uses a g=7, 9-coefficient Lanczos approximation for moderate
// arguments and the Stirling series with Bernoulli corrections once the
// (possibly recurrence-shifted) argument is far enough from the origin.
// For Re z < 1/2 the reflection formula is applied with an explicitly
// branch-safe evaluation of log sin(pi z).  The dominant terms of the
// final sum are accumulated in double-double so that the absolute error
// of log_gamma stays near 1e-14 even when |log Gamma| ~ 1e3.

#include <cmath>
#include <complex>
#include <limits>

#include "gl3kuz/errors.hpp"

namespace gl3kuz::numerics {

using Complex = std::complex<double>;

namespace detail {

// g = 7, 9 terms (Godfrey's coefficients, as used in Numerical Recipes 3e).
inline constexpr double kLanczosG = 7.0;
inline constexpr double kLanczosCoeff[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

// Bernoulli numbers B_{2k} for the Stirling series.
inline constexpr double kBern2k[8] = {
    1.0 / 6.0,   -1.0 / 30.0,  1.0 / 42.0,   -1.0 / 30.0,
    5.0 / 66.0,  -691.0 / 2730.0, 7.0 / 6.0, -3617.0 / 510.0,
};

// Minimal double-double accumulator for sums whose result is much smaller
// in ulps than the largest addend.
struct DD {
    double hi = 0.0, lo = 0.0;
    void add(double x) {
        double s = hi + x;
        double bb = s - hi;
        double err = (hi - (s - bb)) + (x - bb);
        hi = s;
        lo += err;
    }
    double value() const { return hi + lo; }
};

// ln|z| split into three addends (exponent part, fractional log, tail) so
// multiplying by O(|z|) factors does not magnify a pre-rounded sum.
inline void log_abs_parts(const Complex& z, double& c_exp, double& c_frac, double& c_tail) {
    double x = z.real(), y = z.imag();
    double q = x * x + y * y;
    double qe = std::fma(x, x, -x * x) + std::fma(y, y, -y * y);
    int e = std::ilogb(q);
    double m = std::scalbn(q, -e);
    static constexpr double kLn2Hi = 0.693147180559945286227, kLn2Lo = 2.319046813846299558e-17;
    c_exp = 0.5 * e * kLn2Hi;
    c_frac = 0.5 * (std::log(m) + qe / q);
    c_tail = 0.5 * e * kLn2Lo;
}

inline bool near_nonpositive_integer(const Complex& z, double tol = 1e-12) {
    if (z.real() > 0.5) return false;
    double r = std::round(z.real());
    return r <= 0.0 && std::abs(z.real() - r) < tol && std::abs(z.imag()) < tol;
}

// Stirling series; requires Re z > 0 and |z| reasonably large.
inline Complex log_gamma_stirling(const Complex& z) {
    Complex lz = std::log(z);
    // (z - 1/2) log z - z + (1/2) log(2 pi), both parts compensated: the
    // summands reach ~1e3 while the result must be good to ~1e-13 absolute.
    DD re, im;
    auto add_prod = [](DD& acc, double a, double b) {
        double p = a * b;
        acc.add(p);
        acc.add(std::fma(a, b, -p));
    };
    double l_exp, l_frac, l_tail;
    log_abs_parts(z, l_exp, l_frac, l_tail);
    add_prod(re, z.real() - 0.5, l_exp);
    add_prod(re, z.real() - 0.5, l_frac);
    add_prod(re, z.real() - 0.5, l_tail);
    add_prod(re, -z.imag(), lz.imag());
    re.add(-z.real());
    re.add(0.91893853320467274178);  // log(2 pi)/2
    add_prod(im, z.real() - 0.5, lz.imag());
    add_prod(im, z.imag(), l_exp);
    add_prod(im, z.imag(), l_frac);
    add_prod(im, z.imag(), l_tail);
    im.add(-z.imag());
    Complex acc(0.0, 0.0);
    Complex zinv = 1.0 / z;
    Complex z2inv = zinv * zinv;
    Complex term = zinv;
    for (int k = 0; k < 8; ++k) {
        acc += kBern2k[k] / (2.0 * (k + 1) * (2.0 * (k + 1) - 1.0)) * term;
        term *= z2inv;
    }
    re.add(acc.real());
    im.add(acc.imag());
    return Complex(re.value(), im.value());
}

inline Complex log_gamma_lanczos(const Complex& z) {
    // Valid for Re z >= 0.5.
    Complex zm1 = z - 1.0;
    Complex s(kLanczosCoeff[0], 0.0);
    for (int k = 1; k < 9; ++k) s += kLanczosCoeff[k] / (zm1 + static_cast<double>(k));
    Complex t = zm1 + kLanczosG + 0.5;
    Complex lt = std::log(t);
    DD re;
    re.add((zm1.real() + 0.5) * lt.real());
    re.add(-zm1.imag() * lt.imag());
    re.add(-t.real());
    re.add(0.91893853320467274178);
    re.add(std::log(std::abs(s)));
    double im = (zm1.real() + 0.5) * lt.imag() + zm1.imag() * lt.real() - t.imag() + std::arg(s);
    return Complex(re.value(), im);
}

} // namespace detail

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 6.28318530717958647692;
inline constexpr double kEulerGamma = 0.57721566490153286061;

/// Principal-branch log Gamma.  Throws PoleError at nonpositive integers.
inline Complex log_gamma(Complex z) {
    if (detail::near_nonpositive_integer(z))
        throw PoleError("log_gamma: pole at nonpositive integer");
    if (z.imag() < 0.0) return std::conj(log_gamma(std::conj(z)));
    if (z.real() < 0.5) {
        // Reflection, branch-safe for Im z >= 0:
        // log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z), using
        // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 pi i z}) with |e^{2 pi i z}| <= 1.
        const Complex i(0.0, 1.0);
        Complex w = std::exp(2.0 * kPi * i * z);
        Complex logsin = -i * kPi * z + std::log(0.5 * i) + std::log(1.0 - w);
        return std::log(kPi) - logsin - log_gamma(1.0 - z);
    }
    if (std::abs(z) >= 14.0) return detail::log_gamma_stirling(z);
    return detail::log_gamma_lanczos(z);
}

/// Gamma(z) via exp(log_gamma); overflow follows IEEE semantics.
inline Complex gamma_fn(const Complex& z) { return std::exp(log_gamma(z)); }

/// Digamma psi(z) = Gamma'(z)/Gamma(z), principal values.
inline Complex digamma(Complex z) {
    if (detail::near_nonpositive_integer(z))
        throw PoleError("digamma: pole at nonpositive integer");
    if (z.imag() < 0.0) return std::conj(digamma(std::conj(z)));
    Complex acc(0.0, 0.0);
    if (z.real() < 0.5) {
        // psi(z) = psi(1-z) - pi cot(pi z)
        Complex cot = std::cos(kPi * z) / std::sin(kPi * z);
        return digamma(1.0 - z) - kPi * cot;
    }
    while (std::abs(z) < 12.0) {
        acc -= 1.0 / z;
        z += 1.0;
    }
    // Asymptotic: log z - 1/(2z) - sum B_{2k}/(2k z^{2k})
    Complex res = std::log(z) - 0.5 / z;
    Complex z2inv = 1.0 / (z * z);
    Complex term = z2inv;
    for (int k = 0; k < 8; ++k) {
        res -= detail::kBern2k[k] / (2.0 * (k + 1)) * term;
        term *= z2inv;
    }
    return res + acc;
}

/// Stirling main-term modulus sqrt(2 pi) |t|^{sigma - 1/2} e^{-pi |t| / 2}.
inline double stirling_modulus(double sigma, double t) {
    if (t == 0.0) throw DomainError("stirling_modulus: t must be nonzero");
    double at = std::abs(t);
    return std::sqrt(kTwoPi) * std::pow(at, sigma - 0.5) * std::exp(-kPi * at / 2.0);
}

/// 1 / (Gamma(z) Gamma(-z)) for purely imaginary z = it:
/// equals t sinh(pi t) / pi, the entire continuation of -z sin(pi z)/pi.
inline double inv_gamma_pair_imag(double t) {
    return t * std::sinh(kPi * t) / kPi;
}

} // namespace gl3kuz::numerics
