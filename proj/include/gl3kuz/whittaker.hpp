#pragma once

// Completed GL(3) Whittaker function from its double Mellin-Barnes
// representation, the Lebedev-Whittaker transform pair, and Stade's
// Gamma-product formula for the weighted inner product of two Whittaker
// functions.
//
// The Mellin-Barnes kernel is evaluated on two truncated vertical lines
// with the trapezoid rule; the integrand is analytic in a strip around
// each line and decays like exp(-pi |u| / 2), so the trapezoid converges
// geometrically in 1/spacing.  A grid evaluator factorizes the double sum
// through the axis vectors, which makes Whittaker values on y-grids cheap
// enough for the transform and Stade integrals.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <vector>

#include "gl3kuz/errors.hpp"
#include "gl3kuz/numerics/gamma.hpp"
#include "gl3kuz/numerics/parallel.hpp"
#include "gl3kuz/numerics/quadrature.hpp"
#include "gl3kuz/spectral.hpp"

namespace gl3kuz::whittaker {

using Complex = std::complex<double>;
using spectral::SpectralParams;

struct UpperHalfPoint {
    double y1, y2;
    UpperHalfPoint(double y1_, double y2_) : y1(y1_), y2(y2_) {
        if (!(y1 > 0.0) || !(y2 > 0.0))
            throw DomainError("UpperHalfPoint: coordinates must be positive");
    }
};

/// Vertical-line data for the double Mellin-Barnes integral.
struct ContourSpec {
    double c1 = 1.0, c2 = 1.0;
    double truncation_height = 0.0;  // 0 = auto: 40 + 10 max |Im alpha|
    double spacing = 0.125;          // trapezoid step along each line

    double height_for(const SpectralParams& nu) const {
        if (truncation_height > 0.0) return truncation_height;
        double m = 0.0;
        for (const auto& a : nu.alphas()) m = std::max(m, std::abs(a.imag()));
        return 40.0 + 10.0 * m;
    }
};

/// I_nu(y) = (y1 y2)^{1 + nu3} y1^{nu2} y2^{nu1}.
inline Complex i_function(const SpectralParams& nu, const UpperHalfPoint& y) {
    double l1 = std::log(y.y1), l2 = std::log(y.y2);
    return std::exp((1.0 + nu.nu3()) * (l1 + l2) + nu.nu2 * l1 + nu.nu1 * l2);
}

namespace detail {

// Distance from the contour Re s = c to the nearest pole of the Gamma
// factors Gamma((s +- alpha_j)/2); poles sit at s = -(+-alpha_j) - 2k.
inline void check_contour(double c, const std::array<Complex, 3>& alphas, int sign,
                          const char* which) {
    for (const auto& a : alphas) {
        double pole_re = -sign * a.real();  // rightmost pole location
        for (int k = 0; k < 4; ++k) {
            if (std::abs(c - (pole_re - 2.0 * k)) < 1e-6)
                throw ContourPoleError(std::string("whittaker: contour ") + which +
                                       " passes within 1e-6 of a Gamma pole");
        }
        if (c <= pole_re - 1e-6 && c >= pole_re - 2.0 + 1e-6) {
            // Strictly between the first two poles is fine; only near-hits are fatal.
        }
    }
}

// Axis data for the factorized Mellin-Barnes sum at fixed nu.
struct MbAxes {
    std::vector<Complex> a, b;    // exp of summed log-Gamma per axis node
    std::vector<Complex> rgam;    // 1/Gamma((s1+s2)/2) indexed by node-sum
    std::vector<double> u;        // imaginary parts of the nodes
    double c1, c2, h;
};

inline MbAxes build_axes(const SpectralParams& nu, const ContourSpec& contour) {
    const auto alphas = nu.alphas();
    check_contour(contour.c1, alphas, +1, "(C1)");
    check_contour(contour.c2, alphas, -1, "(C2)");
    const double U = contour.height_for(nu);
    const double h = contour.spacing;
    const std::size_t n = 2 * static_cast<std::size_t>(std::ceil(U / h)) + 1;

    MbAxes ax;
    ax.c1 = contour.c1;
    ax.c2 = contour.c2;
    ax.h = h;
    ax.u.resize(n);
    ax.a.resize(n);
    ax.b.resize(n);
    const double u0 = -h * static_cast<double>(n / 2);
    const double lnpi = std::log(numerics::kPi);
    for (std::size_t k = 0; k < n; ++k) {
        const double u = u0 + h * static_cast<double>(k);
        ax.u[k] = u;
        Complex s1(contour.c1, u), s2(contour.c2, u);
        Complex la = -s1 * lnpi, lb = -s2 * lnpi;
        for (const auto& al : alphas) {
            la += numerics::log_gamma((s1 + al) / 2.0);
            lb += numerics::log_gamma((s2 - al) / 2.0);
        }
        ax.a[k] = std::exp(la);
        ax.b[k] = std::exp(lb);
    }
    ax.rgam.resize(2 * n - 1);
    const double csum = 0.5 * (contour.c1 + contour.c2);
    for (std::size_t m = 0; m < 2 * n - 1; ++m) {
        const double usum = 0.5 * (2.0 * u0 + h * static_cast<double>(m));
        ax.rgam[m] = std::exp(-numerics::log_gamma(Complex(csum, usum)));
    }
    return ax;
}

// Overall prefactor excluding y powers: pi^{3/2} / ((2 pi i)^2 * 4) * (i h)^2.
inline Complex mb_prefactor(double h) {
    return Complex(std::pow(numerics::kPi, 1.5) * h * h / (16.0 * numerics::kPi * numerics::kPi), 0.0);
}

} // namespace detail

/// Normalization of the completed Whittaker function relative to the raw
/// Mellin-Barnes kernel; fixed so that Stade's Gamma-product formula holds
/// with constant exactly 1 (see tests/test_whittaker.cpp).
inline constexpr double kWhittakerStadeNorm = 2.0;

/// W_nu(y) for a batch of points sharing one nu.  ys is a flat list.
inline std::vector<Complex> whittaker_batch(const SpectralParams& nu,
                                            const std::vector<UpperHalfPoint>& ys,
                                            const ContourSpec& contour = {}) {
    const auto ax = detail::build_axes(nu, contour);
    const std::size_t n = ax.u.size();
    std::vector<Complex> out(ys.size());
    const Complex pref = detail::mb_prefactor(ax.h) * kWhittakerStadeNorm;
    for (std::size_t p = 0; p < ys.size(); ++p) {
        const double v1 = std::log(ys[p].y1), v2 = std::log(ys[p].y2);
        // sum_a a_a e^{-i u_a v1} [ sum_b b_b rgam_{a+b} e^{-i u_b v2} ]
        Complex acc{};
        std::vector<Complex> e2(n);
        for (std::size_t b = 0; b < n; ++b)
            e2[b] = ax.b[b] * std::polar(1.0, -ax.u[b] * v2);
        for (std::size_t a = 0; a < n; ++a) {
            Complex inner{};
            const Complex* rg = ax.rgam.data() + a;
            for (std::size_t b = 0; b < n; ++b) inner += e2[b] * rg[b];
            acc += ax.a[a] * std::polar(1.0, -ax.u[a] * v1) * inner;
        }
        const double ln1 = std::log(ys[p].y1), ln2 = std::log(ys[p].y2);
        Complex ypow = std::exp(Complex((1.0 - ax.c1) * ln1 + (1.0 - ax.c2) * ln2, 0.0));
        out[p] = pref * ypow * acc;
    }
    return out;
}

/// W on a tensor grid y1s x y2s; returns row-major [i1 * y2s.size() + i2].
/// Cost n^2 |y2s| + n |y1s| |y2s| instead of n^2 per point.
inline std::vector<Complex> whittaker_grid(const SpectralParams& nu,
                                           const std::vector<double>& y1s,
                                           const std::vector<double>& y2s,
                                           const ContourSpec& contour = {}) {
    const auto ax = detail::build_axes(nu, contour);
    const std::size_t n = ax.u.size();
    const std::size_t n1 = y1s.size(), n2 = y2s.size();
    const Complex pref = detail::mb_prefactor(ax.h) * kWhittakerStadeNorm;

    // inner[a * n2 + j] = sum_b b_b rgam_{a+b} e^{-i u_b ln y2_j}
    std::vector<Complex> e2(n * n2);
    for (std::size_t j = 0; j < n2; ++j) {
        const double v2 = std::log(y2s[j]);
        for (std::size_t b = 0; b < n; ++b)
            e2[b * n2 + j] = ax.b[b] * std::polar(1.0, -ax.u[b] * v2);
    }
    std::vector<Complex> inner(n * n2);
    numerics::parallel_for(n, [&](std::size_t a) {
        const Complex* rg = ax.rgam.data() + a;
        for (std::size_t j = 0; j < n2; ++j) {
            Complex acc{};
            for (std::size_t b = 0; b < n; ++b) acc += e2[b * n2 + j] * rg[b];
            inner[a * n2 + j] = acc;
        }
    });
    std::vector<Complex> out(n1 * n2);
    numerics::parallel_for(n1, [&](std::size_t i) {
        const double v1 = std::log(y1s[i]);
        std::vector<Complex> row(n2, Complex{});
        for (std::size_t a = 0; a < n; ++a) {
            const Complex ea = ax.a[a] * std::polar(1.0, -ax.u[a] * v1);
            const Complex* in = inner.data() + a * n2;
            for (std::size_t j = 0; j < n2; ++j) row[j] += ea * in[j];
        }
        for (std::size_t j = 0; j < n2; ++j) {
            Complex ypow = std::exp(Complex((1.0 - ax.c1) * v1 + (1.0 - ax.c2) * std::log(y2s[j]), 0.0));
            out[i * n2 + j] = pref * ypow * row[j];
        }
    });
    return out;
}

/// Single-point evaluation.
inline Complex whittaker(const SpectralParams& nu, const UpperHalfPoint& y,
                         const ContourSpec& contour = {}) {
    return whittaker_batch(nu, {y}, contour)[0];
}

// ---------------------------------------------------------------------------
// Memoization cache for (nu, y) -> W.  Keys are rounded to 1e-12 so grid
// revisits hit; bounded size, safe for concurrent use.

class WhittakerCache {
public:
    explicit WhittakerCache(std::size_t max_entries = 1 << 20) : max_entries_(max_entries) {}

    Complex get(const SpectralParams& nu, const UpperHalfPoint& y, const ContourSpec& contour = {}) {
        const Key k = make_key(nu, y);
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = map_.find(k);
            if (it != map_.end()) {
                ++hits_;
                return it->second;
            }
        }
        Complex v = whittaker(nu, y, contour);
        std::lock_guard<std::mutex> lock(mu_);
        if (map_.size() < max_entries_) map_.emplace(k, v);
        ++misses_;
        return v;
    }

    std::size_t hits() const { return hits_; }
    std::size_t misses() const { return misses_; }

private:
    using Key = std::array<std::int64_t, 6>;
    static Key make_key(const SpectralParams& nu, const UpperHalfPoint& y) {
        auto q = [](double x) { return static_cast<std::int64_t>(std::llround(x * 1e12)); };
        return {q(nu.nu1.real()), q(nu.nu1.imag()), q(nu.nu2.real()), q(nu.nu2.imag()),
                q(std::log(y.y1)), q(std::log(y.y2))};
    }
    std::size_t max_entries_;
    std::map<Key, Complex> map_;
    std::mutex mu_;
    std::size_t hits_ = 0, misses_ = 0;
};

// ---------------------------------------------------------------------------
// Lebedev-Whittaker transform pair and the Parseval relation.
//
// The spectral measure on tempered nu = (i t1, i t2) is
//   dsigma = (1/pi^2) prod_j [ (3 t_j / 2) sinh(3 pi t_j / 2) / pi ] dt1 dt2
// which is the entire continuation of 1/((pi i)^2 prod_j Gamma(3 nu_j / 2)
// Gamma(-3 nu_j / 2)); kLebedevNorm fixes the overall constant so that
// lw_transform(lw_inverse(g)) = g (pinned numerically by the Stade family,
// see tests).

inline constexpr double kLebedevNorm = 1.0;  // multiplies the (pi i)^{-2} measure

/// Log-grid used by the y-side integrals: Gauss-Legendre panels on
/// u = log y in [umin, umax]^2.
struct LogGrid {
    std::vector<double> u, w, y;
    LogGrid(double umin, double umax, int points) {
        std::vector<double> x0, w0;
        numerics::gauss_legendre(points, x0, w0);
        const double mid = 0.5 * (umax + umin), half = 0.5 * (umax - umin);
        u.resize(points);
        w.resize(points);
        y.resize(points);
        for (int i = 0; i < points; ++i) {
            u[i] = mid + half * x0[i];
            w[i] = half * w0[i];
            y[i] = std::exp(u[i]);
        }
    }
};

/// Spectral measure factor prod_j (3 t_j / 2) sinh(3 pi t_j / 2) / pi at
/// tempered nu = (i t1, i t2).
inline double lebedev_measure(double t1, double t2) {
    auto one = [](double t) { return numerics::inv_gamma_pair_imag(1.5 * t); };
    return one(t1) * one(t2) * one(t1 + t2);
}

/// f^sharp(nu) = II f(y) W_nu(y) dy1 dy2 / (y1 y2)^3 over (0, inf)^2.
template <typename F>
Complex lw_transform(F&& f, const SpectralParams& nu, const LogGrid& grid,
                     const ContourSpec& contour = {}) {
    const auto W = whittaker_grid(nu, grid.y, grid.y, contour);
    const std::size_t n = grid.u.size();
    Complex acc{};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Complex fv = f(grid.y[i], grid.y[j]);
            if (fv == Complex{}) continue;
            acc += grid.w[i] * grid.w[j] * fv * W[i * n + j] *
                   std::exp(-2.0 * (grid.u[i] + grid.u[j]));
        }
    return acc;
}

/// Tempered-nu quadrature grid for the inverse transform / Parseval.
struct SpectralGrid {
    std::vector<double> t, w;
    SpectralGrid(double tmax, int points) {
        std::vector<double> x0, w0;
        numerics::gauss_legendre(points, x0, w0);
        t.resize(points);
        w.resize(points);
        for (int i = 0; i < points; ++i) {
            t[i] = tmax * x0[i];
            w[i] = tmax * w0[i];
        }
    }
};

/// Spot-check Weyl invariance of a spectral-side function.
template <typename G>
void check_weyl_invariance(G&& g, double scale, double tol = 1e-8) {
    numerics::SplitMix64 rng(0x5eedu);
    for (int k = 0; k < 5; ++k) {
        SpectralParams nu = SpectralParams::tempered(scale * (2.0 * rng.uniform01() - 1.0),
                                                     scale * (2.0 * rng.uniform01() - 1.0));
        Complex ref = g(nu);
        for (const auto& w : spectral::weyl_group()) {
            Complex v = g(w.apply(nu));
            double denom = std::max(std::abs(ref), 1e-300);
            if (std::abs(v - ref) / denom > tol)
                throw SymmetryError("lw_inverse: spectral function is not Weyl-invariant");
        }
    }
}

/// g^flat(y): inverse transform of a Weyl-invariant spectral function,
/// integrated over the tempered tube.
template <typename G>
Complex lw_inverse(G&& g, const UpperHalfPoint& y, const SpectralGrid& grid,
                   const ContourSpec& contour = {}, bool verify_symmetry = true,
                   double symmetry_scale = 1.0) {
    if (verify_symmetry) check_weyl_invariance(g, symmetry_scale);
    const std::size_t n = grid.t.size();
    std::vector<Complex> partial(n);
    numerics::parallel_for(n, [&](std::size_t i) {
        const double t1 = grid.t[i];
        Complex acc{};
        std::vector<UpperHalfPoint> pt = {y};
        for (std::size_t j = 0; j < n; ++j) {
            const double t2 = grid.t[j];
            Complex gv = g(SpectralParams::tempered(t1, t2));
            if (gv == Complex{}) continue;
            double m = lebedev_measure(t1, t2);
            Complex Wv = whittaker_batch(SpectralParams::tempered(t1, t2), pt, contour)[0];
            acc += grid.w[i] * grid.w[j] * gv * std::conj(Wv) * m;
        }
        partial[i] = acc;
    });
    Complex acc{};
    for (const auto& p : partial) acc += p;
    return acc * (kLebedevNorm / (numerics::kPi * numerics::kPi));
}

/// Parseval pairing (1/(pi i)^2) II f1#(nu) conj(f2#(nu)) dsigma.
template <typename G1, typename G2>
Complex parseval_pairing(G1&& f1s, G2&& f2s, const SpectralGrid& grid) {
    const std::size_t n = grid.t.size();
    std::vector<Complex> partial(n);
    numerics::parallel_for(n, [&](std::size_t i) {
        const double t1 = grid.t[i];
        Complex acc{};
        for (std::size_t j = 0; j < n; ++j) {
            const double t2 = grid.t[j];
            SpectralParams nu = SpectralParams::tempered(t1, t2);
            acc += grid.w[i] * grid.w[j] * f1s(nu) * std::conj(f2s(nu)) *
                   lebedev_measure(t1, t2);
        }
        partial[i] = acc;
    });
    Complex acc{};
    for (const auto& p : partial) acc += p;
    return acc * (kLebedevNorm / (numerics::kPi * numerics::kPi));
}

// ---------------------------------------------------------------------------
// Stade's formula.

inline bool is_near_gamma_pole(const Complex& z) {
    if (z.real() > 0.25) return false;
    double r = std::round(z.real());
    return r <= 0.0 && std::abs(z.real() - r) < 1e-9 && std::abs(z.imag()) < 1e-9;
}

/// Right side: pi^{3(1-s)} / Gamma(3s/2) * prod_{j,k} Gamma((s + alpha_j +
/// conj(beta_k))/2).
inline Complex stade_rhs(const SpectralParams& nu, const SpectralParams& mu, Complex s) {
    const auto a = nu.alphas();
    const auto b = mu.alphas();
    Complex acc = 3.0 * (1.0 - s) * std::log(numerics::kPi) -
                  numerics::log_gamma(1.5 * s);
    for (const auto& aj : a)
        for (const auto& bk : b) {
            Complex arg = (s + aj + std::conj(bk)) / 2.0;
            if (is_near_gamma_pole(arg))
                throw PoleError("stade_rhs: Gamma argument at a pole");
            acc += numerics::log_gamma(arg);
        }
    return std::exp(acc);
}

/// Left side: II W_nu(y) conj(W_mu(y)) (det y)^s dy/(y1 y2)^3 on a log grid,
/// det y = y1^2 y2.  Requires Re s >= 2 for comfortable convergence.
inline Complex stade_lhs(const SpectralParams& nu, const SpectralParams& mu, Complex s,
                         const LogGrid& grid, const ContourSpec& contour = {}) {
    if (s.real() < 2.0)
        throw DomainError("stade_lhs: need Re s >= 2 for absolute convergence");
    const auto Wn = whittaker_grid(nu, grid.y, grid.y, contour);
    const bool same = (nu == mu);
    const auto Wm = same ? Wn : whittaker_grid(mu, grid.y, grid.y, contour);
    const std::size_t n = grid.u.size();
    Complex acc{};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Complex det_pow = std::exp(s * (2.0 * grid.u[i] + grid.u[j]));
            acc += grid.w[i] * grid.w[j] * Wn[i * n + j] * std::conj(Wm[i * n + j]) *
                   det_pow * std::exp(-2.0 * (grid.u[i] + grid.u[j]));
        }
    return acc;
}

/// ||phi||^2 weight: 6 L_residue prod_k Gamma((1+3nu_k)/2) Gamma((1-3nu_k)/2).
inline double rankin_norm_factor(const SpectralParams& nu, double l_residue) {
    if (l_residue <= 0.0) throw DomainError("rankin_norm_factor: residue must be positive");
    Complex acc{};
    for (const auto& nk : nu.nus())
        acc += numerics::log_gamma((1.0 + 3.0 * nk) / 2.0) +
               numerics::log_gamma((1.0 - 3.0 * nk) / 2.0);
    return 6.0 * l_residue * std::exp(acc).real();
}

} // namespace gl3kuz::whittaker
