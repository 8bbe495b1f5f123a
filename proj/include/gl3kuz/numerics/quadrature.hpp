#pragma once

// Reusable quadrature engines: composite Gauss-Legendre panels, tanh-sinh
// for endpoint singularities, and plain Monte-Carlo.  Every engine returns
// the value together with an a-posteriori error estimate obtained from a
// half-vs-full refinement comparison (standard error for Monte-Carlo).

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "gl3kuz/errors.hpp"

namespace gl3kuz::numerics {

enum class QuadScheme { GaussLegendrePanels, TanhSinh, MonteCarlo };

struct QuadratureSpec {
    QuadScheme scheme = QuadScheme::GaussLegendrePanels;
    std::int64_t panels_or_samples = 64;
    double truncation = 10.0;       // integration-domain cutoff for infinite ranges
    double target_rel_tol = 1e-8;

    QuadratureSpec() = default;
    QuadratureSpec(QuadScheme s, std::int64_t n, double trunc, double tol)
        : scheme(s), panels_or_samples(n), truncation(trunc), target_rel_tol(tol) {
        if (panels_or_samples <= 0) throw DomainError("QuadratureSpec: panels_or_samples must be positive");
        if (truncation <= 0.0) throw DomainError("QuadratureSpec: truncation must be positive");
        if (target_rel_tol <= 0.0) throw DomainError("QuadratureSpec: target_rel_tol must be positive");
    }
};

template <typename T>
struct QuadResult {
    T value{};
    double error_estimate = 0.0;
};

// Nodes/weights for n-point Gauss-Legendre on [-1, 1], Newton on P_n.
inline void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(3.14159265358979323846 * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[n - 1 - i] = w[i];
    }
}

namespace detail {

struct PanelRule {
    std::vector<double> x, w;
    explicit PanelRule(int order = 16) { gauss_legendre(order, x, w); }
};

inline const PanelRule& panel_rule16() {
    static const PanelRule r(16);
    return r;
}

} // namespace detail

/// Fixed-panel composite Gauss-Legendre on [a, b] (no refinement, no estimate).
template <typename F>
auto integrate_panels(F&& f, double a, double b, std::int64_t panels)
    -> decltype(f(0.0)) {
    const auto& r = detail::panel_rule16();
    using T = decltype(f(0.0));
    T acc{};
    const double h = (b - a) / static_cast<double>(panels);
    for (std::int64_t p = 0; p < panels; ++p) {
        const double mid = a + (p + 0.5) * h;
        for (std::size_t k = 0; k < r.x.size(); ++k)
            acc += (0.5 * h * r.w[k]) * f(mid + 0.5 * h * r.x[k]);
    }
    return acc;
}

/// 1-D integral on [a, b] with refinement-based error estimate.
template <typename F>
auto integrate_1d(F&& f, double a, double b, const QuadratureSpec& spec)
    -> QuadResult<decltype(f(0.0))> {
    using T = decltype(f(0.0));
    if (spec.scheme == QuadScheme::TanhSinh) {
        // Double-exponential: x = (a+b)/2 + (b-a)/2 tanh((pi/2) sinh t)
        const double c = 0.5 * (a + b), hw = 0.5 * (b - a);
        auto level = [&](double h) {
            T acc = hw * 1.5707963267948966 * f(c);  // t = 0 term, cosh 0 = 1
            for (int k = 1; k * h < 6.5; ++k) {
                double t = k * h;
                double sh = 1.5707963267948966 * std::sinh(t);
                double ch = std::cosh(t);
                double g = std::tanh(sh);
                double dgdt = 1.5707963267948966 * ch / (std::cosh(sh) * std::cosh(sh));
                acc += hw * dgdt * (f(c + hw * g) + f(c - hw * g));
            }
            return h * acc;
        };
        double h = 6.5 / static_cast<double>(spec.panels_or_samples);
        T full = level(h);
        T half = level(0.5 * h);
        double err = std::abs(half - full);
        double scale = std::abs(half);
        if (scale > 0.0 && err > 10.0 * spec.target_rel_tol * scale)
            throw NonConvergence("integrate_1d(tanh-sinh): refinements disagree", std::abs(half), err);
        return {half, err};
    }
    T full = integrate_panels(f, a, b, spec.panels_or_samples);
    T fine = integrate_panels(f, a, b, 2 * spec.panels_or_samples);
    double err = std::abs(fine - full);
    double scale = std::abs(fine);
    if (scale > 0.0 && err > 10.0 * spec.target_rel_tol * scale)
        throw NonConvergence("integrate_1d: refinements disagree", std::abs(fine), err);
    return {fine, err};
}

/// 2-D tensor integral on [a1,b1] x [a2,b2] with refinement estimate.
template <typename F>
auto integrate_2d(F&& f, double a1, double b1, double a2, double b2,
                  const QuadratureSpec& spec)
    -> QuadResult<decltype(f(0.0, 0.0))> {
    using T = decltype(f(0.0, 0.0));
    auto tensor = [&](std::int64_t panels) {
        const auto& r = detail::panel_rule16();
        T acc{};
        const double h1 = (b1 - a1) / static_cast<double>(panels);
        const double h2 = (b2 - a2) / static_cast<double>(panels);
        for (std::int64_t p = 0; p < panels; ++p) {
            const double m1 = a1 + (p + 0.5) * h1;
            for (std::size_t i = 0; i < r.x.size(); ++i) {
                const double x1 = m1 + 0.5 * h1 * r.x[i];
                const double w1 = 0.5 * h1 * r.w[i];
                for (std::int64_t q = 0; q < panels; ++q) {
                    const double m2 = a2 + (q + 0.5) * h2;
                    for (std::size_t j = 0; j < r.x.size(); ++j)
                        acc += w1 * (0.5 * h2 * r.w[j]) * f(x1, m2 + 0.5 * h2 * r.x[j]);
                }
            }
        }
        return acc;
    };
    std::int64_t n = spec.panels_or_samples;
    T full = tensor(n);
    T fine = tensor(n + (n + 1) / 2);  // 1.5x refinement keeps 2-D cost sane
    double err = std::abs(fine - full);
    double scale = std::abs(fine);
    if (scale > 0.0 && err > 10.0 * spec.target_rel_tol * scale)
        throw NonConvergence("integrate_2d: refinements disagree", std::abs(fine), err);
    return {fine, err};
}

// SplitMix64: tiny, seedable, and identical on every platform.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

/// n-D Monte-Carlo over a box; returns mean-value integral and standard error.
template <typename F>
QuadResult<std::complex<double>> integrate_nd_monte_carlo(
    F&& f, const std::vector<std::pair<double, double>>& box,
    std::int64_t samples, std::uint64_t seed) {
    SplitMix64 rng(seed ^ 0xa5a5a5a5deadbeefULL);
    const std::size_t dim = box.size();
    double volume = 1.0;
    for (const auto& [lo, hi] : box) volume *= (hi - lo);
    std::vector<double> pt(dim);
    std::complex<double> sum{};
    double sum_sq = 0.0;
    for (std::int64_t s = 0; s < samples; ++s) {
        for (std::size_t d = 0; d < dim; ++d)
            pt[d] = box[d].first + (box[d].second - box[d].first) * rng.uniform01();
        std::complex<double> v = f(pt);
        sum += v;
        sum_sq += std::norm(v);
    }
    const double n = static_cast<double>(samples);
    std::complex<double> mean = sum / n;
    double var = sum_sq / n - std::norm(mean);
    if (var < 0.0) var = 0.0;
    return {volume * mean, volume * std::sqrt(var / n)};
}

} // namespace gl3kuz::numerics
