#pragma once

// Spectral-parameter coordinates for GL(3): the pair nu = (nu1, nu2) with
// nu3 = nu1 + nu2, the linear Langlands parameters
//   alpha1 = 2 nu1 + nu2,  alpha2 = -nu1 + nu2,  alpha3 = -nu1 - 2 nu2
// (so alpha1 + alpha2 + alpha3 = 0), the order-6 Weyl action permuting the
// alpha, and the Laplace eigenvalue 1 - (alpha1^2 + alpha2^2 + alpha3^2).

#include <array>
#include <cmath>
#include <complex>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gl3kuz/errors.hpp"

namespace gl3kuz::spectral {

using Complex = std::complex<double>;

struct SpectralParams {
    Complex nu1{}, nu2{};

    Complex nu3() const { return nu1 + nu2; }

    std::array<Complex, 3> nus() const { return {nu1, nu2, nu1 + nu2}; }

    std::array<Complex, 3> alphas() const {
        return {2.0 * nu1 + nu2, -nu1 + nu2, -nu1 - 2.0 * nu2};
    }

    static SpectralParams from_alphas(const std::array<Complex, 3>& a) {
        // nu1 = (a1 - a2)/3, nu2 = (a2 - a3)/3
        return {(a[0] - a[1]) / 3.0, (a[1] - a[2]) / 3.0};
    }

    static SpectralParams tempered(double t1, double t2) {
        return {Complex(0.0, t1), Complex(0.0, t2)};
    }

    bool operator==(const SpectralParams&) const = default;
};

/// Permutation of {0,1,2} acting on the alpha-triple.
struct WeylElement {
    std::array<int, 3> perm{0, 1, 2};

    SpectralParams apply(const SpectralParams& nu) const {
        auto a = nu.alphas();
        return SpectralParams::from_alphas({a[perm[0]], a[perm[1]], a[perm[2]]});
    }
};

inline const std::array<WeylElement, 6>& weyl_group() {
    static const std::array<WeylElement, 6> g = {{
        {{0, 1, 2}}, {{0, 2, 1}}, {{1, 0, 2}}, {{1, 2, 0}}, {{2, 0, 1}}, {{2, 1, 0}},
    }};
    return g;
}

inline std::array<SpectralParams, 6> weyl_orbit(const SpectralParams& nu) {
    std::array<SpectralParams, 6> out;
    for (std::size_t i = 0; i < 6; ++i) out[i] = weyl_group()[i].apply(nu);
    return out;
}

/// lambda = 1 - (alpha1^2 + alpha2^2 + alpha3^2) = 1 - 3(nu1^2 + nu2^2 + nu3^2).
inline Complex laplace_eigenvalue(const SpectralParams& nu) {
    Complex s{};
    for (const auto& a : nu.alphas()) s += a * a;
    return 1.0 - s;
}

inline bool temperedness_check(const SpectralParams& nu, double tol = 1e-12) {
    return std::abs(nu.nu1.real()) <= tol && std::abs(nu.nu2.real()) <= tol;
}

// ---------------------------------------------------------------------------
// CSV ingestion: columns nu1_im, nu2_im[, rankin_selberg_residue], one Maass
// form per row.  Lines starting with '#' and a single header line are ignored.

struct SpectralEntry {
    SpectralParams nu;
    double rankin_selberg_residue = 1.0;
    bool has_residue = false;
};

inline std::vector<SpectralEntry> load_spectral_csv(std::istream& in) {
    std::vector<SpectralEntry> out;
    std::string line;
    bool header_allowed = true;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::string cleaned = line;
        for (char& c : cleaned)
            if (c == ',') c = ' ';
        std::istringstream ss(cleaned);
        double t1, t2;
        if (!(ss >> t1 >> t2)) {
            if (header_allowed) {
                header_allowed = false;
                continue;
            }
            throw DataFormatError("spectral csv: unparseable row: " + line);
        }
        header_allowed = false;
        SpectralEntry e;
        e.nu = SpectralParams::tempered(t1, t2);
        double res;
        if (ss >> res) {
            if (res <= 0.0)
                throw DataFormatError("spectral csv: rankin_selberg_residue must be positive");
            e.rankin_selberg_residue = res;
            e.has_residue = true;
        }
        out.push_back(e);
    }
    return out;
}

inline std::vector<SpectralEntry> load_spectral_csv(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw DataFormatError("spectral csv: cannot open " + path);
    return load_spectral_csv(f);
}

} // namespace gl3kuz::spectral
