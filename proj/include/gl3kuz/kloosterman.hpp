#pragma once

// Exact evaluation of the two GL(3) Kloosterman sums.
//
// S~(m1, n1, n2; D1, D2): nonzero only when D1 | D2; sum over C1 mod D1
// coprime to D1 and C2 mod D2 coprime to D2/D1 of
//   e((m1 C1 + n1 C1bar C2)/D1) e(n2 C2bar / (D2/D1)),
// with C1bar the inverse mod D1 and C2bar the inverse mod D2/D1.
//
// S(m1, m2, n1, n2; D1, D2): sum over B1, C1 mod D1 and B2, C2 mod D2 with
// gcd(B1, C1, D1) = gcd(B2, C2, D2) = 1 and the long-element constraint
//   B1 B2 + C1 D2 + C2 D1 = 0 (mod D1 D2),
// of e((m1 B1 + n1 (Y1 D2 - Z1 B2))/D1) e((m2 B2 + n2 (Y2 D1 - Z2 B1))/D2),
// where Y_i B_i + Z_i C_i = 1 (mod D_i).
//
// Every term is a root of unity e(k/N) with N = D1 D2; terms are tallied
// exactly as integer counts per residue class k, then the trigonometric
// sum is accumulated once per class.  This keeps the arithmetic exact and
// makes witness-independence an exact statement rather than a numerical one.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <vector>

#include "gl3kuz/errors.hpp"
#include "gl3kuz/numerics/gamma.hpp"
#include "gl3kuz/numerics/parallel.hpp"

namespace gl3kuz::kloosterman {

using Complex = std::complex<double>;

/// Inverse of a mod m, result in [0, m); modinv(a, 1) = 0 by convention.
inline std::int64_t modinv(std::int64_t a, std::int64_t m) {
    if (m <= 0) throw DomainError("modinv: modulus must be positive");
    if (m == 1) return 0;
    std::int64_t r = a % m;
    if (r < 0) r += m;
    std::int64_t t = 0, newt = 1, rr = m, newr = r;
    while (newr != 0) {
        std::int64_t q = rr / newr;
        std::int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = rr - q * newr;
        rr = newr;
        newr = tmp;
    }
    if (rr != 1) throw NotInvertible("modinv: arguments are not coprime");
    if (t < 0) t += m;
    return t;
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    return std::gcd(std::llabs(a), std::llabs(b));
}

/// Moebius function, trial division (moduli here are small).
inline int moebius(std::int64_t n) {
    int mu = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

inline std::int64_t euler_phi(std::int64_t n) {
    std::int64_t result = n;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

/// Ramanujan sum c_q(n) = mu(q/g) phi(q) / phi(q/g), g = gcd(n, q).
inline std::int64_t ramanujan_sum(std::int64_t q, std::int64_t n) {
    if (q <= 0) throw DomainError("ramanujan_sum: q must be positive");
    std::int64_t g = n == 0 ? q : gcd64(n, q);
    std::int64_t d = q / g;
    return moebius(d) * (euler_phi(q) / euler_phi(d));
}

namespace detail {

// Tally of exact phases: counts[k] multiplies e(k / modulus).
struct PhaseTally {
    std::int64_t modulus;
    std::vector<std::int64_t> counts;
    explicit PhaseTally(std::int64_t N) : modulus(N), counts(static_cast<std::size_t>(N), 0) {}

    void add(std::int64_t numer_mod_N) {
        std::int64_t k = numer_mod_N % modulus;
        if (k < 0) k += modulus;
        ++counts[static_cast<std::size_t>(k)];
    }

    // Kahan-compensated evaluation of sum counts[k] e(k/N).
    Complex evaluate() const {
        double re = 0.0, im = 0.0, cre = 0.0, cim = 0.0;
        const double step = 2.0 * numerics::kPi / static_cast<double>(modulus);
        for (std::size_t k = 0; k < counts.size(); ++k) {
            if (counts[k] == 0) continue;
            const double c = static_cast<double>(counts[k]);
            const double ang = step * static_cast<double>(k);
            double vr = c * std::cos(ang), vi = c * std::sin(ang);
            double tr = vr - cre, t = re + tr;
            cre = (t - re) - tr;
            re = t;
            double ti = vi - cim, t2 = im + ti;
            cim = (t2 - im) - ti;
            im = t2;
        }
        return {re, im};
    }
};

} // namespace detail

struct SumSpecTilde {
    std::int64_t m1, n1, n2;
    std::int64_t d1, d2;
    SumSpecTilde(std::int64_t m1_, std::int64_t n1_, std::int64_t n2_, std::int64_t d1_, std::int64_t d2_)
        : m1(m1_), n1(n1_), n2(n2_), d1(d1_), d2(d2_) {
        if (d1 <= 0 || d2 <= 0) throw DomainError("SumSpecTilde: moduli must be positive");
        if (m1 == 0 || n1 == 0 || n2 == 0) throw DomainError("SumSpecTilde: indices must be nonzero");
    }
};

struct SumSpecLong {
    std::int64_t m1, m2, n1, n2;
    std::int64_t d1, d2;
    SumSpecLong(std::int64_t m1_, std::int64_t m2_, std::int64_t n1_, std::int64_t n2_,
                std::int64_t d1_, std::int64_t d2_)
        : m1(m1_), m2(m2_), n1(n1_), n2(n2_), d1(d1_), d2(d2_) {
        if (d1 <= 0 || d2 <= 0) throw DomainError("SumSpecLong: moduli must be positive");
        if (m1 == 0 || m2 == 0 || n1 == 0 || n2 == 0)
            throw DomainError("SumSpecLong: indices must be nonzero");
    }
};

/// Exact residue-class tally for S~; exposed for oracle-style tests.
inline detail::PhaseTally s_tilde_tally(const SumSpecTilde& s) {
    const std::int64_t D1 = s.d1, D2 = s.d2;
    detail::PhaseTally tally(D1 * D2);
    if (D2 % D1 != 0) return tally;  // indicator 1_{D1 | D2}
    const std::int64_t Q = D2 / D1;
    // phase = (m1 C1 + n1 C1bar C2)/D1 + n2 C2bar/Q, as numerator mod D1*Q*? :
    // common denominator D1 * Q need not equal D1 * D2; use N = D1 * D2 and
    // scale: x/D1 = x*D2/N, y/Q = y*D1*D1/N ... careful: N/(D1) = D2, N/Q = D1*D1.
    for (std::int64_t c1 = 0; c1 < D1; ++c1) {
        if (gcd64(c1, D1) != 1 && D1 > 1) continue;
        const std::int64_t c1bar = modinv(c1 % D1, D1);
        for (std::int64_t c2 = 0; c2 < D2; ++c2) {
            if (Q > 1 && gcd64(c2, Q) != 1) continue;
            const std::int64_t c2bar = Q > 1 ? modinv(c2 % Q, Q) : 0;
            // k/N with N = D1*D2: (m1 c1 + n1 c1bar c2) * D2 + n2 c2bar * D1 * D1
            const std::int64_t N = D1 * D2;
            std::int64_t a = ((s.m1 % N) * (c1 % N) + (s.n1 % N) * ((c1bar * (c2 % N)) % N)) % N;
            std::int64_t k = (a % N) * (D2 % N) % N;
            k = (k + ((s.n2 % N) * (c2bar % N)) % N * ((D1 * D1) % N)) % N;
            tally.add(k);
        }
    }
    return tally;
}

/// S~(m1, n1, n2; D1, D2), exact up to the final trigonometric rounding.
inline Complex s_tilde(const SumSpecTilde& s) {
    return s_tilde_tally(s).evaluate();
}

namespace detail {

// Witnesses Y, Z with Y*B + Z*C = 1 (mod D); requires gcd(B, C, D) = 1.
// offset shifts them along the null direction (Y + t*C, Z - t*B), which
// must leave the sum unchanged -- exposed for the independence test.
inline void bezout_witness(std::int64_t B, std::int64_t C, std::int64_t D,
                           std::int64_t& Y, std::int64_t& Z, std::int64_t offset = 0) {
    if (D == 1) {
        Y = 0;
        Z = 0;
        return;
    }
    // Extended gcd over the integers: u*B + v*C = g.
    std::int64_t a = B, b = C;
    std::int64_t u0 = 1, v0 = 0, u1 = 0, v1 = 1;
    while (b != 0) {
        std::int64_t q = a / b;
        std::int64_t t = a - q * b; a = b; b = t;
        t = u0 - q * u1; u0 = u1; u1 = t;
        t = v0 - q * v1; v0 = v1; v1 = t;
    }
    std::int64_t g = a, u = u0, v = v0;
    if (g < 0) { g = -g; u = -u; v = -v; }
    if (g == 0) {  // B = C = 0: needs D = 1, handled above
        throw NotInvertible("bezout_witness: gcd(B, C, D) != 1");
    }
    const std::int64_t w = modinv(((g % D) + D) % D, D);  // throws if gcd(g, D) != 1
    Y = (((u % D) * w) % D + D) % D;
    Z = (((v % D) * w) % D + D) % D;
    if (offset != 0) {
        Y = ((Y + offset % D * (C % D)) % D + D) % D;
        Z = ((Z - offset % D * (B % D)) % D + D) % D;
    }
}

} // namespace detail

enum class LongConstraint {
    Standard,    // B1 B2 + C1 D2 + C2 D1 = 0 (mod D1 D2)
    LiteralText, // B1 B2 + C2 D2 + C2 D1 = 0 (mod D1 D2) -- see remarks in tests
};

/// Exact residue-class tally for the long-element sum S.
inline detail::PhaseTally s_long_tally(const SumSpecLong& s,
                                       LongConstraint constraint = LongConstraint::Standard,
                                       std::int64_t witness_offset = 0) {
    const std::int64_t D1 = s.d1, D2 = s.d2;
    const std::int64_t N = D1 * D2;
    detail::PhaseTally tally(N);

    // Precompute witness pairs per admissible (B, C) for each modulus.
    struct BC { std::int64_t b, c, y, z; };
    auto admissible = [&](std::int64_t D) {
        std::vector<BC> out;
        for (std::int64_t b = 0; b < D; ++b)
            for (std::int64_t c = 0; c < D; ++c) {
                if (D > 1 && gcd64(gcd64(b, c), D) != 1) continue;
                std::int64_t y, z;
                detail::bezout_witness(b, c, D, y, z, witness_offset);
                out.push_back({b, c, y, z});
            }
        return out;
    };
    const auto bc1 = admissible(D1);
    const auto bc2 = admissible(D2);

    for (const auto& p1 : bc1) {
        for (const auto& p2 : bc2) {
            std::int64_t lhs;
            if (constraint == LongConstraint::Standard)
                lhs = (p1.b * p2.b + p1.c * D2 + p2.c * D1) % N;
            else
                lhs = (p1.b * p2.b + p2.c * D2 + p2.c * D1) % N;
            if (lhs % N != 0) continue;
            // e((m1 B1 + n1 (Y1 D2 - Z1 B2))/D1) e((m2 B2 + n2 (Y2 D1 - Z2 B1))/D2)
            std::int64_t a1 = (s.m1 % D1) * p1.b + (s.n1 % D1) * ((p1.y * (D2 % D1) - p1.z * (p2.b % D1)) % D1);
            std::int64_t a2 = (s.m2 % D2) * p2.b + (s.n2 % D2) * ((p2.y * (D1 % D2) - p2.z * (p1.b % D2)) % D2);
            // k/N = a1/D1 + a2/D2 = (a1 D2 + a2 D1)/N
            std::int64_t k = ((a1 % N) * (D2 % N) + (a2 % N) * (D1 % N)) % N;
            tally.add(k);
        }
    }
    return tally;
}

/// Long-element Kloosterman sum S(m1, m2, n1, n2; D1, D2).
inline Complex s_long(const SumSpecLong& s,
                      LongConstraint constraint = LongConstraint::Standard,
                      std::int64_t witness_offset = 0) {
    return s_long_tally(s, constraint, witness_offset).evaluate();
}

struct BatchRow {
    std::int64_t d1, d2;
    Complex value;
};

/// Long-element sums over rectangular ranges of (D1, D2), parallel per cell.
inline std::vector<BatchRow> s_long_batch(std::int64_t m1, std::int64_t m2,
                                          std::int64_t n1, std::int64_t n2,
                                          std::int64_t d1_max, std::int64_t d2_max,
                                          LongConstraint constraint = LongConstraint::Standard) {
    if (d1_max < 1 || d2_max < 1) throw DomainError("s_long_batch: ranges must be >= 1");
    std::vector<BatchRow> rows(static_cast<std::size_t>(d1_max * d2_max));
    numerics::parallel_for(rows.size(), [&](std::size_t idx) {
        const std::int64_t d1 = 1 + static_cast<std::int64_t>(idx) / d2_max;
        const std::int64_t d2 = 1 + static_cast<std::int64_t>(idx) % d2_max;
        rows[idx] = {d1, d2, s_long(SumSpecLong(m1, m2, n1, n2, d1, d2), constraint)};
    });
    return rows;
}

} // namespace gl3kuz::kloosterman
