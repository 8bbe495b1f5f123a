#pragma once

// Segmented sieve of Eratosthenes.  Hard ceiling of 1e8: callers that need
// more get MissingCapability instead of a silently truncated prime list.

#include <cmath>
#include <cstdint>
#include <vector>

#include "gl3kuz/errors.hpp"

namespace gl3kuz::numerics {

inline constexpr std::uint64_t kPrimeCeiling = 100000000ULL;

/// Calls visit(p) for every prime p <= limit, ascending.
template <typename Visit>
void for_each_prime(std::uint64_t limit, Visit&& visit) {
    if (limit > kPrimeCeiling)
        throw MissingCapability("prime sieve: limit exceeds 1e8 ceiling");
    if (limit < 2) return;
    const std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
    std::vector<bool> small(root + 1, true);
    std::vector<std::uint64_t> base;
    for (std::uint64_t i = 2; i <= root; ++i) {
        if (!small[i]) continue;
        base.push_back(i);
        for (std::uint64_t j = i * i; j <= root; j += i) small[j] = false;
    }
    const std::uint64_t segment = 1 << 18;
    std::vector<bool> mark;
    for (std::uint64_t lo = 2; lo <= limit; lo += segment) {
        const std::uint64_t hi = std::min(lo + segment - 1, limit);
        mark.assign(hi - lo + 1, true);
        for (std::uint64_t p : base) {
            if (p * p > hi) break;
            std::uint64_t start = std::max(p * p, ((lo + p - 1) / p) * p);
            for (std::uint64_t j = start; j <= hi; j += p) mark[j - lo] = false;
        }
        for (std::uint64_t i = lo; i <= hi; ++i)
            if (mark[i - lo] && i >= 2) visit(i);
    }
}

inline std::vector<std::uint64_t> primes_upto(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    for_each_prime(limit, [&](std::uint64_t p) { out.push_back(p); });
    return out;
}

} // namespace gl3kuz::numerics
