// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

namespace mckay {

/// Residue in the prime field with p elements.
struct ModPScalar {
    std::uint64_t value = 0; // in [0, p)
    std::uint64_t prime = 2;

    friend bool operator==(const ModPScalar&, const ModPScalar&) = default;
};

namespace modp {

// All primes used here are < 2^31, so products fit in 64 bits.

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a * b % p;
}

std::uint64_t pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p);
std::uint64_t inv(std::uint64_t a, std::uint64_t p);

bool is_prime(std::uint64_t n);

/// Smallest primitive root modulo a prime p.
std::uint64_t primitive_root(std::uint64_t p);

/// Multiplicative order of a modulo p (a nonzero).
std::uint64_t order(std::uint64_t a, std::uint64_t p);

} // namespace modp

} // namespace mckay
