// SPDX-License-Identifier: Apache-2.0
#include "mckay/modp.hpp"

#include "mckay/error.hpp"

namespace mckay::modp {

std::uint64_t pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) r = mul(r, base, p);
        base = mul(base, base, p);
        exp >>= 1;
    }
    return r;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) fail("DivisionByZero", "inverse of 0 mod " + std::to_string(p));
    return pow(a, p - 2, p);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ull, 3ull, 5ull}) {
        if (n % d == 0) return n == d;
    }
    for (std::uint64_t d = 7; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> fs;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

} // namespace

std::uint64_t primitive_root(std::uint64_t p) {
    if (p == 2) return 1;
    auto fs = prime_factors(p - 1);
    for (std::uint64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (std::uint64_t q : fs) {
            if (pow(g, (p - 1) / q, p) == 1) { ok = false; break; }
        }
        if (ok) return g;
    }
    fail("NoPrimeFound", "no primitive root mod " + std::to_string(p)); // unreachable for prime p
}

std::uint64_t order(std::uint64_t a, std::uint64_t p) {
    std::uint64_t o = 1, x = a % p;
    while (x != 1) {
        x = mul(x, a, p);
        ++o;
    }
    return o;
}

} // namespace mckay::modp
