// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace mckay {

// Exact scalar substrate.  cpp_rational keeps gcd(|num|, den) = 1 and den >= 1
// as a representation invariant, so values are always canonical.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& r) { return numerator(r); }
inline BigInt rat_den(const Rational& r) { return denominator(r); }

/// "p" for integers, "p/q" otherwise.
inline std::string rational_str(const Rational& r) {
    if (rat_den(r) == 1) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

inline bool is_integer(const Rational& r) { return rat_den(r) == 1; }

inline std::int64_t to_int64(const BigInt& v) { return static_cast<std::int64_t>(v); }

} // namespace mckay
