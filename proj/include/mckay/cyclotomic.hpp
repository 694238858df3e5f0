// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "mckay/modp.hpp"
#include "mckay/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace mckay {

int euler_phi(int n);

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
/// Computed by dividing x^n - 1 by the product of Phi_d over proper divisors d | n.
const std::vector<BigInt>& cyclotomic_polynomial(int n);

/// Exact element of Q(zeta_N) in the power basis {1, z, ..., z^{phi(N)-1}}
/// reduced modulo Phi_N.  Two elements are equal as complex numbers iff their
/// coefficient vectors agree after lifting both to the lcm of the conductors.
class CycElem {
public:
    CycElem() : conductor_(1), coeffs_(1) {} // zero in Q(zeta_1) = Q

    static CycElem zero(int conductor);
    static CycElem one(int conductor);
    /// zeta_conductor^exponent; the exponent is reduced mod conductor.
    static CycElem root_of_unity(int conductor, long long exponent);
    static CycElem from_rational(const Rational& r, int conductor = 1);
    /// Coefficients of a polynomial in zeta_N (any length); reduced mod Phi_N.
    static CycElem from_poly(int conductor, std::vector<Rational> poly);

    int conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const { return conductor_ == 1 || is_rational_slow(); }
    /// Requires is_rational().
    Rational rational_value() const;

    /// Rewrite in Q(zeta_M); requires conductor | M.
    CycElem lifted_to(int m) const;

    CycElem operator-() const;
    CycElem& operator+=(const CycElem& rhs) { *this = *this + rhs; return *this; }
    CycElem& operator-=(const CycElem& rhs) { *this = *this - rhs; return *this; }
    CycElem& operator*=(const CycElem& rhs) { *this = *this * rhs; return *this; }

    friend CycElem operator+(const CycElem& a, const CycElem& b);
    friend CycElem operator-(const CycElem& a, const CycElem& b);
    friend CycElem operator*(const CycElem& a, const CycElem& b);
    friend CycElem operator/(const CycElem& a, const CycElem& b);

    /// Multiplicative inverse; throws DivisionByZero on zero.
    CycElem inverse() const;
    /// The Galois automorphism zeta -> zeta^{-1} (= complex conjugation).
    CycElem conjugate() const;

    friend bool operator==(const CycElem& a, const CycElem& b);
    friend bool operator!=(const CycElem& a, const CycElem& b) { return !(a == b); }

    /// Ring homomorphism determined by zeta_N -> g^{(p-1)/N} mod p.
    /// Requires p ≡ 1 (mod N) and denominators coprime to p.
    ModPScalar to_modp(std::uint64_t p, std::uint64_t g) const;

    /// Rendering in the expression grammar, e.g. "1/2 - 1/2*z^3".
    std::string str() const;

    /// Exact serialization used as a hash key ("N:c0,c1,...").
    std::string key() const;

private:
    bool is_rational_slow() const;

    int conductor_;
    std::vector<Rational> coeffs_; // length phi(conductor_)
};

/// Parse the cyclotomic expression grammar with 'z' = zeta_conductor.
///   elem := ['+'|'-'] term (('+'|'-') term)*
///   term := coef ('*'? power)? | power
///   power := 'z' ('^' int)?
///   coef := int ('/' posint)?
/// Whitespace is ignored; exponents are reduced mod conductor.
CycElem parse_cyc(std::string_view expr, int conductor);

} // namespace mckay
