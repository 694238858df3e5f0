// SPDX-License-Identifier: Apache-2.0
#include "mckay/cyclotomic.hpp"

#include "mckay/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace mckay {

int euler_phi(int n) {
    int result = n;
    for (int d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            result -= result / d;
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

// Dense polynomials, index = degree.  Trailing zeros are trimmed.

void trim(std::vector<Rational>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// In-place remainder modulo a monic integer polynomial.
void reduce_mod(std::vector<Rational>& p, const std::vector<BigInt>& phi) {
    const std::size_t deg = phi.size() - 1;
    while (p.size() > deg) {
        Rational lead = p.back();
        std::size_t shift = p.size() - 1 - deg;
        if (lead != 0) {
            for (std::size_t i = 0; i < deg; ++i) {
                p[shift + i] -= lead * Rational(phi[i]);
            }
        }
        p.pop_back();
    }
    trim(p);
}

std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rational> r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] != 0) r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

// Quotient and remainder for division by an arbitrary nonzero polynomial over Q.
void poly_divmod(std::vector<Rational> num, const std::vector<Rational>& den,
                 std::vector<Rational>& quot, std::vector<Rational>& rem) {
    quot.assign(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rational(0));
    const Rational lead = den.back();
    while (num.size() >= den.size() && !num.empty()) {
        Rational c = num.back() / lead;
        std::size_t shift = num.size() - den.size();
        quot[shift] = c;
        for (std::size_t i = 0; i < den.size(); ++i) {
            num[shift + i] -= c * den[i];
        }
        num.pop_back();
        trim(num);
        if (num.size() < den.size()) break;
    }
    trim(quot);
    rem = std::move(num);
}

// Exact division of integer polynomials (used only where divisibility holds).
std::vector<BigInt> int_poly_divide(const std::vector<BigInt>& num, const std::vector<BigInt>& den) {
    std::vector<Rational> n(num.size()), d(den.size()), q, r;
    for (std::size_t i = 0; i < num.size(); ++i) n[i] = Rational(num[i]);
    for (std::size_t i = 0; i < den.size(); ++i) d[i] = Rational(den[i]);
    poly_divmod(std::move(n), d, q, r);
    if (!r.empty()) fail("InternalError", "cyclotomic polynomial division left a remainder");
    std::vector<BigInt> out(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (!is_integer(q[i])) fail("InternalError", "cyclotomic polynomial has a fractional coefficient");
        out[i] = rat_num(q[i]);
    }
    return out;
}

} // namespace

const std::vector<BigInt>& cyclotomic_polynomial(int n) {
    static std::map<int, std::vector<BigInt>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);

    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n < 1) fail("InternalError", "cyclotomic polynomial needs n >= 1");

    std::function<const std::vector<BigInt>&(int)> get = [&](int m) -> const std::vector<BigInt>& {
        auto found = cache.find(m);
        if (found != cache.end()) return found->second;
        // x^m - 1 divided by the product of Phi_d over proper divisors d | m.
        std::vector<BigInt> num(m + 1);
        num[0] = -1;
        num[m] = 1;
        for (int d = 1; d < m; ++d) {
            if (m % d == 0) num = int_poly_divide(num, get(d));
        }
        return cache.emplace(m, std::move(num)).first->second;
    };
    return get(n);
}

CycElem CycElem::zero(int conductor) {
    CycElem e;
    e.conductor_ = conductor;
    e.coeffs_.assign(euler_phi(conductor), Rational(0));
    return e;
}

CycElem CycElem::one(int conductor) { return from_rational(Rational(1), conductor); }

CycElem CycElem::from_rational(const Rational& r, int conductor) {
    CycElem e = zero(conductor);
    e.coeffs_[0] = r;
    return e;
}

CycElem CycElem::root_of_unity(int conductor, long long exponent) {
    long long k = exponent % conductor;
    if (k < 0) k += conductor;
    std::vector<Rational> poly(static_cast<std::size_t>(k) + 1);
    poly[static_cast<std::size_t>(k)] = 1;
    return from_poly(conductor, std::move(poly));
}

CycElem CycElem::from_poly(int conductor, std::vector<Rational> poly) {
    if (conductor < 1) fail("InternalError", "conductor must be positive");
    reduce_mod(poly, cyclotomic_polynomial(conductor));
    poly.resize(euler_phi(conductor), Rational(0));
    CycElem e;
    e.conductor_ = conductor;
    e.coeffs_ = std::move(poly);
    return e;
}

bool CycElem::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool CycElem::is_one() const {
    if (coeffs_[0] != 1) return false;
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool CycElem::is_rational_slow() const {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c == 0; });
}

Rational CycElem::rational_value() const {
    if (!is_rational()) fail("InternalError", "value is not rational: " + str());
    return coeffs_[0];
}

CycElem CycElem::lifted_to(int m) const {
    if (m == conductor_) return *this;
    if (m % conductor_ != 0) fail("ConductorMismatch",
        "cannot lift conductor " + std::to_string(conductor_) + " to " + std::to_string(m));
    const int stride = m / conductor_;
    std::vector<Rational> poly(static_cast<std::size_t>(coeffs_.size() - 1) * stride + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) poly[i * stride] = coeffs_[i];
    return from_poly(m, std::move(poly));
}

CycElem CycElem::operator-() const {
    CycElem r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

namespace {

int common_conductor(const CycElem& a, const CycElem& b) {
    return std::lcm(a.conductor(), b.conductor());
}

} // namespace

CycElem operator+(const CycElem& a, const CycElem& b) {
    int n = common_conductor(a, b);
    CycElem x = a.lifted_to(n), y = b.lifted_to(n);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
    return x;
}

CycElem operator-(const CycElem& a, const CycElem& b) {
    int n = common_conductor(a, b);
    CycElem x = a.lifted_to(n), y = b.lifted_to(n);
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] -= y.coeffs_[i];
    return x;
}

CycElem operator*(const CycElem& a, const CycElem& b) {
    int n = common_conductor(a, b);
    CycElem x = a.lifted_to(n), y = b.lifted_to(n);
    std::vector<Rational> px(x.coeffs_.begin(), x.coeffs_.end());
    std::vector<Rational> py(y.coeffs_.begin(), y.coeffs_.end());
    trim(px);
    trim(py);
    return CycElem::from_poly(n, poly_mul(px, py));
}

CycElem CycElem::inverse() const {
    if (is_zero()) fail("DivisionByZero", "inverse of zero cyclotomic element");
    if (is_rational()) return from_rational(Rational(1) / coeffs_[0], conductor_);

    // Extended Euclid in Q[x]: u*a + v*Phi_N = gcd = nonzero constant, so
    // a^{-1} = u / gcd modulo Phi_N.
    const auto& phi_int = cyclotomic_polynomial(conductor_);
    std::vector<Rational> r0(phi_int.size());
    for (std::size_t i = 0; i < phi_int.size(); ++i) r0[i] = Rational(phi_int[i]);
    std::vector<Rational> r1(coeffs_.begin(), coeffs_.end());
    trim(r1);
    std::vector<Rational> u0 = {}, u1 = {Rational(1)}; // coefficients of `a` in r0, r1

    while (r1.size() > 1) {
        std::vector<Rational> q, rem;
        poly_divmod(r0, r1, q, rem);
        std::vector<Rational> qa = poly_mul(q, u1);
        std::vector<Rational> u2 = u0;
        if (u2.size() < qa.size()) u2.resize(qa.size());
        for (std::size_t i = 0; i < qa.size(); ++i) u2[i] -= qa[i];
        trim(u2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (r1.empty()) fail("InternalError", "nonzero element shares a factor with Phi_N");
    const Rational g = r1[0];
    for (auto& c : u1) c /= g;
    return from_poly(conductor_, std::move(u1));
}

CycElem operator/(const CycElem& a, const CycElem& b) { return a * b.inverse(); }

CycElem CycElem::conjugate() const {
    std::vector<Rational> poly(static_cast<std::size_t>(conductor_));
    poly.resize(std::max<std::size_t>(conductor_, 1), Rational(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        std::size_t image = k == 0 ? 0 : static_cast<std::size_t>(conductor_) - k;
        poly[image] += coeffs_[k];
    }
    return from_poly(conductor_, std::move(poly));
}

bool operator==(const CycElem& a, const CycElem& b) {
    int n = common_conductor(a, b);
    return a.lifted_to(n).coeffs_ == b.lifted_to(n).coeffs_;
}

ModPScalar CycElem::to_modp(std::uint64_t p, std::uint64_t g) const {
    if ((p - 1) % static_cast<std::uint64_t>(conductor_) != 0) {
        fail("BadPrime", "p = " + std::to_string(p) + " is not 1 mod " + std::to_string(conductor_));
    }
    const std::uint64_t w = modp::pow(g, (p - 1) / static_cast<std::uint64_t>(conductor_), p);
    std::uint64_t acc = 0, wk = 1;
    for (const Rational& c : coeffs_) {
        if (c != 0) {
            BigInt num = rat_num(c) % BigInt(p);
            if (num < 0) num += p;
            BigInt den = rat_den(c) % BigInt(p);
            if (den == 0) fail("DenominatorCollision", "denominator divisible by p = " + std::to_string(p));
            std::uint64_t term = modp::mul(static_cast<std::uint64_t>(num),
                                           modp::inv(static_cast<std::uint64_t>(den), p), p);
            acc = modp::add(acc, modp::mul(term, wk, p), p);
        }
        wk = modp::mul(wk, w, p);
    }
    return {acc, p};
}

std::string CycElem::str() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        const bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (first) {
            if (negative) out << "-";
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            out << rational_str(mag);
        } else {
            if (mag != 1) out << rational_str(mag) << "*";
            out << "z";
            if (k > 1) out << "^" << k;
        }
    }
    if (first) return "0";
    return out.str();
}

std::string CycElem::key() const {
    std::string s = std::to_string(conductor_) + ":";
    for (const Rational& c : coeffs_) {
        s += rat_num(c).str();
        if (rat_den(c) != 1) {
            s += "/";
            s += rat_den(c).str();
        }
        s += ",";
    }
    return s;
}

namespace {

class ExprParser {
public:
    ExprParser(std::string_view text, int conductor) : text_(text), conductor_(conductor) {}

    CycElem parse() {
        skip_ws();
        CycElem acc = CycElem::zero(conductor_);
        bool negate = consume_sign();
        acc = negate ? acc - term() : acc + term();
        skip_ws();
        while (pos_ < text_.size()) {
            char op = text_[pos_];
            if (op != '+' && op != '-') error("expected '+' or '-'");
            ++pos_;
            skip_ws();
            CycElem t = term();
            acc = op == '-' ? acc - t : acc + t;
            skip_ws();
        }
        return acc;
    }

private:
    [[noreturn]] void error(const std::string& msg) const {
        throw ParseError(msg, 1, static_cast<int>(pos_) + 1);
    }

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }

    bool consume_sign() {
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
            bool neg = text_[pos_] == '-';
            ++pos_;
            skip_ws();
            return neg;
        }
        return false;
    }

    bool at_digit() const { return pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9'; }

    BigInt digits() {
        if (!at_digit()) error("expected a digit");
        BigInt v = 0;
        while (at_digit()) {
            v = v * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    long long exponent() {
        bool neg = false;
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
            neg = text_[pos_] == '-';
            ++pos_;
            skip_ws();
        }
        BigInt v = digits() % conductor_;
        long long e = static_cast<long long>(v);
        return neg ? -e : e;
    }

    // power := 'z' ('^' int)?
    CycElem power() {
        ++pos_; // consume 'z'
        skip_ws();
        long long e = 1;
        if (pos_ < text_.size() && text_[pos_] == '^') {
            ++pos_;
            skip_ws();
            e = exponent();
        }
        return CycElem::root_of_unity(conductor_, e);
    }

    // term := coef ('*'? power)? | power
    CycElem term() {
        if (pos_ < text_.size() && text_[pos_] == 'z') return power();
        BigInt num = digits();
        BigInt den = 1;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            skip_ws();
            std::size_t den_pos = pos_;
            den = digits();
            if (den == 0) {
                fail("ZeroDenominator",
                     "denominator is zero at column " + std::to_string(den_pos + 1));
            }
        }
        Rational coef(num, den);
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '*') {
            ++pos_;
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != 'z') error("expected 'z' after '*'");
            return CycElem::from_rational(coef, conductor_) * power();
        }
        if (pos_ < text_.size() && text_[pos_] == 'z') {
            return CycElem::from_rational(coef, conductor_) * power();
        }
        return CycElem::from_rational(coef, conductor_);
    }

    std::string_view text_;
    int conductor_;
    std::size_t pos_ = 0;
};

} // namespace

CycElem parse_cyc(std::string_view expr, int conductor) {
    if (conductor < 1) fail("InternalError", "conductor must be positive");
    ExprParser parser(expr, conductor);
    return parser.parse();
}

} // namespace mckay
