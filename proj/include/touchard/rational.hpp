#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational scalar backed by GMP.
 *
 * Every value is kept reduced: denominator positive, gcd(|num|, den) = 1,
 * and zero stored as 0/1. Serializes as "p/q", or "p" when q = 1.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace touchard {

using BigInt = mpz_class;

class Rational {
public:
    Rational() = default;
    Rational(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& value) : v_(value) {}  // NOLINT(google-explicit-constructor)

    /// Throws std::domain_error when the denominator is zero.
    Rational(const BigInt& num, const BigInt& den);
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    /// Parses "p" or "p/q"; throws std::invalid_argument on malformed text.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return v_.get_num(); }
    BigInt denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    std::string to_string() const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& r) { v_ += r.v_; return *this; }
    Rational& operator-=(const Rational& r) { v_ -= r.v_; return *this; }
    Rational& operator*=(const Rational& r) { v_ *= r.v_; return *this; }
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& r);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

/// r^e for a non-negative integer exponent.
Rational pow(const Rational& r, unsigned e);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

/// Generalized binomial coefficient C(r, k) for a rational upper argument.
Rational binomial(const Rational& r, unsigned k);

/// Rising factorial r (r+1) ... (r+n-1); the empty product for n = 0 is 1.
Rational rising_factorial(const Rational& r, unsigned n);

}  // namespace touchard
