#pragma once

/**
 * @file poly.hpp
 * @brief Dense univariate polynomials and Laurent polynomials in x over Rational.
 *
 * Coefficients are stored lowest degree first. Trailing zeros are trimmed
 * after every operation, so the zero polynomial is the empty list and
 * equality is plain vector equality.
 */

#include "touchard/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace touchard {

class Poly {
public:
    Poly() = default;
    Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
    explicit Poly(std::vector<Rational> coeffs);

    static Poly monomial(const Rational& c, unsigned degree);
    static Poly x() { return monomial(Rational(1), 1); }

    std::span<const Rational> coeffs() const { return c_; }
    /// Coefficient of x^i; zero past the stored range.
    Rational coeff(unsigned i) const;

    bool is_zero() const { return c_.empty(); }
    /// Degree of the highest nonzero term; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    /// Degree of the lowest nonzero term; -1 for the zero polynomial.
    int low_degree() const;
    bool is_constant() const { return c_.size() <= 1; }

    Poly derivative() const;
    Rational eval(const Rational& at) const;
    /// p(-x).
    Poly reflect() const;
    /// Multiplies by x^k.
    Poly shift_up(unsigned k) const;
    /// Divides by x^k; throws std::domain_error if some term of degree < k is nonzero.
    Poly shift_down(unsigned k) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rational& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) { return a * Rational(-1); }
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
    friend Poly operator*(const Poly& a, const Poly& b);

    friend bool operator==(const Poly&, const Poly&) = default;

    /// Human-readable form, e.g. "x + 3*x^2 - 1/2*x^3".
    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> c_;
};

Poly pow(const Poly& p, unsigned e);

class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Poly& p);  // NOLINT(google-explicit-constructor)
    LaurentPoly(int min_degree, std::vector<Rational> coeffs);

    static LaurentPoly monomial(const Rational& c, int degree);

    int min_degree() const { return min_; }
    std::span<const Rational> coeffs() const { return c_; }
    Rational coeff(int degree) const;
    bool is_zero() const { return c_.empty(); }
    /// Highest stored degree; meaningless for the zero element.
    int max_degree() const { return min_ + static_cast<int>(c_.size()) - 1; }

    LaurentPoly derivative() const;
    /// Converts to Poly when no negative power survives.
    std::optional<Poly> to_poly() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Rational& s);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
        return a += b * Rational(-1);
    }
    friend LaurentPoly operator*(LaurentPoly a, const Rational& s) { return a *= s; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    std::string to_string() const;

private:
    void normalize();
    int min_ = 0;
    std::vector<Rational> c_;
};

}  // namespace touchard
