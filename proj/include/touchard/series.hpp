#pragma once

/**
 * @file series.hpp
 * @brief Truncated formal power series in t with polynomial-in-x coefficients.
 *
 * A Series of order O stores exactly O+1 coefficient slots (t^0 .. t^O).
 * Products and compositions drop every term above t^O; nothing beyond
 * the truncation order is ever read or written. Convergence questions do
 * not arise: all identities are compared coefficient by coefficient.
 */

#include "touchard/poly.hpp"

#include <span>
#include <vector>

namespace touchard {

inline constexpr unsigned default_order = 10;

class Series {
public:
    /// Zero series of the given order.
    explicit Series(unsigned order = default_order);
    /// Takes coefficients for t^0.. ; missing slots are zero, extra slots are dropped.
    Series(unsigned order, std::vector<Poly> coeffs);

    /// The constant series c.
    static Series constant(const Poly& c, unsigned order);
    /// c * t^k (zero when k > order).
    static Series monomial(const Poly& c, unsigned k, unsigned order);
    /// exp(t) with scalar coefficients 1/n!.
    static Series exp_t(unsigned order);

    unsigned order() const { return static_cast<unsigned>(c_.size()) - 1; }
    std::span<const Poly> coeffs() const { return c_; }
    const Poly& operator[](unsigned n) const { return c_.at(n); }
    bool is_zero() const;

    /// Same coefficients, cut (or zero-padded) to a new order.
    Series truncate(unsigned order) const;
    /// d/dt; the result has order O-1 (order 0 maps to the order-0 zero series).
    Series derivative_t() const;
    /// Applies a Poly -> Poly map to every coefficient.
    template <typename F>
    Series map(F&& f) const {
        Series out(order());
        for (unsigned n = 0; n <= order(); ++n)
            out.c_[n] = f(c_[n]);
        return out;
    }

    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    Series& operator*=(const Poly& s);

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(Series a, const Poly& s) { return a *= s; }
    friend Series operator*(const Poly& s, Series a) { return a *= s; }
    /// Cauchy product; throws std::invalid_argument on order mismatch.
    friend Series operator*(const Series& a, const Series& b);

    friend bool operator==(const Series&, const Series&) = default;

private:
    std::vector<Poly> c_;
};

/// exp(a) = sum_{k<=O} a^k/k!. Throws std::domain_error if a has a nonzero t^0 term.
Series series_exp(const Series& a);

/// Multiplicative inverse of a series whose t^0 coefficient is 1.
/// Throws std::domain_error otherwise.
Series series_geom_inverse(const Series& a);

/// a^r via the generalized binomial series sum_k C(r,k) (a-1)^k.
/// Requires the t^0 coefficient of a to be 1 (std::domain_error otherwise).
Series series_pow(const Series& a, const Rational& r);

/// Integer power a^e by repeated multiplication; any constant term allowed.
Series series_pow(const Series& a, unsigned e);

/// p(X): substitutes the series X for x in the polynomial p (Horner scheme).
Series substitute(const Poly& p, const Series& x_value);

}  // namespace touchard
