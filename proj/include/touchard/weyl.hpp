#pragma once

/**
 * @file weyl.hpp
 * @brief Normal-ordered elements of the Weyl algebra generated by x and D = d/dx.
 *
 * A WeylExpr is a finite sum  sum c_{a,b} x^a D^b  with every x to the left
 * of every D. Products are normal-ordered by rewriting D x -> x D + 1, one
 * derivative at a time; no closed-form Stirling or Lah formula is used, so
 * the results serve as an independent oracle for those formulas.
 */

#include "touchard/poly.hpp"

#include <map>
#include <string>
#include <utility>

namespace touchard {

class WeylExpr {
public:
    /// (x power, D power)
    using Key = std::pair<unsigned, unsigned>;
    using TermMap = std::map<Key, Rational>;

    WeylExpr() = default;
    explicit WeylExpr(TermMap terms);

    static WeylExpr identity() { return term(Rational(1), 0, 0); }
    static WeylExpr term(const Rational& c, unsigned x_power, unsigned d_power);
    /// Multiplication operator by the polynomial p (no derivatives).
    static WeylExpr from_poly(const Poly& p);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(unsigned x_power, unsigned d_power) const;
    /// Highest D power present; 0 for the zero operator.
    unsigned max_d_power() const;
    /// Groups terms by D power: returns P_b(x) with the operator equal to sum_b P_b(x) D^b.
    Poly coefficient_of_d(unsigned d_power) const;

    WeylExpr& operator+=(const WeylExpr& o);
    WeylExpr& operator*=(const Rational& s);

    friend WeylExpr operator+(WeylExpr a, const WeylExpr& b) { return a += b; }
    friend WeylExpr operator*(WeylExpr a, const Rational& s) { return a *= s; }
    friend WeylExpr operator*(const Rational& s, WeylExpr a) { return a *= s; }
    friend WeylExpr operator*(const WeylExpr& a, const WeylExpr& b);

    friend bool operator==(const WeylExpr&, const WeylExpr&) = default;

    std::string to_string() const;

private:
    void add_term(const Key& k, const Rational& c);
    TermMap terms_;
};

/// Normal-ordered product a * b.
WeylExpr weyl_mul(const WeylExpr& a, const WeylExpr& b);

/// Normal-ordered (x^m D)^n; n = 0 gives the identity. Throws std::invalid_argument for m = 0.
WeylExpr power_qd(unsigned m, unsigned n);

/// Integer power by repeated weyl_mul.
WeylExpr weyl_pow(const WeylExpr& w, unsigned n);

/// P(x) with w e^x = e^x P(x).
Poly apply_to_exp(const WeylExpr& w);

/// L(x) with w e^{1/x} = e^{1/x} L(x).
LaurentPoly apply_to_exp_inv(const WeylExpr& w);

/// Literal action of w on the polynomial p.
Poly apply_to_poly(const WeylExpr& w, const Poly& p);

}  // namespace touchard
