#pragma once

/**
 * @file identities.hpp
 * @brief Coefficient-exact verification of the Touchard generating-function,
 * operational, and cross-family identities.
 *
 * Every check compares a "defining" side, built from the Weyl normal-ordering
 * oracle or a direct construction, against the closed form being claimed.
 * The first disagreeing coefficient is reported as (index, expected, actual)
 * with `expected` taken from the defining side.
 *
 * Substituted argument used by the shift-action family:
 *     m = 1:  x e^t
 *     m = 2:  x / (1 - t x)
 *     m >= 3: x (1 - (m-1) t x^(m-1))^(-1/(m-1))
 */

#include "touchard/series.hpp"
#include "touchard/stirling.hpp"
#include "touchard/weyl.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace touchard {

struct Mismatch {
    unsigned index = 0;  ///< t power, D power, or polynomial index depending on the check
    Poly expected;
    Poly actual;
    std::string where;  ///< which part of a composite check disagreed
};

enum class Status { pass, fail };

struct VerificationReport {
    std::string identity_id;
    std::vector<std::pair<std::string, long>> parameters;  ///< in insertion order
    unsigned verified_order = 0;
    std::optional<Mismatch> first_mismatch;

    Status status() const { return first_mismatch ? Status::fail : Status::pass; }
    bool passed() const { return !first_mismatch; }
};

/// x * sigma_m(t, x) to the given order.
Series substitution_argument(unsigned m, unsigned order);

/// exp(x sigma_m - x), the closed form of sum t^n/n! T_n^(m).
Series touchard_gf_closed(unsigned m, unsigned order);

VerificationReport verify_shift_action(unsigned m, unsigned order, const Poly& f);
VerificationReport verify_gf(unsigned m, unsigned order);
VerificationReport verify_shifted_gf(unsigned m, unsigned ell, unsigned order);

/// (x^m + x^m D)^p == sum_r C(p,r) T_{p-r}^(m)(x) (x^m D)^r as Weyl elements.
/// Mismatch index is the D power whose polynomial coefficient differs.
VerificationReport verify_operational_expansion(unsigned m, unsigned p);

/// L_n(x) extracted from (1/(1-t)) exp(-x t/(1-t)).
Poly laguerre(unsigned n);
/// L_n(x) from (n+1) L_{n+1} = (2n+1-x) L_n - n L_{n-1}.
Poly laguerre_recurrence(unsigned n);

/// corrected:  T_n^(2)(x) = n! x^n [L_n(-x) - L_{n-1}(-x)]
/// as_printed: T_n^(2)(x) = n! [x^n L_n(-x) - x^(n-1) L_{n-1}(-x)]
VerificationReport verify_laguerre_link(unsigned n, Form form = Form::corrected);

/// Krall-Frink Bessel polynomials: y_{-1} = y_0 = 1, y_n = (2n-1) x y_{n-1} + y_{n-2}.
Poly bessel_poly(int n);

/// e^{-1/x} (x^3 D)^n e^{1/x}. Throws std::logic_error if a negative power survives.
LaurentPoly delta_poly(unsigned n);

/// corrected:  delta_n(-x) = x^n y_{n-1}(x),
///             sum t^k/k! delta_k(-x) = exp((1 - sqrt(1 - 2 t x^2)) / x)   (k <= order)
/// as_printed: delta_n(-x) = x^(2n) y_{n-1}(1/x),
///             sum (-t)^k/k! delta_k(-x) = exp((1 - sqrt(1 - 2 t x)) / x)
/// The identity part is checked first; its mismatch index is n.
VerificationReport verify_bessel_link(unsigned n, unsigned order, Form form = Form::corrected);

/// Three Touchard routes agree for (m, n).
VerificationReport verify_touchard_routes(unsigned m, unsigned n, Form form = Form::corrected);
/// Closed-form generalized Stirling row equals the row read off the Weyl oracle.
VerificationReport verify_stirling_oracle(unsigned m, unsigned n, Form form = Form::corrected);
/// hoppe_derivative(f, order) == order! [t^order] series_exp(f).
VerificationReport verify_hoppe(const Series& f, unsigned order);
VerificationReport verify_lowering(unsigned n);

/// Deterministic pseudo-random polynomials with small rational coefficients.
std::vector<Poly> sample_polys(std::size_t count, unsigned max_degree, std::uint64_t seed);
/// Deterministic pseudo-random scalar series with zero constant term.
std::vector<Series> sample_scalar_series(std::size_t count, unsigned order, std::uint64_t seed);

}  // namespace touchard
