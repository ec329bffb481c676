#pragma once

/**
 * @file stirling.hpp
 * @brief Classical and generalized Stirling numbers of the second kind.
 *
 * Argument order follows S2(k, n) in the mathematical notation but the C++
 * functions take (n, k) like the conventional S(n, k): n is the operator
 * power, k the number of blocks / the derivative order.
 *
 * The generalized family S2^(m)(k, n) is normalized so that
 *
 *     (x^m D)^n = [(m-1) x^(m-1)]^n  sum_k S2^(m)(k, n) x^k D^k,   m >= 2,
 *
 * which makes its entries rational for m >= 3; (m-1)^n S2^(m)(k, n) is
 * always a non-negative integer. m = 2 gives the Lah numbers.
 */

#include "touchard/rational.hpp"
#include "touchard/series.hpp"

#include <vector>

namespace touchard {

/// Which transcription of a closed formula to evaluate. `as_printed` keeps
/// known misprints so they can be shown to fail; `corrected` is the default.
enum class Form { corrected, as_printed };

/// S(n, k) = (1/k!) sum_j (-1)^(k-j) C(k,j) j^n, with 0^0 = 1.
/// Throws std::invalid_argument when k > n.
Rational stirling2(unsigned n, unsigned k);

/// Generalized Stirling number for q(x) = x^m:
///   (1/k!) sum_{j=1..k} (-1)^(k-j) C(k,j) (j/(m-1))_n      (rising factorial)
/// m = 1 delegates to stirling2. With Form::as_printed the rising factorial
/// has length m instead of n. Throws std::invalid_argument when k > n or m = 0.
Rational gen_stirling(unsigned m, unsigned n, unsigned k, Form form = Form::corrected);

/// First k index stored in a triangle row: row 0 holds only k = 0, rows n >= 1 hold k = 1..n.
constexpr unsigned row_k_begin(unsigned n) { return n == 0 ? 0 : 1; }

/// Row n of the S2^(m) triangle from the closed formula, indexed from row_k_begin(n).
std::vector<Rational> stirling_row(unsigned m, unsigned n, Form form = Form::corrected);

/// Row n extracted from the normal-ordered (x^m D)^n. Throws std::logic_error
/// if a term does not have the shape x^((m-1)n + b) D^b.
std::vector<Rational> triangle_from_weyl(unsigned m, unsigned n);

struct Triangle {
    unsigned m = 1;
    std::vector<std::vector<Rational>> rows;  ///< rows[n][k - row_k_begin(n)]
};

Triangle make_triangle(unsigned m, unsigned n_max, Form form = Form::corrected);

/// order-th derivative at t = 0 of exp(f(t)) through Hoppe's composite
/// derivative expansion with g = exp:
///   sum_k g^(k)(f(0))/k! * A_{order,k}(0),
///   A_{order,k}(t) = sum_j C(k,j) (-f(t))^(k-j) (d/dt)^order f(t)^j.
/// f must have scalar (x-free) coefficients, zero constant term (so that
/// g^(k)(f(0)) = 1 stays rational) and truncation order >= `order`.
/// Throws std::invalid_argument otherwise.
Rational hoppe_derivative(const Series& f, unsigned order);

}  // namespace touchard
