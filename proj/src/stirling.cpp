#include "touchard/stirling.hpp"

#include "touchard/weyl.hpp"

#include <stdexcept>
#include <string>

namespace touchard {

namespace {

void check_k(unsigned n, unsigned k) {
    if (k > n)
        throw std::invalid_argument("Stirling index k=" + std::to_string(k) + " exceeds n=" +
                                    std::to_string(n));
}

Rational alternating_sign(unsigned e) { return Rational(e % 2 == 0 ? 1 : -1); }

}  // namespace

Rational stirling2(unsigned n, unsigned k) {
    check_k(n, k);
    BigInt sum = 0;
    for (unsigned j = 0; j <= k; ++j) {
        BigInt jn;
        mpz_ui_pow_ui(jn.get_mpz_t(), j, n);  // 0^0 = 1
        BigInt term = binomial(k, j) * jn;
        if ((k - j) % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return Rational(sum, factorial(k));
}

Rational gen_stirling(unsigned m, unsigned n, unsigned k, Form form) {
    if (m == 0)
        throw std::invalid_argument("gen_stirling: m must be positive");
    if (m == 1)
        return stirling2(n, k);
    check_k(n, k);
    // j = 0 term: Gamma(n + 0)/Gamma(0) -> 0 for n >= 1, 1 for n = 0.
    if (k == 0)
        return n == 0 ? Rational(1) : Rational(0);
    const unsigned length = form == Form::corrected ? n : m;
    const Rational step(1, static_cast<long>(m - 1));
    Rational sum;
    for (unsigned j = 1; j <= k; ++j)
        sum += alternating_sign(k - j) * Rational(binomial(k, j)) *
               rising_factorial(Rational(static_cast<long>(j)) * step, length);
    return sum / Rational(factorial(k));
}

std::vector<Rational> stirling_row(unsigned m, unsigned n, Form form) {
    std::vector<Rational> row;
    for (unsigned k = row_k_begin(n); k <= n; ++k)
        row.push_back(gen_stirling(m, n, k, form));
    return row;
}

std::vector<Rational> triangle_from_weyl(unsigned m, unsigned n) {
    const WeylExpr w = power_qd(m, n);
    const unsigned shift = (m - 1) * n;
    const Rational scale = pow(Rational(static_cast<long>(m == 1 ? 1 : m - 1)), n);
    std::vector<Rational> row(n + 1 - row_k_begin(n));
    for (const auto& [key, c] : w.terms()) {
        auto [a, b] = key;
        if (a != shift + b || b < row_k_begin(n) || b > n)
            throw std::logic_error("triangle_from_weyl: term x^" + std::to_string(a) + " D^" +
                                   std::to_string(b) + " breaks the expected shape for m=" +
                                   std::to_string(m) + ", n=" + std::to_string(n));
        row[b - row_k_begin(n)] = c / scale;
    }
    return row;
}

Triangle make_triangle(unsigned m, unsigned n_max, Form form) {
    Triangle t{m, {}};
    for (unsigned n = 0; n <= n_max; ++n)
        t.rows.push_back(stirling_row(m, n, form));
    return t;
}

Rational hoppe_derivative(const Series& f, unsigned order) {
    if (f.order() < order)
        throw std::invalid_argument("hoppe_derivative: series truncated at order " +
                                    std::to_string(f.order()) + " < " + std::to_string(order));
    for (const auto& c : f.coeffs())
        if (!c.is_constant())
            throw std::invalid_argument("hoppe_derivative: coefficients must be scalars");
    if (!f[0].is_zero())
        throw std::invalid_argument("hoppe_derivative: f(0) must vanish");

    const unsigned top = f.order();
    const Series minus_f = f * Poly(Rational(-1));
    // (d/dt)^order f^j for j = 0..order, each of order top - order.
    std::vector<Series> d_powers;
    std::vector<Series> neg_powers;
    for (unsigned j = 0; j <= order; ++j) {
        Series dj = series_pow(f, j);
        for (unsigned i = 0; i < order; ++i)
            dj = dj.derivative_t();
        d_powers.push_back(std::move(dj));
        neg_powers.push_back(series_pow(minus_f, j).truncate(top - order));
    }

    Rational total;
    for (unsigned k = 0; k <= order; ++k) {
        Series a_mk(top - order);
        for (unsigned j = 0; j <= k; ++j)
            a_mk += neg_powers[k - j] * d_powers[j] * Poly(Rational(binomial(k, j)));
        // g^(k)(f(0)) = exp(0) = 1
        total += a_mk[0].coeff(0) / Rational(factorial(k));
    }
    return total;
}

}  // namespace touchard
