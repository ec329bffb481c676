#include "touchard/identities.hpp"

#include "touchard/touchard.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace touchard {

namespace {

Poly one() { return Poly(Rational(1)); }

Rational inv_factorial(unsigned n) { return Rational(BigInt(1), factorial(n)); }

std::optional<Mismatch> first_difference(const Series& expected, const Series& actual,
                                         const std::string& where) {
    for (unsigned n = 0; n <= expected.order(); ++n)
        if (expected[n] != actual[n])
            return Mismatch{n, expected[n], actual[n], where};
    return std::nullopt;
}

std::optional<Mismatch> first_difference(const WeylExpr& expected, const WeylExpr& actual,
                                         const std::string& where) {
    const unsigned top = std::max(expected.max_d_power(), actual.max_d_power());
    for (unsigned b = 0; b <= top; ++b) {
        Poly e = expected.coefficient_of_d(b);
        Poly a = actual.coefficient_of_d(b);
        if (e != a)
            return Mismatch{b, std::move(e), std::move(a), where};
    }
    return std::nullopt;
}

/// sum_{n<=order} t^n/n! * term(n)
template <typename F>
Series egf(unsigned order, F&& term) {
    std::vector<Poly> c;
    for (unsigned n = 0; n <= order; ++n)
        c.push_back(term(n) * inv_factorial(n));
    return Series(order, std::move(c));
}

/// t * c as an order-`order` series
Series linear_in_t(const Poly& c, unsigned order) { return Series::monomial(c, 1, order); }

}  // namespace

Series substitution_argument(unsigned m, unsigned order) {
    if (m == 0)
        throw std::invalid_argument("substitution_argument: m must be positive");
    const Poly x = Poly::x();
    if (m == 1)
        return Series::exp_t(order) * x;
    const Series one_s = Series::constant(one(), order);
    if (m == 2)
        return series_geom_inverse(one_s - linear_in_t(x, order)) * x;
    const long k = static_cast<long>(m - 1);
    const Series base = one_s - linear_in_t(Poly::monomial(Rational(k), m - 1), order);
    return series_pow(base, Rational(-1, k)) * x;
}

Series touchard_gf_closed(unsigned m, unsigned order) {
    return series_exp(substitution_argument(m, order) - Series::constant(Poly::x(), order));
}

VerificationReport verify_shift_action(unsigned m, unsigned order, const Poly& f) {
    VerificationReport r{"shift_action", {{"m", m}, {"deg_f", f.degree()}}, order, {}};
    const Series lhs = egf(order, [&](unsigned n) { return apply_to_poly(power_qd(m, n), f); });
    const Series rhs = substitute(f, substitution_argument(m, order));
    r.first_mismatch = first_difference(lhs, rhs, "t power");
    return r;
}

VerificationReport verify_gf(unsigned m, unsigned order) {
    VerificationReport r{"gf", {{"m", m}}, order, {}};
    const Series lhs = egf(order, [&](unsigned n) { return touchard_rodrigues(m, n).poly; });
    r.first_mismatch = first_difference(lhs, touchard_gf_closed(m, order), "t power");
    return r;
}

VerificationReport verify_shifted_gf(unsigned m, unsigned ell, unsigned order) {
    VerificationReport r{"shifted_gf", {{"m", m}, {"ell", ell}}, order, {}};
    const Series lhs =
        egf(order, [&](unsigned n) { return touchard_rodrigues(m, n + ell).poly; });
    const Series rhs = touchard_gf_closed(m, order) *
                       substitute(touchard_rodrigues(m, ell).poly, substitution_argument(m, order));
    r.first_mismatch = first_difference(lhs, rhs, "t power");
    return r;
}

VerificationReport verify_operational_expansion(unsigned m, unsigned p) {
    VerificationReport r{"operational_expansion", {{"m", m}, {"p", p}}, p, {}};
    const WeylExpr multiplicative =
        WeylExpr::term(Rational(1), m, 0) + WeylExpr::term(Rational(1), m, 1);
    const WeylExpr lhs = weyl_pow(multiplicative, p);
    WeylExpr rhs;
    for (unsigned k = 0; k <= p; ++k)
        rhs += Rational(binomial(p, k)) *
               weyl_mul(WeylExpr::from_poly(touchard_rodrigues(m, p - k).poly), power_qd(m, k));
    r.first_mismatch = first_difference(lhs, rhs, "D power");
    return r;
}

Poly laguerre(unsigned n) {
    const Series one_s = Series::constant(one(), n);
    const Series inv = series_geom_inverse(one_s - linear_in_t(one(), n));
    const Series gf = inv * series_exp(linear_in_t(Poly::monomial(Rational(-1), 1), n) * inv);
    return gf[n];
}

Poly laguerre_recurrence(unsigned n) {
    Poly prev;  // L_{-1} is never read with a nonzero weight
    Poly cur = one();
    for (unsigned k = 0; k < n; ++k) {
        const Poly factor = Poly(std::vector<Rational>{Rational(static_cast<long>(2 * k + 1)),
                                                       Rational(-1)});
        Poly next = (factor * cur - prev * Rational(static_cast<long>(k))) *
                    Rational(1, static_cast<long>(k + 1));
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

VerificationReport verify_laguerre_link(unsigned n, Form form) {
    if (n == 0)
        throw std::invalid_argument("verify_laguerre_link: n must be at least 1");
    VerificationReport r{"laguerre_link", {{"n", n}}, n, {}};
    const Poly expected = touchard_rodrigues(2, n).poly;
    const Poly ln = laguerre(n).reflect();
    const Poly ln1 = laguerre(n - 1).reflect();
    const Rational nf(factorial(n));
    const Poly actual = form == Form::corrected
                            ? (ln - ln1).shift_up(n) * nf
                            : (ln.shift_up(n) - ln1.shift_up(n - 1)) * nf;
    if (expected != actual)
        r.first_mismatch = Mismatch{n, expected, actual, "identity"};
    return r;
}

Poly bessel_poly(int n) {
    if (n < -1)
        throw std::invalid_argument("bessel_poly: n must be >= -1");
    Poly prev = one();  // y_{-1}
    Poly cur = one();   // y_0
    if (n == -1)
        return prev;
    for (int k = 1; k <= n; ++k) {
        Poly next = cur.shift_up(1) * Rational(2L * k - 1) + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

LaurentPoly delta_poly(unsigned n) {
    LaurentPoly d = apply_to_exp_inv(power_qd(3, n));
    if (!d.to_poly())
        throw std::logic_error("delta_poly: negative power survived at n=" + std::to_string(n) +
                               ": " + d.to_string());
    return d;
}

VerificationReport verify_bessel_link(unsigned n, unsigned order, Form form) {
    if (n == 0)
        throw std::invalid_argument("verify_bessel_link: n must be at least 1");
    VerificationReport r{"bessel_link", {{"n", n}}, order, {}};
    auto delta_reflected = [](unsigned k) { return delta_poly(k).to_poly()->reflect(); };

    const Poly expected = delta_reflected(n);
    const Poly y = bessel_poly(static_cast<int>(n) - 1);
    Poly actual;
    if (form == Form::corrected) {
        actual = y.shift_up(n);
    } else {
        // x^(2n) y_{n-1}(1/x)
        LaurentPoly flipped;
        auto c = y.coeffs();
        for (unsigned i = 0; i < c.size(); ++i)
            flipped += LaurentPoly::monomial(c[i], 2 * static_cast<int>(n) - static_cast<int>(i));
        actual = flipped.to_poly().value();
    }
    if (expected != actual) {
        r.first_mismatch = Mismatch{n, expected, actual, "identity"};
        return r;
    }

    const Series one_s = Series::constant(one(), order);
    const unsigned x_power = form == Form::corrected ? 2 : 1;
    const Series root =
        series_pow(one_s - linear_in_t(Poly::monomial(Rational(2), x_power), order), Rational(1, 2));
    const Series exponent = (one_s - root).map([](const Poly& p) { return p.shift_down(1); });
    const Series rhs = series_exp(exponent);
    const Series lhs = egf(order, [&](unsigned k) {
        const Poly d = delta_reflected(k);
        return (form == Form::as_printed && k % 2 == 1) ? -d : d;
    });
    r.first_mismatch = first_difference(lhs, rhs, "generating function t power");
    return r;
}

VerificationReport verify_touchard_routes(unsigned m, unsigned n, Form form) {
    VerificationReport r{"touchard_routes", {{"m", m}, {"n", n}}, n, {}};
    const Poly rod = touchard_rodrigues(m, n).poly;
    const Poly rec = touchard_recurrence(m, n).poly;
    const Poly exp = touchard_explicit(m, n, form).poly;
    if (rod != rec)
        r.first_mismatch = Mismatch{n, rod, rec, "recurrence"};
    else if (rod != exp)
        r.first_mismatch = Mismatch{n, rod, exp, "explicit"};
    return r;
}

VerificationReport verify_stirling_oracle(unsigned m, unsigned n, Form form) {
    VerificationReport r{"stirling_oracle", {{"m", m}, {"n", n}}, n, {}};
    const auto from_weyl = triangle_from_weyl(m, n);
    const auto closed = stirling_row(m, n, form);
    for (std::size_t i = 0; i < closed.size(); ++i) {
        if (closed[i] != from_weyl[i]) {
            const unsigned k = static_cast<unsigned>(i) + row_k_begin(n);
            r.first_mismatch = Mismatch{k, Poly(from_weyl[i]), Poly(closed[i]), "k"};
            break;
        }
    }
    return r;
}

VerificationReport verify_hoppe(const Series& f, unsigned order) {
    VerificationReport r{"hoppe", {{"m", order}}, order, {}};
    const Rational direct =
        series_exp(f.truncate(order))[order].coeff(0) * Rational(factorial(order));
    const Rational hoppe = hoppe_derivative(f, order);
    if (direct != hoppe)
        r.first_mismatch = Mismatch{order, Poly(direct), Poly(hoppe), "derivative"};
    return r;
}

VerificationReport verify_lowering(unsigned n) {
    VerificationReport r{"lowering", {{"n", n}}, n, {}};
    if (!lowering_check(n)) {
        const Poly expected = touchard_rodrigues(1, n - 1).poly * Rational(static_cast<long>(n));
        r.first_mismatch =
            Mismatch{n, expected, log_one_plus_d(touchard_rodrigues(1, n).poly), "identity"};
    }
    return r;
}

std::vector<Poly> sample_polys(std::size_t count, unsigned max_degree, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    std::vector<Poly> out;
    while (out.size() < count) {
        std::vector<Rational> c(deg(rng) + 1);
        for (auto& v : c)
            v = Rational(num(rng), den(rng));
        out.emplace_back(std::move(c));
    }
    return out;
}

std::vector<Series> sample_scalar_series(std::size_t count, unsigned order, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 3);
    std::vector<Series> out;
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<Poly> c{Poly()};
        for (unsigned n = 1; n <= order; ++n)
            c.emplace_back(Rational(num(rng), den(rng)));
        out.emplace_back(order, std::move(c));
    }
    return out;
}

}  // namespace touchard
