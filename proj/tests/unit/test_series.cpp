#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "../oracles.hpp"
#include "touchard/series.hpp"

#include <random>
#include <stdexcept>

using namespace touchard;

namespace {

Poly c(long v) { return Poly(Rational(v)); }
Poly xk(const Rational& coef, unsigned k) { return Poly::monomial(coef, k); }

Series random_series(std::mt19937_64& rng, unsigned order, bool zero_constant) {
    std::vector<Poly> coeffs;
    for (unsigned n = 0; n <= order; ++n)
        coeffs.push_back((n == 0 && zero_constant) ? Poly() : oracle::random_poly(rng, 3));
    return Series(order, std::move(coeffs));
}

}  // namespace

TEST_CASE("slots are exactly order + 1") {
    Series s(3, {c(1), c(2), c(3), c(4), c(5), c(6)});
    CHECK(s.order() == 3);
    CHECK(s.coeffs().size() == 4);
    CHECK(Series(4).coeffs().size() == 5);
    CHECK(Series::monomial(c(1), 7, 3).is_zero());
}

TEST_CASE("series_mul examples") {
    Series a(2, {c(1), c(1)});
    Series b(2, {c(1), c(-1)});
    CHECK(a * b == Series(2, {c(1), Poly(), c(-1)}));

    Series exp_xt(2, {c(1), Poly::x(), xk(Rational(1, 2), 2)});
    CHECK(exp_xt * Series::constant(c(1), 2) == exp_xt);

    Series one_xt(1, {c(1), Poly::x()});
    CHECK(one_xt * one_xt == Series(1, {c(1), xk(Rational(2), 1)}));

    CHECK_THROWS_AS(Series(1) * Series(2), std::invalid_argument);
}

TEST_CASE("series_exp examples") {
    Series xt = Series::monomial(Poly::x(), 1, 2);
    CHECK(series_exp(xt) == Series(2, {c(1), Poly::x(), xk(Rational(1, 2), 2)}));
    CHECK(series_exp(Series(5)) == Series::constant(c(1), 5));

    // x (e^t - 1), t^3 coefficient times 3! is x + 3x^2 + x^3
    Series arg = (Series::exp_t(3) - Series::constant(c(1), 3)) * Poly::x();
    Poly t3 = series_exp(arg)[3] * Rational(6);
    CHECK(t3 == Poly(std::vector<Rational>{0, 1, 3, 1}));

    CHECK_THROWS_AS(series_exp(Series::constant(c(1), 2)), std::domain_error);
}

TEST_CASE("inverse and binomial powers") {
    Series one_minus_tx(2, {c(1), xk(Rational(-1), 1)});
    CHECK(series_geom_inverse(one_minus_tx) == Series(2, {c(1), Poly::x(), xk(Rational(1), 2)}));
    CHECK(series_geom_inverse(Series::constant(c(1), 4)) == Series::constant(c(1), 4));

    // (1 - 2 t x^2)^(-1/2) = 1 + x^2 t + ...
    Series base(1, {c(1), xk(Rational(-2), 2)});
    CHECK(series_pow(base, Rational(-1, 2)) == Series(1, {c(1), xk(Rational(1), 2)}));

    // r = -1 reproduces the geometric inverse
    CHECK(series_pow(one_minus_tx, Rational(-1)) == series_geom_inverse(one_minus_tx));

    CHECK_THROWS_AS(series_geom_inverse(Series::constant(c(2), 2)), std::domain_error);
    CHECK_THROWS_AS(series_pow(Series(2), Rational(1, 2)), std::domain_error);
}

TEST_CASE("substitution and t-derivative") {
    // p(X) with p = 1 + x^2, X = x + t
    Series X(2, {Poly::x(), c(1)});
    Poly p(std::vector<Rational>{1, 0, 1});
    Series expect(2, {p, xk(Rational(2), 1), c(1)});
    CHECK(substitute(p, X) == expect);

    Series s(3, {c(5), c(1), c(2), c(3)});
    CHECK(s.derivative_t() == Series(2, {c(1), c(4), c(9)}));
    CHECK(s.truncate(1) == Series(1, {c(5), c(1)}));
}

TEST_CASE("ring axioms, exponential law, inverse") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        const unsigned order = 5;
        Series a = random_series(rng, order, false);
        Series b = random_series(rng, order, false);
        Series d = random_series(rng, order, false);
        CHECK(a * b == b * a);
        CHECK((a * b) * d == a * (b * d));
        CHECK(a * (b + d) == a * b + a * d);

        Series u = random_series(rng, order, true);
        Series v = random_series(rng, order, true);
        CHECK(series_exp(u + v) == series_exp(u) * series_exp(v));

        Series unit = u + Series::constant(c(1), order);
        CHECK(series_geom_inverse(unit) * unit == Series::constant(c(1), order));
        Series root = series_pow(unit, Rational(1, 2));
        CHECK(root * root == unit);
        Series cube_root = series_pow(unit, Rational(-1, 3));
        CHECK(cube_root * cube_root * cube_root * unit == Series::constant(c(1), order));
    }
}
