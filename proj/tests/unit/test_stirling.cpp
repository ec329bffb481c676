#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "../oracles.hpp"
#include "touchard/identities.hpp"
#include "touchard/stirling.hpp"

#include <random>

using namespace touchard;

namespace {
std::vector<Rational> R(std::initializer_list<Rational> v) { return v; }
}  // namespace

TEST_CASE("stirling2 examples") {
    CHECK(stirling2(4, 2) == Rational(7));
    for (unsigned n = 0; n <= 10; ++n)
        CHECK(stirling2(n, n) == Rational(1));
    CHECK(stirling2(5, 1) == Rational(1));
    CHECK(stirling2(0, 0) == Rational(1));
    CHECK(stirling2(3, 0) == Rational(0));
    CHECK_THROWS_AS(stirling2(2, 3), std::invalid_argument);
}

TEST_CASE("stirling2 matches the recurrence and sums to Bell") {
    const auto table = oracle::stirling_table(15);
    const auto bell = oracle::bell(15);
    for (unsigned n = 0; n <= 15; ++n) {
        Rational row_sum;
        for (unsigned k = 0; k <= n; ++k) {
            CHECK(stirling2(n, k) == Rational(table[n][k]));
            row_sum += stirling2(n, k);
        }
        CHECK(row_sum == Rational(bell[n]));
    }
    // frozen from an external table
    CHECK(stirling2(15, 7) == Rational(BigInt("408741333")));
}

TEST_CASE("gen_stirling examples") {
    CHECK(gen_stirling(2, 3, 2) == Rational(6));
    CHECK(gen_stirling(3, 1, 1) == Rational(1, 2));
    CHECK(gen_stirling(2, 1, 1) == Rational(1));
    CHECK(gen_stirling(4, 5, 0) == Rational(0));
    CHECK(gen_stirling(4, 0, 0) == Rational(1));
    CHECK(gen_stirling(1, 4, 2) == stirling2(4, 2));
    CHECK_THROWS_AS(gen_stirling(3, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(gen_stirling(0, 2, 1), std::invalid_argument);
}

TEST_CASE("m = 2 is the Lah triangle") {
    for (unsigned n = 0; n <= 12; ++n)
        for (unsigned k = row_k_begin(n); k <= n; ++k)
            CHECK(gen_stirling(2, n, k) == oracle::lah(n, k));
}

TEST_CASE("rescaled entries are non-negative integers") {
    for (unsigned m = 2; m <= 5; ++m)
        for (unsigned n = 0; n <= 10; ++n)
            for (unsigned k = row_k_begin(n); k <= n; ++k) {
                Rational scaled = gen_stirling(m, n, k) * pow(Rational(static_cast<long>(m - 1)), n);
                CHECK(scaled.is_integer());
                CHECK(scaled.sign() >= 0);
            }
}

TEST_CASE("triangle_from_weyl examples") {
    CHECK(triangle_from_weyl(1, 3) == R({1, 3, 1}));
    CHECK(triangle_from_weyl(2, 2) == R({2, 1}));
    CHECK(triangle_from_weyl(3, 1) == R({Rational(1, 2)}));
    CHECK(triangle_from_weyl(4, 0) == R({1}));
}

TEST_CASE("closed formula equals the Weyl oracle") {
    for (unsigned m = 1; m <= 4; ++m)
        for (unsigned n = 0; n <= 10; ++n)
            CHECK(stirling_row(m, n) == triangle_from_weyl(m, n));
}

TEST_CASE("printed Gamma exponent disagrees with the oracle") {
    // Rising factorial of length m instead of n.
    CHECK(gen_stirling(2, 1, 1, Form::as_printed) == Rational(2));
    CHECK(gen_stirling(3, 1, 1, Form::as_printed) == Rational(15, 8));
    CHECK(stirling_row(2, 1, Form::as_printed) != triangle_from_weyl(2, 1));
    CHECK(stirling_row(3, 2, Form::as_printed) != triangle_from_weyl(3, 2));
    // lengths coincide when n = m
    CHECK(stirling_row(3, 3, Form::as_printed) == triangle_from_weyl(3, 3));
}

TEST_CASE("make_triangle layout") {
    Triangle t = make_triangle(2, 3);
    CHECK(t.m == 2);
    REQUIRE(t.rows.size() == 4);
    CHECK(t.rows[0] == R({1}));
    CHECK(t.rows[3] == R({6, 6, 1}));
}

TEST_CASE("hoppe_derivative examples") {
    // e^t - 1 => B_3
    Series et = Series::exp_t(5) - Series::constant(Poly(Rational(1)), 5);
    CHECK(hoppe_derivative(et, 3) == Rational(5));
    for (unsigned m = 0; m <= 5; ++m)
        CHECK(hoppe_derivative(et, m) == Rational(oracle::bell(5)[m]));

    Series t2 = Series::monomial(Poly(Rational(1)), 2, 4);
    CHECK(hoppe_derivative(t2, 2) == Rational(2));

    for (unsigned m = 1; m <= 4; ++m)
        CHECK(hoppe_derivative(Series(4), m) == Rational(0));

    // t + t^2/2 - 3 t^3: fifth derivative computed symbolically elsewhere
    Series poly(5, {Poly(), Poly(Rational(1)), Poly(Rational(1, 2)), Poly(Rational(-3))});
    CHECK(hoppe_derivative(poly, 5) == Rational(-334));
}

TEST_CASE("hoppe_derivative preconditions") {
    CHECK_THROWS_AS(hoppe_derivative(Series(2), 3), std::invalid_argument);
    CHECK_THROWS_AS(hoppe_derivative(Series::constant(Poly(Rational(1)), 3), 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(hoppe_derivative(Series::monomial(Poly::x(), 1, 3), 2), std::invalid_argument);
}

TEST_CASE("hoppe agrees with direct exponentiation") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> num(-7, 7);
    std::uniform_int_distribution<long> den(1, 5);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Poly> c{Poly()};
        for (unsigned n = 1; n <= 8; ++n)
            c.emplace_back(Rational(num(rng), den(rng)));
        Series f(8, std::move(c));
        for (unsigned m = 0; m <= 8; ++m)
            CHECK(hoppe_derivative(f, m) ==
                  series_exp(f)[m].coeff(0) * Rational(factorial(m)));
    }
}
