#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "../oracles.hpp"
#include "touchard/identities.hpp"
#include "touchard/touchard.hpp"

using namespace touchard;

namespace {
Poly P(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c)
        v.emplace_back(x);
    return Poly(std::move(v));
}
}  // namespace

TEST_CASE("rodrigues route examples") {
    CHECK(touchard_rodrigues(1, 3).poly == P({0, 1, 3, 1}));
    CHECK(touchard_rodrigues(2, 2).poly == P({0, 0, 0, 2, 1}));
    for (unsigned m = 1; m <= 4; ++m)
        CHECK(touchard_rodrigues(m, 0).poly == P({1}));
    auto t = touchard_rodrigues(3, 2);
    CHECK(t.m == 3);
    CHECK(t.n == 2);
}

TEST_CASE("recurrence route examples") {
    CHECK(touchard_recurrence(1, 2).poly == P({0, 1, 1}));
    CHECK(touchard_recurrence(2, 1).poly == P({0, 0, 1}));
    CHECK(touchard_recurrence(3, 1).poly == P({0, 0, 0, 1}));
    CHECK(touchard_recurrence(3, 1) == touchard_rodrigues(3, 1));
}

TEST_CASE("explicit route examples") {
    CHECK(touchard_explicit(1, 4).poly == P({0, 1, 7, 6, 1}));
    CHECK(touchard_explicit(2, 2).poly == P({0, 0, 0, 2, 1}));
    CHECK(touchard_explicit(1, 0).poly == P({1}));
}

TEST_CASE("values differentiated independently") {
    // e^{-x} (x^m d/dx)^n e^x expanded symbolically outside this code base
    CHECK(touchard_rodrigues(3, 3).poly == P({0, 0, 0, 0, 0, 0, 0, 15, 9, 1}));
    CHECK(touchard_rodrigues(2, 4).poly == P({0, 0, 0, 0, 0, 24, 36, 12, 1}));
    CHECK(touchard_rodrigues(4, 3).poly == P({0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 28, 12, 1}));
}

TEST_CASE("three routes agree") {
    for (unsigned m = 1; m <= 4; ++m)
        for (unsigned n = 0; n <= 12; ++n) {
            CAPTURE(m);
            CAPTURE(n);
            const Poly rod = touchard_rodrigues(m, n).poly;
            CHECK(rod == touchard_recurrence(m, n).poly);
            CHECK(rod == touchard_explicit(m, n).poly);
        }
}

TEST_CASE("degree window and integrality") {
    for (unsigned m = 1; m <= 5; ++m)
        for (unsigned n = 1; n <= 10; ++n) {
            const Poly t = touchard_rodrigues(m, n).poly;
            CHECK(t.low_degree() == static_cast<int>((m - 1) * n + 1));
            CHECK(t.degree() == static_cast<int>(m * n));
            for (const auto& c : t.coeffs())
                if (m == 1)
                    CHECK((c.is_integer() && c.sign() >= 0));
        }
    CHECK(touchard_rodrigues(1, 0).poly.degree() == 0);
}

TEST_CASE("Bell numbers") {
    auto to_str = [](const std::vector<BigInt>& v) {
        std::string s;
        for (const auto& b : v)
            s += b.get_str() + " ";
        return s;
    };
    CHECK(to_str(bell_numbers(5)) == "1 1 2 5 15 52 ");
    CHECK(to_str(bell_numbers(0)) == "1 ");
    CHECK(to_str(bell_numbers(2)) == "1 1 2 ");
    CHECK(bell_numbers(15) == oracle::bell(15));
    CHECK(bell_numbers(15).back() == BigInt("1382958545"));
    for (unsigned n = 0; n <= 15; ++n)
        CHECK(touchard_rodrigues(1, n).poly.eval(Rational(1)) == Rational(bell_numbers(15)[n]));
}

TEST_CASE("lowering operator ln(1 + D)") {
    CHECK(log_one_plus_d(P({0, 1, 1})) == P({0, 2}));
    CHECK(log_one_plus_d(P({0, 1})) == P({1}));
    CHECK(log_one_plus_d(P({7})).is_zero());
    for (unsigned n = 1; n <= 12; ++n)
        CHECK(lowering_check(n));
    CHECK_THROWS_AS(lowering_check(0), std::invalid_argument);
}

TEST_CASE("second-order family through Laguerre polynomials") {
    for (unsigned n = 1; n <= 10; ++n) {
        const Poly lhs = touchard_rodrigues(2, n).poly;
        const Poly diff = oracle::laguerre_sum(n).reflect() - oracle::laguerre_sum(n - 1).reflect();
        CHECK(lhs == diff.shift_up(n) * Rational(factorial(n)));
    }
}

TEST_CASE("multiplicative operator shifts the index") {
    // (x^m + x^m D)^k T_l = T_{k+l}
    for (unsigned m = 1; m <= 4; ++m)
        for (unsigned l = 0; l <= 4; ++l) {
            const WeylExpr mult = WeylExpr::term(Rational(1), m, 0) + WeylExpr::term(Rational(1), m, 1);
            for (unsigned k = 0; k <= 4; ++k)
                CHECK(apply_to_poly(weyl_pow(mult, k), touchard_rodrigues(m, l).poly) ==
                      touchard_rodrigues(m, k + l).poly);
        }
}

TEST_CASE("invalid order") {
    CHECK_THROWS_AS(touchard_rodrigues(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(touchard_recurrence(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(touchard_explicit(0, 1), std::invalid_argument);
}
