#pragma once

// Independent reference constructions used only by the tests. None of these
// call into the normal-ordering engine or the closed-form Stirling code.

#include "touchard/poly.hpp"
#include "touchard/rational.hpp"

#include <random>
#include <vector>

namespace touchard::oracle {

/// S(n,k) via S(n,k) = k S(n-1,k) + S(n-1,k-1), rows 0..n_max.
inline std::vector<std::vector<BigInt>> stirling_table(unsigned n_max) {
    std::vector<std::vector<BigInt>> s(n_max + 1, std::vector<BigInt>(n_max + 1, 0));
    s[0][0] = 1;
    for (unsigned n = 1; n <= n_max; ++n)
        for (unsigned k = 1; k <= n; ++k)
            s[n][k] = BigInt(k) * s[n - 1][k] + s[n - 1][k - 1];
    return s;
}

/// B_{n+1} = sum_k C(n,k) B_k.
inline std::vector<BigInt> bell(unsigned n_max) {
    std::vector<BigInt> b{1};
    for (unsigned n = 0; n < n_max; ++n) {
        BigInt next = 0;
        for (unsigned k = 0; k <= n; ++k)
            next += binomial(n, k) * b[k];
        b.push_back(next);
    }
    return b;
}

/// L(n,k) = (n!/k!) C(n-1, k-1).
inline Rational lah(unsigned n, unsigned k) {
    if (n == 0 || k == 0)
        return Rational(n == k ? 1 : 0);
    return Rational(factorial(n) * binomial(n - 1, k - 1), factorial(k));
}

/// Applies p -> x^m p' n times.
inline Poly iterate_xm_d(unsigned m, unsigned n, Poly p) {
    for (unsigned i = 0; i < n; ++i)
        p = p.derivative().shift_up(m);
    return p;
}

/// L_n(x) = sum_k C(n,k) (-x)^k / k!.
inline Poly laguerre_sum(unsigned n) {
    std::vector<Rational> c;
    for (unsigned k = 0; k <= n; ++k)
        c.push_back(Rational(binomial(n, k) * (k % 2 ? -1 : 1), factorial(k)));
    return Poly(std::move(c));
}

/// y_n(x) = sum_k (n+k)! / ((n-k)! k!) (x/2)^k.
inline Poly bessel_sum(unsigned n) {
    std::vector<Rational> c;
    for (unsigned k = 0; k <= n; ++k) {
        BigInt two_k;
        mpz_ui_pow_ui(two_k.get_mpz_t(), 2, k);
        c.push_back(Rational(factorial(n + k), factorial(n - k) * factorial(k) * two_k));
    }
    return Poly(std::move(c));
}

inline Poly random_poly(std::mt19937_64& rng, unsigned max_degree) {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 3);
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    std::vector<Rational> c(deg(rng) + 1);
    for (auto& v : c)
        v = Rational(num(rng), den(rng));
    return Poly(std::move(c));
}

}  // namespace touchard::oracle
