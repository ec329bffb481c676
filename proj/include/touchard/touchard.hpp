#pragma once

/**
 * @file touchard.hpp
 * @brief Higher-order Touchard polynomials T_n^(m)(x) = e^{-x} (x^m D)^n e^x.
 *
 * Three independent constructions are provided:
 *  - rodrigues:  normal-order (x^m D)^n and apply it to e^x (Weyl oracle);
 *  - recurrence: T_{n+1} = x^m (T_n + T_n');
 *  - explicit:   Stirling-number expansion (classical for m = 1,
 *                generalized S2^(m) with the [(m-1)x^(m-1)]^n prefactor for m >= 2).
 */

#include "touchard/poly.hpp"
#include "touchard/stirling.hpp"

#include <vector>

namespace touchard {

struct TouchardPoly {
    unsigned m = 1;
    unsigned n = 0;
    Poly poly;

    friend bool operator==(const TouchardPoly&, const TouchardPoly&) = default;
};

TouchardPoly touchard_rodrigues(unsigned m, unsigned n);
TouchardPoly touchard_recurrence(unsigned m, unsigned n);
TouchardPoly touchard_explicit(unsigned m, unsigned n, Form form = Form::corrected);

/// B_0 .. B_N as T_n(1).
std::vector<BigInt> bell_numbers(unsigned n_max);

/// ln(1 + D) T_n as the terminating series sum_{k>=1} (-1)^(k+1) D^k / k.
Poly log_one_plus_d(const Poly& p);

/// Whether ln(1 + D) T_n = n T_{n-1} (classical family). Throws std::invalid_argument for n = 0.
bool lowering_check(unsigned n);

}  // namespace touchard
