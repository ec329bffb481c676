#include "touchard/touchard.hpp"

#include "touchard/weyl.hpp"

#include <stdexcept>

namespace touchard {

namespace {

void check_m(unsigned m) {
    if (m == 0)
        throw std::invalid_argument("Touchard order m must be positive");
}

}  // namespace

TouchardPoly touchard_rodrigues(unsigned m, unsigned n) {
    check_m(m);
    return {m, n, apply_to_exp(power_qd(m, n))};
}

TouchardPoly touchard_recurrence(unsigned m, unsigned n) {
    check_m(m);
    Poly t(Rational(1));
    for (unsigned i = 0; i < n; ++i)
        t = (t + t.derivative()).shift_up(m);
    return {m, n, std::move(t)};
}

TouchardPoly touchard_explicit(unsigned m, unsigned n, Form form) {
    check_m(m);
    const auto row = stirling_row(m, n, form);
    Poly sum;
    for (unsigned k = row_k_begin(n); k <= n; ++k)
        sum += Poly::monomial(row[k - row_k_begin(n)], k);
    if (m == 1)
        return {m, n, std::move(sum)};
    const Poly prefactor = Poly::monomial(Rational(static_cast<long>(m - 1)), m - 1);
    return {m, n, pow(prefactor, n) * sum};
}

std::vector<BigInt> bell_numbers(unsigned n_max) {
    std::vector<BigInt> out;
    Poly t(Rational(1));
    for (unsigned n = 0; n <= n_max; ++n) {
        Rational b = t.eval(Rational(1));
        out.push_back(b.numerator());
        t = (t + t.derivative()).shift_up(1);
    }
    return out;
}

Poly log_one_plus_d(const Poly& p) {
    Poly out;
    Poly d = p.derivative();
    for (long k = 1; !d.is_zero(); ++k) {
        out += d * Rational(k % 2 == 1 ? 1 : -1, k);
        d = d.derivative();
    }
    return out;
}

bool lowering_check(unsigned n) {
    if (n == 0)
        throw std::invalid_argument("lowering_check: n must be at least 1");
    const Poly lhs = log_one_plus_d(touchard_rodrigues(1, n).poly);
    const Poly rhs = touchard_rodrigues(1, n - 1).poly * Rational(static_cast<long>(n));
    return lhs == rhs;
}

}  // namespace touchard
