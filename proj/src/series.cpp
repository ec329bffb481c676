#include "touchard/series.hpp"

#include <stdexcept>
#include <string>

namespace touchard {

Series::Series(unsigned order) : c_(order + 1) {}

Series::Series(unsigned order, std::vector<Poly> coeffs) : c_(std::move(coeffs)) {
    c_.resize(order + 1);
}

Series Series::constant(const Poly& c, unsigned order) { return Series(order, {c}); }

Series Series::monomial(const Poly& c, unsigned k, unsigned order) {
    Series out(order);
    if (k <= order)
        out.c_[k] = c;
    return out;
}

Series Series::exp_t(unsigned order) {
    Series out(order);
    for (unsigned n = 0; n <= order; ++n)
        out.c_[n] = Poly(Rational(BigInt(1), factorial(n)));
    return out;
}

bool Series::is_zero() const {
    for (const auto& p : c_)
        if (!p.is_zero())
            return false;
    return true;
}

Series Series::truncate(unsigned order) const {
    std::vector<Poly> v(c_.begin(), c_.begin() + std::min<std::size_t>(c_.size(), order + 1));
    return Series(order, std::move(v));
}

Series Series::derivative_t() const {
    if (order() == 0)
        return Series(0);
    Series out(order() - 1);
    for (unsigned n = 1; n <= order(); ++n)
        out.c_[n - 1] = c_[n] * Rational(static_cast<long>(n));
    return out;
}

Series& Series::operator+=(const Series& o) {
    if (o.order() != order())
        throw std::invalid_argument("Series: order mismatch in addition");
    for (std::size_t n = 0; n < c_.size(); ++n)
        c_[n] += o.c_[n];
    return *this;
}

Series& Series::operator-=(const Series& o) {
    if (o.order() != order())
        throw std::invalid_argument("Series: order mismatch in subtraction");
    for (std::size_t n = 0; n < c_.size(); ++n)
        c_[n] -= o.c_[n];
    return *this;
}

Series& Series::operator*=(const Poly& s) {
    for (auto& p : c_)
        p = p * s;
    return *this;
}

Series operator*(const Series& a, const Series& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("series_mul: order mismatch (" + std::to_string(a.order()) +
                                    " vs " + std::to_string(b.order()) + ")");
    const unsigned order = a.order();
    Series out(order);
    for (unsigned i = 0; i <= order; ++i) {
        if (a.c_[i].is_zero())
            continue;
        for (unsigned j = 0; i + j <= order; ++j)
            out.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return out;
}

Series series_exp(const Series& a) {
    if (!a[0].is_zero())
        throw std::domain_error("series_exp: nonzero constant term");
    const unsigned order = a.order();
    Series out = Series::constant(Poly(Rational(1)), order);
    Series power = out;
    for (unsigned k = 1; k <= order; ++k) {
        power = power * a;
        out += power * Poly(Rational(BigInt(1), factorial(k)));
    }
    return out;
}

Series series_geom_inverse(const Series& a) {
    if (a[0] != Poly(Rational(1)))
        throw std::domain_error("series_geom_inverse: constant term must be 1");
    // 1/(1 - u) = sum u^k with u = 1 - a; u has no t^0 term.
    const unsigned order = a.order();
    Series one = Series::constant(Poly(Rational(1)), order);
    Series u = one - a;
    Series out = one;
    Series power = one;
    for (unsigned k = 1; k <= order; ++k) {
        power = power * u;
        out += power;
    }
    return out;
}

Series series_pow(const Series& a, const Rational& r) {
    if (a[0] != Poly(Rational(1)))
        throw std::domain_error("series_pow: constant term must be 1");
    const unsigned order = a.order();
    Series one = Series::constant(Poly(Rational(1)), order);
    Series u = a - one;
    Series out = one;
    Series power = one;
    for (unsigned k = 1; k <= order; ++k) {
        power = power * u;
        out += power * Poly(binomial(r, k));
    }
    return out;
}

Series series_pow(const Series& a, unsigned e) {
    Series out = Series::constant(Poly(Rational(1)), a.order());
    for (unsigned i = 0; i < e; ++i)
        out = out * a;
    return out;
}

Series substitute(const Poly& p, const Series& x_value) {
    Series acc(x_value.order());
    auto c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * x_value + Series::constant(Poly(*it), x_value.order());
    return acc;
}

}  // namespace touchard
