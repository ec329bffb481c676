#include "touchard/rational.hpp"

#include <stdexcept>

namespace touchard {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0)
        throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto parse_int = [](std::string_view s) {
        if (s.empty())
            throw std::invalid_argument("Rational::parse: empty integer");
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size())
            throw std::invalid_argument("Rational::parse: sign without digits");
        for (std::size_t i = start; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("Rational::parse: bad digit in '" + std::string(s) + "'");
        std::string digits(s[0] == '+' ? s.substr(1) : s);
        return BigInt(digits, 10);
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string Rational::to_string() const {
    if (is_integer())
        return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& r) {
    if (r.is_zero())
        throw std::domain_error("Rational: division by zero");
    v_ /= r.v_;
    return *this;
}

Rational pow(const Rational& r, unsigned e) {
    Rational out(1);
    for (unsigned i = 0; i < e; ++i)
        out *= r;
    return out;
}

BigInt factorial(unsigned n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n)
        return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

Rational binomial(const Rational& r, unsigned k) {
    Rational out(1);
    for (unsigned i = 0; i < k; ++i)
        out *= (r - Rational(static_cast<long>(i))) / Rational(static_cast<long>(i + 1));
    return out;
}

Rational rising_factorial(const Rational& r, unsigned n) {
    Rational out(1);
    for (unsigned i = 0; i < n; ++i)
        out *= r + Rational(static_cast<long>(i));
    return out;
}

}  // namespace touchard
