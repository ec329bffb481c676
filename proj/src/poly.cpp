#include "touchard/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace touchard {

namespace {

// Appends "c*x^k" with sign handling; `first` tracks whether a term was written.
void write_term(std::ostringstream& os, const Rational& c, int degree, bool& first) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (first)
        os << (c.sign() < 0 ? "-" : "");
    else
        os << (c.sign() < 0 ? " - " : " + ");
    first = false;
    if (degree == 0) {
        os << mag;
        return;
    }
    if (mag != Rational(1))
        os << mag << "*";
    os << "x";
    if (degree != 1)
        os << "^" << degree;
}

}  // namespace

Poly::Poly(const Rational& c) : c_{c} { trim(); }

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rational& c, unsigned degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

Rational Poly::coeff(unsigned i) const { return i < c_.size() ? c_[i] : Rational(); }

int Poly::low_degree() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero())
            return static_cast<int>(i);
    return -1;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1)
        return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        d[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(d));
}

Rational Poly::eval(const Rational& at) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * at + *it;
    return acc;
}

Poly Poly::reflect() const {
    Poly out = *this;
    for (std::size_t i = 1; i < out.c_.size(); i += 2)
        out.c_[i] = -out.c_[i];
    return out;
}

Poly Poly::shift_up(unsigned k) const {
    if (is_zero())
        return {};
    std::vector<Rational> v(k);
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(std::move(v));
}

Poly Poly::shift_down(unsigned k) const {
    for (std::size_t i = 0; i < std::min<std::size_t>(k, c_.size()); ++i)
        if (!c_[i].is_zero())
            throw std::domain_error("Poly::shift_down: polynomial not divisible by x^" + std::to_string(k));
    if (k >= c_.size())
        return {};
    return Poly(std::vector<Rational>(c_.begin() + k, c_.end()));
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_)
        c *= s;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            v[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(v));
}

std::string Poly::to_string() const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero())
            write_term(os, c_[i], static_cast<int>(i), first);
    return os.str();
}

Poly pow(const Poly& p, unsigned e) {
    Poly out(Rational(1));
    for (unsigned i = 0; i < e; ++i)
        out = out * p;
    return out;
}

// ---------------------------------------------------------------------------

LaurentPoly::LaurentPoly(const Poly& p)
    : min_(0), c_(p.coeffs().begin(), p.coeffs().end()) {
    normalize();
}

LaurentPoly::LaurentPoly(int min_degree, std::vector<Rational> coeffs)
    : min_(min_degree), c_(std::move(coeffs)) {
    normalize();
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int degree) {
    return LaurentPoly(degree, {c});
}

void LaurentPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero())
        ++lead;
    if (lead == c_.size()) {
        c_.clear();
        min_ = 0;
        return;
    }
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    min_ += static_cast<int>(lead);
}

Rational LaurentPoly::coeff(int degree) const {
    if (degree < min_ || degree > max_degree())
        return {};
    return c_[static_cast<std::size_t>(degree - min_)];
}

LaurentPoly LaurentPoly::derivative() const {
    std::vector<Rational> d(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i)
        d[i] = c_[i] * Rational(static_cast<long>(min_) + static_cast<long>(i));
    return LaurentPoly(min_ - 1, std::move(d));
}

std::optional<Poly> LaurentPoly::to_poly() const {
    if (is_zero())
        return Poly();
    if (min_ < 0)
        return std::nullopt;
    std::vector<Rational> v(static_cast<std::size_t>(min_));
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(std::move(v));
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.is_zero())
        return *this;
    if (is_zero())
        return *this = o;
    int lo = std::min(min_, o.min_);
    int hi = std::max(max_degree(), o.max_degree());
    std::vector<Rational> v(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < c_.size(); ++i)
        v[static_cast<std::size_t>(min_ - lo) + i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        v[static_cast<std::size_t>(o.min_ - lo) + i] += o.c_[i];
    min_ = lo;
    c_ = std::move(v);
    normalize();
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& s) {
    for (auto& c : c_)
        c *= s;
    normalize();
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            v[i + j] += a.c_[i] * b.c_[j];
    return LaurentPoly(a.min_ + b.min_, std::move(v));
}

std::string LaurentPoly::to_string() const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero())
            write_term(os, c_[i], min_ + static_cast<int>(i), first);
    return os.str();
}

}  // namespace touchard
