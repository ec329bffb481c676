#include "touchard/weyl.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace touchard {

namespace {

// D^b x^c in normal order. Each pass pushes one D through the x powers
// using D x^a = x^a D + a x^(a-1), which is D x = x D + 1 applied a times.
WeylExpr::TermMap commute_d_past_x(unsigned d_power, unsigned x_power) {
    WeylExpr::TermMap current{{{x_power, 0}, Rational(1)}};
    for (unsigned step = 0; step < d_power; ++step) {
        WeylExpr::TermMap next;
        for (const auto& [key, c] : current) {
            auto [a, b] = key;
            next[{a, b + 1}] += c;
            if (a > 0)
                next[{a - 1, b}] += c * Rational(static_cast<long>(a));
        }
        current = std::move(next);
    }
    return current;
}

}  // namespace

WeylExpr::WeylExpr(TermMap terms) {
    for (auto& [k, c] : terms)
        if (!c.is_zero())
            terms_.emplace(k, std::move(c));
}

WeylExpr WeylExpr::term(const Rational& c, unsigned x_power, unsigned d_power) {
    return WeylExpr(TermMap{{{x_power, d_power}, c}});
}

WeylExpr WeylExpr::from_poly(const Poly& p) {
    TermMap t;
    auto c = p.coeffs();
    for (unsigned i = 0; i < c.size(); ++i)
        t[{i, 0}] = c[i];
    return WeylExpr(std::move(t));
}

Rational WeylExpr::coeff(unsigned x_power, unsigned d_power) const {
    auto it = terms_.find({x_power, d_power});
    return it == terms_.end() ? Rational() : it->second;
}

unsigned WeylExpr::max_d_power() const {
    unsigned b = 0;
    for (const auto& [k, c] : terms_)
        b = std::max(b, k.second);
    return b;
}

Poly WeylExpr::coefficient_of_d(unsigned d_power) const {
    Poly out;
    for (const auto& [k, c] : terms_)
        if (k.second == d_power)
            out += Poly::monomial(c, k.first);
    return out;
}

void WeylExpr::add_term(const Key& k, const Rational& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

WeylExpr& WeylExpr::operator+=(const WeylExpr& o) {
    for (const auto& [k, c] : o.terms_)
        add_term(k, c);
    return *this;
}

WeylExpr& WeylExpr::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, c] : terms_)
        c *= s;
    return *this;
}

WeylExpr operator*(const WeylExpr& a, const WeylExpr& b) {
    // (x^a1 D^b1)(x^a2 D^b2) = x^a1 (D^b1 x^a2) D^b2
    std::map<std::pair<unsigned, unsigned>, WeylExpr::TermMap> cache;
    WeylExpr out;
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            auto key = std::make_pair(ka.second, kb.first);
            auto it = cache.find(key);
            if (it == cache.end())
                it = cache.emplace(key, commute_d_past_x(ka.second, kb.first)).first;
            const Rational cab = ca * cb;
            for (const auto& [kc, cc] : it->second)
                out.add_term({ka.first + kc.first, kc.second + kb.second}, cab * cc);
        }
    }
    return out;
}

std::string WeylExpr::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        Rational mag = c.sign() < 0 ? -c : c;
        os << (first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + "));
        first = false;
        std::vector<std::string> factors;
        if (mag != Rational(1) || (k.first == 0 && k.second == 0))
            factors.push_back(mag.to_string());
        if (k.first == 1)
            factors.emplace_back("x");
        else if (k.first > 1)
            factors.push_back("x^" + std::to_string(k.first));
        if (k.second == 1)
            factors.emplace_back("D");
        else if (k.second > 1)
            factors.push_back("D^" + std::to_string(k.second));
        for (std::size_t i = 0; i < factors.size(); ++i)
            os << (i ? "*" : "") << factors[i];
    }
    return os.str();
}

WeylExpr weyl_mul(const WeylExpr& a, const WeylExpr& b) { return a * b; }

WeylExpr power_qd(unsigned m, unsigned n) {
    if (m == 0)
        throw std::invalid_argument("power_qd: m must be positive");
    const WeylExpr step = WeylExpr::term(Rational(1), m, 1);
    WeylExpr out = WeylExpr::identity();
    for (unsigned i = 0; i < n; ++i)
        out = step * out;
    return out;
}

WeylExpr weyl_pow(const WeylExpr& w, unsigned n) {
    WeylExpr out = WeylExpr::identity();
    for (unsigned i = 0; i < n; ++i)
        out = out * w;
    return out;
}

Poly apply_to_exp(const WeylExpr& w) {
    Poly out;
    for (const auto& [k, c] : w.terms())
        out += Poly::monomial(c, k.first);
    return out;
}

LaurentPoly apply_to_exp_inv(const WeylExpr& w) {
    // D^b e^{1/x} = e^{1/x} q_b(x), q_0 = 1, q_{b+1} = q_b' - x^{-2} q_b.
    std::vector<LaurentPoly> q{LaurentPoly(Poly(Rational(1)))};
    const LaurentPoly minus_inv_sq = LaurentPoly::monomial(Rational(-1), -2);
    for (unsigned b = 1; b <= w.max_d_power(); ++b)
        q.push_back(q.back().derivative() + minus_inv_sq * q.back());
    LaurentPoly out;
    for (const auto& [k, c] : w.terms())
        out += LaurentPoly::monomial(c, static_cast<int>(k.first)) * q[k.second];
    return out;
}

Poly apply_to_poly(const WeylExpr& w, const Poly& p) {
    std::vector<Poly> derivs{p};
    for (unsigned b = 1; b <= w.max_d_power(); ++b)
        derivs.push_back(derivs.back().derivative());
    Poly out;
    for (const auto& [k, c] : w.terms())
        out += (derivs[k.second] * c).shift_up(k.first);
    return out;
}

}  // namespace touchard
