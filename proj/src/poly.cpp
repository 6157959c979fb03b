#include "h4t/poly.hpp"

#include <stdexcept>

namespace h4t {

PolyK::PolyK(const Rational& c)
{
    if (!h4t::is_zero(c))
        coeffs_.push_back(c);
}

PolyK::PolyK(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs))
{
    trim();
}

PolyK PolyK::monomial(const Rational& c, int exponent)
{
    PolyK p;
    if (!h4t::is_zero(c)) {
        p.coeffs_.assign(static_cast<std::size_t>(exponent) + 1, Rational(0));
        p.coeffs_.back() = c;
    }
    return p;
}

void PolyK::trim()
{
    while (!coeffs_.empty() && h4t::is_zero(coeffs_.back()))
        coeffs_.pop_back();
}

Rational PolyK::coeff(int i) const
{
    if (i < 0 || i >= static_cast<int>(coeffs_.size()))
        return Rational(0);
    return coeffs_[static_cast<std::size_t>(i)];
}

Rational PolyK::eval(const Rational& x) const
{
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

PolyK PolyK::monic() const
{
    if (is_zero())
        return *this;
    PolyK r = *this;
    Rational inv = 1 / leading();
    r *= inv;
    return r;
}

PolyK PolyK::operator-() const
{
    PolyK r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

PolyK& PolyK::operator+=(const PolyK& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

PolyK& PolyK::operator-=(const PolyK& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

PolyK operator*(const PolyK& a, const PolyK& b)
{
    if (a.is_zero() || b.is_zero())
        return PolyK();
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (h4t::is_zero(a.coeffs_[i]))
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return PolyK(std::move(out));
}

PolyK& PolyK::operator*=(const PolyK& o)
{
    *this = *this * o;
    return *this;
}

PolyK& PolyK::operator*=(const Rational& c)
{
    if (h4t::is_zero(c)) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_)
        x *= c;
    return *this;
}

std::pair<PolyK, PolyK> PolyK::divmod(const PolyK& a, const PolyK& b)
{
    if (b.is_zero())
        throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree())
        return {PolyK(), a};
    std::vector<Rational> rem = a.coeffs_;
    std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rational(0));
    Rational lead_inv = 1 / b.leading();
    for (int i = a.degree() - b.degree(); i >= 0; --i) {
        Rational q = rem[static_cast<std::size_t>(i + b.degree())] * lead_inv;
        quo[static_cast<std::size_t>(i)] = q;
        if (h4t::is_zero(q))
            continue;
        for (int j = 0; j <= b.degree(); ++j)
            rem[static_cast<std::size_t>(i + j)] -= q * b.coeffs_[static_cast<std::size_t>(j)];
    }
    return {PolyK(std::move(quo)), PolyK(std::move(rem))};
}

PolyK PolyK::exact_div(const PolyK& a, const PolyK& b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
        throw std::domain_error("inexact polynomial division");
    return q;
}

PolyK PolyK::gcd(PolyK a, PolyK b)
{
    while (!b.is_zero()) {
        PolyK r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::string PolyK::to_string() const
{
    if (is_zero())
        return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<std::size_t>(i)];
        if (h4t::is_zero(c))
            continue;
        Rational mag = abs(c);
        if (sgn(c) < 0)
            s += '-';
        else if (!s.empty())
            s += '+';
        if (i == 0) {
            s += h4t::to_string(mag);
            continue;
        }
        if (mag != 1)
            s += h4t::to_string(mag) + "*";
        s += 'k';
        if (i > 1)
            s += "^" + std::to_string(i);
    }
    return s;
}

RatFuncK::RatFuncK(PolyK num, PolyK den)
    : num_(std::move(num))
    , den_(std::move(den))
{
    if (den_.is_zero())
        throw std::domain_error("rational function with zero denominator");
    normalize();
}

void RatFuncK::normalize()
{
    if (num_.is_zero()) {
        den_ = PolyK(Rational(1));
        return;
    }
    if (!den_.is_constant()) {
        PolyK g = PolyK::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = PolyK::exact_div(num_, g);
            den_ = PolyK::exact_div(den_, g);
        }
    }
    Rational lead = den_.leading();
    if (lead != 1) {
        Rational inv = 1 / lead;
        num_ *= inv;
        den_ *= inv;
    }
}

Rational RatFuncK::eval(const Rational& x) const
{
    Rational d = den_.eval(x);
    if (h4t::is_zero(d))
        throw std::domain_error("evaluation at a pole");
    return num_.eval(x) / d;
}

RatFuncK RatFuncK::operator-() const
{
    RatFuncK r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFuncK& RatFuncK::operator+=(const RatFuncK& o)
{
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

RatFuncK& RatFuncK::operator-=(const RatFuncK& o)
{
    return *this += -o;
}

RatFuncK& RatFuncK::operator*=(const RatFuncK& o)
{
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RatFuncK& RatFuncK::operator/=(const RatFuncK& o)
{
    if (o.is_zero())
        throw std::domain_error("division by zero rational function");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

std::string RatFuncK::to_string() const
{
    if (den_.is_constant())
        return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

} // namespace h4t
