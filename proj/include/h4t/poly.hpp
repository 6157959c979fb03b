#pragma once

#include "h4t/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace h4t {

/* Polynomial in the central variable k with rational coefficients.
 * coeffs()[i] is the coefficient of k^i; no trailing zeros are stored.
 */
class PolyK {
public:
    PolyK() = default;
    PolyK(const Rational& c);
    PolyK(long c) : PolyK(Rational(c)) {}
    explicit PolyK(std::vector<Rational> coeffs);

    static PolyK k() { return monomial(Rational(1), 1); }
    static PolyK monomial(const Rational& c, int exponent);

    bool is_zero() const { return coeffs_.empty(); }
    /* -1 for the zero polynomial */
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(int i) const;
    const Rational& leading() const { return coeffs_.back(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    Rational eval(const Rational& x) const;
    PolyK monic() const;

    PolyK operator-() const;
    PolyK& operator+=(const PolyK& o);
    PolyK& operator-=(const PolyK& o);
    PolyK& operator*=(const PolyK& o);
    PolyK& operator*=(const Rational& c);

    friend PolyK operator+(PolyK a, const PolyK& b) { return a += b; }
    friend PolyK operator-(PolyK a, const PolyK& b) { return a -= b; }
    friend PolyK operator*(const PolyK& a, const PolyK& b);
    friend PolyK operator*(PolyK a, const Rational& c) { return a *= c; }
    friend bool operator==(const PolyK& a, const PolyK& b) { return a.coeffs_ == b.coeffs_; }

    /* Quotient and remainder; throws std::domain_error on zero divisor. */
    static std::pair<PolyK, PolyK> divmod(const PolyK& a, const PolyK& b);
    /* Exact division; throws std::domain_error if b does not divide a. */
    static PolyK exact_div(const PolyK& a, const PolyK& b);
    /* Monic gcd (zero iff both are zero). */
    static PolyK gcd(PolyK a, PolyK b);

    /* e.g. "3/2*k^2-k+1"; "0" for zero */
    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

inline bool is_zero(const PolyK& p) { return p.is_zero(); }
inline std::string to_string(const PolyK& p) { return p.to_string(); }

/* Reduced fraction of polynomials in k with a monic denominator. */
class RatFuncK {
public:
    RatFuncK() : den_(Rational(1)) {}
    RatFuncK(const Rational& c) : num_(c), den_(Rational(1)) {}
    RatFuncK(long c) : RatFuncK(Rational(c)) {}
    RatFuncK(PolyK p) : num_(std::move(p)), den_(Rational(1)) {}
    /* Throws std::domain_error if den is zero. */
    RatFuncK(PolyK num, PolyK den);

    const PolyK& num() const { return num_; }
    const PolyK& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    /* Throws std::domain_error if x is a pole. */
    Rational eval(const Rational& x) const;

    RatFuncK operator-() const;
    RatFuncK& operator+=(const RatFuncK& o);
    RatFuncK& operator-=(const RatFuncK& o);
    RatFuncK& operator*=(const RatFuncK& o);
    RatFuncK& operator/=(const RatFuncK& o);

    friend RatFuncK operator+(RatFuncK a, const RatFuncK& b) { return a += b; }
    friend RatFuncK operator-(RatFuncK a, const RatFuncK& b) { return a -= b; }
    friend RatFuncK operator*(RatFuncK a, const RatFuncK& b) { return a *= b; }
    friend RatFuncK operator/(RatFuncK a, const RatFuncK& b) { return a /= b; }
    friend bool operator==(const RatFuncK& a, const RatFuncK& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string() const;

private:
    void normalize();
    PolyK num_;
    PolyK den_;
};

inline bool is_zero(const RatFuncK& r) { return r.is_zero(); }
inline std::string to_string(const RatFuncK& r) { return r.to_string(); }

} // namespace h4t
