#pragma once

#include "h4t/rational.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace h4t {

/* A = (a+b), B = (a-b), C = c, D = d, K = central k. */
enum class Letter : unsigned char { A, B, C, D, K };

char letter_symbol(Letter l);

/* x(mode) in the twisted affine algebra. A carries even modes, B/C/D odd
 * modes, K mode 0.
 */
class Generator {
public:
    /* Throws std::invalid_argument on a parity violation. */
    Generator(Letter letter, int mode);

    static Generator A(int n) { return {Letter::A, n}; }
    static Generator B(int n) { return {Letter::B, n}; }
    static Generator C(int n) { return {Letter::C, n}; }
    static Generator D(int n) { return {Letter::D, n}; }
    static Generator K() { return {Letter::K, 0}; }

    Letter letter() const { return letter_; }
    int mode() const { return mode_; }
    bool is_central() const { return letter_ == Letter::K; }
    bool is_positive() const { return !is_central() && mode_ > 0; }

    /* "A(-2)", "B(1)", "c(3)", "d(-1)", "k" */
    std::string to_string() const;

    friend bool operator==(const Generator&, const Generator&) = default;
    friend std::strong_ordering operator<=>(const Generator&, const Generator&) = default;

private:
    Letter letter_;
    int mode_;
};

bool valid_mode(Letter letter, int mode);

/* Parses the generator grammar: A(n), B(n), c(n), d(n), k. E/F are
 * accepted for A/B. Throws std::invalid_argument.
 */
Generator parse_generator(std::string_view text);

/* Finite combination of generators with rational coefficients. */
class LieElement {
public:
    LieElement() = default;
    LieElement(const Generator& g, const Rational& c = Rational(1)) { add(g, c); }

    void add(const Generator& g, const Rational& c);
    LieElement& operator+=(const LieElement& o);
    LieElement& operator*=(const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Generator, Rational>& terms() const { return terms_; }
    Rational coefficient(const Generator& g) const;

    std::string to_string() const;

    friend bool operator==(const LieElement&, const LieElement&) = default;

private:
    std::map<Generator, Rational> terms_;
};

LieElement bracket(const Generator& x, const Generator& y);
/* Bilinear extension. */
LieElement bracket(const LieElement& x, const LieElement& y);

/* The invariant form on {A, B, C, D}: (A,A)=2, (B,B)=-2, (C,D)=(D,C)=1.
 * Throws std::invalid_argument for K.
 */
Rational invariant_form(Letter x, Letter y);

/* psi on the positive part: c1 = psi(c(1)), sigma1 = psi(B(1)),
 * dvals[m] = psi(d(m)). Every other positive generator maps to 0.
 */
class WhittakerType {
public:
    WhittakerType() = default;
    /* Throws std::invalid_argument if a dvals key is not odd and >= 1. */
    WhittakerType(Rational c1, Rational sigma1, std::map<int, Rational> dvals = {});

    const Rational& c1() const { return c1_; }
    const Rational& sigma1() const { return sigma1_; }
    const std::map<int, Rational>& dvals() const { return dvals_; }
    Rational d(int m) const;

    bool nonsingular() const { return !h4t::is_zero(c1_); }
    bool is_zero() const;

    friend bool operator==(const WhittakerType&, const WhittakerType&) = default;

private:
    Rational c1_{0};
    Rational sigma1_{0};
    std::map<int, Rational> dvals_;
};

/* Throws std::domain_error for K or non-positive modes. */
Rational psi_eval(const WhittakerType& psi, const Generator& g);

using PsiFunction = std::function<Rational(const Generator&)>;

/* True iff psi([x, y]) = 0 for every pair of positive generators with
 * modes <= mode_bound.
 */
bool check_homomorphism(const WhittakerType& psi, int mode_bound);
bool check_homomorphism(const PsiFunction& psi, int mode_bound);

/* Every positive generator with mode <= bound, in (letter, mode) order. */
std::vector<Generator> positive_generators(int bound);

/* Every non-central generator with |mode| <= bound. */
std::vector<Generator> generators_up_to(int bound);

} // namespace h4t
