#pragma once

#include "h4t/algebra.hpp"
#include "h4t/monomial.hpp"
#include "h4t/rational.hpp"

#include <string>

namespace h4t {

enum class ModuleKind { Universal, Quotient, Verma };

const char* to_string(ModuleKind kind);

/* Universal(psi): coefficients in Q[k], k free.
 * Quotient(psi, xi): k acts by xi.
 * Verma(xi, l): psi = 0, k acts by xi and A(0) on the cyclic vector by l.
 */
class ModuleContext {
public:
    static ModuleContext universal(WhittakerType psi) { return {ModuleKind::Universal, std::move(psi), 0, 0}; }
    static ModuleContext quotient(WhittakerType psi, Rational xi)
    {
        return {ModuleKind::Quotient, std::move(psi), std::move(xi), 0};
    }
    static ModuleContext verma(Rational xi, Rational l) { return {ModuleKind::Verma, {}, std::move(xi), std::move(l)}; }

    ModuleKind kind() const { return kind_; }
    const WhittakerType& psi() const { return psi_; }
    const Rational& xi() const { return xi_; }
    const Rational& l() const { return l_; }

    /* Generators that are moved to the cyclic vector and evaluated there:
     * every positive mode, plus A(0) in a Verma context.
     */
    bool raises(const Generator& g) const
    {
        return g.is_positive() || (kind_ == ModuleKind::Verma && g.letter() == Letter::A && g.mode() == 0);
    }
    /* Scalar by which a raising generator acts on the cyclic vector. */
    Rational eigenvalue(const Generator& g) const;

    bool legal(const PBWMonomial& m) const;

    std::string to_string() const;

    friend bool operator==(const ModuleContext&, const ModuleContext&) = default;

private:
    ModuleContext(ModuleKind kind, WhittakerType psi, Rational xi, Rational l)
        : kind_(kind)
        , psi_(std::move(psi))
        , xi_(std::move(xi))
        , l_(std::move(l))
    {
    }

    ModuleKind kind_;
    WhittakerType psi_;
    Rational xi_;
    Rational l_;
};

/* Finite window: degree <= max_degree, A(0) exponent <= a0_cap,
 * k exponent <= kexp_cap.
 */
struct Truncation {
    int max_degree = 0;
    int a0_cap = 0;
    int kexp_cap = 0;

    Truncation() = default;
    /* Throws std::invalid_argument on a negative cap. */
    Truncation(int max_degree, int a0_cap, int kexp_cap = 0);

    bool contains(const PBWMonomial& m) const
    {
        return m.degree() <= max_degree && m.mu().zero_count() <= a0_cap && m.kexp() <= kexp_cap;
    }
};

} // namespace h4t
