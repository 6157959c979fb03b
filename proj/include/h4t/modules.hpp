#pragma once

#include "h4t/context.hpp"
#include "h4t/envelope.hpp"
#include "h4t/monomial.hpp"
#include "h4t/sparse.hpp"

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

namespace h4t {

/* Every monomial legal in ctx inside the window, ordered by PBWMonomial's
 * (degree, mu, nu, lam, eta, kexp) order. kexp_cap only matters for
 * Universal contexts; a Verma basis never has A(0) factors.
 */
std::vector<PBWMonomial> basis(const ModuleContext& ctx, const Truncation& tr);

/* The degree-n slice of basis(ctx, tr). */
std::vector<PBWMonomial> homogeneous_basis(const ModuleContext& ctx, int degree, int a0_cap, int kexp_cap = 0);

/* Number of basis monomials of each degree 0..tr.max_degree. */
std::vector<std::size_t> basis_census(const ModuleContext& ctx, const Truncation& tr);

/* Monomial <-> column lookup for an ordered basis. */
class BasisIndex {
public:
    BasisIndex() = default;
    explicit BasisIndex(std::vector<PBWMonomial> monomials);

    std::size_t size() const { return monomials_.size(); }
    const PBWMonomial& at(std::size_t i) const { return monomials_.at(i); }
    const std::vector<PBWMonomial>& monomials() const { return monomials_; }
    std::optional<std::size_t> find(const PBWMonomial& m) const;

private:
    std::vector<PBWMonomial> monomials_;
    std::unordered_map<PBWMonomial, std::size_t, PBWMonomialHash> index_;
};

/* Coordinates of v; components outside the index are dropped. */
template <class R>
SparseVec<R> project(const ModuleVector<R>& v, const BasisIndex& index)
{
    SparseVec<R> out;
    for (const auto& [m, c] : v)
        if (auto i = index.find(m))
            out.emplace_back(*i, c);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

template <class R>
ModuleVector<R> expand(const SparseVec<R>& x, const BasisIndex& index)
{
    ModuleVector<R> out;
    for (const auto& [i, c] : x)
        out.add(index.at(i), c);
    return out;
}

/* A subspace of a truncated module, kept in echelon form over the window
 * basis. Universal contexts use explicit k powers (see unfold).
 */
class SubmoduleSpan {
public:
    SubmoduleSpan(BasisIndex basis) : basis_(std::move(basis)), echelon_(basis_.size()) {}

    const BasisIndex& basis() const { return basis_; }
    std::size_t dimension() const { return echelon_.rank(); }
    /* False when v has a component outside the window. */
    bool contains(const ModuleVector<Rational>& v) const;
    bool insert(const ModuleVector<Rational>& v);
    std::vector<ModuleVector<Rational>> vectors() const;

    std::size_t rounds = 0;

private:
    BasisIndex basis_;
    RowEchelon<Rational> echelon_;
};

/* Least subspace of the window containing the seeds and closed under
 * x -> (g x truncated to the window) for every generator with
 * |mode| <= mode_bound (k included for Universal contexts). Components
 * leaving the window are dropped, so the result approximates the true
 * submodule intersected with the window from below whenever the
 * submodule is spanned by monomials or the action is graded.
 * mode_bound <= 0 selects max_degree + 1.
 */
SubmoduleSpan submodule_closure(const std::vector<ModuleVector<Rational>>& seeds, const ModuleContext& ctx,
                                const Truncation& tr, int mode_bound = 0);

} // namespace h4t
