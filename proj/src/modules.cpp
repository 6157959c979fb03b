#include "h4t/modules.hpp"

#include <algorithm>
#include <deque>

namespace h4t {

namespace {

std::vector<EvenPseudoPartition> even_positive_of(int size)
{
    std::vector<EvenPseudoPartition> out;
    for (auto& p : enumerate_even_pseudopartitions(size, 0))
        if (p.size() == size)
            out.push_back(std::move(p));
    return out;
}

} // namespace

std::vector<PBWMonomial> homogeneous_basis(const ModuleContext& ctx, int degree, int a0_cap, int kexp_cap)
{
    std::vector<PBWMonomial> out;
    if (degree < 0)
        return out;
    const int zeros = ctx.kind() == ModuleKind::Verma ? 0 : a0_cap;
    const int kmax = ctx.kind() == ModuleKind::Universal ? kexp_cap : 0;
    for (int a = 0; a <= degree; a += 2) {
        auto mus = even_positive_of(a);
        for (int b = 0; a + b <= degree; ++b) {
            auto nus = odd_partitions_of(b);
            for (int c = 0; a + b + c <= degree; ++c) {
                auto lams = odd_partitions_of(c);
                auto etas = odd_partitions_of(degree - a - b - c);
                for (const auto& mu : mus)
                    for (int z = 0; z <= zeros; ++z) {
                        EvenPseudoPartition full = mu;
                        for (int i = 0; i < z; ++i)
                            full = full.with(0);
                        for (const auto& nu : nus)
                            for (const auto& lam : lams)
                                for (const auto& eta : etas)
                                    for (int t = 0; t <= kmax; ++t)
                                        out.emplace_back(full, nu, lam, eta, t);
                    }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PBWMonomial> basis(const ModuleContext& ctx, const Truncation& tr)
{
    std::vector<PBWMonomial> out;
    for (int n = 0; n <= tr.max_degree; ++n) {
        auto slice = homogeneous_basis(ctx, n, tr.a0_cap, tr.kexp_cap);
        out.insert(out.end(), slice.begin(), slice.end());
    }
    return out;
}

std::vector<std::size_t> basis_census(const ModuleContext& ctx, const Truncation& tr)
{
    std::vector<std::size_t> out;
    for (int n = 0; n <= tr.max_degree; ++n)
        out.push_back(homogeneous_basis(ctx, n, tr.a0_cap, tr.kexp_cap).size());
    return out;
}

BasisIndex::BasisIndex(std::vector<PBWMonomial> monomials)
    : monomials_(std::move(monomials))
{
    index_.reserve(monomials_.size());
    for (std::size_t i = 0; i < monomials_.size(); ++i)
        if (!index_.emplace(monomials_[i], i).second)
            throw std::invalid_argument("duplicate monomial in basis: " + monomials_[i].to_string());
}

std::optional<std::size_t> BasisIndex::find(const PBWMonomial& m) const
{
    auto it = index_.find(m);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

bool SubmoduleSpan::contains(const ModuleVector<Rational>& v) const
{
    for (const auto& [m, c] : v)
        if (!basis_.find(m))
            return false;
    return echelon_.contains(project(v, basis_));
}

bool SubmoduleSpan::insert(const ModuleVector<Rational>& v)
{
    return echelon_.insert(project(v, basis_));
}

std::vector<ModuleVector<Rational>> SubmoduleSpan::vectors() const
{
    std::vector<ModuleVector<Rational>> out;
    for (const auto& row : echelon_.rows())
        out.push_back(expand(row, basis_));
    return out;
}

SubmoduleSpan submodule_closure(const std::vector<ModuleVector<Rational>>& seeds, const ModuleContext& ctx,
                                const Truncation& tr, int mode_bound)
{
    if (mode_bound <= 0)
        mode_bound = tr.max_degree + 1;
    SubmoduleSpan span{BasisIndex(basis(ctx, tr))};
    std::vector<Generator> gens = generators_up_to(mode_bound);
    const bool universal = ctx.kind() == ModuleKind::Universal;
    if (universal)
        gens.push_back(Generator::K());

    std::optional<Rewriter<Rational>> rq;
    std::optional<Rewriter<PolyK>> ru;
    if (universal)
        ru.emplace(ctx);
    else
        rq.emplace(ctx);
    auto apply = [&](const Generator& g, const ModuleVector<Rational>& v) {
        if (universal)
            return unfold(ru->act(g, fold(v)));
        return rq->act(g, v);
    };
    auto truncate = [&](const ModuleVector<Rational>& v) {
        ModuleVector<Rational> out;
        for (const auto& [m, c] : v)
            if (tr.contains(m))
                out.add(m, c);
        return out;
    };

    std::deque<ModuleVector<Rational>> queue;
    for (const auto& s : seeds) {
        auto t = truncate(s);
        if (span.insert(t))
            queue.push_back(std::move(t));
    }
    while (!queue.empty()) {
        ++span.rounds;
        ModuleVector<Rational> v = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : gens) {
            auto w = truncate(apply(g, v));
            if (!w.is_zero() && span.insert(w))
                queue.push_back(std::move(w));
        }
    }
    return span;
}

} // namespace h4t
