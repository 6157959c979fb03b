#include "h4t/solver.hpp"

#include "h4t/modules.hpp"

#include <algorithm>
#include <stdexcept>

namespace h4t {

namespace {

std::vector<ModuleVector<Rational>> rational_kernel(const ModuleContext& ctx, const std::vector<PBWMonomial>& cols,
                                                    const std::vector<Generator>& gens, Execution mode)
{
    auto images = shifted_images<Rational>(ctx, cols, gens, mode);
    auto sys = stack_equations(images, gens.size());
    RowEchelon<Rational> ech(sys.cols);
    for (auto& row : sys.rows) {
        if (ech.rank() == sys.cols)
            break;
        ech.insert(std::move(row));
    }
    BasisIndex index(cols);
    std::vector<ModuleVector<Rational>> out;
    for (const auto& v : ech.nullspace())
        out.push_back(expand(v, index));
    return out;
}

BasisIndex union_index(const std::vector<const ModuleVector<Rational>*>& vs)
{
    std::vector<PBWMonomial> ms;
    for (const auto* v : vs)
        for (const auto& [m, c] : *v)
            ms.push_back(m);
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    return BasisIndex(std::move(ms));
}

BasisIndex union_index(const std::vector<const ModuleVector<PolyK>*>& vs)
{
    std::vector<PBWMonomial> ms;
    for (const auto* v : vs)
        for (const auto& [m, c] : *v)
            ms.push_back(m);
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    return BasisIndex(std::move(ms));
}

template <class R>
std::vector<const ModuleVector<R>*> pointers(const std::vector<ModuleVector<R>>& a,
                                             const std::vector<ModuleVector<R>>& b = {},
                                             const ModuleVector<R>* extra = nullptr)
{
    std::vector<const ModuleVector<R>*> out;
    for (const auto& v : a)
        out.push_back(&v);
    for (const auto& v : b)
        out.push_back(&v);
    if (extra)
        out.push_back(extra);
    return out;
}

RowEchelon<Rational> echelon_of(const std::vector<ModuleVector<Rational>>& s, const BasisIndex& index)
{
    RowEchelon<Rational> ech(index.size());
    for (const auto& v : s)
        ech.insert(project(v, index));
    return ech;
}

FractionFreeEchelon echelon_of(const std::vector<ModuleVector<PolyK>>& s, const BasisIndex& index)
{
    FractionFreeEchelon ech(index.size());
    for (const auto& v : s)
        ech.insert(project(v, index));
    return ech;
}

template <class R>
int depth_impl(ModuleVector<R> v, const Generator& g, const ModuleContext& ctx, int cap)
{
    if (!g.is_positive())
        throw std::invalid_argument("nilpotency depth needs a positive generator, got " + g.to_string());
    Rewriter<R> rw(ctx);
    const R eig(ctx.eigenvalue(g));
    int s = 0;
    while (!v.is_zero()) {
        if (s >= cap)
            throw std::runtime_error("nilpotency depth exceeds " + std::to_string(cap));
        ModuleVector<R> next = rw.act(g, v);
        next.add_scaled(v, R(-eig));
        v = std::move(next);
        ++s;
    }
    return s;
}

template <class R>
bool whittaker_impl(const ModuleVector<R>& v, const ModuleContext& ctx, int bound)
{
    Rewriter<R> rw(ctx);
    for (const auto& g : positive_generators(bound)) {
        ModuleVector<R> w = rw.act(g, v);
        w.add_scaled(v, R(-ctx.eigenvalue(g)));
        if (!w.is_zero())
            return false;
    }
    return true;
}

} // namespace

int WhittakerProblem::effective_mode_bound() const
{
    return mode_bound > 0 ? mode_bound : std::max(2, tr.max_degree + 1);
}

std::vector<ModuleVector<Rational>> whittaker_space(const WhittakerProblem& p, Execution mode)
{
    if (p.ctx.kind() == ModuleKind::Universal)
        throw std::invalid_argument("use whittaker_space_universal for universal contexts");
    return rational_kernel(p.ctx, basis(p.ctx, p.tr), positive_generators(p.effective_mode_bound()), mode);
}

std::vector<ModuleVector<PolyK>> whittaker_space_universal(const WhittakerType& psi, const Truncation& tr,
                                                           int mode_bound, Execution mode)
{
    const ModuleContext ctx = ModuleContext::universal(psi);
    const Truncation folded(tr.max_degree, tr.a0_cap, 0);
    const int bound = mode_bound > 0 ? mode_bound : std::max(2, tr.max_degree + 1);
    const auto cols = basis(ctx, folded);
    const auto gens = positive_generators(bound);
    auto images = shifted_images<PolyK>(ctx, cols, gens, mode);
    auto sys = stack_equations(images, gens.size());
    FractionFreeEchelon ech(sys.cols);
    for (auto& row : sys.rows) {
        if (ech.rank() == sys.cols)
            break;
        ech.insert(std::move(row));
    }
    BasisIndex index(cols);
    std::vector<ModuleVector<PolyK>> out;
    for (const auto& v : ech.nullspace())
        out.push_back(expand(clear_denominators(v), index));
    return out;
}

std::vector<ModuleVector<Rational>> singular_vectors(const ModuleContext& verma, int degree, Execution mode)
{
    if (verma.kind() != ModuleKind::Verma)
        throw std::invalid_argument("singular vectors are computed in Verma contexts");
    if (degree < 1)
        throw std::invalid_argument("singular vector degree must be >= 1");
    return rational_kernel(verma, homogeneous_basis(verma, degree, 0), positive_generators(degree + 1), mode);
}

int nilpotency_depth(const ModuleVector<Rational>& v, const Generator& g, const ModuleContext& ctx, int cap)
{
    return depth_impl(v, g, ctx, cap);
}

int nilpotency_depth(const ModuleVector<PolyK>& v, const Generator& g, const ModuleContext& ctx, int cap)
{
    return depth_impl(v, g, ctx, cap);
}

bool in_span(const ModuleVector<Rational>& v, const std::vector<ModuleVector<Rational>>& s)
{
    BasisIndex index = union_index(pointers(s, {}, &v));
    return echelon_of(s, index).contains(project(v, index));
}

bool in_span(const ModuleVector<PolyK>& v, const std::vector<ModuleVector<PolyK>>& s)
{
    BasisIndex index = union_index(pointers(s, {}, &v));
    return echelon_of(s, index).contains(project(v, index));
}

bool same_span(const std::vector<ModuleVector<Rational>>& a, const std::vector<ModuleVector<Rational>>& b)
{
    BasisIndex index = union_index(pointers(a, b));
    auto ea = echelon_of(a, index);
    auto eb = echelon_of(b, index);
    return std::all_of(a.begin(), a.end(), [&](const auto& v) { return eb.contains(project(v, index)); })
        && std::all_of(b.begin(), b.end(), [&](const auto& v) { return ea.contains(project(v, index)); });
}

bool same_span(const std::vector<ModuleVector<PolyK>>& a, const std::vector<ModuleVector<PolyK>>& b)
{
    BasisIndex index = union_index(pointers(a, b));
    auto ea = echelon_of(a, index);
    auto eb = echelon_of(b, index);
    return std::all_of(a.begin(), a.end(), [&](const auto& v) { return eb.contains(project(v, index)); })
        && std::all_of(b.begin(), b.end(), [&](const auto& v) { return ea.contains(project(v, index)); });
}

std::size_t span_dimension(const std::vector<ModuleVector<Rational>>& s)
{
    return echelon_of(s, union_index(pointers(s))).rank();
}

std::size_t span_dimension(const std::vector<ModuleVector<PolyK>>& s)
{
    return echelon_of(s, union_index(pointers(s))).rank();
}

bool is_whittaker(const ModuleVector<Rational>& v, const ModuleContext& ctx, int bound)
{
    return whittaker_impl(v, ctx, bound);
}

bool is_whittaker(const ModuleVector<PolyK>& v, const ModuleContext& ctx, int bound)
{
    return whittaker_impl(v, ctx, bound);
}

} // namespace h4t
