#include "h4t/formulas.hpp"

#include <stdexcept>
#include <type_traits>

namespace h4t {

namespace {

template <class R>
R central_of(const ModuleContext& ctx)
{
    if constexpr (std::is_same_v<R, PolyK>)
        return PolyK::k();
    else
        return ctx.xi();
}

/* coefficient * A(-mu) B(-nu) c(-eta) w, with A(0) -> l in Verma. */
template <class R>
void place(ModuleVector<R>& out, const ModuleContext& ctx, R coeff, std::vector<int> mu, std::vector<int> nu,
           std::vector<int> eta)
{
    if (ctx.kind() == ModuleKind::Verma) {
        std::vector<int> kept;
        for (int p : mu) {
            if (p == 0)
                coeff = coeff * R(ctx.l());
            else
                kept.push_back(p);
        }
        mu = std::move(kept);
    }
    out.add(PBWMonomial(EvenPseudoPartition(mu), OddPartition(nu), OddPartition(), OddPartition(eta)), coeff);
}

/* c(mode) applied to (prefix) w: positive modes are evaluated on w. */
template <class R>
void place_with_c(ModuleVector<R>& out, const ModuleContext& ctx, const R& coeff, const std::vector<int>& mu,
                  const std::vector<int>& nu, int cmode)
{
    if (cmode > 0) {
        Rational e = ctx.eigenvalue(Generator::C(cmode));
        if (!is_zero(e))
            place(out, ctx, R(coeff * R(e)), mu, nu, {});
    } else {
        place(out, ctx, coeff, mu, nu, {-cmode});
    }
}

std::vector<int> drop(const std::vector<int>& parts, std::size_t i)
{
    std::vector<int> out = parts;
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
    return out;
}

template <class R>
ModuleVector<R> closed_form(const ModuleContext& ctx, const Generator& g, const PBWMonomial& m)
{
    if (!g.is_positive() || (g.letter() != Letter::A && g.letter() != Letter::B))
        throw std::invalid_argument("closed form covers positive A and B generators only");
    if (!m.lam().empty() || !m.eta().empty() || (!m.mu().empty() && !m.nu().empty()) || m.kexp() != 0)
        throw std::invalid_argument("closed form covers pure A or pure B monomials only");
    const R k = central_of<R>(ctx);
    const std::vector<int>& mu = m.mu().parts();
    const std::vector<int>& nu = m.nu().parts();
    const int n = g.mode();
    ModuleVector<R> out;
    if (g.letter() == Letter::A) {
        for (std::size_t i = 0; i < mu.size(); ++i)
            if (mu[i] == n)
                place(out, ctx, R(k * R(Rational(2 * n))), drop(mu, i), {}, {});
        for (std::size_t i = 0; i < nu.size(); ++i)
            place_with_c(out, ctx, R(Rational(-2)), {}, drop(nu, i), n - nu[i]);
        return out;
    }
    const Rational own = ctx.eigenvalue(g);
    for (std::size_t i = 0; i < mu.size(); ++i)
        place_with_c(out, ctx, R(Rational(2)), drop(mu, i), {}, n - mu[i]);
    for (std::size_t i = 0; i < nu.size(); ++i)
        if (nu[i] == n)
            place(out, ctx, R(k * R(Rational(-2 * n))), {}, drop(nu, i), {});
    if (!is_zero(own))
        place(out, ctx, R(own), mu, nu, {});
    return out;
}

std::vector<std::vector<int>> multisets(const std::vector<int>& allowed, std::size_t max_count)
{
    std::vector<std::vector<int>> out{{}};
    std::vector<std::vector<int>> frontier{{}};
    for (std::size_t len = 1; len <= max_count; ++len) {
        std::vector<std::vector<int>> next;
        for (const auto& s : frontier)
            for (int p : allowed)
                if (s.empty() || p >= s.back()) {
                    auto t = s;
                    t.push_back(p);
                    next.push_back(t);
                }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

template <class R>
FormulaSuite run_suite(const ModuleContext& ctx)
{
    FormulaSuite suite;
    Rewriter<R> rw(ctx);
    std::vector<PBWMonomial> monomials;
    for (const auto& mu : multisets({0, 2, 4, 6}, 3)) {
        EvenPseudoPartition p(mu);
        if (p.zero_count() <= 2)
            monomials.emplace_back(p, OddPartition(), OddPartition(), OddPartition());
    }
    for (const auto& nu : multisets({1, 3, 5, 7}, 3))
        if (!nu.empty())
            monomials.emplace_back(EvenPseudoPartition(), OddPartition(nu), OddPartition(), OddPartition());
    std::vector<Generator> gens;
    for (int n : {2, 4, 6, 8})
        gens.push_back(Generator::A(n));
    for (int m : {1, 3, 5, 7})
        gens.push_back(Generator::B(m));

    for (const auto& m : monomials) {
        ModuleVector<R> v = rw.reduce(Word{PolyK(Rational(1)), m.factors()});
        for (const auto& g : gens) {
            ++suite.cases;
            ModuleVector<R> lhs = rw.act(g, v);
            ModuleVector<R> rhs = closed_form<R>(ctx, g, m);
            if (!(lhs == rhs)) {
                if (suite.mismatches++ == 0)
                    suite.first_mismatch = g.to_string() + " on " + m.to_string() + ": rewriter " + format(lhs)
                        + ", closed form " + format(rhs);
            }
        }
    }
    return suite;
}

} // namespace

ModuleVector<Rational> closed_form_action(const ModuleContext& ctx, const Generator& g, const PBWMonomial& m)
{
    if (ctx.kind() == ModuleKind::Universal)
        throw std::invalid_argument("use closed_form_action_universal for universal contexts");
    return closed_form<Rational>(ctx, g, m);
}

ModuleVector<PolyK> closed_form_action_universal(const ModuleContext& ctx, const Generator& g, const PBWMonomial& m)
{
    if (ctx.kind() != ModuleKind::Universal)
        throw std::invalid_argument("closed_form_action_universal needs a universal context");
    return closed_form<PolyK>(ctx, g, m);
}

FormulaSuite check_action_formulas(const ModuleContext& ctx)
{
    if (ctx.kind() == ModuleKind::Universal)
        return run_suite<PolyK>(ctx);
    return run_suite<Rational>(ctx);
}

} // namespace h4t
