#include "h4t/verify.hpp"

#include "h4t/formulas.hpp"
#include "h4t/modules.hpp"
#include "h4t/solver.hpp"

#include <algorithm>
#include <chrono>

namespace h4t {

namespace {

struct Setup {
    const std::string& id;
    const VerifyParams& p;
    VerificationReport& r;

    template <class T>
    T need(const std::optional<T>& v, const char* flag) const
    {
        if (!v)
            throw VerifyError("verify " + id + " needs --" + flag);
        return *v;
    }
    void require(bool ok, const std::string& why) const
    {
        if (!ok)
            throw VerifyError("verify " + id + ": " + why);
    }
    void echo(const std::string& key, const std::string& value) { r.parameters.emplace_back(key, value); }
    void echo(const std::string& key, const Rational& value) { echo(key, to_string(value)); }
    void echo(const std::string& key, int value) { echo(key, std::to_string(value)); }

    WhittakerType psi()
    {
        WhittakerType t(p.c1.value_or(0), p.sigma1.value_or(0), p.dvals);
        echo("c1", t.c1());
        echo("sigma1", t.sigma1());
        for (const auto& [m, v] : t.dvals())
            echo("d" + std::to_string(m), v);
        return t;
    }
    int degree()
    {
        int n = need(p.max_degree, "max-degree");
        require(n >= 0, "max-degree must be >= 0");
        echo("max_degree", n);
        return n;
    }
    int a0_cap(int fallback)
    {
        int t = p.a0_cap.value_or(fallback);
        require(t >= 0, "a0-cap must be >= 0");
        echo("a0_cap", t);
        return t;
    }
};

ModuleVector<Rational> vacuum()
{
    return ModuleVector<Rational>(PBWMonomial());
}

PBWMonomial power_monomial(int a0, int c1)
{
    return PBWMonomial(EvenPseudoPartition(std::vector<int>(static_cast<std::size_t>(a0), 0)), OddPartition(),
                       OddPartition(), OddPartition(std::vector<int>(static_cast<std::size_t>(c1), 1)));
}

Rational binomial(int n, int k)
{
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

template <class R>
std::vector<std::string> formatted(const std::vector<ModuleVector<R>>& vs)
{
    std::vector<std::string> out;
    for (const auto& v : vs)
        out.push_back(format(v));
    return out;
}

void compare_spans(VerificationReport& r, const std::vector<ModuleVector<Rational>>& got,
                   const std::vector<ModuleVector<Rational>>& expected)
{
    r.basis = formatted(got);
    r.expected_basis = formatted(expected);
    r.dimension = got.size();
    r.expected_dimension = span_dimension(expected);
    r.passed = r.dimension == *r.expected_dimension && same_span(got, expected);
    if (!r.passed)
        for (const auto& v : got)
            if (!in_span(v, expected))
                r.witnesses.push_back("unexpected solution " + format(v));
}

void compare_spans(VerificationReport& r, const std::vector<ModuleVector<PolyK>>& got,
                   const std::vector<ModuleVector<PolyK>>& expected)
{
    r.basis = formatted(got);
    r.expected_basis = formatted(expected);
    r.dimension = got.size();
    r.expected_dimension = span_dimension(expected);
    r.passed = r.dimension == *r.expected_dimension && same_span(got, expected);
    if (!r.passed)
        for (const auto& v : got)
            if (!in_span(v, expected))
                r.witnesses.push_back("unexpected solution " + format(v));
}

void run_formulas(Setup& s, Execution)
{
    WhittakerType psi(s.p.c1.value_or(1), s.p.sigma1.value_or(3), s.p.dvals);
    Rational xi = s.p.xi.value_or(2);
    Rational l = s.p.l.value_or(2);
    s.echo("c1", psi.c1());
    s.echo("sigma1", psi.sigma1());
    for (const auto& [m, v] : psi.dvals())
        s.echo("d" + std::to_string(m), v);
    s.echo("xi", xi);
    s.echo("l", l);
    std::size_t cases = 0;
    bool ok = true;
    for (const auto& ctx : {ModuleContext::universal(psi), ModuleContext::quotient(psi, xi), ModuleContext::verma(xi, l)}) {
        FormulaSuite suite = check_action_formulas(ctx);
        cases += suite.cases;
        s.r.basis.push_back(ctx.to_string() + ": " + std::to_string(suite.cases - suite.mismatches) + "/"
                            + std::to_string(suite.cases) + " cases agree");
        if (!suite.passed()) {
            ok = false;
            s.r.witnesses.push_back(ctx.to_string() + ": " + suite.first_mismatch);
        }
    }
    s.r.dimension = ok ? cases : 0;
    s.r.expected_dimension = cases;
    s.r.passed = ok;
}

void run_nonsingular(Setup& s, Execution mode)
{
    s.need(s.p.c1, "c1");
    WhittakerType psi = s.psi();
    Rational xi = s.need(s.p.xi, "xi");
    s.echo("xi", xi);
    s.require(psi.nonsingular(), "needs c1 != 0");
    s.require(!is_zero(xi), "needs xi != 0");
    int n = s.degree();
    Truncation tr(n, s.a0_cap(2));
    WhittakerProblem prob{ModuleContext::quotient(psi, xi), tr, s.p.mode_bound.value_or(0)};
    s.echo("mode_bound", prob.effective_mode_bound());
    compare_spans(s.r, whittaker_space(prob, mode), {vacuum()});
}

void run_universal_nonsingular(Setup& s, Execution mode)
{
    s.need(s.p.c1, "c1");
    WhittakerType psi = s.psi();
    s.require(psi.nonsingular(), "needs c1 != 0");
    int n = s.degree();
    Truncation tr(n, s.a0_cap(2));
    int bound = s.p.mode_bound.value_or(std::max(2, n + 1));
    s.echo("mode_bound", bound);
    compare_spans(s.r, whittaker_space_universal(psi, tr, bound, mode), {ModuleVector<PolyK>(PBWMonomial())});
}

void run_level_zero(Setup& s, Execution mode)
{
    s.need(s.p.c1, "c1");
    WhittakerType psi = s.psi();
    s.require(psi.nonsingular(), "needs c1 != 0");
    s.require(!s.p.xi || is_zero(*s.p.xi), "needs xi = 0");
    s.echo("xi", Rational(0));
    int n = s.degree();
    Truncation tr(n, s.a0_cap(2));
    WhittakerProblem prob{ModuleContext::quotient(psi, 0), tr, s.p.mode_bound.value_or(0)};
    s.echo("mode_bound", prob.effective_mode_bound());
    std::vector<ModuleVector<Rational>> expected;
    for (const auto& eta : enumerate_odd_partitions(n))
        expected.emplace_back(PBWMonomial({}, {}, {}, eta));
    compare_spans(s.r, whittaker_space(prob, mode), expected);
}

/* z = xi A(0) - sigma1 c(-1), or A(0) when sigma1 = 0. */
int power_count(const Rational& sigma1, int n, int t)
{
    return is_zero(sigma1) ? t : std::min(n, t);
}

void run_singular_type(Setup& s, Execution mode)
{
    WhittakerType psi = s.psi();
    s.require(!psi.nonsingular(), "needs c1 = 0");
    Rational xi = s.need(s.p.xi, "xi");
    s.echo("xi", xi);
    s.require(!is_zero(xi), "needs xi != 0");
    int n = s.degree();
    int t = s.a0_cap(2);
    WhittakerProblem prob{ModuleContext::quotient(psi, xi), Truncation(n, t), s.p.mode_bound.value_or(0)};
    s.echo("mode_bound", prob.effective_mode_bound());
    const Rational& sigma = psi.sigma1();
    std::vector<ModuleVector<Rational>> expected;
    for (int j = 0; j <= power_count(sigma, n, t); ++j) {
        ModuleVector<Rational> v;
        if (is_zero(sigma)) {
            v.add(power_monomial(j, 0), 1);
        } else {
            for (int i = 0; i <= j; ++i) {
                Rational c = binomial(j, i);
                for (int a = 0; a < j - i; ++a)
                    c *= xi;
                for (int b = 0; b < i; ++b)
                    c *= -sigma;
                v.add(power_monomial(j - i, i), c);
            }
        }
        expected.push_back(std::move(v));
    }
    compare_spans(s.r, whittaker_space(prob, mode), expected);
}

void run_universal_singular(Setup& s, Execution mode)
{
    WhittakerType psi = s.psi();
    s.require(!psi.nonsingular(), "needs c1 = 0");
    int n = s.degree();
    int t = s.a0_cap(2);
    int bound = s.p.mode_bound.value_or(std::max(2, n + 1));
    s.echo("mode_bound", bound);
    const Rational& sigma = psi.sigma1();
    std::vector<ModuleVector<PolyK>> expected;
    for (int j = 0; j <= power_count(sigma, n, t); ++j) {
        ModuleVector<PolyK> v;
        if (is_zero(sigma)) {
            v.add(power_monomial(j, 0), PolyK(1));
        } else {
            for (int i = 0; i <= j; ++i) {
                Rational c = binomial(j, i);
                for (int b = 0; b < i; ++b)
                    c *= -sigma;
                v.add(power_monomial(j - i, i), PolyK::monomial(c, j - i));
            }
        }
        expected.push_back(std::move(v));
    }
    compare_spans(s.r, whittaker_space_universal(psi, Truncation(n, t), bound, mode), expected);
}

void run_verma_irreducibility(Setup& s, Execution mode)
{
    Rational xi = s.need(s.p.xi, "xi");
    Rational l = s.p.l.value_or(0);
    s.echo("xi", xi);
    s.echo("l", l);
    int n = s.degree();
    s.require(n >= 1, "needs max-degree >= 1");
    ModuleContext ctx = ModuleContext::verma(xi, l);
    std::size_t total = 0;
    for (int d = 1; d <= n; ++d) {
        auto sv = singular_vectors(ctx, d, mode);
        total += sv.size();
        for (const auto& v : sv)
            s.r.basis.push_back(format(v));
    }
    s.r.dimension = total;
    if (!is_zero(xi)) {
        s.r.expected_dimension = 0;
        s.r.passed = total == 0;
    } else {
        s.r.passed = total > 0;
    }
    if (!s.r.passed)
        s.r.witnesses.push_back(is_zero(xi) ? "no singular vector found for xi = 0"
                                            : "singular vectors found for xi != 0");
}

void run_filtration(Setup& s, Execution)
{
    Rational xi = s.need(s.p.xi, "xi");
    Rational l = s.need(s.p.l, "l");
    s.echo("xi", xi);
    s.echo("l", l);
    s.require(!is_zero(xi), "needs xi != 0");
    int n = s.degree();
    int t = s.a0_cap(n + 1);
    s.require(t >= 1, "needs a0-cap >= 1");
    int bound = s.p.mode_bound.value_or(n + 3);
    s.echo("mode_bound", bound);

    ModuleContext ctx = ModuleContext::quotient(WhittakerType(), xi);
    ModuleContext verma = ModuleContext::verma(xi, l);
    Rewriter<Rational> rw(ctx);
    const Generator a0 = Generator::A(0);

    // omega_i = (A(0) - l)^i w
    std::vector<ModuleVector<Rational>> omega{vacuum()};
    for (int i = 1; i <= t; ++i) {
        ModuleVector<Rational> v = rw.act(a0, omega.back());
        v.add_scaled(omega.back(), -l);
        omega.push_back(std::move(v));
    }
    bool ok = true;
    for (int i = 0; i < t; ++i) {
        bool w = is_whittaker(omega[static_cast<std::size_t>(i)], ctx, bound);
        s.r.basis.push_back("omega_" + std::to_string(i) + " = " + format(omega[static_cast<std::size_t>(i)]));
        if (!w) {
            ok = false;
            s.r.witnesses.push_back("omega_" + std::to_string(i) + " is not a Whittaker vector");
        }
    }

    // Window part of M^i in degree d: y A(0)^j omega_i, y a Verma basis monomial, i + j <= t.
    auto generators_of = [&](int i, int d) {
        std::vector<ModuleVector<Rational>> out;
        for (const auto& y : homogeneous_basis(verma, d, 0)) {
            ModuleVector<Rational> v = omega[static_cast<std::size_t>(i)];
            for (int j = 0; i + j <= t; ++j) {
                ModuleVector<Rational> u = v;
                auto fs = y.factors();
                for (auto it = fs.rbegin(); it != fs.rend(); ++it)
                    u = rw.act(*it, u);
                out.push_back(std::move(u));
                v = rw.act(a0, v);
            }
        }
        return out;
    };
    Truncation window(n, t);
    auto verma_dims = basis_census(verma, Truncation(n, 0));
    std::size_t got = 0, want = 0;
    for (int d = 0; d <= n; ++d) {
        std::vector<std::vector<ModuleVector<Rational>>> levels;
        for (int i = 0; i <= t; ++i)
            levels.push_back(generators_of(i, d));
        for (int i = 0; i < t; ++i) {
            const auto& upper = levels[static_cast<std::size_t>(i)];
            const auto& lower = levels[static_cast<std::size_t>(i) + 1];
            for (const auto& v : upper)
                for (const auto& [m, c] : v)
                    if (!window.contains(m))
                        ok = false;
            bool nested = std::all_of(lower.begin(), lower.end(), [&](const auto& v) { return in_span(v, upper); });
            std::size_t q = span_dimension(upper) - span_dimension(lower);
            got += q;
            want += verma_dims[static_cast<std::size_t>(d)];
            if (!nested || q != verma_dims[static_cast<std::size_t>(d)]) {
                ok = false;
                s.r.witnesses.push_back("degree " + std::to_string(d) + ", level " + std::to_string(i) + ": quotient "
                                        + std::to_string(q) + ", Verma " +
                                        std::to_string(verma_dims[static_cast<std::size_t>(d)])
                                        + (nested ? "" : ", not nested"));
            }
        }
    }
    s.r.dimension = got;
    s.r.expected_dimension = want;
    s.r.passed = ok && got == want;
}

void run_level_zero_trivial(Setup& s, Execution)
{
    s.echo("c1", Rational(0));
    s.echo("sigma1", Rational(0));
    s.echo("xi", Rational(0));
    int n = s.degree();
    int t = s.a0_cap(2);
    int bound = s.p.mode_bound.value_or(n + 1);
    s.echo("mode_bound", bound);
    ModuleContext ctx = ModuleContext::quotient(WhittakerType(), 0);
    Truncation tr(n, t);
    std::vector<ModuleVector<Rational>> seeds;
    for (const auto& lam : enumerate_odd_partitions(n))
        if (!lam.empty())
            seeds.emplace_back(PBWMonomial({}, {}, lam, {}));
    SubmoduleSpan span = submodule_closure(seeds, ctx, tr, bound);
    s.r.basis = formatted(span.vectors());
    s.r.dimension = span.dimension();
    const auto& all = span.basis().monomials();
    s.r.expected_dimension = all.size() - 1;
    for (const auto& m : all)
        if (!m.is_vacuum())
            s.r.expected_basis.push_back(m.to_string());
    bool ok = !span.contains(vacuum());
    if (!ok)
        s.r.witnesses.push_back("w lies in the closure");
    for (const auto& m : all)
        if (!m.is_vacuum() && !span.contains(ModuleVector<Rational>(m))) {
            ok = false;
            s.r.witnesses.push_back("missing " + m.to_string());
        }
    s.r.parameters.emplace_back("quotient_dimension", std::to_string(all.size() - span.dimension()));
    s.r.passed = ok && all.size() - span.dimension() == 1;
}

void run_verma_level_zero(Setup& s, Execution mode)
{
    Rational l = s.need(s.p.l, "l");
    s.echo("xi", Rational(0));
    s.echo("l", l);
    int n = s.degree();
    s.require(n >= 1, "needs max-degree >= 1");
    int bound = s.p.mode_bound.value_or(n + 1);
    s.echo("mode_bound", bound);
    ModuleContext ctx = ModuleContext::verma(0, l);
    auto sv = singular_vectors(ctx, 1, mode);
    s.r.basis = formatted(sv);
    s.r.dimension = sv.size();

    const ModuleVector<Rational> d1(PBWMonomial({}, {}, OddPartition({1}), {}));
    const ModuleVector<Rational> c1(PBWMonomial({}, {}, {}, OddPartition({1})));
    bool ok = true;
    auto expect = [&](const ModuleVector<Rational>& v, bool member) {
        if (in_span(v, sv) != member) {
            ok = false;
            s.r.witnesses.push_back(format(v) + (member ? " is not singular" : " is singular"));
        }
    };
    expect(c1, true);
    expect(d1, is_zero(l));
    if (is_zero(l))
        s.r.expected_basis = {format(d1), format(c1)};
    else
        s.r.expected_basis = {format(c1)};

    std::vector<ModuleVector<Rational>> seeds;
    for (const auto& p : enumerate_odd_partitions(n))
        if (!p.empty())
            seeds.emplace_back(is_zero(l) ? PBWMonomial({}, {}, p, {}) : PBWMonomial({}, {}, {}, p));
    SubmoduleSpan span = submodule_closure(seeds, ctx, Truncation(n, 0), bound);
    s.r.parameters.emplace_back("closure_dimension", std::to_string(span.dimension()));
    s.r.parameters.emplace_back("window_dimension", std::to_string(span.basis().size()));
    if (span.contains(vacuum())) {
        ok = false;
        s.r.witnesses.push_back("closure contains the cyclic vector");
    }
    s.r.passed = ok;
}

} // namespace

const std::vector<std::string>& statement_ids()
{
    static const std::vector<std::string> ids{"2.2", "3.7", "3.8", "4.3", "5.2", "5.3", "5.4", "5.5", "5.6", "5.7"};
    return ids;
}

std::string statement_summary(const std::string& id)
{
    if (id == "2.2")
        return "closed-form action of A(n), B(m) on pure A/B monomials in all three contexts";
    if (id == "3.7")
        return "nonsingular type, xi != 0: Whittaker vectors are multiples of w (needs --c1 --xi --max-degree)";
    if (id == "3.8")
        return "nonsingular type over Q(k): Whittaker vectors are multiples of w (needs --c1 --max-degree)";
    if (id == "4.3")
        return "nonsingular type, xi = 0: Whittaker vectors span c(-eta)w (needs --c1 --max-degree)";
    if (id == "5.2")
        return "c1 = 0, xi != 0: Whittaker vectors are polynomials in z applied to w (needs --xi --max-degree)";
    if (id == "5.3")
        return "c1 = 0 over Q(k): Whittaker vectors are polynomials in z = kA(0) - sigma1 c(-1) (needs --max-degree)";
    if (id == "5.4")
        return "Verma module has singular vectors iff xi = 0 (needs --xi --max-degree)";
    if (id == "5.5")
        return "psi = 0, xi != 0: (A(0)-l)^i w are Whittaker and the layers match the Verma module "
               "(needs --xi --l --max-degree)";
    if (id == "5.6")
        return "psi = 0, xi = 0: d(-lam)w generate every monomial but w (needs --max-degree)";
    if (id == "5.7")
        return "Verma(0, l): degree-1 singular vectors and a proper submodule (needs --l --max-degree)";
    throw VerifyError("unknown statement id '" + id + "'");
}

VerificationReport verify(const std::string& id, const VerifyParams& params, Execution mode)
{
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.id = id;
    Setup s{id, params, report};
    if (id == "2.2")
        run_formulas(s, mode);
    else if (id == "3.7")
        run_nonsingular(s, mode);
    else if (id == "3.8")
        run_universal_nonsingular(s, mode);
    else if (id == "4.3")
        run_level_zero(s, mode);
    else if (id == "5.2")
        run_singular_type(s, mode);
    else if (id == "5.3")
        run_universal_singular(s, mode);
    else if (id == "5.4")
        run_verma_irreducibility(s, mode);
    else if (id == "5.5")
        run_filtration(s, mode);
    else if (id == "5.6")
        run_level_zero_trivial(s, mode);
    else if (id == "5.7")
        run_verma_level_zero(s, mode);
    else
        throw VerifyError("unknown statement id '" + id + "'");
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace h4t
