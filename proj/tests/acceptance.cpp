// Acceptance run: one PASS/FAIL line per criterion.
//
//   acceptance [--only N]... [--known-defect N]... [--serial]
//
// Exit status is 0 when every criterion passes, except that a criterion
// listed with --known-defect is expected to FAIL (and the run is an
// error if it passes).

#include "oracles.hpp"

#include "h4t/formulas.hpp"
#include "h4t/modules.hpp"
#include "h4t/solver.hpp"
#include "h4t/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace h4t;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> notes;
};

Execution exec = Execution::Parallel;

const WhittakerType mixed_psi(Rational(2, 3), 5, {{1, 1}, {3, Rational(-1, 2)}});

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void fail(Outcome& o, const std::string& why)
{
    if (o.pass)
        o.detail = why;
    o.pass = false;
}

VerificationReport run_verify(const std::string& id, VerifyParams p)
{
    return verify(id, p, exec);
}

std::string first_witness(const VerificationReport& r)
{
    return r.witnesses.empty() ? std::string("no witness") : r.witnesses.front();
}

Outcome structure_constants()
{
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    auto gens = generators_up_to(6);
    gens.push_back(Generator::K());
    std::size_t triples = 0;
    for (const auto& x : gens) {
        for (const auto& y : gens) {
            LieElement xy = bracket(x, y);
            LieElement yx = bracket(y, x);
            yx *= Rational(-1);
            if (xy != yx)
                fail(o, "antisymmetry fails for " + x.to_string() + ", " + y.to_string());
            if (!x.is_central() && !y.is_central() && x.mode() + y.mode() == 0
                && xy.coefficient(Generator::K()) != x.mode() * invariant_form(x.letter(), y.letter()))
                fail(o, "central term of [" + x.to_string() + ", " + y.to_string() + "]");
            for (const auto& z : gens) {
                LieElement s = bracket(LieElement(x), bracket(y, z));
                s += bracket(LieElement(y), bracket(z, x));
                s += bracket(LieElement(z), bracket(x, y));
                ++triples;
                if (!s.is_zero())
                    fail(o, "Jacobi fails for " + x.to_string() + ", " + y.to_string() + ", " + z.to_string());
            }
        }
    }
    double secs = seconds_since(t0);
    if (secs >= 10)
        fail(o, "took " + std::to_string(secs) + " s");
    if (o.pass)
        o.detail = std::to_string(gens.size()) + " generators, " + std::to_string(triples) + " triples";
    return o;
}

Outcome formula_suite()
{
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    std::size_t cases = 0;
    for (const auto& ctx : {ModuleContext::quotient(mixed_psi, -2), ModuleContext::universal(WhittakerType(0, 3)),
                            ModuleContext::verma(Rational(5, 2), 2)}) {
        FormulaSuite s = check_action_formulas(ctx);
        cases += s.cases;
        if (!s.passed())
            fail(o, ctx.to_string() + ": " + std::to_string(s.mismatches) + " mismatches, first " + s.first_mismatch);
    }
    if (seconds_since(t0) >= 60)
        fail(o, "over the 60 s budget");
    if (o.pass)
        o.detail = std::to_string(cases) + " cases, exact";
    return o;
}

Outcome census()
{
    Outcome o;
    std::size_t checked = 0;
    for (int t = 0; t <= 3; ++t)
        for (const auto& ctx : {ModuleContext::quotient(WhittakerType(1, 0), 1), ModuleContext::verma(1, 0),
                                ModuleContext::universal(WhittakerType(0, 1))}) {
            int kcap = ctx.kind() == ModuleKind::Universal ? 1 : 0;
            auto got = basis_census(ctx, Truncation(10, t, kcap));
            auto want = oracle::census(ctx.kind(), 10, t, kcap);
            for (std::size_t n = 0; n < want.size(); ++n, ++checked)
                if (n >= got.size() || got[n] != want[n])
                    fail(o, std::string(to_string(ctx.kind())) + " T=" + std::to_string(t) + " degree "
                                + std::to_string(n));
        }
    auto small = basis(ModuleContext::quotient(WhittakerType(1, 0), 1), Truncation(2, 0));
    if (small.size() != 11)
        fail(o, "degree <= 2, T = 0 gives " + std::to_string(small.size()) + " monomials");
    if (o.pass)
        o.detail = std::to_string(checked) + " degree counts, degree <= 2 T=0 has 11";
    return o;
}

Outcome nonsingular_nonzero_level()
{
    Outcome o;
    std::ostringstream d;
    std::vector<VerifyParams> psis(2);
    psis[0].c1 = 1, psis[0].sigma1 = 0;
    psis[1].c1 = Rational(2, 3), psis[1].sigma1 = 5, psis[1].dvals = {{1, 1}, {3, Rational(-1, 2)}};
    for (auto p : psis)
        for (const Rational& xi : {Rational(1), Rational(-2)}) {
            p.xi = xi;
            p.max_degree = 6;
            p.a0_cap = 3;
            auto r = run_verify("3.7", p);
            bool ok = r.passed && r.dimension == 1 && r.basis == std::vector<std::string>{"w"} && r.elapsed_ms < 300000;
            if (!ok)
                fail(o, "c1=" + to_string(*p.c1) + " xi=" + to_string(xi) + ": " + first_witness(r));
            d << (d.tellp() ? ", " : "") << "dim " << r.dimension << " in " << static_cast<int>(r.elapsed_ms) << " ms";
        }
    if (o.pass)
        o.detail = d.str();
    return o;
}

Outcome universal_module()
{
    Outcome o;
    VerifyParams a;
    a.c1 = 1, a.max_degree = 4, a.a0_cap = 2;
    auto ra = run_verify("3.8", a);
    if (!ra.passed || ra.dimension != 1)
        fail(o, "nonsingular: " + first_witness(ra));
    VerifyParams b;
    b.c1 = 0, b.sigma1 = 1, b.max_degree = 4, b.a0_cap = 2;
    auto rb = run_verify("5.3", b);
    if (!rb.passed)
        fail(o, "singular: " + first_witness(rb));
    auto span = whittaker_space_universal(WhittakerType(0, 1), Truncation(4, 2), 0, exec);
    ModuleVector<PolyK> z(PBWMonomial(EvenPseudoPartition({0}), {}, {}, {}), PolyK::k());
    z.add(PBWMonomial({}, {}, {}, OddPartition({1})), PolyK(-1));
    if (!in_span(z, span))
        fail(o, "k*A(0)*w - c(-1)*w is not a solution");
    if (o.pass)
        o.detail = "nonsingular dim " + std::to_string(ra.dimension) + ", singular dim " + std::to_string(rb.dimension)
                   + " containing k*A(0)*w - c(-1)*w";
    return o;
}

Outcome level_zero()
{
    Outcome o;
    VerifyParams p;
    p.c1 = 1, p.xi = 0, p.max_degree = 6, p.a0_cap = 3;
    auto r = run_verify("4.3", p);
    std::uint64_t want = 0;
    for (int n = 0; n <= 6; ++n)
        want += oracle::brute_odd_partitions(n);
    if (!r.passed || r.dimension != want || want != 14)
        fail(o, "dimension " + std::to_string(r.dimension) + " vs " + std::to_string(want) + ": " + first_witness(r));
    if (o.pass)
        o.detail = "dim " + std::to_string(r.dimension) + " = " + std::to_string(want) + ", span of c-monomials";
    return o;
}

Outcome singular_type()
{
    Outcome o;
    VerifyParams a;
    a.c1 = 0, a.sigma1 = 3, a.xi = 2, a.max_degree = 5, a.a0_cap = 5;
    auto ra = run_verify("5.2", a);
    if (!ra.passed || ra.dimension != 6)
        fail(o, "sigma1=3: dim " + std::to_string(ra.dimension) + ", " + first_witness(ra));
    VerifyParams b;
    b.c1 = 0, b.sigma1 = 0, b.xi = 1, b.max_degree = 3, b.a0_cap = 4;
    auto rb = run_verify("5.2", b);
    if (!rb.passed || rb.dimension != 5)
        fail(o, "sigma1=0: dim " + std::to_string(rb.dimension) + ", " + first_witness(rb));
    if (o.pass)
        o.detail = "dims " + std::to_string(ra.dimension) + " and " + std::to_string(rb.dimension);
    return o;
}

Outcome verma_singular()
{
    Outcome o;
    for (const Rational& l : {Rational(0), Rational(2)})
        for (int d = 1; d <= 6; ++d) {
            auto sv = singular_vectors(ModuleContext::verma(1, l), d, exec);
            if (!sv.empty())
                fail(o, "xi=1 l=" + to_string(l) + " degree " + std::to_string(d) + ": " + format(sv.front()));
        }
    const ModuleVector<Rational> d1(PBWMonomial({}, {}, OddPartition({1}), {}));
    const ModuleVector<Rational> c1(PBWMonomial({}, {}, {}, OddPartition({1})));
    auto s00 = singular_vectors(ModuleContext::verma(0, 0), 1, exec);
    if (!in_span(d1, s00) || !in_span(c1, s00))
        fail(o, "xi=0 l=0 misses d(-1)*w or c(-1)*w");
    auto s01 = singular_vectors(ModuleContext::verma(0, 1), 1, exec);
    if (!in_span(c1, s01) || in_span(d1, s01))
        fail(o, "xi=0 l=1 has the wrong degree-1 singular vectors");
    if (o.pass)
        o.detail = "none for xi=1 in degrees 1-6; level 0 as predicted";
    return o;
}

Outcome filtration()
{
    Outcome o;
    VerifyParams p;
    p.xi = 1, p.l = 2, p.max_degree = 4, p.a0_cap = 5, p.mode_bound = 7;
    auto r = run_verify("5.5", p);
    if (!r.passed)
        fail(o, first_witness(r));
    // independent recount of the Verma graded dimensions
    auto verma = oracle::census(ModuleKind::Verma, 4, 0, 0);
    std::uint64_t want = 0;
    for (auto x : verma)
        want += x * 5;
    if (!r.expected_dimension || *r.expected_dimension != want)
        fail(o, "expected dimension differs from the product formula");
    if (o.pass)
        o.detail = "5 sections, total " + std::to_string(r.dimension) + " = " + std::to_string(want);
    return o;
}

Outcome maximal_submodule()
{
    Outcome o;
    VerifyParams p;
    p.max_degree = 4, p.a0_cap = 2;
    auto r = run_verify("5.6", p);
    if (!r.passed)
        fail(o, first_witness(r));
    if (o.pass)
        o.detail = "closure dim " + std::to_string(r.dimension) + ", quotient dim 1";
    return o;
}

Outcome local_nilpotency()
{
    Outcome o;
    std::vector<ModuleContext> ctxs{ModuleContext::quotient(mixed_psi, 1), ModuleContext::quotient(WhittakerType(0, 3), 2),
                                    ModuleContext::quotient(WhittakerType(1, 0), 0), ModuleContext::verma(1, 2)};
    auto gens = positive_generators(7);
    std::size_t pairs = 0, over = 0, over_corrected = 0;
    int worst = 0;
    std::string example;
    for (const auto& ctx : ctxs) {
        for (const auto& m : basis(ctx, Truncation(6, 2))) {
            ModuleVector<Rational> v(m);
            for (const auto& g : gens) {
                int depth = nilpotency_depth(v, g, ctx);
                ++pairs;
                if (depth > m.degree() + 1) {
                    ++over;
                    if (depth - m.degree() - 1 > worst || example.empty()) {
                        worst = std::max(worst, depth - m.degree() - 1);
                        if (example.empty())
                            example = "depth " + std::to_string(depth) + " for " + g.to_string() + " on "
                                      + m.to_string() + " in " + ctx.to_string();
                    }
                }
                if (depth > m.degree() + m.length() + 1)
                    ++over_corrected;
            }
        }
    }
    if (over)
        fail(o, std::to_string(over) + " of " + std::to_string(pairs) + " pairs exceed degree+1, e.g. " + example);
    else
        o.detail = std::to_string(pairs) + " pairs within degree+1";
    o.notes.push_back("depth <= degree + factors + 1 on all " + std::to_string(pairs) + " pairs: "
                      + (over_corrected ? "no (" + std::to_string(over_corrected) + " exceed)" : std::string("yes")));
    return o;
}

Outcome oracle_agreement()
{
    Outcome o;
    std::vector<std::pair<ModuleContext, Truncation>> cases{
        {ModuleContext::quotient(WhittakerType(1, 0), 1), Truncation(3, 2)},
        {ModuleContext::quotient(mixed_psi, -2), Truncation(3, 1)},
        {ModuleContext::quotient(WhittakerType(1, 0), 0), Truncation(3, 2)},
        {ModuleContext::quotient(WhittakerType(0, 3), 2), Truncation(3, 3)},
        {ModuleContext::quotient(WhittakerType(), 0), Truncation(2, 1)},
        {ModuleContext::verma(0, 1), Truncation(3, 0)},
    };
    std::ostringstream d;
    for (const auto& [ctx, tr] : cases) {
        WhittakerProblem p{ctx, tr};
        auto fast = whittaker_space(p, exec);
        auto slow = oracle::whittaker_brute(ctx, tr, p.effective_mode_bound());
        if (fast.size() != slow.size() || !oracle::same_span(fast, slow))
            fail(o, ctx.to_string() + ": solver " + std::to_string(fast.size()) + ", oracle "
                        + std::to_string(slow.size()));
        d << (d.tellp() ? " " : "") << fast.size();
    }
    if (o.pass)
        o.detail = "6 samples, dims " + d.str();
    return o;
}

} // namespace

int main(int argc, char** argv)
{
    std::set<int> only, defects;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if ((a == "--only" || a == "--known-defect") && i + 1 < argc)
            (a == "--only" ? only : defects).insert(std::stoi(argv[++i]));
        else if (a == "--serial")
            exec = Execution::Serial;
        else {
            std::cerr << "usage: acceptance [--only N]... [--known-defect N]... [--serial]\n";
            return 2;
        }
    }

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"structure constants", structure_constants},
        {"action formulas", formula_suite},
        {"basis census", census},
        {"nonsingular type, nonzero level", nonsingular_nonzero_level},
        {"universal module over Q(k)", universal_module},
        {"nonsingular type, level zero", level_zero},
        {"singular type, nonzero level", singular_type},
        {"Verma singular vectors", verma_singular},
        {"A(0) filtration sections", filtration},
        {"maximal submodule at psi = 0, level 0", maximal_submodule},
        {"local nilpotency bound", local_nilpotency},
        {"solver vs brute force", oracle_agreement},
    };

    int unexpected = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        int n = static_cast<int>(i) + 1;
        if (!only.empty() && !only.count(n))
            continue;
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = seconds_since(t0);
        std::printf("[%s] %2d %-38s %7.2fs  %s\n", o.pass ? "PASS" : "FAIL", n, criteria[i].first.c_str(), secs,
                    o.detail.c_str());
        for (const auto& note : o.notes)
            std::printf("       %s\n", note.c_str());
        std::fflush(stdout);
        bool expected_fail = defects.count(n) > 0;
        if (o.pass == expected_fail) {
            ++unexpected;
            if (expected_fail)
                std::printf("       criterion %d was listed as a known defect but passed\n", n);
        }
    }
    return unexpected == 0 ? 0 : 1;
}
