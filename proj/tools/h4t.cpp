#include "h4t/algebra.hpp"
#include "h4t/context.hpp"
#include "h4t/modules.hpp"
#include "h4t/partitions.hpp"
#include "h4t/report.hpp"
#include "h4t/solver.hpp"
#include "h4t/text.hpp"
#include "h4t/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace h4t;

namespace {

struct Options {
    std::string module = "quotient";
    std::string c1, sigma1, xi, l;
    std::vector<std::string> dvals;
    std::optional<int> max_degree, a0_cap, kexp_cap, mode_bound;
    std::string json;
    bool serial = false;
};

class Usage : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::optional<Rational> rational_opt(const std::string& text, const char* flag)
{
    if (text.empty())
        return std::nullopt;
    try {
        return parse_rational(text);
    } catch (const std::invalid_argument&) {
        throw Usage(std::string("--") + flag + ": not a rational: " + text);
    }
}

std::map<int, Rational> parse_dvals(const std::vector<std::string>& items)
{
    std::map<int, Rational> out;
    for (const auto& s : items) {
        auto eq = s.find('=');
        if (eq == std::string::npos)
            throw Usage("--d expects m=Q, got " + s);
        int m = 0;
        try {
            std::size_t used = 0;
            m = std::stoi(s.substr(0, eq), &used);
            if (used != eq)
                throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw Usage("--d: bad mode in " + s);
        }
        if (m <= 0 || m % 2 == 0)
            throw Usage("--d: mode must be positive and odd, got " + std::to_string(m));
        auto v = rational_opt(s.substr(eq + 1), "d");
        if (!v)
            throw Usage("--d: missing value in " + s);
        out[m] = *v;
    }
    return out;
}

WhittakerType psi_of(const Options& o)
{
    return WhittakerType(rational_opt(o.c1, "c1").value_or(0), rational_opt(o.sigma1, "sigma1").value_or(0),
                         parse_dvals(o.dvals));
}

ModuleContext context_of(const Options& o)
{
    if (o.module == "universal")
        return ModuleContext::universal(psi_of(o));
    Rational xi = rational_opt(o.xi, "xi").value_or(0);
    if (o.module == "verma") {
        if (!o.c1.empty() || !o.sigma1.empty() || !o.dvals.empty())
            throw Usage("verma modules have psi = 0; drop --c1/--sigma1/--d");
        return ModuleContext::verma(xi, rational_opt(o.l, "l").value_or(0));
    }
    return ModuleContext::quotient(psi_of(o), xi);
}

Truncation window_of(const Options& o)
{
    if (!o.max_degree)
        throw Usage("--max-degree is required");
    return Truncation(*o.max_degree, o.a0_cap.value_or(0), o.kexp_cap.value_or(0));
}

Execution exec_of(const Options& o)
{
    return o.serial ? Execution::Serial : Execution::Parallel;
}

void echo_context(CommandReport& r, const ModuleContext& ctx)
{
    r.parameters.emplace_back("module", to_string(ctx.kind()));
    r.parameters.emplace_back("context", ctx.to_string());
}

void echo_window(CommandReport& r, const Truncation& tr)
{
    r.parameters.emplace_back("max_degree", std::to_string(tr.max_degree));
    r.parameters.emplace_back("a0_cap", std::to_string(tr.a0_cap));
    r.parameters.emplace_back("kexp_cap", std::to_string(tr.kexp_cap));
}

template <class R>
std::vector<std::string> formatted(const std::vector<ModuleVector<R>>& vs)
{
    std::vector<std::string> out;
    for (const auto& v : vs)
        out.push_back(format(v));
    return out;
}

std::pair<int, int> parse_range(const std::string& s)
{
    try {
        auto dots = s.find("..");
        std::size_t used = 0;
        if (dots == std::string::npos) {
            int n = std::stoi(s, &used);
            if (used != s.size())
                throw std::invalid_argument(s);
            return {n, n};
        }
        int a = std::stoi(s.substr(0, dots), &used);
        if (used != dots)
            throw std::invalid_argument(s);
        std::string tail = s.substr(dots + 2);
        int b = std::stoi(tail, &used);
        if (used != tail.size())
            throw std::invalid_argument(s);
        if (a < 0 || b < a)
            throw std::invalid_argument(s);
        return {a, b};
    } catch (const std::exception&) {
        throw Usage("expected n or a..b with 0 <= a <= b, got " + s);
    }
}

std::string evaluate_text(const std::vector<Word>& words, const ModuleContext& ctx)
{
    if (ctx.kind() == ModuleKind::Universal)
        return format(evaluate_universal(words, ctx));
    return format(evaluate(words, ctx));
}

/* Seeds for closure: reduce each element and unfold k powers. */
std::vector<ModuleVector<Rational>> seeds_of(const std::vector<std::string>& texts, const ModuleContext& ctx)
{
    std::vector<ModuleVector<Rational>> out;
    for (const auto& t : texts) {
        auto words = parse_element(t);
        if (ctx.kind() == ModuleKind::Universal)
            out.push_back(unfold(evaluate_universal(words, ctx)));
        else
            out.push_back(evaluate(words, ctx));
    }
    return out;
}

int emit(const CommandReport& r, const Options& o, const std::string& plain)
{
    if (o.json == "-") {
        std::cout << to_json(r);
    } else {
        if (!o.json.empty()) {
            std::ofstream f(o.json);
            if (!f)
                throw Usage("cannot write " + o.json);
            f << to_json(r);
        }
        std::cout << (plain.empty() ? to_text(r) : plain + "\n");
    }
    return r.passed ? 0 : 1;
}

double since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations in the twisted affine Nappi-Witten algebra and its Whittaker modules"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;

    app.add_option("--module", o.module, "universal | quotient | verma")
        ->check(CLI::IsMember({"universal", "quotient", "verma"}));
    app.add_option("--c1", o.c1, "psi(c(1))");
    app.add_option("--sigma1", o.sigma1, "psi(B(1))");
    app.add_option("--d", o.dvals, "psi(d(m)) as m=Q, repeatable");
    app.add_option("--xi", o.xi, "scalar by which k acts");
    app.add_option("--l", o.l, "A(0) eigenvalue on the Verma highest weight vector");
    app.add_option("--max-degree", o.max_degree, "window degree bound N");
    app.add_option("--a0-cap", o.a0_cap, "bound T on the A(0) exponent");
    app.add_option("--kexp-cap", o.kexp_cap, "bound on the k exponent");
    app.add_option("--mode-bound", o.mode_bound, "largest positive mode imposed");
    app.add_option("--json", o.json, "write a JSON report to PATH ('-' for stdout)");
    app.add_flag("--serial", o.serial, "assemble equations on one thread");

    std::string x, y, elem, gen, id, kind, range;
    std::vector<std::string> seeds;

    auto* c_bracket = app.add_subcommand("bracket", "Lie bracket of two generators");
    c_bracket->add_option("x", x)->required();
    c_bracket->add_option("y", y)->required();

    auto* c_reduce = app.add_subcommand("reduce", "normal form of an element");
    c_reduce->add_option("element", elem)->required();

    auto* c_act = app.add_subcommand("act", "apply a generator to an element");
    c_act->add_option("generator", gen)->required();
    c_act->add_option("element", elem)->required();

    auto* c_whit = app.add_subcommand("whittaker", "Whittaker vectors in a truncated window");

    auto* c_sing = app.add_subcommand("singular", "singular vectors of a Verma module by degree");
    c_sing->add_option("degrees", range, "n or a..b")->required();

    auto* c_verify = app.add_subcommand("verify", "reproduce a structural statement on a window");
    c_verify->add_option("id", id)->required()->check(CLI::IsMember(statement_ids()));

    auto* c_count = app.add_subcommand("count", "partition and basis counts");
    c_count->add_option("kind", kind, "odd-partitions | distinct-partitions | even-pseudopartitions | basis")
        ->required()
        ->check(CLI::IsMember({"odd-partitions", "distinct-partitions", "even-pseudopartitions", "basis"}));
    c_count->add_option("range", range, "n or a..b")->required();

    auto* c_closure = app.add_subcommand("closure", "submodule generated by elements, within the window");
    c_closure->add_option("elements", seeds)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    const auto t0 = std::chrono::steady_clock::now();
    try {
        CommandReport r;
        if (c_bracket->parsed()) {
            r.command = "bracket " + x + " " + y;
            std::string out = bracket(parse_generator(x), parse_generator(y)).to_string();
            r.basis = {out};
            r.elapsed_ms = since(t0);
            return emit(r, o, out);
        }
        if (c_reduce->parsed() || c_act->parsed()) {
            ModuleContext ctx = context_of(o);
            auto words = parse_element(elem);
            if (c_act->parsed()) {
                Generator g = parse_generator(gen);
                r.command = "act " + gen + " " + elem;
                for (auto& w : words)
                    w.gens.insert(w.gens.begin(), g);
            } else {
                r.command = "reduce " + elem;
            }
            echo_context(r, ctx);
            std::string out = evaluate_text(words, ctx);
            r.basis = {out};
            r.elapsed_ms = since(t0);
            return emit(r, o, out);
        }
        if (c_whit->parsed()) {
            ModuleContext ctx = context_of(o);
            Truncation tr = window_of(o);
            r.command = "whittaker";
            echo_context(r, ctx);
            echo_window(r, tr);
            if (ctx.kind() == ModuleKind::Universal) {
                auto sol = whittaker_space_universal(ctx.psi(), tr, o.mode_bound.value_or(0), exec_of(o));
                r.basis = formatted(sol);
                r.dimension = sol.size();
            } else {
                WhittakerProblem p{ctx, tr, o.mode_bound.value_or(0)};
                r.parameters.emplace_back("mode_bound", std::to_string(p.effective_mode_bound()));
                auto sol = whittaker_space(p, exec_of(o));
                r.basis = formatted(sol);
                r.dimension = sol.size();
            }
            r.elapsed_ms = since(t0);
            return emit(r, o, "");
        }
        if (c_sing->parsed()) {
            if (o.module != "verma" && o.module != "quotient")
                throw Usage("singular works on Verma modules");
            Options v = o;
            v.module = "verma";
            ModuleContext ctx = context_of(v);
            auto [a, b] = parse_range(range);
            if (a < 1)
                throw Usage("singular vectors live in degree >= 1");
            r.command = "singular " + range;
            echo_context(r, ctx);
            std::size_t total = 0;
            for (int d = a; d <= b; ++d) {
                auto sol = singular_vectors(ctx, d, exec_of(o));
                for (const auto& s : formatted(sol))
                    r.basis.push_back(s);
                r.witnesses.push_back("degree " + std::to_string(d) + ": " + std::to_string(sol.size()));
                total += sol.size();
            }
            r.dimension = total;
            r.elapsed_ms = since(t0);
            return emit(r, o, "");
        }
        if (c_verify->parsed()) {
            VerifyParams p;
            p.c1 = rational_opt(o.c1, "c1");
            p.sigma1 = rational_opt(o.sigma1, "sigma1");
            p.xi = rational_opt(o.xi, "xi");
            p.l = rational_opt(o.l, "l");
            p.dvals = parse_dvals(o.dvals);
            p.max_degree = o.max_degree;
            p.a0_cap = o.a0_cap;
            p.kexp_cap = o.kexp_cap;
            p.mode_bound = o.mode_bound;
            CommandReport rep = from_verification(verify(id, p, exec_of(o)));
            return emit(rep, o, "");
        }
        if (c_count->parsed()) {
            auto [a, b] = parse_range(range);
            r.command = "count " + kind + " " + range;
            std::vector<std::uint64_t> counts;
            if (kind == "basis") {
                ModuleContext ctx = context_of(o);
                echo_context(r, ctx);
                Truncation tr(b, o.a0_cap.value_or(0), o.kexp_cap.value_or(0));
                echo_window(r, tr);
                auto census = basis_census(ctx, tr);
                for (int n = a; n <= b; ++n)
                    counts.push_back(census[static_cast<std::size_t>(n)]);
            } else if (kind == "even-pseudopartitions") {
                int cap = o.a0_cap.value_or(0);
                r.parameters.emplace_back("zero_cap", std::to_string(cap));
                std::vector<std::uint64_t> by_size(static_cast<std::size_t>(b) + 1, 0);
                for (const auto& p : enumerate_even_pseudopartitions(b, cap))
                    ++by_size[static_cast<std::size_t>(p.size())];
                counts.assign(by_size.begin() + a, by_size.end());
            } else {
                for (int n = a; n <= b; ++n)
                    counts.push_back(kind == "odd-partitions" ? count_odd_partitions(n) : count_distinct_partitions(n));
            }
            std::string out;
            for (std::size_t i = 0; i < counts.size(); ++i) {
                r.basis.push_back(std::to_string(counts[i]));
                if (a == b)
                    out = std::to_string(counts[i]);
                else
                    out += (i ? "\n" : "") + std::to_string(a + static_cast<int>(i)) + " " + std::to_string(counts[i]);
            }
            r.elapsed_ms = since(t0);
            return emit(r, o, out);
        }
        if (c_closure->parsed()) {
            ModuleContext ctx = context_of(o);
            Truncation tr = window_of(o);
            r.command = "closure";
            echo_context(r, ctx);
            echo_window(r, tr);
            SubmoduleSpan span = submodule_closure(seeds_of(seeds, ctx), ctx, tr, o.mode_bound.value_or(0));
            r.basis = formatted(span.vectors());
            r.dimension = span.dimension();
            r.witnesses.push_back("window dimension " + std::to_string(span.basis().size()));
            r.witnesses.push_back("contains w: " + std::string(span.contains(ModuleVector<Rational>(PBWMonomial())) ? "yes" : "no"));
            r.elapsed_ms = since(t0);
            return emit(r, o, "");
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
