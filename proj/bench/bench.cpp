// Serial vs OpenMP timings for equation assembly and whole solves.
//   bench [repeats]

#include "h4t/assembly.hpp"
#include "h4t/modules.hpp"
#include "h4t/solver.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

using namespace h4t;

namespace {

double best_ms(int repeats, const std::function<void()>& f)
{
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

void row(const char* what, double serial, double parallel, bool same)
{
    std::printf("%-44s %10.1f %10.1f %7.2fx  %s\n", what, serial, parallel, serial / parallel,
                same ? "identical" : "DIFFERENT");
}

} // namespace

int main(int argc, char** argv)
{
    int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
    std::printf("threads: %d, best of %d\n", worker_threads(), repeats);
    std::printf("%-44s %10s %10s %8s\n", "", "serial ms", "omp ms", "speedup");

    const WhittakerType psi(Rational(2, 3), 5, {{1, 1}, {3, Rational(-1, 2)}});
    for (auto [n, t] : {std::pair{4, 2}, std::pair{5, 3}, std::pair{6, 3}}) {
        auto ctx = ModuleContext::quotient(psi, -2);
        auto cols = basis(ctx, Truncation(n, t));
        auto gens = positive_generators(n + 1);
        std::vector<std::vector<ModuleVector<Rational>>> a, b;
        double s = best_ms(repeats, [&] { a = shifted_images<Rational>(ctx, cols, gens, Execution::Serial); });
        double p = best_ms(repeats, [&] { b = shifted_images<Rational>(ctx, cols, gens, Execution::Parallel); });
        char label[96];
        std::snprintf(label, sizeof label, "assembly N=%d T=%d (%zu cols x %zu gens)", n, t, cols.size(), gens.size());
        row(label, s, p, a == b);
    }

    {
        WhittakerProblem prob{ModuleContext::quotient(WhittakerType(1, 0), 0), Truncation(6, 3)};
        std::vector<ModuleVector<Rational>> a, b;
        double s = best_ms(repeats, [&] { a = whittaker_space(prob, Execution::Serial); });
        double p = best_ms(repeats, [&] { b = whittaker_space(prob, Execution::Parallel); });
        row("solve, level zero N=6 T=3", s, p, a == b);
    }
    {
        std::vector<ModuleVector<PolyK>> a, b;
        double s = best_ms(repeats, [&] { a = whittaker_space_universal(WhittakerType(0, 1), Truncation(4, 2), 0, Execution::Serial); });
        double p = best_ms(repeats, [&] { b = whittaker_space_universal(WhittakerType(0, 1), Truncation(4, 2), 0, Execution::Parallel); });
        row("solve over Q(k), singular N=4 T=2", s, p, a == b);
    }
    {
        std::vector<ModuleVector<Rational>> a, b;
        auto verma = ModuleContext::verma(1, 2);
        double s = best_ms(repeats, [&] { a = singular_vectors(verma, 6, Execution::Serial); });
        double p = best_ms(repeats, [&] { b = singular_vectors(verma, 6, Execution::Parallel); });
        row("Verma singular vectors, degree 6", s, p, a == b);
    }
    return 0;
}
