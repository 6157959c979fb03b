#include "h4t/assembly.hpp"

#include <omp.h>

#include <exception>
#include <map>

namespace h4t {

namespace {

template <class R>
void fill_column(Rewriter<R>& rw, const PBWMonomial& m, const std::vector<Generator>& gens,
                 std::vector<ModuleVector<R>>& out)
{
    const ModuleContext& ctx = rw.context();
    out.resize(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        ModuleVector<R> v = rw.act(gens[i], m);
        if (ctx.raises(gens[i]))
            v.add(m, R(-ctx.eigenvalue(gens[i])));
        out[i] = std::move(v);
    }
}

} // namespace

template <class R>
std::vector<std::vector<ModuleVector<R>>> shifted_images(const ModuleContext& ctx,
                                                         const std::vector<PBWMonomial>& cols,
                                                         const std::vector<Generator>& gens, Execution mode)
{
    std::vector<std::vector<ModuleVector<R>>> out(cols.size());
    const long n = static_cast<long>(cols.size());
    if (mode == Execution::Serial) {
        Rewriter<R> rw(ctx);
        for (long j = 0; j < n; ++j)
            fill_column(rw, cols[static_cast<std::size_t>(j)], gens, out[static_cast<std::size_t>(j)]);
        return out;
    }
    // exceptions must not leave the parallel region
    std::exception_ptr error;
#pragma omp parallel
    {
        Rewriter<R> rw(ctx);
#pragma omp for schedule(dynamic, 4)
        for (long j = 0; j < n; ++j) {
            try {
                fill_column(rw, cols[static_cast<std::size_t>(j)], gens, out[static_cast<std::size_t>(j)]);
            } catch (...) {
#pragma omp critical
                if (!error)
                    error = std::current_exception();
            }
        }
    }
    if (error)
        std::rethrow_exception(error);
    return out;
}

template <class R>
LinearSystem<R> stack_equations(const std::vector<std::vector<ModuleVector<R>>>& images, std::size_t ngens)
{
    std::vector<std::map<PBWMonomial, std::size_t>> row_of(ngens);
    for (const auto& col : images)
        for (std::size_t i = 0; i < col.size(); ++i)
            for (const auto& [m, c] : col[i])
                row_of[i].emplace(m, 0);
    std::size_t nrows = 0;
    for (auto& rows : row_of)
        for (auto& [m, r] : rows)
            r = nrows++;

    LinearSystem<R> sys;
    sys.cols = images.size();
    sys.rows.resize(nrows);
    for (std::size_t j = 0; j < images.size(); ++j)
        for (std::size_t i = 0; i < images[j].size(); ++i)
            for (const auto& [m, c] : images[j][i])
                sys.rows[row_of[i].at(m)].emplace_back(j, c);
    return sys;
}

int worker_threads()
{
    return omp_get_max_threads();
}

template std::vector<std::vector<ModuleVector<Rational>>> shifted_images(const ModuleContext&,
                                                                         const std::vector<PBWMonomial>&,
                                                                         const std::vector<Generator>&, Execution);
template std::vector<std::vector<ModuleVector<PolyK>>> shifted_images(const ModuleContext&,
                                                                      const std::vector<PBWMonomial>&,
                                                                      const std::vector<Generator>&, Execution);
template LinearSystem<Rational> stack_equations(const std::vector<std::vector<ModuleVector<Rational>>>&,
                                                std::size_t);
template LinearSystem<PolyK> stack_equations(const std::vector<std::vector<ModuleVector<PolyK>>>&, std::size_t);

} // namespace h4t
