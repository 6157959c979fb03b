#pragma once

#include "h4t/context.hpp"
#include "h4t/envelope.hpp"
#include "h4t/sparse.hpp"

#include <cstddef>
#include <vector>

namespace h4t {

enum class Execution { Serial, Parallel };

/* images[j][i] = gens[i] . cols[j] - eigenvalue(gens[i]) cols[j], exact.
 * Parallel mode splits the columns across OpenMP threads, each with its
 * own rewriter; Serial uses a single rewriter. Results are identical.
 */
template <class R>
std::vector<std::vector<ModuleVector<R>>> shifted_images(const ModuleContext& ctx,
                                                         const std::vector<PBWMonomial>& cols,
                                                         const std::vector<Generator>& gens, Execution mode);

/* Equations sum_j x_j images[j][i] = 0, one row per (generator, monomial)
 * pair that occurs, rows ordered by (generator index, monomial).
 */
template <class R>
struct LinearSystem {
    std::size_t cols = 0;
    std::vector<SparseVec<R>> rows;
};

template <class R>
LinearSystem<R> stack_equations(const std::vector<std::vector<ModuleVector<R>>>& images, std::size_t ngens);

int worker_threads();

} // namespace h4t
