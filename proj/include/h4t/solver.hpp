#pragma once

#include "h4t/assembly.hpp"
#include "h4t/context.hpp"
#include "h4t/envelope.hpp"
#include "h4t/poly.hpp"

#include <vector>

namespace h4t {

/* Find every v in the window with x v = psi(x) v for all positive x of
 * mode <= mode_bound. mode_bound <= 0 selects max(2, max_degree + 1).
 */
struct WhittakerProblem {
    ModuleContext ctx;
    Truncation tr;
    int mode_bound = 0;

    int effective_mode_bound() const;
};

std::vector<ModuleVector<Rational>> whittaker_space(const WhittakerProblem& p, Execution mode = Execution::Parallel);

/* Over Q(k): the candidate space is the window with k folded into the
 * coefficients. Each returned vector is cleared to Q[k] coefficients with
 * content removed.
 */
std::vector<ModuleVector<PolyK>> whittaker_space_universal(const WhittakerType& psi, const Truncation& tr,
                                                           int mode_bound = 0,
                                                           Execution mode = Execution::Parallel);

/* Degree-homogeneous vectors of a Verma module killed by every positive
 * generator of mode <= degree + 1.
 */
std::vector<ModuleVector<Rational>> singular_vectors(const ModuleContext& verma, int degree,
                                                     Execution mode = Execution::Parallel);

/* Least s with (g - psi(g))^s v = 0; throws std::runtime_error when it
 * exceeds `cap`.
 */
int nilpotency_depth(const ModuleVector<Rational>& v, const Generator& g, const ModuleContext& ctx, int cap = 64);
int nilpotency_depth(const ModuleVector<PolyK>& v, const Generator& g, const ModuleContext& ctx, int cap = 64);

/* Span tests over Q and over Q(k). */
bool in_span(const ModuleVector<Rational>& v, const std::vector<ModuleVector<Rational>>& s);
bool in_span(const ModuleVector<PolyK>& v, const std::vector<ModuleVector<PolyK>>& s);
bool same_span(const std::vector<ModuleVector<Rational>>& a, const std::vector<ModuleVector<Rational>>& b);
bool same_span(const std::vector<ModuleVector<PolyK>>& a, const std::vector<ModuleVector<PolyK>>& b);
std::size_t span_dimension(const std::vector<ModuleVector<Rational>>& s);
std::size_t span_dimension(const std::vector<ModuleVector<PolyK>>& s);

/* v -> (x - psi(x)) v vanishes for every positive generator of mode <= bound. */
bool is_whittaker(const ModuleVector<Rational>& v, const ModuleContext& ctx, int bound);
bool is_whittaker(const ModuleVector<PolyK>& v, const ModuleContext& ctx, int bound);

} // namespace h4t
