#pragma once

#include "h4t/context.hpp"
#include "h4t/envelope.hpp"

#include <cstddef>
#include <string>

namespace h4t {

/* Closed-form value of g . m for g = A(n) or B(m) with positive mode and
 * m a monomial made of A factors only or of B factors only:
 *
 *   A(n) A(-mu) w = sum_i 2n [n = mu_i] k A(-mu minus mu_i) w
 *   A(n) B(-nu) w = -2 sum_i B(-nu minus nu_i) c(n - nu_i) w
 *   B(m) A(-mu) w = 2 sum_i A(-mu minus mu_i) c(m - mu_i) w + psi(B(m)) A(-mu) w
 *   B(m) B(-nu) w = -sum_i 2m [m = nu_i] k B(-nu minus nu_i) w + psi(B(m)) B(-nu) w
 *
 * with c of positive mode evaluated by psi on w, k by its context value,
 * and in a Verma context every A(0) replaced by l. Computed directly, not
 * through the rewriter.
 */
ModuleVector<Rational> closed_form_action(const ModuleContext& ctx, const Generator& g, const PBWMonomial& m);
ModuleVector<PolyK> closed_form_action_universal(const ModuleContext& ctx, const Generator& g,
                                                 const PBWMonomial& m);

struct FormulaSuite {
    std::size_t cases = 0;
    std::size_t mismatches = 0;
    std::string first_mismatch;
    bool passed() const { return cases > 0 && mismatches == 0; }
};

/* Compares the rewriter with closed_form_action over every A-monomial with
 * at most 3 parts from {0,2,4,6} (at most 2 zeros), every B-monomial with
 * at most 3 parts <= 7, n in {2,4,6,8} and m in {1,3,5,7}.
 */
FormulaSuite check_action_formulas(const ModuleContext& ctx);

} // namespace h4t
