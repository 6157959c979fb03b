#pragma once

#include "h4t/assembly.hpp"
#include "h4t/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace h4t {

/* Unknown statement id, missing parameter, or parameters outside the
 * statement's hypotheses.
 */
class VerifyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct VerifyParams {
    std::optional<Rational> c1, sigma1, xi, l;
    std::map<int, Rational> dvals;
    std::optional<int> max_degree, a0_cap, kexp_cap, mode_bound;
};

struct VerificationReport {
    std::string id;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<std::string> basis;
    std::size_t dimension = 0;
    std::optional<std::size_t> expected_dimension;
    std::vector<std::string> expected_basis;
    bool passed = false;
    std::vector<std::string> witnesses;
    double elapsed_ms = 0;
};

/* "2.2", "3.7", "3.8", "4.3", "5.2", "5.3", "5.4", "5.5", "5.6", "5.7" */
const std::vector<std::string>& statement_ids();

/* Short description of what an id checks and which parameters it needs. */
std::string statement_summary(const std::string& id);

/* Throws VerifyError. */
VerificationReport verify(const std::string& id, const VerifyParams& params, Execution mode = Execution::Parallel);

} // namespace h4t
