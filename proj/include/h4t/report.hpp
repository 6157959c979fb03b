#pragma once

#include "h4t/verify.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace h4t {

/* Output of one CLI command. Serialized with the fields in the order
 * command, parameters, basis, dimension, expected_dimension, status,
 * witnesses, elapsed_ms.
 */
struct CommandReport {
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<std::string> basis;
    std::optional<std::size_t> dimension;
    std::optional<std::size_t> expected_dimension;
    bool passed = true;
    std::vector<std::string> witnesses;
    double elapsed_ms = 0;
};

CommandReport from_verification(const VerificationReport& v);

/* Pretty-printed JSON; elapsed_ms is omitted when include_timing is false. */
std::string to_json(const CommandReport& r, bool include_timing = true);

/* Human-readable summary for the terminal. */
std::string to_text(const CommandReport& r);

} // namespace h4t
