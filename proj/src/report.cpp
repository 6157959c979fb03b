#include "h4t/report.hpp"

#include <json.hpp>

#include <cmath>
#include <sstream>

namespace h4t {

CommandReport from_verification(const VerificationReport& v)
{
    CommandReport r;
    r.command = "verify " + v.id;
    r.parameters = v.parameters;
    r.basis = v.basis;
    r.dimension = v.dimension;
    r.expected_dimension = v.expected_dimension;
    r.passed = v.passed;
    r.witnesses = v.witnesses;
    if (!v.expected_basis.empty() && !v.passed)
        for (const auto& e : v.expected_basis)
            r.witnesses.push_back("expected " + e);
    r.elapsed_ms = v.elapsed_ms;
    return r;
}

std::string to_json(const CommandReport& r, bool include_timing)
{
    nlohmann::ordered_json j;
    j["command"] = r.command;
    j["parameters"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.parameters)
        j["parameters"][k] = v;
    j["basis"] = r.basis;
    j["dimension"] = r.dimension ? nlohmann::ordered_json(*r.dimension) : nlohmann::ordered_json(nullptr);
    j["expected_dimension"] =
        r.expected_dimension ? nlohmann::ordered_json(*r.expected_dimension) : nlohmann::ordered_json(nullptr);
    j["status"] = r.passed ? "pass" : "fail";
    j["witnesses"] = r.witnesses;
    if (include_timing)
        j["elapsed_ms"] = std::round(r.elapsed_ms * 1000.0) / 1000.0;
    return j.dump(2) + "\n";
}

std::string to_text(const CommandReport& r)
{
    std::ostringstream out;
    out << r.command << ": " << (r.passed ? "pass" : "fail");
    if (r.dimension) {
        out << ", dimension " << *r.dimension;
        if (r.expected_dimension)
            out << " (expected " << *r.expected_dimension << ")";
    }
    out << "\n";
    for (const auto& [k, v] : r.parameters)
        out << "  " << k << " = " << v << "\n";
    for (const auto& b : r.basis)
        out << "  " << b << "\n";
    for (const auto& w : r.witnesses)
        out << "  ! " << w << "\n";
    return out.str();
}

} // namespace h4t
