#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "aarf/toric.hpp"

namespace aarf::cli {

using nlohmann::json;

// Payload builders, one per subcommand. Each returns the command-specific
// "output" object; run() wraps it in the CommandResult envelope. Exposed
// separately so tests can exercise them without a process boundary.
json apery_payload(const std::vector<Int>& gens, Int mod);
json pf_payload(const std::vector<Int>& gens);
json structure_payload(const AAPresentation& pres);
json rf_payload(const AAPresentation& pres, Int f, const std::string& mode,
                std::optional<Int> limit);
json relations_payload(const AAPresentation& pres, Int f);
json ideal_payload(const std::vector<Int>& gens);
json verify_payload(const AAPresentation& pres);

json matrix_json(const RFMatrix& m);
json binomial_json(const Binomial& b);
json sweep_record_json(const SweepRecord& rec);

/// CommandResult envelope: {"command", "input", "output", "status"}.
json command_result(const std::string& command, json input, json output);
json error_result(const std::string& command, json input, const std::string& message, int code);

/// Human-readable rendering of a CommandResult. The table and JSON formats
/// present the same payload.
std::string render_table(const json& result);

/// Monomial rendering of an exponent vector, e.g. "x0^3 x2".
std::string monomial(const std::vector<Int>& exponents);

/// Full command-line entry point; returns the process exit code
/// (0 ok, 2 invalid input, 3 internal error).
int run(int argc, const char* const* argv);

}  // namespace aarf::cli
