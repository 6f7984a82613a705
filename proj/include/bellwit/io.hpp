#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "bellwit/bell_expression.hpp"
#include "bellwit/optimizer.hpp"
#include "bellwit/witness.hpp"

namespace bellwit {

inline constexpr const char* kToolVersion = "0.1.0";

/// Text matrix format: first line "rows cols", then one line of decimal
/// entries per row. Rejects NaN/Inf and shape mismatches with 1-based
/// line/column diagnostics.
BellExpression parse_matrix_text(std::istream& in);

/// JSON matrix format: {"rows": R, "cols": C, "entries": [[...], ...]}.
BellExpression parse_matrix_json(const nlohmann::json& j);

/// Sniffs the format (leading '{' selects JSON) and parses.
BellExpression parse_matrix_string(const std::string& text);

/// Reads from a file path, or stdin when the path is "-".
BellExpression parse_matrix_file(const std::string& path);

/// Text serialization with 17 significant digits (round-trips exactly).
std::string format_matrix_text(const BellExpression& expr);

nlohmann::json matrix_to_json(const BellExpression& expr);
nlohmann::json profile_to_json(const DimensionProfile& profile);
nlohmann::json report_to_json(const WitnessReport& report);

/// Top-level report wrapper identifying the tool, command, seed, and
/// configuration; payload values round-trip losslessly.
nlohmann::json make_envelope(const std::string& command, std::uint64_t seed,
                             const OptimizerConfig& config, nlohmann::json payload,
                             double seconds);

/// Full CLI entry point; returns the process exit code
/// (0 ok, 1 usage, 2 parse/input, 3 numerical failure).
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bellwit
