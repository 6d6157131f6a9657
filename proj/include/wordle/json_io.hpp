#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "wordle/core.hpp"
#include "wordle/oracles.hpp"
#include "wordle/reductions.hpp"
#include "wordle/solver.hpp"

namespace wordle {

/// {"guess": "...", "children": {"<digits>": subtree | "win"}}. The all-green
/// key maps to "win" when the guess can be the secret.
nlohmann::json strategy_to_json(const Dictionary& d, const StrategyTree& tree);
StrategyTree strategy_from_json(const Dictionary& d, const nlohmann::json& j);

nlohmann::json stats_to_json(const SolveStats& stats);
nlohmann::json report_to_json(const oracles::VerificationReport& r);

/// {"universe": n, "sets": [[ints]]}
SetFamily parse_set_family(std::string_view json_text);
nlohmann::json set_family_to_json(const SetFamily& f);

/// First line "n m", then m lines "u v" with 1-based endpoints.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace wordle
