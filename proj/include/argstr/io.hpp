#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "argstr/principles.hpp"
#include "argstr/semantics.hpp"
#include "argstr/strength.hpp"

namespace argstr {

/// `{"arguments": [{"id", "weight"}], "attacks": [{"from", "to", "weight"?}]}`;
/// a missing attack weight means 1. Throws GraphError on malformed input.
WeightedArgumentationGraph parse_wag_json(std::string_view text);
nlohmann::json wag_to_json(const WeightedArgumentationGraph& g);

/// `[{"from", "to", "weight"?}]` or `{"attacks": [...]}`.
std::vector<ArgumentAttack> parse_attacks_json(std::string_view text);

nlohmann::json to_json(const Witness& w);
Witness witness_from_json(const nlohmann::json& j);
nlohmann::json to_json(const PrincipleVerdict& v);
nlohmann::json to_json(const WellBehavedVerdict& v);

inline constexpr std::string_view kEngineVersion = "0.3.0";

}  // namespace argstr
