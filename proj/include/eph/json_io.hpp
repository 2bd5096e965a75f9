#pragma once

#include "eph/compact.hpp"
#include "eph/cycle.hpp"
#include "eph/moebius.hpp"

#include <json.hpp>

namespace eph::io {

// Rationals are written as "p/q" strings. Readers throw
// std::invalid_argument (or nlohmann::json::exception) on malformed input.

nlohmann::json to_json(const HyperNum& z);
HyperNum hypernum_from_json(const nlohmann::json& j);

nlohmann::json to_json(const MoebiusMap& g);
MoebiusMap moebius_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Cycle& c);
Cycle cycle_from_json(const nlohmann::json& j);

/// Cycle schema plus "sigma".
nlohmann::json to_json(const CPoint& p);
CPoint cpoint_from_json(const nlohmann::json& j);

}  // namespace eph::io
