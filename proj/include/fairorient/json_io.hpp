#pragma once

#include <string>

#include "fairorient/fairness.hpp"
#include "fairorient/model.hpp"

namespace fairorient {

// Instance files look like
//   {"agents": 3,
//    "items": [{"id": "(1,2)", "relevant": [1, 2], "values": {"1": 2, "2": "1/2"}}]}
// Values are integers or exact "p/q" strings; decimal numbers are rejected
// rather than rounded. Agents missing from "values" score their item at 0.
Instance parse_instance_json(const std::string& text);
std::string instance_to_json(const Instance& inst);

// Orientation files map every item id to its holder: {"(1,2)": 2, ...}.
Orientation parse_orientation_json(const Instance& inst, const std::string& text);
std::string orientation_to_json(const Instance& inst, const Orientation& pi);

// One line per violation, or "HOLDS"; as_json switches to a machine-readable
// object with the same content.
std::string render_report(const CheckReport& rep, bool as_json);

}  // namespace fairorient
