#pragma once

#include "fairorient/model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fairorient {

enum class Notion { prop, prop1, propx, sprop1, eq, eq1, eqx, ef, ef1, mms };

const char* to_string(Notion n);
std::optional<Notion> notion_from_string(const std::string& s);

// One failed comparison. `other` is 0 for per-agent notions and the compared
// agent for pairwise notions; `item_id` names the witness item when one is
// part of the failed clause.
struct Violation {
    std::string notion;
    int agent = 0;
    int other = 0;
    std::string item_id;
    Rational lhs;
    Rational rhs;
    std::string detail;
};

struct CheckReport {
    bool holds = true;
    std::vector<Violation> violations;
};

// Proportional share: for each agent, the sum over her relevant items of
// value / (number of relevant agents). This is the natural entitlement when
// every item can only go to one of the agents that know about it.
std::vector<Rational> prop_share(const Instance& inst);

CheckReport check_prop(const Instance& inst, const Orientation& pi);
CheckReport check_prop1(const Instance& inst, const Orientation& pi);
CheckReport check_propx(const Instance& inst, const Orientation& pi);

// Goods only: each agent gets at least half of her relevant total with her
// single best item set aside.
CheckReport check_sprop1(const Instance& inst, const Orientation& pi);

CheckReport check_eq(const Instance& inst, const Orientation& pi);
CheckReport check_eq1(const Instance& inst, const Orientation& pi);
CheckReport check_eqx(const Instance& inst, const Orientation& pi);

CheckReport check_ef(const Instance& inst, const Orientation& pi);
CheckReport check_ef1(const Instance& inst, const Orientation& pi);

// mms_shares[i-1] must come from an exact maximin computation (see oracle).
CheckReport check_mms(const Instance& inst, const Orientation& pi,
                      const std::vector<Rational>& mms_shares);

// Dispatch for every notion except mms (which needs shares).
CheckReport check_notion(const Instance& inst, const Orientation& pi, Notion n);

// A fractional orientation is non-malicious when nobody consumes an item they
// are indifferent-or-averse to while someone else wants it: goods are consumed
// only by agents valuing them positively, neutral items only by agents valuing
// them at zero.
CheckReport check_non_malicious(const Instance& inst, const FractionalOrientation& pi);

}  // namespace fairorient
