#pragma once

#include "fairorient/fairness.hpp"
#include "fairorient/model.hpp"

#include <optional>
#include <vector>

namespace fairorient {

// One step of a trade cycle: `item` moves between `from` and `to`. On a goods
// step `from` hands a sliver of the item to `to`; on a chores step `from`
// takes a sliver of the item off `to`'s hands. Either way, sliding value along
// the step costs `from` at rate |v_from(item)| and pays `to` at rate
// |v_to(item)|, so the step multiplies the cycle's exchange-rate product by
// |v_from(item)| / |v_to(item)|.
struct TradeHop {
    int item = 0;   // item index
    int from = 0;   // agent id
    int to = 0;     // agent id
    bool chore = false;
};

using TradeCycle = std::vector<TradeHop>;

// Product of |v_from(e)| / |v_to(e)| over the hops; < 1 means the cycle can be
// traded so that `from` of the first hop strictly gains and everyone else
// stays exactly even.
Rational cycle_product(const Instance& inst, const TradeCycle& cycle);

// Searches for a trade cycle with product < 1 among sign-consistent trades: a
// goods step needs the giver to hold a positive share and the receiver to
// positively value the item without holding all of it; a chores step needs
// the relieved agent to hold a positive share and the absorbing agent to have
// capacity left. Exact multiplicative Bellman-Ford over rationals; `max_bits`
// caps intermediate numerator/denominator sizes, falling back to plain simple
// cycle enumeration on overflow (only possible for tiny graphs).
std::optional<TradeCycle> find_deficient_trade_cycle(const Instance& inst,
                                                     const FractionalOrientation& pi,
                                                     unsigned max_bits = 1u << 16);

// Fractional Pareto optimality: the state must be non-malicious and admit no
// trade cycle with product < 1. Violations carry either the maliciousness
// witnesses or a textual description of the improving cycle.
CheckReport check_fpo(const Instance& inst, const FractionalOrientation& pi);
CheckReport check_fpo(const Instance& inst, const Orientation& pi);

// Cycle in the undirected consumption graph (agents on one side, items on the
// other, edges where a share is positive), as an even-length alternating node
// walk. Used by the solver to strip redundant supports.
std::optional<std::vector<int>> find_support_cycle_items(const Instance& inst,
                                                         const FractionalOrientation& pi,
                                                         std::vector<int>* agents_out);

bool support_is_forest(const Instance& inst, const FractionalOrientation& pi);

}  // namespace fairorient
