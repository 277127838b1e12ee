#pragma once

#include "fairorient/rational.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace fairorient {

// All recoverable input/contract failures carry a stable machine-readable
// code alongside the human message; the CLI maps any FairError to exit 2.
class FairError : public std::runtime_error {
public:
    FairError(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& message) {
    throw FairError(code, message);
}

// One item: the set of agents it may be assigned to ("relevant" agents) and
// its value to each of them. Agents outside the relevant set implicitly value
// the item at zero and can never receive it.
struct ItemSpec {
    std::string id;
    std::vector<int> relevant;     // sorted unique agent ids, 1-based
    std::vector<Rational> values;  // parallel to relevant

    int degree() const { return static_cast<int>(relevant.size()); }

    int slot_of(int agent) const {
        for (size_t s = 0; s < relevant.size(); ++s)
            if (relevant[s] == agent) return static_cast<int>(s);
        return -1;
    }

    Rational value_for(int agent) const {
        int s = slot_of(agent);
        return s < 0 ? Rational(0) : values[s];
    }
};

class Instance {
public:
    static Instance build(int num_agents, std::vector<ItemSpec> items);

    int num_agents() const { return n_; }
    int num_items() const { return static_cast<int>(items_.size()); }
    const ItemSpec& item(int k) const { return items_[k]; }
    const std::vector<ItemSpec>& items() const { return items_; }

    // Indexes of the items whose relevant set contains `agent`.
    const std::vector<int>& items_of(int agent) const { return by_agent_[agent - 1]; }

    // v_agent(item), zero when the agent is irrelevant to the item.
    Rational value(int agent, int item_index) const {
        return items_[item_index].value_for(agent);
    }

    int item_index(const std::string& id) const {
        auto it = index_by_id_.find(id);
        return it == index_by_id_.end() ? -1 : it->second;
    }

    std::vector<int> agents_without_items() const;

private:
    int n_ = 0;
    std::vector<ItemSpec> items_;
    std::vector<std::vector<int>> by_agent_;
    std::unordered_map<std::string, int> index_by_id_;
};

enum class GraphClass { simple_graph, multigraph, general };

// simple_graph: every item has exactly two relevant agents and no two items
// share the same pair. multigraph: every item has exactly two relevant agents.
GraphClass classify_graph(const Instance& inst);

const char* to_string(GraphClass g);

// good: someone values it positively; neutral: nobody positive, someone zero;
// chore: everyone negative.
enum class ItemKind { good, neutral, chore };

ItemKind classify_item(const Instance& inst, int item_index);

// Instance polarity. An all-zero instance counts as both.
bool all_values_nonnegative(const Instance& inst);
bool all_values_nonpositive(const Instance& inst);

// Integral orientation: owner[k] is the agent holding item k; always one of
// the item's relevant agents.
struct Orientation {
    std::vector<int> owner;
};

Orientation make_orientation(const Instance& inst, std::vector<int> owner);

// Fractional orientation: share[k][s] is the fraction of item k consumed by
// relevant agent item(k).relevant[s]; shares are in [0,1] and sum to 1.
struct FractionalOrientation {
    std::vector<std::vector<Rational>> share;
};

FractionalOrientation make_fractional(const Instance& inst,
                                      std::vector<std::vector<Rational>> share);
FractionalOrientation as_fractional(const Instance& inst, const Orientation& pi);

Rational agent_value(const Instance& inst, const Orientation& pi, int agent);
Rational agent_value(const Instance& inst, const FractionalOrientation& pi, int agent);
std::vector<Rational> agent_values(const Instance& inst, const Orientation& pi);
std::vector<Rational> agent_values(const Instance& inst, const FractionalOrientation& pi);

}  // namespace fairorient
