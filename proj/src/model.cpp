#include "fairorient/model.hpp"

#include <algorithm>
#include <set>

namespace fairorient {

Instance Instance::build(int num_agents, std::vector<ItemSpec> items) {
    if (num_agents < 1)
        fail("BadAgentId", "agent count must be at least 1, got " + std::to_string(num_agents));

    Instance inst;
    inst.n_ = num_agents;
    inst.by_agent_.resize(num_agents);

    for (size_t k = 0; k < items.size(); ++k) {
        ItemSpec& it = items[k];
        if (it.relevant.empty())
            fail("EmptyRelevantSet", "item '" + it.id + "' has no relevant agents");
        if (it.values.size() != it.relevant.size())
            fail("BadAgentId", "item '" + it.id + "' has mismatched value list");

        // Keep (agent, value) pairs sorted by agent id.
        std::vector<std::pair<int, Rational>> pairs;
        pairs.reserve(it.relevant.size());
        for (size_t s = 0; s < it.relevant.size(); ++s)
            pairs.emplace_back(it.relevant[s], it.values[s]);
        std::sort(pairs.begin(), pairs.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (size_t s = 0; s < pairs.size(); ++s) {
            int a = pairs[s].first;
            if (a < 1 || a > num_agents)
                fail("BadAgentId", "item '" + it.id + "' references agent " + std::to_string(a) +
                                       " outside 1.." + std::to_string(num_agents));
            if (s > 0 && pairs[s - 1].first == a)
                fail("BadAgentId",
                     "item '" + it.id + "' lists agent " + std::to_string(a) + " twice");
            it.relevant[s] = a;
            it.values[s] = pairs[s].second;
        }

        if (inst.index_by_id_.count(it.id))
            fail("DuplicateItemId", "item id '" + it.id + "' appears more than once");
        inst.index_by_id_[it.id] = static_cast<int>(k);
        for (int a : it.relevant) inst.by_agent_[a - 1].push_back(static_cast<int>(k));
    }

    inst.items_ = std::move(items);
    return inst;
}

std::vector<int> Instance::agents_without_items() const {
    std::vector<int> out;
    for (int a = 1; a <= n_; ++a)
        if (by_agent_[a - 1].empty()) out.push_back(a);
    return out;
}

GraphClass classify_graph(const Instance& inst) {
    bool all_deg2 = true;
    std::set<std::pair<int, int>> seen;
    bool repeated_pair = false;
    for (const ItemSpec& it : inst.items()) {
        if (it.degree() != 2) {
            all_deg2 = false;
            break;
        }
        auto key = std::make_pair(it.relevant[0], it.relevant[1]);
        if (!seen.insert(key).second) repeated_pair = true;
    }
    if (!all_deg2) return GraphClass::general;
    return repeated_pair ? GraphClass::multigraph : GraphClass::simple_graph;
}

const char* to_string(GraphClass g) {
    switch (g) {
        case GraphClass::simple_graph: return "simple-graph";
        case GraphClass::multigraph: return "multigraph";
        default: return "general";
    }
}

ItemKind classify_item(const Instance& inst, int item_index) {
    const ItemSpec& it = inst.item(item_index);
    bool any_zero = false;
    for (const Rational& v : it.values) {
        if (v > 0) return ItemKind::good;
        if (v == 0) any_zero = true;
    }
    return any_zero ? ItemKind::neutral : ItemKind::chore;
}

bool all_values_nonnegative(const Instance& inst) {
    for (const ItemSpec& it : inst.items())
        for (const Rational& v : it.values)
            if (v < 0) return false;
    return true;
}

bool all_values_nonpositive(const Instance& inst) {
    for (const ItemSpec& it : inst.items())
        for (const Rational& v : it.values)
            if (v > 0) return false;
    return true;
}

Orientation make_orientation(const Instance& inst, std::vector<int> owner) {
    if (static_cast<int>(owner.size()) != inst.num_items())
        fail("MissingItem", "orientation covers " + std::to_string(owner.size()) + " of " +
                                std::to_string(inst.num_items()) + " items");
    for (int k = 0; k < inst.num_items(); ++k) {
        if (inst.item(k).slot_of(owner[k]) < 0)
            fail("InfeasibleOwner", "item '" + inst.item(k).id + "' assigned to agent " +
                                        std::to_string(owner[k]) +
                                        " which is not in its relevant set");
    }
    return Orientation{std::move(owner)};
}

FractionalOrientation make_fractional(const Instance& inst,
                                      std::vector<std::vector<Rational>> share) {
    if (static_cast<int>(share.size()) != inst.num_items())
        fail("BadFractionalShares", "share table covers wrong number of items");
    for (int k = 0; k < inst.num_items(); ++k) {
        if (share[k].size() != inst.item(k).relevant.size())
            fail("BadFractionalShares", "item '" + inst.item(k).id + "' share row has wrong size");
        Rational sum = 0;
        for (const Rational& s : share[k]) {
            if (s < 0 || s > 1)
                fail("BadFractionalShares",
                     "item '" + inst.item(k).id + "' has share outside [0,1]");
            sum += s;
        }
        if (sum != 1)
            fail("BadFractionalShares", "item '" + inst.item(k).id + "' shares sum to " +
                                            rat_to_string(sum) + ", expected 1");
    }
    return FractionalOrientation{std::move(share)};
}

FractionalOrientation as_fractional(const Instance& inst, const Orientation& pi) {
    FractionalOrientation f;
    f.share.resize(inst.num_items());
    for (int k = 0; k < inst.num_items(); ++k) {
        const ItemSpec& it = inst.item(k);
        f.share[k].assign(it.relevant.size(), Rational(0));
        f.share[k][it.slot_of(pi.owner[k])] = 1;
    }
    return f;
}

Rational agent_value(const Instance& inst, const Orientation& pi, int agent) {
    Rational v = 0;
    for (int k = 0; k < inst.num_items(); ++k)
        if (pi.owner[k] == agent) v += inst.item(k).value_for(agent);
    return v;
}

Rational agent_value(const Instance& inst, const FractionalOrientation& pi, int agent) {
    Rational v = 0;
    for (int k = 0; k < inst.num_items(); ++k) {
        const ItemSpec& it = inst.item(k);
        int s = it.slot_of(agent);
        if (s >= 0 && pi.share[k][s] != 0) v += pi.share[k][s] * it.values[s];
    }
    return v;
}

std::vector<Rational> agent_values(const Instance& inst, const Orientation& pi) {
    std::vector<Rational> out(inst.num_agents(), Rational(0));
    for (int k = 0; k < inst.num_items(); ++k)
        out[pi.owner[k] - 1] += inst.item(k).value_for(pi.owner[k]);
    return out;
}

std::vector<Rational> agent_values(const Instance& inst, const FractionalOrientation& pi) {
    std::vector<Rational> out(inst.num_agents(), Rational(0));
    for (int k = 0; k < inst.num_items(); ++k) {
        const ItemSpec& it = inst.item(k);
        for (size_t s = 0; s < it.relevant.size(); ++s)
            if (pi.share[k][s] != 0) out[it.relevant[s] - 1] += pi.share[k][s] * it.values[s];
    }
    return out;
}

}  // namespace fairorient
