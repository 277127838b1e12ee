#include "fairorient/fairness.hpp"

#include <algorithm>

namespace fairorient {

const char* to_string(Notion n) {
    switch (n) {
        case Notion::prop: return "prop";
        case Notion::prop1: return "prop1";
        case Notion::propx: return "propx";
        case Notion::sprop1: return "sprop1";
        case Notion::eq: return "eq";
        case Notion::eq1: return "eq1";
        case Notion::eqx: return "eqx";
        case Notion::ef: return "ef";
        case Notion::ef1: return "ef1";
        default: return "mms";
    }
}

std::optional<Notion> notion_from_string(const std::string& s) {
    for (Notion n : {Notion::prop, Notion::prop1, Notion::propx, Notion::sprop1, Notion::eq,
                     Notion::eq1, Notion::eqx, Notion::ef, Notion::ef1, Notion::mms})
        if (s == to_string(n)) return n;
    return std::nullopt;
}

std::vector<Rational> prop_share(const Instance& inst) {
    std::vector<Rational> share(inst.num_agents(), Rational(0));
    for (const ItemSpec& it : inst.items())
        for (size_t s = 0; s < it.relevant.size(); ++s)
            share[it.relevant[s] - 1] += it.values[s] / it.degree();
    return share;
}

namespace {

// Bundle of agent i under pi, as item indexes.
std::vector<int> bundle_of(const Instance& inst, const Orientation& pi, int agent) {
    std::vector<int> out;
    for (int k = 0; k < inst.num_items(); ++k)
        if (pi.owner[k] == agent) out.push_back(k);
    return out;
}

// Relevant items of `agent` held by someone else.
std::vector<int> missing_of(const Instance& inst, const Orientation& pi, int agent) {
    std::vector<int> out;
    for (int k : inst.items_of(agent))
        if (pi.owner[k] != agent) out.push_back(k);
    return out;
}

Violation make_violation(Notion n, int agent, int other, const std::string& item,
                         Rational lhs, Rational rhs, std::string detail) {
    Violation v;
    v.notion = to_string(n);
    v.agent = agent;
    v.other = other;
    v.item_id = item;
    v.lhs = std::move(lhs);
    v.rhs = std::move(rhs);
    v.detail = std::move(detail);
    return v;
}

}  // namespace

CheckReport check_prop(const Instance& inst, const Orientation& pi) {
    CheckReport rep;
    auto share = prop_share(inst);
    for (int i = 1; i <= inst.num_agents(); ++i) {
        Rational v = agent_value(inst, pi, i);
        if (v < share[i - 1]) {
            rep.holds = false;
            rep.violations.push_back(make_violation(Notion::prop, i, 0, "", v, share[i - 1],
                                                    "bundle value below proportional share"));
        }
    }
    return rep;
}

CheckReport check_prop1(const Instance& inst, const Orientation& pi) {
    CheckReport rep;
    auto share = prop_share(inst);
    for (int i = 1; i <= inst.num_agents(); ++i) {
        Rational v = agent_value(inst, pi, i);
        if (v >= share[i - 1]) continue;

        // Best hypothetical single-item fix: add one relevant item held
        // elsewhere, or drop one held item.
        Rational best = v;
        std::string best_item;
        for (int k : missing_of(inst, pi, i)) {
            Rational w = v + inst.value(i, k);
            if (w > best) { best = w; best_item = inst.item(k).id; }
        }
        for (int k : bundle_of(inst, pi, i)) {
            Rational w = v - inst.value(i, k);
            if (w > best) { best = w; best_item = inst.item(k).id; }
        }
        if (best < share[i - 1]) {
            rep.holds = false;
            rep.violations.push_back(make_violation(
                Notion::prop1, i, 0, best_item, best, share[i - 1],
                "even the best single-item adjustment stays below the share"));
        }
    }
    return rep;
}

CheckReport check_propx(const Instance& inst, const Orientation& pi) {
    CheckReport rep;
    auto share = prop_share(inst);
    // On a pure-goods instance only hypothetical additions are constrained,
    // on a pure-chores instance only hypothetical removals, and zero-valued
    // items count on the active side. A mixed instance constrains both
    // sides, each restricted to the matching sign.
    const bool goods = all_values_nonnegative(inst);
    const bool chores = !goods && all_values_nonpositive(inst);
    for (int i = 1; i <= inst.num_agents(); ++i) {
        Rational v = agent_value(inst, pi, i);
        if (v >= share[i - 1]) continue;

        if (!chores) {
            for (int k : missing_of(inst, pi, i)) {
                if (!goods && inst.value(i, k) < 0) continue;
                Rational w = v + inst.value(i, k);
                if (w < share[i - 1]) {
                    rep.holds = false;
                    rep.violations.push_back(make_violation(
                        Notion::propx, i, 0, inst.item(k).id, w, share[i - 1],
                        "adding this relevant item held elsewhere does not reach the share"));
                }
            }
        }
        if (!goods) {
            for (int k : bundle_of(inst, pi, i)) {
                if (!chores && inst.value(i, k) > 0) continue;
                Rational w = v - inst.value(i, k);
                if (w < share[i - 1]) {
                    rep.holds = false;
                    rep.violations.push_back(make_violation(
                        Notion::propx, i, 0, inst.item(k).id, w, share[i - 1],
                        "dropping this held item does not reach the share"));
                }
            }
        }
    }
    return rep;
}

CheckReport check_sprop1(const Instance& inst, const Orientation& pi) {
    for (const ItemSpec& it : inst.items())
        for (const Rational& v : it.values)
            if (v < 0) fail("NegativeValues", "sprop1 is defined for goods instances only");

    CheckReport rep;
    for (int i = 1; i <= inst.num_agents(); ++i) {
        Rational total = 0, best = 0;
        for (int k : inst.items_of(i)) {
            total += inst.value(i, k);
            best = std::max(best, inst.value(i, k));
        }
        Rational rhs = (total - best) / 2;
        Rational v = agent_value(inst, pi, i);
        if (v < rhs) {
            rep.holds = false;
            rep.violations.push_back(make_violation(
                Notion::sprop1, i, 0, "", v, rhs,
                "below half of the relevant total with the best item set aside"));
        }
    }
    return rep;
}

CheckReport check_eq(const Instance& inst, const Orientation& pi) {
    CheckReport rep;
    auto vals = agent_values(inst, pi);
    for (int i = 1; i <= inst.num_agents(); ++i)
        for (int j = i + 1; j <= inst.num_agents(); ++j)
            if (vals[i - 1] != vals[j - 1]) {
                rep.holds = false;
                rep.violations.push_back(make_violation(Notion::eq, i, j, "", vals[i - 1],
                                                        vals[j - 1], "unequal bundle values"));
            }
    return rep;
}

CheckReport check_eq1(const Instance& inst, const Orientation& pi) {
    CheckReport rep;
    auto vals = agent_values(inst, pi);
    for (int i = 1; i <= inst.num_agents(); ++i) {
        for (int j = 1; j <= inst.num_agents(); ++j) {
            if (i == j || vals[i - 1] == vals[j - 1]) continue;
            // One hypothetical removal may level the pair: an item out of j's
            // bundle (valued by j) or out of i's bundle (valued by i).
            bool ok = false;
            for (int k : bundle_of(inst, pi, j))
                if (vals[i - 1] >= vals[j - 1] - inst.value(j, k)) { ok = true; break; }
            if (!ok)
                for (int k : bundle_of(inst, pi, i))
                    if (vals[i - 1] - inst.value(i, k) >= vals[j - 1]) { ok = true; break; }
            if (!ok) {
                rep.holds = false;
                rep.violations.push_back(
                    make_violation(Notion::eq1, i, j, "", vals[i - 1], vals[j - 1],
                                   "no single removal levels this pair"));
            }
        }
    }
    return rep;
}

CheckReport check_eqx(const Instance& inst, const Orientation& pi) {
    CheckReport rep;
    auto vals = agent_values(inst, pi);
    for (int i = 1; i <= inst.num_agents(); ++i) {
        for (int j = 1; j <= inst.num_agents(); ++j) {
            if (i == j || vals[i - 1] == vals[j - 1]) continue;
            // Removing any positively-valued item from j must not leave i
            // behind, and removing any negatively-valued item from i must not
            // leave j behind.
            for (int k : bundle_of(inst, pi, j)) {
                if (inst.value(j, k) <= 0) continue;
                if (vals[i - 1] < vals[j - 1] - inst.value(j, k)) {
                    rep.holds = false;
                    rep.violations.push_back(make_violation(
                        Notion::eqx, i, j, inst.item(k).id, vals[i - 1],
                        vals[j - 1] - inst.value(j, k),
                        "still behind after removing this positive item from the other bundle"));
                }
            }
            for (int k : bundle_of(inst, pi, i)) {
                if (inst.value(i, k) >= 0) continue;
                if (vals[i - 1] - inst.value(i, k) < vals[j - 1]) {
                    rep.holds = false;
                    rep.violations.push_back(make_violation(
                        Notion::eqx, i, j, inst.item(k).id, vals[i - 1] - inst.value(i, k),
                        vals[j - 1],
                        "still behind after dropping this negative item from own bundle"));
                }
            }
        }
    }
    return rep;
}

namespace {

// Value of j's bundle through i's eyes; items irrelevant to i count zero.
Rational cross_value(const Instance& inst, const Orientation& pi, int i, int j) {
    Rational v = 0;
    for (int k = 0; k < inst.num_items(); ++k)
        if (pi.owner[k] == j) v += inst.item(k).value_for(i);
    return v;
}

}  // namespace

CheckReport check_ef(const Instance& inst, const Orientation& pi) {
    CheckReport rep;
    auto vals = agent_values(inst, pi);
    for (int i = 1; i <= inst.num_agents(); ++i)
        for (int j = 1; j <= inst.num_agents(); ++j) {
            if (i == j) continue;
            Rational other = cross_value(inst, pi, i, j);
            if (vals[i - 1] < other) {
                rep.holds = false;
                rep.violations.push_back(make_violation(Notion::ef, i, j, "", vals[i - 1], other,
                                                        "prefers the other bundle"));
            }
        }
    return rep;
}

CheckReport check_ef1(const Instance& inst, const Orientation& pi) {
    CheckReport rep;
    auto vals = agent_values(inst, pi);
    for (int i = 1; i <= inst.num_agents(); ++i) {
        for (int j = 1; j <= inst.num_agents(); ++j) {
            if (i == j) continue;
            Rational other = cross_value(inst, pi, i, j);
            if (vals[i - 1] >= other) continue;
            bool ok = false;
            for (int k : bundle_of(inst, pi, j))
                if (vals[i - 1] >= other - inst.item(k).value_for(i)) { ok = true; break; }
            if (!ok)
                for (int k : bundle_of(inst, pi, i))
                    if (vals[i - 1] - inst.value(i, k) >= other) { ok = true; break; }
            if (!ok) {
                rep.holds = false;
                rep.violations.push_back(make_violation(Notion::ef1, i, j, "", vals[i - 1], other,
                                                        "envy survives every single removal"));
            }
        }
    }
    return rep;
}

CheckReport check_mms(const Instance& inst, const Orientation& pi,
                      const std::vector<Rational>& mms_shares) {
    if (static_cast<int>(mms_shares.size()) != inst.num_agents())
        fail("BadAgentId", "mms share vector has wrong length");
    CheckReport rep;
    for (int i = 1; i <= inst.num_agents(); ++i) {
        Rational v = agent_value(inst, pi, i);
        if (v < mms_shares[i - 1]) {
            rep.holds = false;
            rep.violations.push_back(make_violation(Notion::mms, i, 0, "", v, mms_shares[i - 1],
                                                    "below maximin share"));
        }
    }
    return rep;
}

CheckReport check_notion(const Instance& inst, const Orientation& pi, Notion n) {
    switch (n) {
        case Notion::prop: return check_prop(inst, pi);
        case Notion::prop1: return check_prop1(inst, pi);
        case Notion::propx: return check_propx(inst, pi);
        case Notion::sprop1: return check_sprop1(inst, pi);
        case Notion::eq: return check_eq(inst, pi);
        case Notion::eq1: return check_eq1(inst, pi);
        case Notion::eqx: return check_eqx(inst, pi);
        case Notion::ef: return check_ef(inst, pi);
        case Notion::ef1: return check_ef1(inst, pi);
        default: fail("MmsSharesRequired", "mms checking needs precomputed maximin shares");
    }
}

CheckReport check_non_malicious(const Instance& inst, const FractionalOrientation& pi) {
    CheckReport rep;
    for (int k = 0; k < inst.num_items(); ++k) {
        const ItemSpec& it = inst.item(k);
        ItemKind kind = classify_item(inst, k);
        if (kind == ItemKind::chore) continue;
        for (size_t s = 0; s < it.relevant.size(); ++s) {
            if (pi.share[k][s] == 0) continue;
            bool bad = (kind == ItemKind::good) ? (it.values[s] <= 0) : (it.values[s] != 0);
            if (bad) {
                rep.holds = false;
                Violation v;
                v.notion = "non-malicious";
                v.agent = it.relevant[s];
                v.item_id = it.id;
                v.lhs = pi.share[k][s];
                v.rhs = 0;
                v.detail = (kind == ItemKind::good)
                               ? "consumes a positive-demand item without valuing it positively"
                               : "consumes a neutral item while valuing it negatively";
                rep.violations.push_back(std::move(v));
            }
        }
    }
    return rep;
}

}  // namespace fairorient
