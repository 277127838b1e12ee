#include "fairorient/fpo.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace fairorient {

namespace {

// Node layout for the trade graph: agents are 0..n-1, item k contributes a
// goods-side node n+2k and a chores-side node n+2k+1. Splitting the item by
// value sign keeps every agent->item->agent transition a genuine bilateral
// trade (both parties value the item, with the same sign); letting opposite
// signs share a node would manufacture "cycles" no actual trade realizes.
struct Arc {
    int from;
    int to;
    Rational weight;
    int item;        // item index
    int agent;       // the agent endpoint of this arc
    bool chore;
};

struct TradeGraph {
    int nodes = 0;
    std::vector<Arc> arcs;
};

TradeGraph build_trade_graph(const Instance& inst, const FractionalOrientation& pi) {
    TradeGraph g;
    int n = inst.num_agents();
    g.nodes = n + 2 * inst.num_items();
    for (int k = 0; k < inst.num_items(); ++k) {
        const ItemSpec& it = inst.item(k);
        int good_node = n + 2 * k, chore_node = good_node + 1;
        for (size_t s = 0; s < it.relevant.size(); ++s) {
            int a = it.relevant[s];
            const Rational& v = it.values[s];
            const Rational& sh = pi.share[k][s];
            if (v > 0) {
                if (sh > 0) g.arcs.push_back({a - 1, good_node, v, k, a, false});
                if (sh < 1) g.arcs.push_back({good_node, a - 1, 1 / v, k, a, false});
            } else if (v < 0) {
                if (sh < 1) g.arcs.push_back({a - 1, chore_node, -v, k, a, true});
                if (sh > 0) g.arcs.push_back({chore_node, a - 1, -1 / v, k, a, true});
            }
        }
    }
    return g;
}

unsigned rational_bits(const Rational& r) {
    unsigned nb = numerator(r) == 0 ? 1 : static_cast<unsigned>(msb(abs(numerator(r))) + 1);
    unsigned db = static_cast<unsigned>(msb(denominator(r)) + 1);
    return std::max(nb, db);
}

// Converts an arc loop (alternating agent->item, item->agent) into hops.
TradeCycle arcs_to_cycle(const TradeGraph& g, std::vector<int> arc_loop) {
    // Rotate so the loop starts with an agent->item arc (an arc whose source
    // is its own agent endpoint).
    auto is_agent_to_item = [&](int idx) { return g.arcs[idx].from == g.arcs[idx].agent - 1; };
    if (!is_agent_to_item(arc_loop.front()))
        std::rotate(arc_loop.begin(), arc_loop.begin() + 1, arc_loop.end());

    TradeCycle cycle;
    for (size_t i = 0; i + 1 < arc_loop.size(); i += 2) {
        const Arc& out = g.arcs[arc_loop[i]];
        const Arc& in = g.arcs[arc_loop[i + 1]];
        TradeHop hop;
        hop.item = out.item;
        hop.from = out.agent;
        hop.to = in.agent;
        hop.chore = out.chore;
        cycle.push_back(hop);
    }
    return cycle;
}

// Fallback for the (practically unreachable) case that Bellman-Ford interim
// values exceed the bit cap: enumerate simple cycles directly.
std::optional<TradeCycle> enumerate_deficient_cycle(const TradeGraph& g) {
    if (g.nodes > 48)
        fail("NumericOverflow",
             "trade cycle search exceeded the bit cap on a graph too large to enumerate");
    std::vector<std::vector<int>> out_arcs(g.nodes);
    for (size_t i = 0; i < g.arcs.size(); ++i) out_arcs[g.arcs[i].from].push_back(static_cast<int>(i));

    std::vector<int> stack_arcs;
    std::vector<char> on_path(g.nodes, 0);
    std::optional<TradeCycle> found;

    // Depth-first over simple paths anchored at `start`; only nodes >= start
    // participate, so every cycle is produced exactly once from its smallest
    // node.
    std::function<bool(int, int, Rational)> dfs = [&](int start, int node,
                                                      Rational product) -> bool {
        for (int ai : out_arcs[node]) {
            const Arc& a = g.arcs[ai];
            if (a.to == start) {
                Rational p = product * a.weight;
                if (p < 1 && stack_arcs.size() >= 3) {
                    stack_arcs.push_back(ai);
                    found = arcs_to_cycle(g, stack_arcs);
                    return true;
                }
                continue;
            }
            if (a.to < start || on_path[a.to]) continue;
            on_path[a.to] = 1;
            stack_arcs.push_back(ai);
            if (dfs(start, a.to, product * a.weight)) return true;
            stack_arcs.pop_back();
            on_path[a.to] = 0;
        }
        return false;
    };

    for (int s = 0; s < g.nodes; ++s) {
        std::fill(on_path.begin(), on_path.end(), 0);
        on_path[s] = 1;
        stack_arcs.clear();
        if (dfs(s, s, Rational(1))) return found;
    }
    return std::nullopt;
}

std::optional<TradeCycle> bellman_ford_cycle(const TradeGraph& g, unsigned max_bits) {
    int N = g.nodes;
    std::vector<Rational> dist(N, Rational(1));
    std::vector<int> pred(N, -1);

    int cycle_entry = -1;
    for (int round = 0; round <= N; ++round) {
        bool changed = false;
        for (size_t i = 0; i < g.arcs.size(); ++i) {
            const Arc& a = g.arcs[i];
            Rational cand = dist[a.from] * a.weight;
            if (cand < dist[a.to]) {
                if (rational_bits(cand) > max_bits) return enumerate_deficient_cycle(g);
                dist[a.to] = cand;
                pred[a.to] = static_cast<int>(i);
                changed = true;
                if (round == N) cycle_entry = a.to;
            }
        }
        if (!changed) return std::nullopt;
    }
    if (cycle_entry < 0) return std::nullopt;

    // Walk predecessors N steps to guarantee landing inside the cycle, then
    // collect it.
    int cur = cycle_entry;
    for (int step = 0; step < N; ++step) cur = g.arcs[pred[cur]].from;
    std::vector<int> loop;
    int walk = cur;
    do {
        loop.push_back(pred[walk]);
        walk = g.arcs[pred[walk]].from;
    } while (walk != cur);
    std::reverse(loop.begin(), loop.end());
    return arcs_to_cycle(g, loop);
}

}  // namespace

Rational cycle_product(const Instance& inst, const TradeCycle& cycle) {
    Rational p = 1;
    for (const TradeHop& h : cycle) {
        Rational from_v = inst.value(h.from, h.item);
        Rational to_v = inst.value(h.to, h.item);
        p *= abs(from_v) / abs(to_v);
    }
    return p;
}

std::optional<TradeCycle> find_deficient_trade_cycle(const Instance& inst,
                                                     const FractionalOrientation& pi,
                                                     unsigned max_bits) {
    TradeGraph g = build_trade_graph(inst, pi);
    auto cycle = bellman_ford_cycle(g, max_bits);
    if (cycle) {
        Rational p = cycle_product(inst, *cycle);
        if (p >= 1)
            fail("InternalError", "trade cycle extraction produced product " + rat_to_string(p));
    }
    return cycle;
}

namespace {

std::string describe_cycle(const Instance& inst, const TradeCycle& cycle) {
    std::ostringstream os;
    for (const TradeHop& h : cycle) {
        os << "agent " << h.from << " -[" << inst.item(h.item).id
           << (h.chore ? ", chore]-> " : "]-> ") << "agent " << h.to << "; ";
    }
    os << "exchange-rate product " << rat_to_string(cycle_product(inst, cycle));
    return os.str();
}

}  // namespace

CheckReport check_fpo(const Instance& inst, const FractionalOrientation& pi) {
    CheckReport rep = check_non_malicious(inst, pi);
    if (!rep.holds) {
        for (Violation& v : rep.violations) {
            v.notion = "fpo";
            v.detail = "not non-malicious: " + v.detail;
        }
        return rep;
    }
    auto cycle = find_deficient_trade_cycle(inst, pi);
    if (cycle) {
        rep.holds = false;
        Violation v;
        v.notion = "fpo";
        v.agent = (*cycle)[0].from;
        v.item_id = inst.item((*cycle)[0].item).id;
        v.lhs = cycle_product(inst, *cycle);
        v.rhs = 1;
        v.detail = "improving trade cycle: " + describe_cycle(inst, *cycle);
        rep.violations.push_back(std::move(v));
    }
    return rep;
}

CheckReport check_fpo(const Instance& inst, const Orientation& pi) {
    return check_fpo(inst, as_fractional(inst, pi));
}

std::optional<std::vector<int>> find_support_cycle_items(const Instance& inst,
                                                         const FractionalOrientation& pi,
                                                         std::vector<int>* agents_out) {
    // Undirected bipartite graph: agent nodes 0..n-1, item nodes n..n+m-1,
    // edges where a share is positive. A DFS back edge closes a cycle.
    int n = inst.num_agents(), m = inst.num_items();
    std::vector<std::vector<int>> adj(n + m);
    for (int k = 0; k < m; ++k) {
        const ItemSpec& it = inst.item(k);
        for (size_t s = 0; s < it.relevant.size(); ++s)
            if (pi.share[k][s] > 0) {
                adj[it.relevant[s] - 1].push_back(n + k);
                adj[n + k].push_back(it.relevant[s] - 1);
            }
    }

    std::vector<int> parent(n + m, -2);  // -2 unvisited, -1 root
    for (int root = 0; root < n + m; ++root) {
        if (parent[root] != -2) continue;
        std::vector<int> stack{root};
        parent[root] = -1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : adj[u]) {
                if (w == parent[u]) continue;
                if (parent[w] == -2) {
                    parent[w] = u;
                    stack.push_back(w);
                    continue;
                }
                // Found a cycle; recover the two tree paths to their meeting
                // point. (With an iterative DFS `w` may not be an ancestor of
                // `u`, so walk both sides up to the common ancestor.)
                std::vector<int> pu, pw;
                for (int x = u; x != -1; x = parent[x]) pu.push_back(x);
                for (int x = w; x != -1; x = parent[x]) pw.push_back(x);
                std::reverse(pu.begin(), pu.end());
                std::reverse(pw.begin(), pw.end());
                size_t lcp = 0;
                while (lcp < pu.size() && lcp < pw.size() && pu[lcp] == pw[lcp]) ++lcp;
                // cycle: pu[lcp-1..end] + reverse(pw[lcp..end])
                std::vector<int> nodes;
                for (size_t i = lcp - 1; i < pu.size(); ++i) nodes.push_back(pu[i]);
                for (size_t i = pw.size(); i-- > lcp;) nodes.push_back(pw[i]);

                // Rotate so the walk starts at an agent node, then split.
                size_t start = 0;
                while (nodes[start] >= n) ++start;
                std::rotate(nodes.begin(), nodes.begin() + start, nodes.end());
                std::vector<int> items, agents;
                for (size_t i = 0; i < nodes.size(); ++i) {
                    if (nodes[i] < n) agents.push_back(nodes[i] + 1);
                    else items.push_back(nodes[i] - n);
                }
                if (agents_out) *agents_out = agents;
                return items;
            }
        }
    }
    return std::nullopt;
}

bool support_is_forest(const Instance& inst, const FractionalOrientation& pi) {
    return !find_support_cycle_items(inst, pi, nullptr).has_value();
}

}  // namespace fairorient
