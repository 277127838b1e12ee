#pragma once

#include "fairorient/fpo.hpp"
#include "fairorient/model.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fairorient {

// Maximum bipartite matching (Hopcroft-Karp). adj[x] lists right vertices
// reachable from left vertex x. Returns matched partner per side (-1 = free).
struct MatchingResult {
    int size = 0;
    std::vector<int> match_left;
    std::vector<int> match_right;
};

MatchingResult max_bipartite_matching(int n_left, int n_right,
                                      const std::vector<std::vector<int>>& adj);

// Exact decision procedure for proportional orientations when every value is
// binary ({0,1} everywhere or {0,-1} everywhere). Unique-demand items are
// pinned first; the residual covering problem is a bipartite matching against
// per-agent quotas. Returns an orientation meeting every share, or nullopt
// when none exists. Errors: NonBinaryValues, MixedSigns.
std::optional<Orientation> solve_prop_binary(const Instance& inst);

// Every item split evenly over its relevant agents; each agent's value is
// then exactly her proportional share.
FractionalOrientation equal_split_fractional(const Instance& inst);

// Rehomes shares so goods are consumed only by agents valuing them positively
// and neutral items only by agents valuing them at zero. Nobody's value
// drops.
FractionalOrientation make_non_malicious(const Instance& inst, FractionalOrientation pi);

struct CycleElimination {
    TradeCycle cycle;
    Rational product;   // exchange-rate product before the shift
    Rational shift;     // delta applied on the first hop
};

struct EliminationLog {
    int neutral_consolidations = 0;
    int support_cycles_removed = 0;
    std::vector<CycleElimination> trades;
};

// Repeatedly executes improving trade cycles (exchange-rate product < 1) and
// then strips value-neutral consumption cycles, until the consumption graph
// is a forest and no improving cycle remains. Input must be non-malicious.
// Nobody's value ever drops.
FractionalOrientation eliminate_product_cycles(const Instance& inst, FractionalOrientation pi,
                                               EliminationLog* log = nullptr);

// Rounds a forest-supported fractional orientation to an integral one: each
// tree is hung from its lowest-id agent; a shared item goes to its parent
// agent unless its consumers value it negatively, in which case it goes to a
// child. Each agent thereby suffers at most one losing item.
// Error: CyclicConsumptionGraph.
Orientation round_acyclic_fractional(const Instance& inst, const FractionalOrientation& pi);

struct PipelineStage {
    std::string name;
    FractionalOrientation state;
    std::vector<Rational> values;  // per agent, under `state`
};

struct PipelineTrace {
    std::vector<PipelineStage> stages;
    EliminationLog elimination;
};

// equal split -> make non-malicious -> eliminate cycles -> round. The result
// satisfies both check_prop1 and check_fpo (asserted before returning).
std::pair<Orientation, PipelineTrace> solve_prop1_fpo(const Instance& inst);

// Greedy walk for non-negative multigraph instances (every item relevant to
// exactly two agents): repeatedly give the current agent her best remaining
// incident item and move to the item's other endpoint. Guarantees each agent
// half her relevant total minus her best item. Errors: NotMultigraph,
// NegativeValues.
Orientation greedy_sprop1(const Instance& inst, std::optional<int> start = std::nullopt);

// Simple-graph chores: an orientation where no agent suffers more than one
// negative edge exists iff every component of the strictly-negative subgraph
// has at most as many edges as vertices; builds one by orienting each
// component's unique cycle consistently and everything else away from it.
// Errors: NotSimpleGraph, PositiveValues.
std::optional<Orientation> solve_ef1_chores_simple(const Instance& inst);

}  // namespace fairorient
