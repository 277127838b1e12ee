#pragma once

#include <cstdint>
#include <vector>

#include "fairorient/model.hpp"

namespace fairorient {

// Small fixed instances used throughout the tests and docs. Passing
// chores=true negates every value.

// Path 1-2-3 with both edges worth 1 to both endpoints; no orientation gives
// everyone a proportional bundle.
Instance path3_ones(bool chores = false);

// Triangle with unit edges; the cyclic orientation is proportional.
Instance triangle_ones(bool chores = false);

// K4 with every edge worth 1/3 to both endpoints, plus a disjoint edge (5,6)
// at the same value. None of its 128 orientations is EQ1 (hence none EQX).
Instance k4_plus_edge(bool chores = false);

// Two agents sharing parallel edges worth -x_i each, plus two heavy parallel
// pairs from each of them to a third agent. EF1 orientations exist exactly
// when the x_i split evenly. Chores by construction.
Instance ef1_multigraph(const std::vector<long long>& xs);

// Seeded random instances. Endpoint values are integers drawn uniformly from
// [min_value, max_value]; the draw sequence is pinned to the seed and does
// not depend on the platform's distribution internals.
Instance random_simple_graph(std::uint64_t seed, int num_agents, int num_items,
                             long long min_value, long long max_value);

// Edges drawn with repetition, so parallel edges appear.
Instance random_multigraph(std::uint64_t seed, int num_agents, int num_items,
                           long long min_value, long long max_value);

// Arbitrary relevant sets of size 1..min(num_agents, 4).
Instance random_general(std::uint64_t seed, int num_agents, int num_items,
                        long long min_value, long long max_value);

}  // namespace fairorient
