#include "doctest.h"

#include <vector>

#include "fairorient/generators.hpp"
#include "fairorient/oracle.hpp"
#include "fairorient/solvers.hpp"
#include "helpers.hpp"

using namespace fairorient;
using namespace fairorient::test;

TEST_CASE("hopcroft-karp finds maximum matchings") {
    // Lefts 1 and 2 both only reach right 0: one of them stays free.
    auto r = max_bipartite_matching(3, 3, {{0, 1}, {0}, {0}});
    CHECK(r.size == 2);

    auto p = max_bipartite_matching(3, 3, {{0}, {1}, {2}});
    CHECK(p.size == 3);
    for (int x = 0; x < 3; ++x) {
        CHECK(p.match_left[x] == x);
        CHECK(p.match_right[x] == x);
    }

    auto empty = max_bipartite_matching(2, 2, {{}, {}});
    CHECK(empty.size == 0);
    CHECK(empty.match_left == std::vector<int>{-1, -1});
}

TEST_CASE("binary proportional solver agrees with brute force on 3 vertices") {
    for (bool chores : {false, true}) {
        CAPTURE(chores);
        long long scanned = 0, with = 0, without = 0;
        for_each_binary_simple_instance(3, chores, [&](const Instance& inst) {
            ++scanned;
            auto got = solve_prop_binary(inst);
            ExhaustiveOracle oracle(inst);
            REQUIRE(got.has_value() == oracle.exists(Notion::prop));
            if (got) {
                CHECK(check_prop(inst, *got).holds);
                ++with;
            } else {
                ++without;
            }
        });
        CHECK(scanned > 0);
        CHECK(with > 0);
        CHECK(without > 0);  // the all-ones path has no proportional orientation
    }
}

TEST_CASE("binary proportional solver on the fixed path and triangle") {
    CHECK_FALSE(solve_prop_binary(path3_ones()).has_value());
    CHECK_FALSE(solve_prop_binary(path3_ones(true)).has_value());

    auto tri = solve_prop_binary(triangle_ones());
    REQUIRE(tri.has_value());
    CHECK(check_prop(triangle_ones(), *tri).holds);

    auto trich = solve_prop_binary(triangle_ones(true));
    REQUIRE(trich.has_value());
    CHECK(check_prop(triangle_ones(true), *trich).holds);
}

TEST_CASE("binary proportional solver input validation") {
    Instance big = inst_of(2, {it("e", {1, 2}, {2, 1})});
    CHECK(error_code([&] { solve_prop_binary(big); }) == "NonBinaryValues");
    Instance mixed = inst_of(2, {it("a", {1, 2}, {1, 0}), it("b", {1, 2}, {0, -1})});
    CHECK(error_code([&] { solve_prop_binary(mixed); }) == "MixedSigns");
}

TEST_CASE("equal split hits every proportional share exactly") {
    Instance inst = inst_of(3, {
        it("e1", {1, 2}, {4, 2}),
        it("e2", {1, 2, 3}, {-3, 0, 6}),
        it("e3", {2}, {-5}),
        it("e4", {1, 3}, {1, -2}),
    });
    auto split = equal_split_fractional(inst);
    auto share = prop_share(inst);
    for (int i = 1; i <= 3; ++i) CHECK(agent_value(inst, split, i) == share[i - 1]);
}

TEST_CASE("make_non_malicious rehomes wasted shares without hurting anyone") {
    Instance inst = inst_of(2, {it("g", {1, 2}, {0, 2}), it("z", {1, 2}, {0, -1})});
    auto before = equal_split_fractional(inst);
    auto before_vals = agent_values(inst, before);
    auto after = make_non_malicious(inst, before);
    CHECK(check_non_malicious(inst, after).holds);
    auto after_vals = agent_values(inst, after);
    for (int i = 0; i < 2; ++i) CHECK(after_vals[i] >= before_vals[i]);
    // The good must end up with agent 2 in full, the neutral item with agent 1.
    CHECK(agent_value(inst, after, 2) == 2);
    CHECK(agent_value(inst, after, 1) == 0);
}

TEST_CASE("cycle elimination reaches a forest with no improving trade left") {
    Instance inst = inst_of(2, {it("A", {1, 2}, {2, 1}), it("B", {1, 2}, {1, 2})});
    auto split = equal_split_fractional(inst);
    REQUIRE(find_deficient_trade_cycle(inst, split).has_value());

    EliminationLog log;
    auto out = eliminate_product_cycles(inst, split, &log);
    CHECK_FALSE(find_deficient_trade_cycle(inst, out).has_value());
    CHECK(support_is_forest(inst, out));
    CHECK(log.trades.size() + log.support_cycles_removed > 0);
    for (const auto& t : log.trades) CHECK(t.product < 1);

    auto split_vals = agent_values(inst, split);
    auto out_vals = agent_values(inst, out);
    for (int i = 0; i < 2; ++i) CHECK(out_vals[i] >= split_vals[i]);
}

TEST_CASE("rounding requires a forest support") {
    Instance inst = inst_of(2, {it("A", {1, 2}, {2, 1}), it("B", {1, 2}, {1, 2})});
    auto split = equal_split_fractional(inst);
    CHECK(error_code([&] { round_acyclic_fractional(inst, split); }) ==
          "CyclicConsumptionGraph");

    // An already-integral state rounds to itself.
    Orientation pi = pi_of(inst, {1, 2});
    auto back = round_acyclic_fractional(inst, as_fractional(inst, pi));
    CHECK(back.owner == pi.owner);
}

TEST_CASE("the share-and-efficiency pipeline delivers both guarantees") {
    std::vector<Instance> cases;
    cases.push_back(inst_of(3, {
        it("e1", {1, 2}, {4, 2}),
        it("e2", {1, 2, 3}, {-3, 0, 6}),
        it("e3", {2}, {-5}),
        it("e4", {1, 3}, {1, -2}),
    }));
    cases.push_back(path3_ones());
    cases.push_back(path3_ones(true));
    cases.push_back(k4_plus_edge());
    for (std::uint64_t seed : {11u, 12u, 13u, 14u})
        cases.push_back(random_general(seed, 5, 7, -3, 3));

    for (const Instance& inst : cases) {
        CAPTURE(inst.num_items());
        auto [pi, trace] = solve_prop1_fpo(inst);
        CHECK(check_prop1(inst, pi).holds);
        CHECK(check_fpo(inst, pi).holds);

        REQUIRE(trace.stages.size() == 3);
        CHECK(trace.stages[0].name == "equal-split");
        CHECK(trace.stages[1].name == "non-malicious");
        CHECK(trace.stages[2].name == "acyclic");
        // The fractional phases never cost anyone value.
        for (size_t s = 1; s < trace.stages.size(); ++s)
            for (int i = 0; i < inst.num_agents(); ++i)
                CHECK(trace.stages[s].values[i] >= trace.stages[s - 1].values[i]);
        CHECK(support_is_forest(inst, trace.stages.back().state));
    }
}

TEST_CASE("greedy walk guarantees strong shares on non-negative multigraphs") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        Instance inst = random_multigraph(seed, 4, 7, 0, 5);
        Orientation pi = greedy_sprop1(inst);
        CHECK(check_sprop1(inst, pi).holds);
    }

    Instance hyper = inst_of(3, {it("e", {1, 2, 3}, {1, 1, 1})});
    CHECK(error_code([&] { greedy_sprop1(hyper); }) == "NotMultigraph");
    Instance neg = inst_of(2, {it("e", {1, 2}, {-1, 1})});
    CHECK(error_code([&] { greedy_sprop1(neg); }) == "NegativeValues");
    Instance ok = inst_of(2, {it("e", {1, 2}, {1, 1})});
    CHECK(error_code([&] { greedy_sprop1(ok, 7); }) == "BadAgentId");
}

TEST_CASE("simple-graph chores solver matches the one-cycle-per-component rule") {
    // A 4-cycle of strict chores: edges equal vertices, solvable.
    Instance cyc = inst_of(4, {
        it("e12", {1, 2}, {-1, -1}),
        it("e23", {2, 3}, {-1, -1}),
        it("e34", {3, 4}, {-1, -1}),
        it("e14", {1, 4}, {-1, -1}),
    });
    auto got = solve_ef1_chores_simple(cyc);
    REQUIRE(got.has_value());
    CHECK(check_ef1(cyc, *got).holds);

    // K4: six strict chores on four vertices, so someone gets two.
    Instance k4 = k4_plus_edge(true);
    auto none = solve_ef1_chores_simple(k4);
    CHECK_FALSE(none.has_value());
    ExhaustiveOracle oracle(k4);
    CHECK_FALSE(oracle.exists(Notion::ef1));

    // Zero-valued sides don't count toward the budget: a star whose edges
    // only burden the center on one side is fine when oriented outward.
    Instance star = inst_of(4, {
        it("s2", {1, 2}, {-1, 0}),
        it("s3", {1, 3}, {-1, 0}),
        it("s4", {1, 4}, {-1, -1}),
    });
    auto out = solve_ef1_chores_simple(star);
    REQUIRE(out.has_value());
    CHECK(check_ef1(star, *out).holds);

    Instance multi = inst_of(2, {it("a", {1, 2}, {-1, -1}), it("b", {1, 2}, {-1, -1})});
    CHECK(error_code([&] { solve_ef1_chores_simple(multi); }) == "NotSimpleGraph");
    Instance pos = inst_of(2, {it("e", {1, 2}, {1, -1})});
    CHECK(error_code([&] { solve_ef1_chores_simple(pos); }) == "PositiveValues");
}
