// End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
// the process exits nonzero if any criterion fails. Time limits and corpus
// sizes are pinned here, not configurable, so a regression cannot hide
// behind a lighter run.

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fairorient/fpo.hpp"
#include "fairorient/generators.hpp"
#include "fairorient/json_io.hpp"
#include "fairorient/oracle.hpp"
#include "fairorient/reductions.hpp"
#include "fairorient/solvers.hpp"

using namespace fairorient;

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
    int number;
    const char* label;
    double limit_seconds;
    std::function<bool(std::string&)> run;
};

bool run_criterion(const Criterion& c) {
    std::string detail;
    auto t0 = Clock::now();
    bool ok = false;
    try {
        ok = c.run(detail);
    } catch (const FairError& e) {
        detail = std::string("unexpected error [") + e.code() + "]: " + e.what();
    } catch (const std::exception& e) {
        detail = std::string("unexpected exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (ok && secs > c.limit_seconds) {
        ok = false;
        detail = "over time budget";
    }
    std::printf("[%2d] %-58s %s (%.1fs%s%s)\n", c.number, c.label, ok ? "PASS" : "FAIL", secs,
                detail.empty() ? "" : "; ", detail.c_str());
    std::fflush(stdout);
    return ok;
}

std::string counts(long long bad, long long total) {
    return std::to_string(total - bad) + "/" + std::to_string(total) + " ok";
}

// --- 1: the share-and-efficiency pipeline up to scale -----------------------

bool crit_pipeline(std::string& detail) {
    std::vector<Instance> cases{
        path3_ones(),          path3_ones(true),     triangle_ones(),
        triangle_ones(true),   k4_plus_edge(),       k4_plus_edge(true),
        ef1_multigraph({1, 1, 2}),
    };
    for (std::uint64_t seed = 1; seed <= 400; ++seed)
        cases.push_back(random_general(seed, 3 + static_cast<int>(seed % 4),
                                       4 + static_cast<int>(seed % 6), -3, 3));
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        int n = 3 + static_cast<int>(seed % 4);
        int cap = n * (n - 1) / 2;
        int m = 1 + static_cast<int>(seed % 8);
        cases.push_back(random_simple_graph(seed, n, m < cap ? m : cap, -3, 3));
    }
    for (std::uint64_t seed = 1; seed <= 300; ++seed)
        cases.push_back(random_multigraph(seed, 3 + static_cast<int>(seed % 4),
                                          4 + static_cast<int>(seed % 5), -3, 3));

    long long bad = 0;
    for (const Instance& inst : cases) {
        auto [pi, trace] = solve_prop1_fpo(inst);
        if (!check_prop1(inst, pi).holds || !check_fpo(inst, pi).holds) ++bad;
    }
    detail = counts(bad, static_cast<long long>(cases.size()));
    return bad == 0;
}

// --- 2: binary proportionality against brute force ---------------------------

bool crit_prop_binary(std::string& detail) {
    long long bad = 0, total = 0;
    for (int n = 2; n <= 4; ++n)
        for (bool chores : {false, true})
            for_each_binary_simple_instance(n, chores, [&](const Instance& inst) {
                ++total;
                auto got = solve_prop_binary(inst);
                ExhaustiveOracle oracle(inst);
                bool expect = oracle.exists(Notion::prop);
                if (got.has_value() != expect || (got && !check_prop(inst, *got).holds)) ++bad;
            });
    long long swept = total;

    for (std::uint64_t seed = 1; seed <= 10000; ++seed) {
        ++total;
        int n = 3 + static_cast<int>(seed % 4);
        int cap = n * (n - 1) / 2;
        int m = 1 + static_cast<int>(seed % 8);
        bool chores = (seed % 2) == 0;
        Instance inst = random_simple_graph(seed, n, m < cap ? m : cap, chores ? -1 : 0,
                                            chores ? 0 : 1);
        auto got = solve_prop_binary(inst);
        ExhaustiveOracle oracle(inst);
        if (got.has_value() != oracle.exists(Notion::prop) ||
            (got && !check_prop(inst, *got).holds))
            ++bad;
    }
    detail = counts(bad, total) + " (" + std::to_string(swept) + " swept)";
    return bad == 0;
}

// --- 3: the smallest separating instances ------------------------------------

bool crit_path_triangle(std::string& detail) {
    ExhaustiveOracle path(path3_ones());
    ExhaustiveOracle path_ch(path3_ones(true));
    ExhaustiveOracle tri(triangle_ones());
    ExhaustiveOracle tri_ch(triangle_ones(true));
    bool ok = path.space() == 4 && !path.exists(Notion::prop) && !path_ch.exists(Notion::prop) &&
              tri.exists(Notion::prop) && tri_ch.exists(Notion::prop);
    detail = "path searched " + path.space().str() + ", triangle searched " + tri.space().str();
    return ok;
}

// --- 4: instances with no propx orientation at four vertices -----------------

bool crit_propx_scan(std::string& detail) {
    auto goods = scan_propx_nonexistence(false, 4);
    auto chores = scan_propx_nonexistence(true, 4);
    bool ok = goods.witness_count >= 1 && chores.witness_count >= 1 &&
              goods.first_witness.has_value() && chores.first_witness.has_value();
    if (ok) {
        ExhaustiveOracle og(*goods.first_witness);
        ExhaustiveOracle oc(*chores.first_witness);
        ok = !og.exists(Notion::propx) && !oc.exists(Notion::propx);
    }
    detail = "goods " + std::to_string(goods.witness_count) + " of " +
             std::to_string(goods.instances_scanned) + ", chores " +
             std::to_string(chores.witness_count) + " of " +
             std::to_string(chores.instances_scanned);
    return ok;
}

// --- 5: greedy walk's strong-share and maximin guarantees --------------------

bool crit_greedy(std::string& detail) {
    long long bad_sprop = 0, bad_mms = 0, mms_checked = 0;
    for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
        int n = 3 + static_cast<int>(seed % 4);
        Instance inst = random_multigraph(seed, n, 4 + static_cast<int>(seed % 5), 0, 5);
        Orientation pi = greedy_sprop1(inst);
        if (!check_sprop1(inst, pi).holds) ++bad_sprop;
        if (n <= 4) {
            ++mms_checked;
            auto shares = mms_shares(inst);
            if (!check_mms(inst, pi, shares).holds) ++bad_mms;
        }
    }
    detail = counts(bad_sprop, 1000) + " sprop1, " + counts(bad_mms, mms_checked) + " mms";
    return bad_sprop == 0 && bad_mms == 0;
}

// --- 6: no eq1/eqx orientation of the split K4 -------------------------------

bool crit_k4(std::string& detail) {
    long long eq1 = 0, eqx = 0;
    BigInt space = 0;
    for (bool chores : {false, true}) {
        ExhaustiveOracle oracle(k4_plus_edge(chores));
        space = oracle.space();
        eq1 += oracle.count_satisfying(Notion::eq1);
        eqx += oracle.count_satisfying(Notion::eqx);
    }
    detail = "eq1 " + std::to_string(eq1) + "/" + space.str() + " per polarity, eqx " +
             std::to_string(eqx);
    return eq1 == 0 && eqx == 0;
}

// --- 7: partition reductions agree with subset-sum at desk scale -------------

bool crit_reductions(std::string& detail) {
    std::vector<PartitionInput> corpus;
    for (long long a = 1; a <= 5; ++a)
        for (long long b = a; b <= 5; ++b)
            if ((a + b) % 2 == 0) corpus.push_back(PartitionInput{{a, b}});
    for (long long a = 1; a <= 4; ++a)
        for (long long b = a; b <= 4; ++b)
            for (long long c = b; c <= 4; ++c)
                if ((a + b + c) % 2 == 0) corpus.push_back(PartitionInput{{a, b, c}});

    bool saw_112 = false, saw_114 = false;
    long long bad = 0, total = 0;
    for (const PartitionInput& in : corpus) {
        if (in.xs == std::vector<long long>{1, 1, 2}) saw_112 = true;
        if (in.xs == std::vector<long long>{1, 1, 4}) saw_114 = true;
        for (GadgetKind k : {GadgetKind::eq, GadgetKind::eq1, GadgetKind::eqx})
            for (bool chores : {false, true}) {
                ++total;
                if (!verify_reduction_small(k, in, chores).agree) ++bad;
            }
        ++total;
        if (!verify_reduction_small(GadgetKind::ef1_multi, in, true).agree) ++bad;
    }
    detail = counts(bad, total) + " over " + std::to_string(corpus.size()) + " inputs";
    return bad == 0 && saw_112 && saw_114 && total >= 50;
}

// --- 8: simple-graph chores solver against brute force ------------------------

bool crit_ef1_chores(std::string& detail) {
    const std::vector<Rational> alphabet{Rational(0), Rational(-1), Rational(-2)};
    long long bad = 0, total = 0, with = 0, without = 0;

    auto agree = [&](const Instance& inst) {
        ++total;
        auto got = solve_ef1_chores_simple(inst);
        ExhaustiveOracle oracle(inst);
        bool expect = oracle.exists(Notion::ef1);
        if (got.has_value() != expect || (got && !check_ef1(inst, *got).holds)) {
            ++bad;
            return;
        }
        (got ? with : without)++;
    };

    for (int n = 2; n <= 4; ++n) for_each_simple_instance(n, alphabet, agree);

    // Five-vertex spot checks: ring, ring plus chord, near-complete graphs.
    {
        std::vector<ItemSpec> ring;
        for (int a = 1; a <= 5; ++a) {
            int b = a == 5 ? 1 : a + 1;
            ItemSpec e;
            e.id = "(" + std::to_string(a < b ? a : b) + "," + std::to_string(a < b ? b : a) + ")";
            e.relevant = {a < b ? a : b, a < b ? b : a};
            e.values = {Rational(-1), Rational(-1)};
            ring.push_back(e);
        }
        agree(Instance::build(5, ring));
    }
    for (std::uint64_t seed = 1; seed <= 200; ++seed)
        agree(random_simple_graph(seed, 5, 1 + static_cast<int>(seed % 10), -2, 0));

    agree(k4_plus_edge(true));

    detail = counts(bad, total) + " (" + std::to_string(with) + " solvable, " +
             std::to_string(without) + " not)";
    return bad == 0 && with > 0 && without > 0;
}

// --- 9: formula gadgets at the validation size --------------------------------

bool crit_gadgets(std::string& detail) {
    Formula2P2N f = parse_formula(
        "2p2n3sat 3 4\n1 2 3\n1 -2 -3\n-1 2 -3\n-1 -2 3\n");
    auto assign = find_satisfying_assignment(f);
    if (!assign) {
        detail = "validation formula unexpectedly unsatisfiable";
        return false;
    }

    if (search_wiring(Notion::prop) != default_wiring(Notion::prop) ||
        search_wiring(Notion::propx) != default_wiring(Notion::propx)) {
        detail = "wiring search disagrees with the shipped tables";
        return false;
    }

    for (Notion n : {Notion::prop, Notion::propx})
        for (bool chores : {false, true}) {
            Instance frag = build_clause_fragment(n, chores, default_wiring(n));
            if (!verify_forcing_property(frag, n, chores).holds) {
                detail = std::string("forcing fails for ") + to_string(n);
                return false;
            }
            Gadget g = gadget_3sat(f, n, chores);
            int want_agents = n == Notion::prop ? 54 : 34;
            int want_items = n == Notion::prop ? 71 : 47;
            if (g.instance.num_agents() != want_agents || g.instance.num_items() != want_items) {
                detail = std::string("bad shape for ") + to_string(n);
                return false;
            }
            if (n == Notion::prop) {
                Rational target = chores ? Rational(-4) : Rational(4);
                for (int a = 1; a <= g.instance.num_agents(); ++a) {
                    Rational tot = 0;
                    for (int k : g.instance.items_of(a)) tot += g.instance.value(a, k);
                    if (tot != target) {
                        detail = "vertex total off at agent " + std::to_string(a);
                        return false;
                    }
                }
            }
            Orientation w = witness_orientation_from_assignment(g, f, *assign);
            if (!check_notion(g.instance, w, n).holds) {
                detail = std::string("witness fails its notion for ") + to_string(n);
                return false;
            }
        }
    detail = "54/71 and 34/47, all four witness combinations hold";
    return true;
}

// --- 10: the implication ladder on random states ------------------------------

bool crit_implications(std::string& detail) {
    long long checked = 0, po_checked = 0, bad = 0;
    std::string first;
    std::vector<Instance> cases{path3_ones(), path3_ones(true), triangle_ones(),
                                k4_plus_edge(true), ef1_multigraph({1, 1, 2})};
    for (std::uint64_t seed = 50; seed < 90; ++seed)
        cases.push_back(random_general(seed, 4, 5, -3, 3));

    for (const Instance& inst : cases) {
        int walked = 0;
        enumerate_orientations(inst, kDefaultBudget, [&](const Orientation& pi) {
            // Exhaustive Pareto comparisons are costly, so that leg of the
            // ladder runs on every 64th orientation.
            bool po_leg = checked % 64 == 0;
            auto broken = check_implication_chains(inst, pi, po_leg ? (1u << 12) : 0);
            ++checked;
            if (po_leg) ++po_checked;
            if (broken) {
                ++bad;
                if (first.empty()) first = *broken;
            }
            return ++walked < 192;
        });
    }
    detail = std::to_string(checked) + " states, " + std::to_string(po_checked) +
             " with the efficiency leg" + (first.empty() ? "" : "; first break: " + first);
    return bad == 0;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "prop1+fpo pipeline on built-ins and 1000 random instances", 30, crit_pipeline},
        {2, "binary prop solver vs exhaustive search (sweeps + 10k random)", 120, crit_prop_binary},
        {3, "proportionality: path3 impossible, triangle possible", 10, crit_path_triangle},
        {4, "four-vertex binary scan finds propx-free instances", 60, crit_propx_scan},
        {5, "greedy multigraph walk: sprop1 always, mms at n<=4", 120, crit_greedy},
        {6, "k4-plus-edge admits no eq1/eqx orientation", 10, crit_k4},
        {7, "partition gadget reductions agree with subset-sum", 600, crit_reductions},
        {8, "ef1 chores solver vs exhaustive search (ternary sweep)", 300, crit_ef1_chores},
        {9, "formula gadgets: shapes, forcing wirings, witnesses", 60, crit_gadgets},
        {10, "implication ladder with subsampled efficiency leg", 120, crit_implications},
    };
    int failures = 0;
    for (const Criterion& c : criteria)
        if (!run_criterion(c)) ++failures;
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    else std::printf("all %zu criteria passed\n", criteria.size());
    return failures == 0 ? 0 : 1;
}
