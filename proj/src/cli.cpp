#include "fairorient/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fairorient/fairness.hpp"
#include "fairorient/fpo.hpp"
#include "fairorient/generators.hpp"
#include "fairorient/json_io.hpp"
#include "fairorient/model.hpp"
#include "fairorient/oracle.hpp"
#include "fairorient/reductions.hpp"
#include "fairorient/solvers.hpp"

namespace fairorient {

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("IoError", "cannot read \"" + path + "\"");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::string upper(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return s;
}

std::string bigint_str(const BigInt& v) {
    std::ostringstream out;
    out << v;
    return out.str();
}

int emit_report(const CheckReport& rep, bool as_json) {
    std::cout << render_report(rep, as_json);
    return rep.holds ? 0 : 1;
}

int do_check(const std::string& notion, const std::string& instance_path,
             const std::string& orientation_path, bool as_json, std::uint64_t budget) {
    Instance inst = parse_instance_json(slurp(instance_path));
    Orientation pi = parse_orientation_json(inst, slurp(orientation_path));
    if (auto n = notion_from_string(notion)) {
        if (*n == Notion::mms) return emit_report(check_mms(inst, pi, mms_shares(inst, budget)), as_json);
        return emit_report(check_notion(inst, pi, *n), as_json);
    }
    if (notion == "po") return emit_report(check_po_exhaustive(inst, pi, budget), as_json);
    if (notion == "fpo") return emit_report(check_fpo(inst, pi), as_json);
    if (notion == "non-malicious")
        return emit_report(check_non_malicious(inst, as_fractional(inst, pi)), as_json);
    fail("UnknownNotion", "\"" + notion + "\" names no checkable notion");
}

int do_solve(const std::string& method, const std::string& instance_path) {
    Instance inst = parse_instance_json(slurp(instance_path));
    if (method == "prop1-fpo") {
        auto [pi, trace] = solve_prop1_fpo(inst);
        std::cout << orientation_to_json(inst, pi) << "\n";
        return 0;
    }
    if (method == "prop-binary") {
        auto pi = solve_prop_binary(inst);
        if (!pi) {
            std::cout << "no proportional orientation exists\n";
            return 1;
        }
        std::cout << orientation_to_json(inst, *pi) << "\n";
        return 0;
    }
    if (method == "sprop1") {
        std::cout << orientation_to_json(inst, greedy_sprop1(inst)) << "\n";
        return 0;
    }
    if (method == "ef1-chores") {
        auto pi = solve_ef1_chores_simple(inst);
        if (!pi) {
            std::cout << "no orientation keeps every agent within one chore\n";
            return 1;
        }
        std::cout << orientation_to_json(inst, *pi) << "\n";
        return 0;
    }
    fail("UnknownMethod",
         "\"" + method + "\" names no solver (prop1-fpo, prop-binary, sprop1, ef1-chores)");
}

int do_exists(const std::string& notion, const std::string& instance_path, std::uint64_t budget) {
    auto n = notion_from_string(notion);
    if (!n) fail("UnknownNotion", "\"" + notion + "\" names no searchable notion");
    Instance inst = parse_instance_json(slurp(instance_path));
    ExhaustiveOracle oracle(inst);
    auto found = oracle.find(*n, budget);
    if (!found) {
        std::cout << "no orientation satisfies " << upper(notion) << " (searched "
                  << bigint_str(oracle.space()) << ")\n";
        return 1;
    }
    std::cout << orientation_to_json(inst, *found) << "\n";
    return 0;
}

int do_share(const std::string& instance_path, bool maximin, bool as_json, std::uint64_t budget) {
    Instance inst = parse_instance_json(slurp(instance_path));
    std::vector<Rational> shares = maximin ? mms_shares(inst, budget) : prop_share(inst);
    if (as_json) {
        nlohmann::ordered_json j;
        for (int i = 1; i <= inst.num_agents(); ++i)
            j[std::to_string(i)] = rat_to_string(shares[static_cast<size_t>(i - 1)]);
        std::cout << j.dump(2) << "\n";
    } else {
        for (int i = 1; i <= inst.num_agents(); ++i)
            std::cout << "agent " << i << ": " << rat_to_string(shares[static_cast<size_t>(i - 1)])
                      << "\n";
    }
    return 0;
}

int do_gadget(const std::string& target, const std::string& input_path, bool chores) {
    std::string text = slurp(input_path);
    if (target == "prop" || target == "propx") {
        Formula2P2N f = parse_formula(text);
        Notion n = target == "prop" ? Notion::prop : Notion::propx;
        std::cout << instance_to_json(gadget_3sat(f, n, chores).instance) << "\n";
        return 0;
    }
    auto kind = gadget_kind_from_string(target);
    if (!kind)
        fail("UnknownGadget",
             "\"" + target + "\" names no gadget (prop, propx, eq, eq1, eqx, ef1multi)");
    PartitionInput in = parse_partition_input(text);
    std::cout << instance_to_json(gadget_partition(in, *kind, chores).instance) << "\n";
    return 0;
}

int do_gen(const std::string& family, const std::vector<long long>& xs, bool chores,
           std::uint64_t seed, int agents, int items, long long lo, long long hi) {
    Instance inst = [&] {
        if (family == "path3-ones") return path3_ones(chores);
        if (family == "triangle-ones") return triangle_ones(chores);
        if (family == "k4-plus-edge") return k4_plus_edge(chores);
        if (family == "ef1-multigraph") {
            if (xs.empty()) fail("EmptyInput", "ef1-multigraph needs at least one value");
            return ef1_multigraph(xs);
        }
        if (family == "random-simple") return random_simple_graph(seed, agents, items, lo, hi);
        if (family == "random-multigraph") return random_multigraph(seed, agents, items, lo, hi);
        if (family == "random-general") return random_general(seed, agents, items, lo, hi);
        fail("UnknownFamily", "\"" + family + "\" names no generator family");
    }();
    std::cout << instance_to_json(inst) << "\n";
    return 0;
}

int do_verify_reduction(const std::string& kind_name, const std::string& input_path, bool chores,
                        bool as_json, std::uint64_t budget) {
    auto kind = gadget_kind_from_string(kind_name);
    if (!kind)
        fail("UnknownGadget", "\"" + kind_name + "\" names no gadget (eq, eq1, eqx, ef1multi)");
    PartitionInput in = parse_partition_input(slurp(input_path));
    ReductionReport rep = verify_reduction_small(*kind, in, chores, budget);
    if (as_json) {
        nlohmann::ordered_json j;
        j["kind"] = to_string(rep.kind);
        j["chores"] = rep.chores;
        j["gadget_satisfiable"] = rep.gadget_satisfiable;
        j["partition_yes"] = rep.partition_yes;
        j["agree"] = rep.agree;
        j["orientations_searched"] = bigint_str(rep.orientations_searched);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "gadget: " << (rep.gadget_satisfiable ? "satisfiable" : "unsatisfiable")
                  << "\n"
                  << "partition: " << (rep.partition_yes ? "yes" : "no") << "\n"
                  << (rep.agree ? "AGREE" : "DISAGREE") << " (searched "
                  << bigint_str(rep.orientations_searched) << " orientations)\n";
    }
    return rep.agree ? 0 : 1;
}

}  // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"exact checks, solvers, and constructions for fair orientations"};
    app.require_subcommand(1);

    std::string notion, instance_path, orientation_path, method, target, family, input_path;
    bool as_json = false, chores = false, maximin = false, exhaustive = false;
    std::uint64_t budget = kDefaultBudget, seed = 1;
    int agents = 4, items = 5;
    long long lo = -3, hi = 3;
    std::vector<long long> xs;

    auto* check = app.add_subcommand("check", "check an orientation against a notion");
    check->add_option("notion", notion,
                      "prop, prop1, propx, sprop1, eq, eq1, eqx, ef, ef1, mms, po, fpo, "
                      "non-malicious")
        ->required();
    check->add_option("instance", instance_path, "instance JSON file")->required();
    check->add_option("orientation", orientation_path, "orientation JSON file")->required();
    check->add_flag("--json", as_json, "machine-readable report");
    check->add_option("--budget", budget, "orientation-space bound for po and mms");

    auto* solve = app.add_subcommand("solve", "construct an orientation");
    solve->add_option("method", method, "prop1-fpo, prop-binary, sprop1, ef1-chores")->required();
    solve->add_option("instance", instance_path, "instance JSON file")->required();

    auto* exists = app.add_subcommand("exists", "exhaustive search for a satisfying orientation");
    exists->add_option("notion", notion, "any checkable notion")->required();
    exists->add_option("instance", instance_path, "instance JSON file")->required();
    exists->add_option("--budget", budget, "orientation-space bound");
    exists->add_flag("--exhaustive", exhaustive, "accepted for compatibility; always exhaustive");

    auto* share = app.add_subcommand("share", "per-agent fair-share thresholds");
    share->add_option("instance", instance_path, "instance JSON file")->required();
    share->add_flag("--mms", maximin, "maximin shares instead of proportional shares");
    share->add_flag("--json", as_json, "machine-readable output");
    share->add_option("--budget", budget, "partition-space bound for --mms");

    auto* gadget = app.add_subcommand("gadget", "emit a hardness-construction instance");
    gadget->add_option("target", target, "prop, propx (formula input); eq, eq1, eqx, ef1multi "
                                         "(partition input)")
        ->required();
    gadget->add_option("input", input_path, "formula or partition file")->required();
    gadget->add_flag("--chores", chores, "negated-values variant");

    auto* gen = app.add_subcommand("gen", "emit a built-in or random instance");
    gen->add_option("family", family,
                    "path3-ones, triangle-ones, k4-plus-edge, ef1-multigraph, random-simple, "
                    "random-multigraph, random-general")
        ->required();
    gen->add_option("xs", xs, "values for ef1-multigraph");
    gen->add_flag("--chores", chores, "negated-values variant of the fixed families");
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("--agents", agents, "agent count for random families");
    gen->add_option("--items", items, "item count for random families");
    gen->add_option("--min", lo, "smallest endpoint value");
    gen->add_option("--max", hi, "largest endpoint value");

    auto* verred = app.add_subcommand("verify-reduction",
                                      "gadget satisfiability vs. subset-sum ground truth");
    verred->add_option("kind", target, "eq, eq1, eqx, ef1multi")->required();
    verred->add_option("input", input_path, "partition file")->required();
    verred->add_flag("--chores", chores, "negated-values variant");
    verred->add_flag("--json", as_json, "machine-readable output");
    verred->add_option("--budget", budget, "orientation-space bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    (void)exhaustive;
    try {
        if (check->parsed()) return do_check(notion, instance_path, orientation_path, as_json, budget);
        if (solve->parsed()) return do_solve(method, instance_path);
        if (exists->parsed()) return do_exists(notion, instance_path, budget);
        if (share->parsed()) return do_share(instance_path, maximin, as_json, budget);
        if (gadget->parsed()) return do_gadget(target, input_path, chores);
        if (gen->parsed()) return do_gen(family, xs, chores, seed, agents, items, lo, hi);
        if (verred->parsed())
            return do_verify_reduction(target, input_path, chores, as_json, budget);
    } catch (const FairError& e) {
        // what() leads with the code for bare std::exception consumers;
        // here the code is already in brackets, so drop the duplicate.
        std::string msg = e.what();
        const std::string prefix = e.code() + ": ";
        if (msg.rfind(prefix, 0) == 0) msg = msg.substr(prefix.size());
        std::cerr << "error [" << e.code() << "]: " << msg << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace fairorient
