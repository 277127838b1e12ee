#pragma once

#include "fairorient/fairness.hpp"
#include "fairorient/model.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace fairorient {

inline constexpr std::uint64_t kDefaultBudget = 1ull << 24;

// Product of the relevant-set sizes: the number of distinct orientations.
BigInt orientation_space_size(const Instance& inst);

// Visits every orientation in mixed-radix order: the first orientation gives
// every item to its lowest-id relevant agent, and the LAST item's owner moves
// fastest (odometer from the right). `visit` returns false to stop early.
// Error SpaceTooLarge when the space exceeds `budget`.
void enumerate_orientations(const Instance& inst, std::uint64_t budget,
                            const std::function<bool(const Orientation&)>& visit);

// Brute-force ground truth over the full orientation space. Predicates run on
// exact integer-scaled arithmetic when the instance's values permit (lowest
// common denominator pulled out), otherwise on rationals; either way verdicts
// are exact. Not thread-safe (reuses internal scratch).
class ExhaustiveOracle {
public:
    explicit ExhaustiveOracle(const Instance& inst);
    ~ExhaustiveOracle();
    ExhaustiveOracle(const ExhaustiveOracle&) = delete;
    ExhaustiveOracle& operator=(const ExhaustiveOracle&) = delete;

    const Instance& instance() const;
    BigInt space() const;
    bool using_integer_fast_path() const;

    // Exact verdict for one orientation; agrees with the check_* functions.
    bool satisfies(Notion n, const Orientation& pi) const;

    // First satisfying orientation in mixed-radix order, or nullopt.
    std::optional<Orientation> find(Notion n, std::uint64_t budget = kDefaultBudget) const;
    bool exists(Notion n, std::uint64_t budget = kDefaultBudget) const;
    long long count_satisfying(Notion n, std::uint64_t budget = kDefaultBudget) const;

    // Exact maximin share of one agent: best over all splits of her non-zero
    // valued items into num_agents() bundles of the worst bundle.
    Rational mms(int agent, std::uint64_t budget = kDefaultBudget) const;
    std::vector<Rational> mms_all(std::uint64_t budget = kDefaultBudget) const;

    // Some orientation making everyone weakly better and someone strictly
    // better, or nullopt if `pi` is Pareto-optimal among orientations.
    std::optional<Orientation> find_dominating(const Orientation& pi,
                                               std::uint64_t budget = kDefaultBudget) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

std::optional<Orientation> find_orientation(const Instance& inst, Notion n,
                                            std::uint64_t budget = kDefaultBudget);

Rational mms_share(const Instance& inst, int agent, std::uint64_t budget = kDefaultBudget);
std::vector<Rational> mms_shares(const Instance& inst, std::uint64_t budget = kDefaultBudget);

// Pareto optimality by exhaustion: holds iff no orientation dominates.
CheckReport check_po_exhaustive(const Instance& inst, const Orientation& pi,
                                std::uint64_t budget = kDefaultBudget);

// Enumerates simple-graph instances on exactly `num_agents` labeled vertices:
// every subset of the possible edges, every assignment of endpoint values
// drawn from `alphabet`, one representative per isomorphism class, in a fixed
// deterministic order.
void for_each_simple_instance(int num_agents, const std::vector<Rational>& alphabet,
                              const std::function<void(const Instance&)>& fn);

// The binary special case: endpoint values in {0,1}, or {0,-1} when `chores`.
void for_each_binary_simple_instance(int num_agents, bool chores,
                                     const std::function<void(const Instance&)>& fn);

struct PropxScanResult {
    std::optional<Instance> first_witness;  // smallest instance with no propx orientation
    long long witness_count = 0;
    long long instances_scanned = 0;
};

// Sweeps the binary simple-graph families sized 2..max_agents for instances
// admitting no propx orientation.
PropxScanResult scan_propx_nonexistence(bool chores, int max_agents = 4);

// Validates the implication ladder on one concrete pair: prop => propx =>
// prop1, eq => eqx => eq1, ef => ef1, and (when the space fits the budget)
// fpo => exhaustive Pareto optimality. Returns a description of the first
// broken link, or nullopt when all hold.
std::optional<std::string> check_implication_chains(const Instance& inst, const Orientation& pi,
                                                    std::uint64_t po_budget = 1u << 10);

}  // namespace fairorient
