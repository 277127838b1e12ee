#pragma once

#include "fairorient/fairness.hpp"
#include "fairorient/model.hpp"
#include "fairorient/oracle.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fairorient {

// ---------------------------------------------------------------------------
// Partition inputs
// ---------------------------------------------------------------------------

// A multiset of positive integers with an even sum 2T; the question is
// whether it splits into two halves of sum T each.
struct PartitionInput {
    std::vector<long long> xs;

    long long sum() const;
    long long half() const;  // T
};

// One line of whitespace-separated positive integers.
// Errors: SyntaxError, BadValue (non-positive), OddSum, EmptyInput.
PartitionInput parse_partition_input(const std::string& text);

// Subset-sum DP; exact.
bool partition_solvable(const PartitionInput& in);

// Indices (0-based) of one half summing to T, or nullopt.
std::optional<std::vector<int>> partition_witness(const PartitionInput& in);

// ---------------------------------------------------------------------------
// 2P2N-3SAT formulas
// ---------------------------------------------------------------------------

// CNF where every variable occurs exactly twice positively and twice
// negatively, and every clause holds three literals (so 3t = 4s).
struct Formula2P2N {
    int num_vars = 0;                            // s
    std::vector<std::array<int, 3>> clauses;     // literals as signed 1-based vars
};

// Header line "2p2n3sat <s> <t>", then t lines of three nonzero signed ints.
// Errors: SyntaxError, BadArity, VariableOutOfRange, DuplicateLiteralInClause,
// OccurrenceCountViolation.
Formula2P2N parse_formula(const std::string& text);

bool assignment_satisfies(const Formula2P2N& f, const std::vector<bool>& assignment);

// Truth-table scan, first satisfying assignment in lexicographic order
// (variable 1 least significant, false before true), or nullopt.
std::optional<std::vector<bool>> find_satisfying_assignment(const Formula2P2N& f);

// ---------------------------------------------------------------------------
// Hardness gadgets from Partition
// ---------------------------------------------------------------------------

enum class GadgetKind { eq, eq1, eqx, ef1_multi };

const char* to_string(GadgetKind k);
std::optional<GadgetKind> gadget_kind_from_string(const std::string& s);

// A constructed instance together with the fairness notion whose existence
// question it encodes and a name -> agent-id map for the special vertices.
struct Gadget {
    Instance instance;
    Notion notion = Notion::prop;
    bool chores = false;
    std::map<std::string, int> agent_by_role;
};

// Builds the Partition gadget of the requested kind. `chores` negates every
// value; ef1_multi exists only as a chores construction
// (UnsupportedCombination otherwise).
Gadget gadget_partition(const PartitionInput& in, GadgetKind kind, bool chores);

// ---------------------------------------------------------------------------
// Hardness gadgets from 2P2N-3SAT
// ---------------------------------------------------------------------------

// The clause gadget's internal edges (anchors to the clause vertex included,
// literal edges excluded), endpoint roles "c" and "d1".."dK", with the values
// each endpoint assigns. Only the goods form is stored; chores negates.
struct DummyWiring {
    struct EdgeSpec {
        std::string a, b;  // endpoint roles
        Rational va, vb;   // value for a / for b

        bool operator==(const EdgeSpec&) const = default;
    };
    std::vector<EdgeSpec> edges;

    bool operator==(const DummyWiring&) const = default;
};

// The wiring shipped with the library for each notion (prop or propx): the
// first candidate, in deterministic search order, that passes
// verify_forcing_property in both polarities. search_wiring re-derives it.
const DummyWiring& default_wiring(Notion n);
DummyWiring search_wiring(Notion n);

// One clause gadget as a standalone instance: agent 1 is the clause vertex,
// agents 2..K+1 the dummies in role order. Item ids are "(c,d1)" etc.
Instance build_clause_fragment(Notion n, bool chores, const DummyWiring& wiring);

// Checks on one clause fragment that (a) the dummies can all reach the target
// notion with the anchor edges oriented as the satisfying construction
// requires, and (b) for propx only: in every fragment orientation where all
// dummies reach the notion, the (c,d1) anchor sits with its forced holder.
// Violations carry the failing condition and a witness orientation.
CheckReport verify_forcing_property(const Instance& fragment, Notion n, bool chores);

// Assembles the full formula gadget: variable vertex pairs, clause vertices
// with their dummy entourage, literal edges. Wiring defaults to
// default_wiring(n); the forcing property is re-verified on every build
// (ForcingPropertyUnverified on failure). Notion must be prop or propx.
Gadget gadget_3sat(const Formula2P2N& f, Notion n, bool chores,
                   const DummyWiring* wiring = nullptr);

// The orientation the constructive direction produces for a satisfying
// assignment; passes the gadget's target checker.
// Errors: AssignmentDoesNotSatisfy, BadAssignmentSize.
Orientation witness_orientation_from_assignment(const Gadget& g, const Formula2P2N& f,
                                                const std::vector<bool>& assignment);

// ---------------------------------------------------------------------------
// Desk-scale reduction verification
// ---------------------------------------------------------------------------

struct ReductionReport {
    GadgetKind kind;
    bool chores = false;
    bool gadget_satisfiable = false;   // oracle: some orientation meets the notion
    bool partition_yes = false;        // subset-sum DP
    bool agree = false;
    BigInt orientations_searched;
};

// Builds the gadget, runs the exhaustive oracle for its notion, and compares
// against brute-force Partition solvability.
ReductionReport verify_reduction_small(GadgetKind kind, const PartitionInput& in, bool chores,
                                       std::uint64_t budget = kDefaultBudget);

}  // namespace fairorient
