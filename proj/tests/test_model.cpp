#include "doctest.h"

#include "fairorient/model.hpp"
#include "helpers.hpp"

using namespace fairorient;
using namespace fairorient::test;

TEST_CASE("instance construction validates its input") {
    CHECK(error_code([] { inst_of(0, {it("a", {1}, {1})}); }) == "BadAgentId");
    CHECK(error_code([] { inst_of(2, {it("a", {}, {})}); }) == "EmptyRelevantSet");
    CHECK(error_code([] { inst_of(2, {it("a", {1, 3}, {1, 1})}); }) == "BadAgentId");
    CHECK(error_code([] { inst_of(2, {it("a", {1, 1}, {1, 1})}); }) == "BadAgentId");
    // Out-of-order relevant sets are normalized, values riding along.
    Instance swapped = inst_of(2, {it("a", {2, 1}, {5, 7})});
    CHECK(swapped.item(0).relevant == std::vector<int>{1, 2});
    CHECK(swapped.value(1, 0) == 7);
    CHECK(swapped.value(2, 0) == 5);
    CHECK(error_code([] {
              inst_of(2, {it("a", {1}, {1}), it("a", {2}, {1})});
          }) == "DuplicateItemId");
    // An instance without items is fine; agents may also be item-free.
    Instance empty = inst_of(3, {});
    CHECK(empty.num_items() == 0);
    CHECK(empty.agents_without_items() == std::vector<int>{1, 2, 3});
}

TEST_CASE("item lookups and values") {
    Instance inst = inst_of(3, {it("a", {1, 2}, {4, 2}), it("b", {2}, {-5})});
    CHECK(inst.item_index("a") == 0);
    CHECK(inst.item_index("b") == 1);
    CHECK(inst.item_index("zzz") == -1);
    CHECK(inst.item(0).degree() == 2);
    CHECK(inst.item(0).slot_of(2) == 1);
    CHECK(inst.item(0).slot_of(3) == -1);
    CHECK(inst.value(1, 0) == 4);
    CHECK(inst.value(3, 0) == 0);  // irrelevant agents value at zero
    CHECK(inst.items_of(2) == std::vector<int>{0, 1});
    CHECK(inst.items_of(3).empty());
    CHECK(inst.agents_without_items() == std::vector<int>{3});
}

TEST_CASE("graph classification") {
    Instance simple = inst_of(3, {it("a", {1, 2}, {1, 1}), it("b", {2, 3}, {1, 1})});
    CHECK(classify_graph(simple) == GraphClass::simple_graph);

    Instance multi = inst_of(2, {it("a", {1, 2}, {1, 1}), it("b", {1, 2}, {2, 2})});
    CHECK(classify_graph(multi) == GraphClass::multigraph);

    Instance general = inst_of(3, {it("a", {1, 2, 3}, {1, 1, 1})});
    CHECK(classify_graph(general) == GraphClass::general);

    Instance lonely = inst_of(2, {it("a", {1}, {1})});
    CHECK(classify_graph(lonely) == GraphClass::general);
}

TEST_CASE("item kinds split by the best opinion anyone holds") {
    Instance inst = inst_of(2, {
        it("good", {1, 2}, {-3, 1}),
        it("neutral", {1, 2}, {-3, 0}),
        it("chore", {1, 2}, {-3, -1}),
    });
    CHECK(classify_item(inst, 0) == ItemKind::good);
    CHECK(classify_item(inst, 1) == ItemKind::neutral);
    CHECK(classify_item(inst, 2) == ItemKind::chore);
}

TEST_CASE("instance polarity helpers") {
    CHECK(all_values_nonnegative(inst_of(2, {it("a", {1, 2}, {0, 3})})));
    CHECK_FALSE(all_values_nonpositive(inst_of(2, {it("a", {1, 2}, {0, 3})})));
    CHECK(all_values_nonpositive(inst_of(2, {it("a", {1, 2}, {0, -3})})));
    CHECK_FALSE(all_values_nonnegative(inst_of(2, {it("a", {1, 2}, {0, -3})})));
    // All-zero counts as both.
    Instance zero = inst_of(2, {it("a", {1, 2}, {0, 0})});
    CHECK(all_values_nonnegative(zero));
    CHECK(all_values_nonpositive(zero));
    CHECK_FALSE(all_values_nonnegative(inst_of(2, {it("a", {1, 2}, {-1, 1})})));
    CHECK_FALSE(all_values_nonpositive(inst_of(2, {it("a", {1, 2}, {-1, 1})})));
}

TEST_CASE("orientations must place every item with a relevant agent") {
    Instance inst = inst_of(3, {it("a", {1, 2}, {1, 1}), it("b", {2, 3}, {1, 1})});
    Orientation pi = pi_of(inst, {1, 3});
    CHECK(agent_value(inst, pi, 1) == 1);
    CHECK(agent_value(inst, pi, 2) == 0);
    CHECK(agent_values(inst, pi) == std::vector<Rational>{1, 0, 1});

    CHECK(error_code([&] { pi_of(inst, {1}); }) == "MissingItem");
    CHECK(error_code([&] { pi_of(inst, {3, 3}); }) == "InfeasibleOwner");
    CHECK(error_code([&] { pi_of(inst, {0, 3}); }) == "InfeasibleOwner");
}

TEST_CASE("fractional orientations validate shares and evaluate exactly") {
    Instance inst = inst_of(2, {it("a", {1, 2}, {4, 2})});
    FractionalOrientation half = make_fractional(inst, {{Rational(1, 2), Rational(1, 2)}});
    CHECK(agent_value(inst, half, 1) == 2);
    CHECK(agent_value(inst, half, 2) == 1);

    CHECK(error_code([&] {
              make_fractional(inst, {{Rational(1, 2), Rational(1, 3)}});
          }) == "BadFractionalShares");
    CHECK(error_code([&] {
              make_fractional(inst, {{Rational(3, 2), Rational(-1, 2)}});
          }) == "BadFractionalShares");

    Orientation pi = pi_of(inst, {2});
    FractionalOrientation lifted = as_fractional(inst, pi);
    CHECK(lifted.share[0][0] == 0);
    CHECK(lifted.share[0][1] == 1);
}
