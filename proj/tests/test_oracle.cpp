#include "doctest.h"

#include <vector>

#include "fairorient/generators.hpp"
#include "fairorient/oracle.hpp"
#include "helpers.hpp"

using namespace fairorient;
using namespace fairorient::test;

TEST_CASE("orientation enumeration is a fixed odometer over relevant sets") {
    Instance inst = inst_of(3, {it("x", {1, 2}, {1, 1}), it("y", {1, 2, 3}, {1, 1, 1})});
    CHECK(orientation_space_size(inst) == 6);

    std::vector<std::vector<int>> seen;
    enumerate_orientations(inst, kDefaultBudget, [&](const Orientation& pi) {
        seen.push_back(pi.owner);
        return true;
    });
    std::vector<std::vector<int>> expect{{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}};
    CHECK(seen == expect);

    // The visitor can stop the walk.
    int walked = 0;
    enumerate_orientations(inst, kDefaultBudget, [&](const Orientation&) {
        return ++walked < 3;
    });
    CHECK(walked == 3);

    Instance wide = inst_of(3, {it("a", {1, 2, 3}, {0, 0, 0}), it("b", {1, 2, 3}, {0, 0, 0}),
                                it("c", {1, 2, 3}, {0, 0, 0})});
    CHECK(error_code([&] {
              enumerate_orientations(wide, 10, [](const Orientation&) { return true; });
          }) == "SpaceTooLarge");
}

TEST_CASE("oracle verdicts match the checkers on both arithmetic paths") {
    std::vector<Notion> notions{Notion::prop, Notion::prop1, Notion::propx, Notion::eq,
                                Notion::eq1,  Notion::eqx,   Notion::ef,    Notion::ef1};

    auto cross_check = [&](const Instance& inst) {
        ExhaustiveOracle oracle(inst);
        int walked = 0;
        enumerate_orientations(inst, kDefaultBudget, [&](const Orientation& pi) {
            for (Notion n : notions)
                REQUIRE(oracle.satisfies(n, pi) == check_notion(inst, pi, n).holds);
            return ++walked < 40;
        });
    };

    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        Instance inst = random_general(seed, 4, 5, -2, 2);
        ExhaustiveOracle oracle(inst);
        CHECK(oracle.using_integer_fast_path());
        cross_check(inst);
    }

    // Small fractions are cleared by common-denominator scaling and stay on
    // the integer route.
    Instance frac = inst_of(3, {
        itr("a", {1, 2}, {Rational(1, 2), Rational(1, 3)}),
        itr("b", {2, 3}, {Rational(2, 3), Rational(-1, 2)}),
        itr("c", {1, 3}, {Rational(-1, 6), Rational(1, 4)}),
    });
    ExhaustiveOracle oracle(frac);
    CHECK(oracle.using_integer_fast_path());
    cross_check(frac);

    // Values too large for 64-bit working sums force the rational route.
    Rational huge(BigInt(1) << 62);
    Instance big = inst_of(3, {
        itr("a", {1, 2}, {huge, Rational(1)}),
        itr("b", {2, 3}, {Rational(1, 3), -huge}),
        itr("c", {1, 3}, {Rational(-1), huge / 3}),
    });
    ExhaustiveOracle slow(big);
    CHECK_FALSE(slow.using_integer_fast_path());
    cross_check(big);
}

TEST_CASE("proportional orientation counts on the fixed instances") {
    ExhaustiveOracle path(path3_ones());
    CHECK(path.space() == 4);
    CHECK(path.count_satisfying(Notion::prop) == 0);
    CHECK_FALSE(path.exists(Notion::prop));
    CHECK_FALSE(find_orientation(path3_ones(), Notion::prop).has_value());

    ExhaustiveOracle tri(triangle_ones());
    CHECK(tri.space() == 8);
    // Exactly the two cyclic orientations hand every vertex one unit.
    CHECK(tri.count_satisfying(Notion::prop) == 2);
    auto first = tri.find(Notion::prop);
    REQUIRE(first.has_value());
    CHECK(check_prop(triangle_ones(), *first).holds);

    CHECK(error_code([&] { tri.exists(Notion::prop, 4); }) == "SpaceTooLarge");
}

TEST_CASE("exact maximin shares by exhaustive partition") {
    Instance inst = inst_of(2, {it("a", {1, 2}, {3, 3}), it("b", {1, 2}, {2, 2}),
                                it("c", {1, 2}, {1, 1})});
    ExhaustiveOracle oracle(inst);
    CHECK(oracle.mms(1) == 3);  // {a} versus {b, c}
    CHECK(oracle.mms_all() == std::vector<Rational>{Rational(3), Rational(3)});
    CHECK(mms_share(inst, 2) == 3);
    CHECK(mms_shares(inst) == std::vector<Rational>{Rational(3), Rational(3)});
    CHECK(error_code([&] { oracle.mms(1, 1); }) == "SpaceTooLarge");

    Instance ch = inst_of(2, {it("a", {1, 2}, {-3, -3}), it("b", {1, 2}, {-2, -2}),
                              it("c", {1, 2}, {-1, -1})});
    CHECK(mms_shares(ch) == std::vector<Rational>{Rational(-3), Rational(-3)});

    // Zero-valued items never constrain the partition.
    Instance zed = inst_of(2, {it("a", {1, 2}, {0, 4}), it("b", {1, 2}, {0, 4})});
    CHECK(mms_share(zed, 1) == 0);
    CHECK(mms_share(zed, 2) == 4);
}

TEST_CASE("pareto optimality by exhaustion finds dominating orientations") {
    Instance inst = inst_of(2, {it("A", {1, 2}, {2, 1}), it("B", {1, 2}, {1, 2})});
    Orientation bad = pi_of(inst, {2, 1});

    ExhaustiveOracle oracle(inst);
    auto better = oracle.find_dominating(bad);
    REQUIRE(better.has_value());
    CHECK(better->owner == std::vector<int>{1, 2});
    CHECK_FALSE(check_po_exhaustive(inst, bad).holds);

    Orientation good = pi_of(inst, {1, 2});
    CHECK_FALSE(oracle.find_dominating(good).has_value());
    CHECK(check_po_exhaustive(inst, good).holds);
}

TEST_CASE("implication ladder holds on random instances") {
    for (std::uint64_t seed = 20; seed <= 27; ++seed) {
        Instance inst = random_general(seed, 4, 5, -3, 3);
        int walked = 0;
        enumerate_orientations(inst, kDefaultBudget, [&](const Orientation& pi) {
            auto broken = check_implication_chains(inst, pi);
            CHECK_FALSE(broken.has_value());
            if (broken) MESSAGE(*broken);
            return ++walked < 16;
        });
    }
}

TEST_CASE("binary family sweep visits instances and validates witnesses") {
    for (bool chores : {false, true}) {
        CAPTURE(chores);
        auto scan = scan_propx_nonexistence(chores, 3);
        CHECK(scan.instances_scanned > 0);
        if (scan.first_witness) {
            CHECK(scan.witness_count > 0);
            ExhaustiveOracle oracle(*scan.first_witness);
            CHECK_FALSE(oracle.exists(Notion::propx));
        } else {
            CHECK(scan.witness_count == 0);
        }
    }
}
