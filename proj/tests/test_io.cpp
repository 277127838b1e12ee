#include "doctest.h"

#include <string>

#include "fairorient/generators.hpp"
#include "fairorient/json_io.hpp"
#include "helpers.hpp"

using namespace fairorient;
using namespace fairorient::test;

TEST_CASE("instance files parse integers, exact fractions, and omissions") {
    const char* text = R"json({
        "agents": 3,
        "items": [
            {"id": "(1,2)", "relevant": [2, 1], "values": {"1": 2, "2": "-1/2"}},
            {"id": "(2,3)", "relevant": [2, 3], "values": {"3": "7"}},
            {"id": "free", "relevant": [1]}
        ]
    })json";
    Instance inst = parse_instance_json(text);
    CHECK(inst.num_agents() == 3);
    CHECK(inst.num_items() == 3);
    CHECK(inst.item(0).relevant == std::vector<int>{1, 2});  // sorted on parse
    CHECK(inst.value(1, 0) == 2);
    CHECK(inst.value(2, 0) == Rational(-1, 2));
    CHECK(inst.value(2, 1) == 0);  // omitted from "values"
    CHECK(inst.value(3, 1) == 7);
    CHECK(inst.value(1, 2) == 0);  // no "values" object at all

    // Serialize and re-parse: same shape, same numbers.
    Instance back = parse_instance_json(instance_to_json(inst));
    REQUIRE(back.num_items() == inst.num_items());
    CHECK(back.num_agents() == inst.num_agents());
    for (int k = 0; k < inst.num_items(); ++k) {
        CHECK(back.item(k).id == inst.item(k).id);
        CHECK(back.item(k).relevant == inst.item(k).relevant);
        CHECK(back.item(k).values == inst.item(k).values);
    }
}

TEST_CASE("instance files reject inexact and malformed values") {
    auto with_value = [](const std::string& v) {
        return R"({"agents": 2, "items": [{"id": "e", "relevant": [1, 2], "values": {"1": )" +
               v + "}}]}";
    };
    CHECK(error_code([&] { parse_instance_json(with_value("0.5")); }) == "BadValue");
    CHECK(error_code([&] { parse_instance_json(with_value("\"half\"")); }) == "BadValue");
    CHECK(error_code([&] { parse_instance_json(with_value("\"1/0\"")); }) == "BadValue");
    CHECK(error_code([&] { parse_instance_json(with_value("true")); }) == "BadValue");
    CHECK(error_code([&] { parse_instance_json(with_value("18446744073709551615")); }) ==
          "BadValue");
    CHECK(parse_instance_json(with_value("\"-3/6\"")).value(1, 0) == Rational(-1, 2));

    // Value keyed by an agent outside the relevant set.
    CHECK(error_code([] {
              parse_instance_json(R"({"agents": 2, "items": [
                  {"id": "e", "relevant": [1], "values": {"2": 1}}]})");
          }) == "BadValue");
    CHECK(error_code([] {
              parse_instance_json(R"({"agents": 2, "items": [
                  {"id": "e", "relevant": [1], "values": {"zero": 1}}]})");
          }) == "BadValue");
}

TEST_CASE("instance files reject structural mistakes") {
    CHECK(error_code([] { parse_instance_json("{"); }) == "SyntaxError");
    CHECK(error_code([] { parse_instance_json(R"({"items": []})"); }) == "SyntaxError");
    CHECK(error_code([] { parse_instance_json(R"({"agents": "3", "items": []})"); })
          == "SyntaxError");
    CHECK(error_code([] { parse_instance_json(R"({"agents": 2, "items": {}})"); })
          == "SyntaxError");
    CHECK(error_code([] {
              parse_instance_json(R"({"agents": 2, "items": [{"relevant": [1]}]})");
          }) == "SyntaxError");
    CHECK(error_code([] {
              parse_instance_json(R"({"agents": 2, "items": [{"id": "e", "relevant": [1.5]}]})");
          }) == "SyntaxError");
    // Relevant agents outside [1, n] surface the model's own validation.
    CHECK(error_code([] {
              parse_instance_json(R"({"agents": 2, "items": [{"id": "e", "relevant": [3]}]})");
          }) == "BadAgentId");
}

TEST_CASE("orientation files round-trip and validate against the instance") {
    Instance inst = triangle_ones();
    Orientation pi = pi_of(inst, {1, 2, 3});
    Orientation back = parse_orientation_json(inst, orientation_to_json(inst, pi));
    CHECK(back.owner == pi.owner);

    std::string id0 = inst.item(0).id;
    std::string id1 = inst.item(1).id;
    std::string id2 = inst.item(2).id;

    CHECK(error_code([&] { parse_orientation_json(inst, "[1, 2]"); }) == "SyntaxError");
    CHECK(error_code([&] {
              parse_orientation_json(inst, R"({"nope": 1})");
          }) == "BadValue");
    CHECK(error_code([&] {
              parse_orientation_json(inst, "{\"" + id0 + "\": 1}");
          }) == "BadValue");  // two items unassigned
    CHECK(error_code([&] {
              parse_orientation_json(
                  inst, "{\"" + id0 + "\": 1, \"" + id1 + "\": \"2\", \"" + id2 + "\": 3}");
          }) == "SyntaxError");  // owner must be a number
    // Feasibility is the model's call: item 0 joins agents 1 and 2 only.
    Orientation good = parse_orientation_json(
        inst, "{\"" + id0 + "\": 2, \"" + id1 + "\": 2, \"" + id2 + "\": 3}");
    CHECK(good.owner == std::vector<int>{2, 2, 3});
}

TEST_CASE("reports render as text lines or a json object") {
    Instance inst = path3_ones();
    Orientation hog = pi_of(inst, {2, 2});

    CheckReport ok = check_prop1(inst, hog);
    REQUIRE(ok.holds);
    CHECK(render_report(ok, false) == "HOLDS\n");
    std::string okj = render_report(ok, true);
    CHECK(okj.find("\"holds\": true") != std::string::npos);
    CHECK(okj.find("violations") == std::string::npos);

    CheckReport bad = check_prop(inst, hog);
    REQUIRE_FALSE(bad.holds);
    std::string text = render_report(bad, false);
    CHECK(text.find("prop fails for agent 1") != std::string::npos);
    CHECK(text.find("lhs=0 < rhs=1/2") != std::string::npos);
    CHECK(text.find("prop fails for agent 3") != std::string::npos);

    std::string json = render_report(bad, true);
    CHECK(json.find("\"holds\": false") != std::string::npos);
    CHECK(json.find("\"notion\": \"prop\"") != std::string::npos);
    CHECK(json.find("\"lhs\": \"0\"") != std::string::npos);
    CHECK(json.find("\"rhs\": \"1/2\"") != std::string::npos);

    // Pairwise notions carry the other agent in both renderings.
    CheckReport envy = check_ef(inst, hog);
    REQUIRE_FALSE(envy.holds);
    CHECK(render_report(envy, false).find("(pair 1,2)") != std::string::npos);
    CHECK(render_report(envy, true).find("\"other\": 2") != std::string::npos);
}
