#include "fairorient/json_io.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <utility>
#include <vector>

#include "json.hpp"

namespace fairorient {

namespace {

using Json = nlohmann::ordered_json;

Json parse_json(const std::string& text, const char* what) {
    Json j = Json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) fail("SyntaxError", std::string(what) + " is not valid JSON");
    return j;
}

int parse_agent_key(const std::string& key, int num_agents) {
    int a = 0;
    auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), a);
    if (ec != std::errc() || ptr != key.data() + key.size() || a < 1 || a > num_agents)
        fail("BadValue", "\"" + key + "\" names no agent in [1," + std::to_string(num_agents) + "]");
    return a;
}

Rational parse_value(const Json& j, const std::string& where) {
    if (j.is_number_float())
        fail("BadValue", "decimal value at " + where + " is not exact; write \"p/q\" instead");
    if (j.is_number_unsigned()) {
        auto u = j.get<std::uint64_t>();
        if (u > static_cast<std::uint64_t>(std::numeric_limits<long long>::max()))
            fail("BadValue", "value at " + where + " overflows; write \"p/q\" instead");
        return Rational(static_cast<long long>(u));
    }
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const std::exception&) {
            fail("BadValue", "value at " + where + " is not a \"p/q\" rational");
        }
    }
    fail("BadValue", "value at " + where + " must be an integer or a \"p/q\" string");
}

Json value_to_json(const Rational& v) {
    if (denominator(v) == 1) {
        if (auto i = to_int64(numerator(v))) return Json(*i);
    }
    return Json(rat_to_string(v));
}

}  // namespace

Instance parse_instance_json(const std::string& text) {
    Json j = parse_json(text, "instance");
    if (!j.is_object() || !j.contains("agents") || !j.contains("items"))
        fail("SyntaxError", "instance must be an object with \"agents\" and \"items\"");
    if (!j["agents"].is_number_integer())
        fail("SyntaxError", "\"agents\" must be an integer");
    int n = j["agents"].get<int>();
    if (!j["items"].is_array()) fail("SyntaxError", "\"items\" must be an array");

    std::vector<ItemSpec> items;
    for (const Json& ij : j["items"]) {
        if (!ij.is_object() || !ij.contains("id") || !ij.contains("relevant"))
            fail("SyntaxError", "each item needs \"id\" and \"relevant\"");
        ItemSpec it;
        if (!ij["id"].is_string()) fail("SyntaxError", "item id must be a string");
        it.id = ij["id"].get<std::string>();
        if (!ij["relevant"].is_array())
            fail("SyntaxError", "\"relevant\" of item \"" + it.id + "\" must be an array");
        for (const Json& aj : ij["relevant"]) {
            if (!aj.is_number_integer())
                fail("SyntaxError", "\"relevant\" of item \"" + it.id + "\" must hold integers");
            it.relevant.push_back(aj.get<int>());
        }
        std::sort(it.relevant.begin(), it.relevant.end());
        it.values.assign(it.relevant.size(), Rational(0));
        if (ij.contains("values")) {
            if (!ij["values"].is_object())
                fail("SyntaxError", "\"values\" of item \"" + it.id + "\" must be an object");
            for (auto& [key, vj] : ij["values"].items()) {
                int a = parse_agent_key(key, n);
                int slot = it.slot_of(a);
                if (slot < 0)
                    fail("BadValue", "item \"" + it.id + "\" prices agent " + key +
                                         ", who is not in its relevant set");
                it.values[static_cast<size_t>(slot)] = parse_value(vj, "item \"" + it.id + "\"");
            }
        }
        items.push_back(std::move(it));
    }
    return Instance::build(n, std::move(items));
}

std::string instance_to_json(const Instance& inst) {
    Json j;
    j["agents"] = inst.num_agents();
    j["items"] = Json::array();
    for (const ItemSpec& it : inst.items()) {
        Json ij;
        ij["id"] = it.id;
        ij["relevant"] = it.relevant;
        Json vals = Json::object();
        for (size_t s = 0; s < it.relevant.size(); ++s)
            vals[std::to_string(it.relevant[s])] = value_to_json(it.values[s]);
        ij["values"] = std::move(vals);
        j["items"].push_back(std::move(ij));
    }
    return j.dump(2);
}

Orientation parse_orientation_json(const Instance& inst, const std::string& text) {
    Json j = parse_json(text, "orientation");
    if (!j.is_object()) fail("SyntaxError", "orientation must map item ids to agents");
    std::vector<int> owner(static_cast<size_t>(inst.num_items()), 0);
    std::vector<char> seen(static_cast<size_t>(inst.num_items()), 0);
    for (auto& [id, aj] : j.items()) {
        int k = inst.item_index(id);
        if (k < 0) fail("BadValue", "orientation names unknown item \"" + id + "\"");
        if (!aj.is_number_integer())
            fail("SyntaxError", "owner of item \"" + id + "\" must be an integer");
        owner[static_cast<size_t>(k)] = aj.get<int>();
        seen[static_cast<size_t>(k)] = 1;
    }
    for (int k = 0; k < inst.num_items(); ++k)
        if (!seen[static_cast<size_t>(k)])
            fail("BadValue", "orientation misses item \"" + inst.item(k).id + "\"");
    return make_orientation(inst, std::move(owner));
}

std::string orientation_to_json(const Instance& inst, const Orientation& pi) {
    Json j = Json::object();
    for (int k = 0; k < inst.num_items(); ++k)
        j[inst.item(k).id] = pi.owner[static_cast<size_t>(k)];
    return j.dump(2);
}

std::string render_report(const CheckReport& rep, bool as_json) {
    if (!as_json) {
        if (rep.holds) return "HOLDS\n";
        std::string out;
        for (const Violation& v : rep.violations) {
            out += v.notion;
            out += " fails for agent " + std::to_string(v.agent);
            if (v.other > 0) out += " (pair " + std::to_string(v.agent) + "," + std::to_string(v.other) + ")";
            // Equality-style notions violate in either direction, so pick the
            // comparator that is actually true for this pair of sides.
            const char* cmp = v.lhs < v.rhs ? " < " : v.lhs > v.rhs ? " > " : " != ";
            out += ": lhs=" + rat_to_string(v.lhs) + cmp + "rhs=" + rat_to_string(v.rhs);
            if (!v.item_id.empty()) out += ", witness item " + v.item_id;
            if (!v.detail.empty()) out += " (" + v.detail + ")";
            out += "\n";
        }
        return out;
    }
    Json j;
    j["holds"] = rep.holds;
    if (!rep.holds) {
        j["violations"] = Json::array();
        for (const Violation& v : rep.violations) {
            Json vj;
            vj["notion"] = v.notion;
            vj["agent"] = v.agent;
            if (v.other > 0) vj["other"] = v.other;
            if (!v.item_id.empty()) vj["item"] = v.item_id;
            vj["lhs"] = rat_to_string(v.lhs);
            vj["rhs"] = rat_to_string(v.rhs);
            if (!v.detail.empty()) vj["detail"] = v.detail;
            j["violations"].push_back(std::move(vj));
        }
    }
    return j.dump(2) + "\n";
}

}  // namespace fairorient
