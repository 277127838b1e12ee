#include "fairorient/generators.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <utility>

#include "fairorient/reductions.hpp"

namespace fairorient {

namespace {

Rational pol(bool chores, Rational v) { return chores ? -v : v; }

ItemSpec simple_edge(int a, int b, Rational va, Rational vb) {
    ItemSpec it;
    it.id = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    it.relevant = {a, b};
    it.values = {std::move(va), std::move(vb)};
    return it;
}

// mt19937_64 output reduced by modulo: biased by < 2^-50 for the ranges used
// here, and stable across standard libraries (std::uniform_int_distribution
// is not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::mt19937_64 eng_;
};

void check_random_args(int num_agents, int num_items, long long lo, long long hi) {
    if (num_agents < 1) fail("BadValue", "need at least one agent");
    if (num_items < 1) fail("BadValue", "need at least one item");
    if (lo > hi) fail("BadValue", "empty value range");
}

}  // namespace

Instance path3_ones(bool chores) {
    std::vector<ItemSpec> items = {
        simple_edge(1, 2, pol(chores, Rational(1)), pol(chores, Rational(1))),
        simple_edge(2, 3, pol(chores, Rational(1)), pol(chores, Rational(1))),
    };
    return Instance::build(3, std::move(items));
}

Instance triangle_ones(bool chores) {
    std::vector<ItemSpec> items = {
        simple_edge(1, 2, pol(chores, Rational(1)), pol(chores, Rational(1))),
        simple_edge(2, 3, pol(chores, Rational(1)), pol(chores, Rational(1))),
        simple_edge(1, 3, pol(chores, Rational(1)), pol(chores, Rational(1))),
    };
    return Instance::build(3, std::move(items));
}

Instance k4_plus_edge(bool chores) {
    Rational v = pol(chores, Rational(1, 3));
    std::vector<ItemSpec> items;
    for (int a = 1; a <= 4; ++a)
        for (int b = a + 1; b <= 4; ++b) items.push_back(simple_edge(a, b, v, v));
    items.push_back(simple_edge(5, 6, v, v));
    return Instance::build(6, std::move(items));
}

Instance ef1_multigraph(const std::vector<long long>& xs) {
    PartitionInput in;
    in.xs = xs;
    return gadget_partition(in, GadgetKind::ef1_multi, true).instance;
}

Instance random_simple_graph(std::uint64_t seed, int num_agents, int num_items,
                             long long min_value, long long max_value) {
    check_random_args(num_agents, num_items, min_value, max_value);
    long long max_edges = static_cast<long long>(num_agents) * (num_agents - 1) / 2;
    if (num_items > max_edges)
        fail("BadValue", std::to_string(num_items) + " distinct edges do not fit on " +
                             std::to_string(num_agents) + " vertices");
    Rng rng(seed);
    std::set<std::pair<int, int>> used;
    std::vector<ItemSpec> items;
    while (static_cast<int>(items.size()) < num_items) {
        int a = static_cast<int>(rng.range(1, num_agents));
        int b = static_cast<int>(rng.range(1, num_agents));
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        if (!used.insert({a, b}).second) continue;
        items.push_back(simple_edge(a, b, Rational(rng.range(min_value, max_value)),
                                    Rational(rng.range(min_value, max_value))));
    }
    return Instance::build(num_agents, std::move(items));
}

Instance random_multigraph(std::uint64_t seed, int num_agents, int num_items,
                           long long min_value, long long max_value) {
    check_random_args(num_agents, num_items, min_value, max_value);
    if (num_agents < 2) fail("BadValue", "edges need two distinct endpoints");
    Rng rng(seed);
    std::vector<ItemSpec> items;
    for (int k = 1; k <= num_items; ++k) {
        int a = static_cast<int>(rng.range(1, num_agents));
        int b;
        do {
            b = static_cast<int>(rng.range(1, num_agents));
        } while (b == a);
        if (a > b) std::swap(a, b);
        ItemSpec it = simple_edge(a, b, Rational(rng.range(min_value, max_value)),
                                  Rational(rng.range(min_value, max_value)));
        it.id = "e_" + std::to_string(k) + it.id;
        items.push_back(std::move(it));
    }
    return Instance::build(num_agents, std::move(items));
}

Instance random_general(std::uint64_t seed, int num_agents, int num_items,
                        long long min_value, long long max_value) {
    check_random_args(num_agents, num_items, min_value, max_value);
    Rng rng(seed);
    std::vector<ItemSpec> items;
    for (int k = 1; k <= num_items; ++k) {
        int d = static_cast<int>(rng.range(1, std::min(num_agents, 4)));
        std::set<int> rel;
        while (static_cast<int>(rel.size()) < d)
            rel.insert(static_cast<int>(rng.range(1, num_agents)));
        ItemSpec it;
        it.id = "e_" + std::to_string(k);
        for (int a : rel) {
            it.relevant.push_back(a);
            it.values.push_back(Rational(rng.range(min_value, max_value)));
        }
        items.push_back(std::move(it));
    }
    return Instance::build(num_agents, std::move(items));
}

}  // namespace fairorient
