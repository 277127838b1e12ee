#include "fairorient/reductions.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace fairorient {

namespace {

std::vector<std::string> split_tokens(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

long long parse_ll(const std::string& tok, const char* what) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        fail("SyntaxError", std::string(what) + " must be an integer, got \"" + tok + "\"");
    return v;
}

// Edge item with both endpoint values; endpoints are sorted as the model
// requires, swapping the values alongside.
ItemSpec edge_item(std::string id, int a, Rational va, int b, Rational vb) {
    if (a == b) fail("BadWiringRole", "edge endpoints must differ in \"" + id + "\"");
    ItemSpec it;
    it.id = std::move(id);
    if (a < b) {
        it.relevant = {a, b};
        it.values = {std::move(va), std::move(vb)};
    } else {
        it.relevant = {b, a};
        it.values = {std::move(vb), std::move(va)};
    }
    return it;
}

Rational sgn(bool chores, Rational v) { return chores ? -v : v; }

}  // namespace

// ---------------------------------------------------------------------------
// Partition inputs
// ---------------------------------------------------------------------------

long long PartitionInput::sum() const {
    long long s = 0;
    for (long long x : xs) s += x;
    return s;
}

long long PartitionInput::half() const { return sum() / 2; }

namespace {

void validate_partition(const PartitionInput& in) {
    if (in.xs.empty()) fail("EmptyInput", "a partition input needs at least one value");
    for (long long x : in.xs)
        if (x <= 0)
            fail("BadValue", "partition values must be positive, got " + std::to_string(x));
    if (in.sum() % 2 != 0)
        fail("OddSum", "total " + std::to_string(in.sum()) + " is odd; no equal split can exist");
}

}  // namespace

PartitionInput parse_partition_input(const std::string& text) {
    PartitionInput in;
    for (const std::string& tok : split_tokens(text)) in.xs.push_back(parse_ll(tok, "partition value"));
    validate_partition(in);
    return in;
}

std::optional<std::vector<int>> partition_witness(const PartitionInput& in) {
    validate_partition(in);
    long long target = in.half();
    if (target > 50'000'000)
        fail("SpaceTooLarge", "subset-sum table for target " + std::to_string(target) +
                                  " exceeds the desk-scale bound");
    // from[s] = the item that first reached sum s (-1 for the empty sum);
    // entries are written once, so reconstruction walks strictly earlier items.
    std::vector<int> from(static_cast<size_t>(target) + 1, -2);
    from[0] = -1;
    for (int i = 0; i < static_cast<int>(in.xs.size()); ++i) {
        long long x = in.xs[i];
        for (long long s = target; s >= x; --s)
            if (from[s] == -2 && from[s - x] != -2) from[s] = i;
    }
    if (from[target] == -2) return std::nullopt;
    std::vector<int> picked;
    for (long long s = target; s > 0; s -= in.xs[from[s]]) picked.push_back(from[s]);
    std::reverse(picked.begin(), picked.end());
    return picked;
}

bool partition_solvable(const PartitionInput& in) { return partition_witness(in).has_value(); }

// ---------------------------------------------------------------------------
// 2P2N-3SAT formulas
// ---------------------------------------------------------------------------

Formula2P2N parse_formula(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            auto toks = split_tokens(line);
            if (!toks.empty()) rows.push_back(std::move(toks));
        }
    }
    if (rows.empty()) fail("SyntaxError", "empty formula text");
    const auto& head = rows[0];
    if (head.size() != 3 || head[0] != "2p2n3sat")
        fail("SyntaxError", "formula header must read \"2p2n3sat <vars> <clauses>\"");
    long long s = parse_ll(head[1], "variable count");
    long long t = parse_ll(head[2], "clause count");
    if (s <= 0 || t <= 0) fail("SyntaxError", "variable and clause counts must be positive");
    if (3 * t != 4 * s)
        fail("BadArity", "two positive and two negative occurrences per variable force 3t = 4s; got s=" +
                             std::to_string(s) + ", t=" + std::to_string(t));
    if (static_cast<long long>(rows.size()) - 1 != t)
        fail("SyntaxError", "expected " + std::to_string(t) + " clause lines, got " +
                                std::to_string(rows.size() - 1));

    Formula2P2N f;
    f.num_vars = static_cast<int>(s);
    std::vector<int> pos(f.num_vars, 0), neg(f.num_vars, 0);
    for (long long j = 1; j <= t; ++j) {
        const auto& row = rows[static_cast<size_t>(j)];
        if (row.size() != 3)
            fail("BadArity", "clause " + std::to_string(j) + " holds " + std::to_string(row.size()) +
                                 " literals, expected 3");
        std::array<int, 3> cl{};
        for (int p = 0; p < 3; ++p) {
            long long lit = parse_ll(row[static_cast<size_t>(p)], "literal");
            if (lit == 0 || lit > s || lit < -s)
                fail("VariableOutOfRange", "literal " + row[static_cast<size_t>(p)] + " in clause " +
                                               std::to_string(j) + " names no variable in [1," +
                                               std::to_string(s) + "]");
            cl[static_cast<size_t>(p)] = static_cast<int>(lit);
        }
        for (int p = 0; p < 3; ++p)
            for (int q = p + 1; q < 3; ++q)
                if (cl[static_cast<size_t>(p)] == cl[static_cast<size_t>(q)])
                    fail("DuplicateLiteralInClause", "clause " + std::to_string(j) +
                                                         " repeats literal " +
                                                         std::to_string(cl[static_cast<size_t>(p)]));
        for (int lit : cl) (lit > 0 ? pos[lit - 1] : neg[-lit - 1])++;
        f.clauses.push_back(cl);
    }
    for (int i = 0; i < f.num_vars; ++i)
        if (pos[i] != 2 || neg[i] != 2)
            fail("OccurrenceCountViolation", "variable " + std::to_string(i + 1) + " occurs " +
                                                 std::to_string(pos[i]) + " times positively and " +
                                                 std::to_string(neg[i]) +
                                                 " negatively; exactly 2 + 2 required");
    return f;
}

bool assignment_satisfies(const Formula2P2N& f, const std::vector<bool>& assignment) {
    if (static_cast<int>(assignment.size()) != f.num_vars)
        fail("BadAssignmentSize", "assignment covers " + std::to_string(assignment.size()) + " of " +
                                      std::to_string(f.num_vars) + " variables");
    for (const auto& cl : f.clauses) {
        bool sat = false;
        for (int lit : cl)
            if (lit > 0 ? assignment[static_cast<size_t>(lit - 1)]
                        : !assignment[static_cast<size_t>(-lit - 1)]) {
                sat = true;
                break;
            }
        if (!sat) return false;
    }
    return true;
}

std::optional<std::vector<bool>> find_satisfying_assignment(const Formula2P2N& f) {
    if (f.num_vars > 24)
        fail("SpaceTooLarge", "truth-table scan over 2^" + std::to_string(f.num_vars) +
                                  " assignments exceeds the desk-scale bound");
    std::vector<bool> a(static_cast<size_t>(f.num_vars));
    for (std::uint32_t mask = 0; mask < (1u << f.num_vars); ++mask) {
        for (int i = 0; i < f.num_vars; ++i) a[static_cast<size_t>(i)] = (mask >> i) & 1u;
        if (assignment_satisfies(f, a)) return a;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Partition gadgets
// ---------------------------------------------------------------------------

const char* to_string(GadgetKind k) {
    switch (k) {
        case GadgetKind::eq: return "eq";
        case GadgetKind::eq1: return "eq1";
        case GadgetKind::eqx: return "eqx";
        case GadgetKind::ef1_multi: return "ef1multi";
    }
    return "?";
}

std::optional<GadgetKind> gadget_kind_from_string(const std::string& s) {
    if (s == "eq") return GadgetKind::eq;
    if (s == "eq1") return GadgetKind::eq1;
    if (s == "eqx") return GadgetKind::eqx;
    if (s == "ef1multi" || s == "ef1-multi") return GadgetKind::ef1_multi;
    return std::nullopt;
}

namespace {

// Spenders 1..n plus collectors p,q; each i puts 1/2 on each of her two
// edges, p and q price edge (i,*) at x_i over the total. Everyone lands on
// 1/2 exactly when the collectors' bundles split the x_i evenly.
Gadget build_eq(const PartitionInput& in, bool chores) {
    int n = static_cast<int>(in.xs.size());
    int p = n + 1, q = n + 2;
    Rational total = Rational(in.sum());
    std::vector<ItemSpec> items;
    for (int i = 1; i <= n; ++i) {
        Rational price = Rational(in.xs[static_cast<size_t>(i - 1)]) / total;
        items.push_back(edge_item("(" + std::to_string(i) + ",p)", i, sgn(chores, Rational(1, 2)), p,
                                  sgn(chores, price)));
        items.push_back(edge_item("(" + std::to_string(i) + ",q)", i, sgn(chores, Rational(1, 2)), q,
                                  sgn(chores, price)));
    }
    Gadget g;
    g.instance = Instance::build(n + 2, std::move(items));
    g.notion = Notion::eq;
    g.chores = chores;
    g.agent_by_role = {{"p", p}, {"q", q}};
    return g;
}

Gadget build_eq1(const PartitionInput& in, bool chores) {
    int n = static_cast<int>(in.xs.size());
    int p = 2 * n + 1, pp = 2 * n + 2, q = 2 * n + 3, qp = 2 * n + 4;
    int w = 2 * n + 5, x = 2 * n + 6, y = 2 * n + 7, z = 2 * n + 8;
    Rational total4 = Rational(4) * Rational(in.sum());
    auto v = [&](Rational r) { return sgn(chores, std::move(r)); };

    std::vector<ItemSpec> items;
    for (int i = 1; i <= n; ++i)
        items.push_back(edge_item("(" + std::to_string(i) + "," + std::to_string(i) + "')", i,
                                  v(Rational(3, 4)), n + i, v(Rational(1))));
    items.push_back(edge_item("(p,p')", p, v(Rational(3, 4)), pp, v(Rational(1))));
    items.push_back(edge_item("(q,q')", q, v(Rational(3, 4)), qp, v(Rational(1))));
    for (int i = 1; i <= n; ++i) {
        Rational price = Rational(in.xs[static_cast<size_t>(i - 1)]) / total4;
        items.push_back(edge_item("(p," + std::to_string(i) + ")", p, v(price), i, v(Rational(1, 8))));
        items.push_back(edge_item("(q," + std::to_string(i) + ")", q, v(price), i, v(Rational(1, 8))));
    }
    items.push_back(edge_item("(w,z)", w, v(Rational(3, 4)), z, v(Rational(3, 4))));
    items.push_back(edge_item("(x,y)", x, v(Rational(3, 4)), y, v(Rational(3, 4))));
    items.push_back(edge_item("(w,x)", w, v(Rational(1, 8)), x, v(Rational(1, 8))));
    items.push_back(edge_item("(x,z)", x, v(Rational(1, 8)), z, v(Rational(1, 8))));
    items.push_back(edge_item("(z,y)", z, v(Rational(1, 8)), y, v(Rational(1, 8))));
    items.push_back(edge_item("(y,w)", y, v(Rational(1, 8)), w, v(Rational(1, 8))));
    items.push_back(edge_item("(z,p')", z, Rational(0), pp, Rational(0)));

    Gadget g;
    g.instance = Instance::build(2 * n + 8, std::move(items));
    g.notion = Notion::eq1;
    g.chores = chores;
    g.agent_by_role = {{"p", p}, {"p'", pp}, {"q", q}, {"q'", qp},
                       {"w", w}, {"x", x},   {"y", y}, {"z", z}};
    for (int i = 1; i <= n; ++i) g.agent_by_role[std::to_string(i) + "'"] = n + i;
    return g;
}

Gadget build_eqx(const PartitionInput& in, bool chores) {
    int n = static_cast<int>(in.xs.size());
    int p = n + 1, q = n + 2;
    // Dummy pair of vertex j in [n]: n+1+2j / n+2+2j; the pairs of p and q
    // follow at 3n+3..3n+6. Total 3n+6 vertices.
    auto kv = [&](int j) { return n + 1 + 2 * j; };
    int kp = 3 * n + 3, kpp = 3 * n + 4, kq = 3 * n + 5, kqp = 3 * n + 6;
    // Small enough for every strict inequality the construction leans on
    // (anything below 1/(2(T+1)) works); exact so the checkers can decide it.
    Rational eps = Rational(1, 4 * in.sum() * n);
    Rational total = Rational(in.sum());
    auto v = [&](Rational r) { return sgn(chores, std::move(r)); };

    std::vector<ItemSpec> items;
    auto dummy_pair = [&](const std::string& name, int j, int k, int k2) {
        items.push_back(edge_item("(" + name + ",k_" + name + ")", j, v(eps), k,
                                  v(Rational(1, 2) - eps)));
        items.push_back(edge_item("(" + name + ",k_" + name + "')", j, v(eps), k2,
                                  v(Rational(1, 2) - eps)));
        items.push_back(edge_item("(k_" + name + ",k_" + name + "')", k, v(Rational(1, 2) + eps), k2,
                                  v(Rational(1, 2) + eps)));
    };
    for (int j = 1; j <= n; ++j) dummy_pair(std::to_string(j), j, kv(j), kv(j) + 1);
    dummy_pair("p", p, kp, kpp);
    dummy_pair("q", q, kq, kqp);
    for (int i = 1; i <= n; ++i) {
        Rational price = Rational(in.xs[static_cast<size_t>(i - 1)]) / total * (Rational(1) - 2 * eps);
        items.push_back(
            edge_item("(p," + std::to_string(i) + ")", p, v(price), i, v(Rational(1, 2) - eps)));
        items.push_back(
            edge_item("(q," + std::to_string(i) + ")", q, v(price), i, v(Rational(1, 2) - eps)));
    }

    Gadget g;
    g.instance = Instance::build(3 * n + 6, std::move(items));
    g.notion = Notion::eqx;
    g.chores = chores;
    g.agent_by_role = {{"p", p}, {"q", q}, {"k_p", kp}, {"k_p'", kpp}, {"k_q", kq}, {"k_q'", kqp}};
    for (int j = 1; j <= n; ++j) {
        g.agent_by_role["k_" + std::to_string(j)] = kv(j);
        g.agent_by_role["k_" + std::to_string(j) + "'"] = kv(j) + 1;
    }
    return g;
}

Gadget build_ef1_multi(const PartitionInput& in) {
    int n = static_cast<int>(in.xs.size());
    Rational heavy = Rational(-(in.sum() + 1));  // -(2T+1)
    std::vector<ItemSpec> items;
    for (int i = 1; i <= n; ++i) {
        Rational val = Rational(-in.xs[static_cast<size_t>(i - 1)]);
        items.push_back(edge_item("e_" + std::to_string(i), 1, val, 2, val));
    }
    items.push_back(edge_item("e_" + std::to_string(n + 1), 1, heavy, 3, heavy));
    items.push_back(edge_item("e_" + std::to_string(n + 2), 1, heavy, 3, heavy));
    items.push_back(edge_item("e_" + std::to_string(n + 3), 2, heavy, 3, heavy));
    items.push_back(edge_item("e_" + std::to_string(n + 4), 2, heavy, 3, heavy));

    Gadget g;
    g.instance = Instance::build(3, std::move(items));
    g.notion = Notion::ef1;
    g.chores = true;
    g.agent_by_role = {{"1", 1}, {"2", 2}, {"3", 3}};
    return g;
}

}  // namespace

Gadget gadget_partition(const PartitionInput& in, GadgetKind kind, bool chores) {
    validate_partition(in);
    switch (kind) {
        case GadgetKind::eq: return build_eq(in, chores);
        case GadgetKind::eq1: return build_eq1(in, chores);
        case GadgetKind::eqx: return build_eqx(in, chores);
        case GadgetKind::ef1_multi:
            if (!chores)
                fail("UnsupportedCombination", "the ef1multi gadget exists only for chores");
            return build_ef1_multi(in);
    }
    fail("UnsupportedCombination", "unknown gadget kind");
}

// ---------------------------------------------------------------------------
// Clause-gadget wirings
// ---------------------------------------------------------------------------

namespace {

int dummy_count(Notion n) {
    if (n == Notion::prop) return 11;
    if (n == Notion::propx) return 6;
    fail("UnsupportedCombination", "clause gadgets exist for prop and propx only");
}

int role_agent(const std::string& role, int K) {
    if (role == "c") return 1;
    if (role.size() >= 2 && role[0] == 'd') {
        long long r = 0;
        auto [ptr, ec] = std::from_chars(role.data() + 1, role.data() + role.size(), r);
        if (ec == std::errc() && ptr == role.data() + role.size() && r >= 1 && r <= K)
            return static_cast<int>(r) + 1;
    }
    fail("BadWiringRole", "role \"" + role + "\" is not c or d1..d" + std::to_string(K));
}

using Spec = DummyWiring::EdgeSpec;

// The sum-4 splits of a degree-3 dummy over values {1,2}, in search order.
constexpr std::array<std::array<int, 3>, 3> kTriples = {{{1, 1, 2}, {1, 2, 1}, {2, 1, 1}}};

// Candidate space for the 11-dummy gadget: the anchor and cycle edges are
// pinned by the per-agent total of 4, leaving d1's split across the triangle
// and one sum-4 triple each at d2, d3, d4, d8 (2 * 3^4 = 162 candidates).
DummyWiring prop_candidate(int idx) {
    int a12 = 1 + idx / 81;
    const auto& t2 = kTriples[static_cast<size_t>((idx / 27) % 3)];
    const auto& t3 = kTriples[static_cast<size_t>((idx / 9) % 3)];
    const auto& t4 = kTriples[static_cast<size_t>((idx / 3) % 3)];
    const auto& t8 = kTriples[static_cast<size_t>(idx % 3)];
    auto R = [](int v) { return Rational(v); };
    DummyWiring w;
    w.edges = {
        Spec{"c", "d1", R(1), R(1)},
        Spec{"d1", "d2", R(a12), R(t2[0])},
        Spec{"d2", "d3", R(t2[1]), R(t3[0])},
        Spec{"d1", "d3", R(3 - a12), R(t3[1])},
        Spec{"d2", "d4", R(t2[2]), R(t4[0])},
        Spec{"d3", "d8", R(t3[2]), R(t8[0])},
        Spec{"d4", "d5", R(t4[1]), R(2)},
        Spec{"d5", "d6", R(2), R(2)},
        Spec{"d6", "d7", R(2), R(2)},
        Spec{"d7", "d4", R(2), R(t4[2])},
        Spec{"d8", "d9", R(t8[1]), R(2)},
        Spec{"d9", "d10", R(2), R(2)},
        Spec{"d10", "d11", R(2), R(2)},
        Spec{"d11", "d8", R(2), R(t8[2])},
    };
    return w;
}

// Candidate space for the 6-dummy gadget: anchors and d1's zero triangle
// sides are pinned, the remaining endpoint values range over {0,1} (11 bits,
// least significant first).
DummyWiring propx_candidate(unsigned bits) {
    auto b = [&](int i) { return Rational((bits >> i) & 1u); };
    DummyWiring w;
    w.edges = {
        Spec{"c", "d1", Rational(0), Rational(1)},
        Spec{"c", "d4", Rational(1), b(0)},
        Spec{"d1", "d2", Rational(0), b(1)},
        Spec{"d2", "d3", b(2), b(3)},
        Spec{"d1", "d3", Rational(0), b(4)},
        Spec{"d4", "d5", b(5), b(6)},
        Spec{"d5", "d6", b(7), b(8)},
        Spec{"d4", "d6", b(9), b(10)},
    };
    return w;
}

// --- fast fragment evaluation -----------------------------------------------
//
// The forcing scans visit thousands of orientations per candidate wiring, so
// the fragment is flattened into plain arrays; every edge has two relevant
// agents, letting shares reduce to "twice the bundle vs. the incident total".

template <class T>
struct Frag {
    struct Slot {
        int item;
        char my_side;  // 0 = lower endpoint holds, 1 = higher
        T val;
    };
    int agents = 0;
    int items = 0;
    std::vector<std::vector<Slot>> slots;  // per agent (0-based)
    std::vector<T> total;
    bool any_pos = false, any_neg = false;

    bool agent_ok(int i, const std::vector<char>& side, Notion n) const {
        T v{};
        for (const Slot& s : slots[static_cast<size_t>(i)])
            if (side[static_cast<size_t>(s.item)] == s.my_side) v += s.val;
        const T& tot = total[static_cast<size_t>(i)];
        if (2 * v >= tot) return true;
        if (n == Notion::prop) return false;
        bool goods = !any_neg, chores = any_neg && !any_pos;
        for (const Slot& s : slots[static_cast<size_t>(i)]) {
            if (side[static_cast<size_t>(s.item)] == s.my_side) {
                if (goods) continue;
                if (!chores && s.val > T{}) continue;
                if (2 * (v - s.val) < tot) return false;
            } else {
                if (chores) continue;
                if (!goods && s.val < T{}) continue;
                if (2 * (v + s.val) < tot) return false;
            }
        }
        return true;
    }
};

template <class T, class Conv>
Frag<T> frag_from(const Instance& inst, Conv conv) {
    Frag<T> f;
    f.agents = inst.num_agents();
    f.items = inst.num_items();
    f.slots.resize(static_cast<size_t>(f.agents));
    f.total.assign(static_cast<size_t>(f.agents), T{});
    for (int k = 0; k < inst.num_items(); ++k) {
        const ItemSpec& it = inst.item(k);
        if (it.degree() != 2)
            fail("UnsupportedCombination", "clause fragments must consist of edges; item \"" +
                                               it.id + "\" has degree " + std::to_string(it.degree()));
        for (int s = 0; s < 2; ++s) {
            T v = conv(it.values[static_cast<size_t>(s)]);
            if (v > T{}) f.any_pos = true;
            if (v < T{}) f.any_neg = true;
            int a = it.relevant[static_cast<size_t>(s)] - 1;
            f.total[static_cast<size_t>(a)] += v;
            f.slots[static_cast<size_t>(a)].push_back({k, static_cast<char>(s), std::move(v)});
        }
    }
    return f;
}

bool integral_instance(const Instance& inst) {
    for (const ItemSpec& it : inst.items())
        for (const Rational& v : it.values)
            if (denominator(v) != 1 || abs(numerator(v)) > (BigInt(1) << 40)) return false;
    return true;
}

// Where each anchor sits in the constructive direction (and, for the (c,d1)
// anchor under propx, in every valid orientation). Side is relative to the
// sorted endpoint pair; c is agent 1, so side 0 is always the clause vertex.
char intended_anchor_side(Notion n, bool chores, bool other_is_d1) {
    if (n == Notion::prop) return chores ? 1 : 0;
    if (other_is_d1) return chores ? 0 : 1;
    return chores ? 1 : 0;
}

struct FragScanInput {
    Notion notion;
    bool chores;
    std::vector<int> anchors;       // item indexes incident to the clause vertex
    std::vector<char> anchor_side;  // intended holder per anchor
    std::vector<int> free_items;
    int cd1 = -1;                   // the (c,d1) anchor, if identified
};

FragScanInput classify_fragment(const Instance& inst, Notion n, bool chores) {
    FragScanInput in;
    in.notion = n;
    in.chores = chores;
    for (int k = 0; k < inst.num_items(); ++k) {
        const ItemSpec& it = inst.item(k);
        if (it.relevant[0] == 1) {
            bool is_d1 = it.relevant[1] == 2;
            in.anchors.push_back(k);
            in.anchor_side.push_back(intended_anchor_side(n, chores, is_d1));
            if (is_d1 && in.cd1 < 0) in.cd1 = k;
        } else {
            in.free_items.push_back(k);
        }
    }
    return in;
}

// Exhaustive completion of the non-anchor edges such that every dummy meets
// the notion; returns the full side vector (anchors at their pinned side).
template <class T>
std::optional<std::vector<char>> find_completion(const Frag<T>& f, const FragScanInput& sc) {
    std::vector<char> side(static_cast<size_t>(f.items), 0);
    for (size_t a = 0; a < sc.anchors.size(); ++a)
        side[static_cast<size_t>(sc.anchors[a])] = sc.anchor_side[a];
    std::uint64_t combos = 1ull << sc.free_items.size();
    for (std::uint64_t mask = 0;; ++mask) {
        for (size_t b = 0; b < sc.free_items.size(); ++b)
            side[static_cast<size_t>(sc.free_items[b])] = static_cast<char>((mask >> b) & 1u);
        bool ok = true;
        for (int i = 1; i < f.agents && ok; ++i) ok = f.agent_ok(i, side, sc.notion);
        if (ok) return side;
        if (mask + 1 == combos) break;
    }
    return std::nullopt;
}

template <class T>
CheckReport verify_forcing(const Instance& frag, const Frag<T>& f, const FragScanInput& sc) {
    CheckReport rep;
    auto violate = [&](const std::string& item, Rational lhs, Rational rhs, std::string detail) {
        Violation v;
        v.notion = to_string(sc.notion);
        v.agent = 1;
        v.item_id = item;
        v.lhs = std::move(lhs);
        v.rhs = std::move(rhs);
        v.detail = std::move(detail);
        rep.holds = false;
        rep.violations.push_back(std::move(v));
    };

    // Condition (a): under the intended anchor placement the clause vertex
    // reaches her proportional share outright (one incoming literal edge for
    // goods, two for chores), and the dummies admit a satisfying completion.
    Rational c_pinned = 0, c_total = 0;
    for (size_t a = 0; a < sc.anchors.size(); ++a) {
        const ItemSpec& it = frag.item(sc.anchors[a]);
        c_total += it.values[0];
        if (sc.anchor_side[a] == 0) c_pinned += it.values[0];
    }
    Rational lit = sc.chores ? Rational(-1) : Rational(1);
    Rational c_value = c_pinned + (sc.chores ? 2 * lit : lit);
    Rational c_share = (c_total + 3 * lit) / 2;
    if (c_value < c_share) {
        violate("", c_value, c_share,
                "condition (a): the clause vertex cannot reach her proportional share under the "
                "intended allocation");
    } else if (!find_completion(f, sc)) {
        violate("", Rational(0), Rational(0),
                "condition (a): no orientation of the dummy-internal edges satisfies every dummy "
                "with the anchors placed as constructed");
    }

    // Condition (b), propx only: every orientation that satisfies all dummies
    // leaves the (c,d1) anchor with its forced holder.
    if (sc.notion == Notion::propx) {
        if (sc.cd1 < 0) {
            violate("", Rational(0), Rational(0),
                    "condition (b): no (c,d1) anchor present to force");
        } else {
            char forced = intended_anchor_side(Notion::propx, sc.chores, true);
            std::vector<char> side(static_cast<size_t>(f.items), 0);
            std::uint64_t combos = 1ull << f.items;
            for (std::uint64_t mask = 0;; ++mask) {
                for (int b = 0; b < f.items; ++b)
                    side[static_cast<size_t>(b)] = static_cast<char>((mask >> b) & 1u);
                if (side[static_cast<size_t>(sc.cd1)] != forced) {
                    bool ok = true;
                    for (int i = 1; i < f.agents && ok; ++i) ok = f.agent_ok(i, side, sc.notion);
                    if (ok) {
                        std::string owners;
                        for (int k = 0; k < f.items; ++k) {
                            if (k) owners += ',';
                            const ItemSpec& it = frag.item(k);
                            owners += std::to_string(it.relevant[side[static_cast<size_t>(k)]]);
                        }
                        violate(frag.item(sc.cd1).id, Rational(0), Rational(0),
                                "condition (b): all dummies tolerate the anchor leaving its forced "
                                "holder; witness owners by item: " + owners);
                        break;
                    }
                }
                if (mask + 1 == combos) break;
            }
        }
    }
    return rep;
}

}  // namespace

const DummyWiring& default_wiring(Notion n) {
    if (n == Notion::prop) {
        static const DummyWiring w = search_wiring(Notion::prop);
        return w;
    }
    if (n == Notion::propx) {
        static const DummyWiring w = search_wiring(Notion::propx);
        return w;
    }
    fail("UnsupportedCombination", "clause gadgets exist for prop and propx only");
}

DummyWiring search_wiring(Notion n) {
    int count = n == Notion::prop ? 162 : 2048;
    dummy_count(n);  // rejects other notions
    for (int idx = 0; idx < count; ++idx) {
        DummyWiring w = n == Notion::prop ? prop_candidate(idx)
                                          : propx_candidate(static_cast<unsigned>(idx));
        if (!verify_forcing_property(build_clause_fragment(n, false, w), n, false).holds) continue;
        if (!verify_forcing_property(build_clause_fragment(n, true, w), n, true).holds) continue;
        return w;
    }
    fail("ForcingPropertyUnverified", "no candidate dummy wiring passes both forcing conditions");
}

Instance build_clause_fragment(Notion n, bool chores, const DummyWiring& wiring) {
    int K = dummy_count(n);
    std::vector<ItemSpec> items;
    for (const Spec& e : wiring.edges) {
        int a = role_agent(e.a, K), b = role_agent(e.b, K);
        items.push_back(edge_item("(" + e.a + "," + e.b + ")", a, sgn(chores, e.va), b,
                                  sgn(chores, e.vb)));
    }
    return Instance::build(K + 1, std::move(items));
}

CheckReport verify_forcing_property(const Instance& fragment, Notion n, bool chores) {
    dummy_count(n);  // rejects other notions
    if (fragment.num_items() > 20)
        fail("SpaceTooLarge", "fragment with " + std::to_string(fragment.num_items()) +
                                  " items exceeds the exhaustive-search bound of 20");
    FragScanInput sc = classify_fragment(fragment, n, chores);
    if (integral_instance(fragment)) {
        auto f = frag_from<long long>(fragment, [](const Rational& v) {
            return static_cast<long long>(numerator(v));
        });
        return verify_forcing(fragment, f, sc);
    }
    auto f = frag_from<Rational>(fragment, [](const Rational& v) { return v; });
    return verify_forcing(fragment, f, sc);
}

// ---------------------------------------------------------------------------
// 3SAT gadgets
// ---------------------------------------------------------------------------

namespace {

std::string var_name(int i, bool negated) {
    return (negated ? "~x_" : "x_") + std::to_string(i);
}
std::string clause_name(int j) { return "c_" + std::to_string(j); }
std::string dummy_name(int j, int r) {
    return "d_" + std::to_string(j) + "^" + std::to_string(r);
}

struct SatLayout {
    int s = 0, t = 0, K = 0;
    int var_agent(int i, bool negated) const { return 2 * i - 1 + (negated ? 1 : 0); }
    int clause_agent(int j) const { return 2 * s + (j - 1) * (K + 1) + 1; }
    int dummy_agent(int j, int r) const { return clause_agent(j) + r; }
    int num_agents() const { return 2 * s + t * (K + 1); }
    int block_size(int wiring_edges) const { return wiring_edges; }
};

void check_wiring_shape(const DummyWiring& w, Notion n) {
    int K = dummy_count(n);
    size_t expected_edges = n == Notion::prop ? 14 : 8;
    if (w.edges.size() != expected_edges)
        fail("WiringCountMismatch", "wiring has " + std::to_string(w.edges.size()) +
                                        " edges, expected " + std::to_string(expected_edges));
    std::vector<char> seen(static_cast<size_t>(K + 2), 0);
    for (const Spec& e : w.edges) {
        seen[static_cast<size_t>(role_agent(e.a, K))] = 1;
        seen[static_cast<size_t>(role_agent(e.b, K))] = 1;
    }
    int dummies = 0;
    for (int r = 2; r <= K + 1; ++r) dummies += seen[static_cast<size_t>(r)];
    if (dummies != K)
        fail("WiringCountMismatch", "wiring names " + std::to_string(dummies) + " of " +
                                        std::to_string(K) + " dummies");

    // Anchor values carry the clause vertex's budget; they are fixed by the
    // construction, not part of the searched space.
    std::vector<std::pair<int, const Spec*>> anchors;  // (dummy agent, edge)
    for (const Spec& e : w.edges) {
        int a = role_agent(e.a, K), b = role_agent(e.b, K);
        if (a == 1) anchors.push_back({b, &e});
        else if (b == 1) anchors.push_back({a, &e});
    }
    auto cval = [&](const Spec& e) { return role_agent(e.a, K) == 1 ? e.va : e.vb; };
    auto dval = [&](const Spec& e) { return role_agent(e.a, K) == 1 ? e.vb : e.va; };
    if (n == Notion::prop) {
        if (anchors.size() != 1 || anchors[0].first != 2)
            fail("WiringCountMismatch", "the 11-dummy gadget anchors c to d1 exactly once");
        if (cval(*anchors[0].second) != 1 || dval(*anchors[0].second) != 1)
            fail("AnchorValueMismatch", "the (c,d1) anchor must be worth 1 to both endpoints");
    } else {
        if (anchors.size() != 2)
            fail("WiringCountMismatch", "the 6-dummy gadget anchors c to d1 and d4");
        if (anchors[0].first > anchors[1].first) std::swap(anchors[0], anchors[1]);
        if (anchors[0].first != 2 || anchors[1].first != 5)
            fail("WiringCountMismatch", "the 6-dummy gadget anchors c to d1 and d4");
        if (cval(*anchors[0].second) != 0 || dval(*anchors[0].second) != 1)
            fail("AnchorValueMismatch", "the (c,d1) anchor must be worth 0 to c and 1 to d1");
        if (cval(*anchors[1].second) != 1)
            fail("AnchorValueMismatch", "the (c,d4) anchor must be worth 1 to c");
    }
}

}  // namespace

Gadget gadget_3sat(const Formula2P2N& f, Notion n, bool chores, const DummyWiring* wiring) {
    const int K = dummy_count(n);
    const DummyWiring& w = wiring ? *wiring : default_wiring(n);
    check_wiring_shape(w, n);
    if (!verify_forcing_property(build_clause_fragment(n, chores, w), n, chores).holds)
        fail("ForcingPropertyUnverified",
             "the supplied wiring fails the clause-gadget forcing checks");

    SatLayout lay{f.num_vars, static_cast<int>(f.clauses.size()), K};
    Rational var_val = sgn(chores, Rational(n == Notion::prop ? 2 : 1));
    std::vector<ItemSpec> items;

    for (int i = 1; i <= lay.s; ++i)
        items.push_back(edge_item("(" + var_name(i, false) + "," + var_name(i, true) + ")",
                                  lay.var_agent(i, false), var_val, lay.var_agent(i, true), var_val));

    auto block_role = [&](const std::string& role, int j) {
        int a = role_agent(role, K);
        return a == 1 ? lay.clause_agent(j) : lay.dummy_agent(j, a - 1);
    };
    auto block_role_name = [&](const std::string& role, int j) {
        int a = role_agent(role, K);
        return a == 1 ? clause_name(j) : dummy_name(j, a - 1);
    };
    for (int j = 1; j <= lay.t; ++j)
        for (const Spec& e : w.edges)
            items.push_back(edge_item(
                "(" + block_role_name(e.a, j) + "," + block_role_name(e.b, j) + ")",
                block_role(e.a, j), sgn(chores, e.va), block_role(e.b, j), sgn(chores, e.vb)));

    for (int j = 1; j <= lay.t; ++j)
        for (int lit : f.clauses[static_cast<size_t>(j - 1)]) {
            int i = lit > 0 ? lit : -lit;
            // The clause vertex prices every literal edge at 1; the variable
            // vertex matches it in the 11-dummy gadget but stays at 0 in the
            // 6-dummy gadget, whose variable vertices only value their own
            // pair edge.
            Rational vv = sgn(chores, Rational(n == Notion::prop ? 1 : 0));
            items.push_back(edge_item("(" + clause_name(j) + "," + var_name(i, lit < 0) + ")",
                                      lay.clause_agent(j), sgn(chores, Rational(1)),
                                      lay.var_agent(i, lit < 0), vv));
        }

    Gadget g;
    g.instance = Instance::build(lay.num_agents(), std::move(items));
    g.notion = n;
    g.chores = chores;
    for (int i = 1; i <= lay.s; ++i) {
        g.agent_by_role[var_name(i, false)] = lay.var_agent(i, false);
        g.agent_by_role[var_name(i, true)] = lay.var_agent(i, true);
    }
    for (int j = 1; j <= lay.t; ++j) {
        g.agent_by_role[clause_name(j)] = lay.clause_agent(j);
        for (int r = 1; r <= K; ++r) g.agent_by_role[dummy_name(j, r)] = lay.dummy_agent(j, r);
    }
    assert(g.instance.num_agents() == 2 * lay.s + (K + 1) * lay.t);
    assert(g.instance.num_items() ==
           lay.s + static_cast<int>(w.edges.size() + 3) * lay.t);
    return g;
}

Orientation witness_orientation_from_assignment(const Gadget& g, const Formula2P2N& f,
                                                const std::vector<bool>& assignment) {
    if (static_cast<int>(assignment.size()) != f.num_vars)
        fail("BadAssignmentSize", "assignment covers " + std::to_string(assignment.size()) +
                                      " of " + std::to_string(f.num_vars) + " variables");
    if (!assignment_satisfies(f, assignment))
        fail("AssignmentDoesNotSatisfy", "the witness construction needs a satisfying assignment");
    const int K = dummy_count(g.notion);
    SatLayout lay{f.num_vars, static_cast<int>(f.clauses.size()), K};
    const Instance& inst = g.instance;
    int expected_items = lay.s + (g.notion == Notion::prop ? 17 : 11) * lay.t;
    if (inst.num_agents() != lay.num_agents() || inst.num_items() != expected_items)
        fail("GadgetFormulaMismatch", "gadget shape does not match the formula");
    const int B = g.notion == Notion::prop ? 14 : 8;

    std::vector<int> owner(static_cast<size_t>(inst.num_items()), 0);

    for (int i = 1; i <= lay.s; ++i) {
        int k = inst.item_index("(" + var_name(i, false) + "," + var_name(i, true) + ")");
        if (k < 0) fail("GadgetFormulaMismatch", "missing variable edge for x_" + std::to_string(i));
        bool truth = assignment[static_cast<size_t>(i - 1)];
        // Goods: the true side keeps the pair edge; chores: the false side
        // carries it.
        bool to_positive = g.chores ? !truth : truth;
        owner[static_cast<size_t>(k)] = lay.var_agent(i, !to_positive);
    }

    for (int j = 1; j <= lay.t; ++j)
        for (int lit : f.clauses[static_cast<size_t>(j - 1)]) {
            int i = lit > 0 ? lit : -lit;
            int k = inst.item_index("(" + clause_name(j) + "," + var_name(i, lit < 0) + ")");
            if (k < 0) fail("GadgetFormulaMismatch", "missing literal edge in clause " +
                                                         std::to_string(j));
            bool lit_true = lit > 0 ? assignment[static_cast<size_t>(i - 1)]
                                    : !assignment[static_cast<size_t>(i - 1)];
            // Goods: true literals hand their edge to the clause; chores:
            // false literals do.
            bool to_clause = g.chores ? !lit_true : lit_true;
            owner[static_cast<size_t>(k)] =
                to_clause ? lay.clause_agent(j) : lay.var_agent(i, lit < 0);
        }

    for (int j = 1; j <= lay.t; ++j) {
        int base = lay.s + (j - 1) * B;
        std::vector<ItemSpec> block;
        for (int e = 0; e < B; ++e) {
            ItemSpec it = inst.item(base + e);
            // Renumber the block onto agents 1..K+1 so the fragment machinery
            // applies unchanged; the clause vertex has the lowest id.
            for (int s = 0; s < 2; ++s)
                it.relevant[static_cast<size_t>(s)] -= lay.clause_agent(j) - 1;
            block.push_back(std::move(it));
        }
        Instance frag = Instance::build(K + 1, block);
        FragScanInput sc = classify_fragment(frag, g.notion, g.chores);
        std::optional<std::vector<char>> side;
        if (integral_instance(frag)) {
            auto fr = frag_from<long long>(frag, [](const Rational& v) {
                return static_cast<long long>(numerator(v));
            });
            side = find_completion(fr, sc);
        } else {
            auto fr = frag_from<Rational>(frag, [](const Rational& v) { return v; });
            side = find_completion(fr, sc);
        }
        if (!side)
            fail("ForcingPropertyUnverified", "clause " + std::to_string(j) +
                                                  " admits no dummy completion");
        for (int e = 0; e < B; ++e) {
            const ItemSpec& it = inst.item(base + e);
            owner[static_cast<size_t>(base + e)] =
                it.relevant[static_cast<size_t>((*side)[static_cast<size_t>(e)])];
        }
    }

    return make_orientation(inst, owner);
}

// ---------------------------------------------------------------------------
// Desk-scale reduction verification
// ---------------------------------------------------------------------------

ReductionReport verify_reduction_small(GadgetKind kind, const PartitionInput& in, bool chores,
                                       std::uint64_t budget) {
    Gadget g = gadget_partition(in, kind, chores);
    ExhaustiveOracle oracle(g.instance);
    ReductionReport rep;
    rep.kind = kind;
    rep.chores = chores;
    rep.gadget_satisfiable = oracle.exists(g.notion, budget);
    rep.partition_yes = partition_solvable(in);
    rep.agree = rep.gadget_satisfiable == rep.partition_yes;
    rep.orientations_searched = oracle.space();
    return rep;
}

}  // namespace fairorient
