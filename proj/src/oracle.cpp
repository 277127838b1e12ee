#include "fairorient/oracle.hpp"

#include "fairorient/fpo.hpp"

#include <algorithm>
#include <numeric>

namespace fairorient {

BigInt orientation_space_size(const Instance& inst) {
    BigInt s = 1;
    for (const ItemSpec& it : inst.items()) s *= it.degree();
    return s;
}

namespace {

void ensure_budget(const Instance& inst, std::uint64_t budget) {
    BigInt s = orientation_space_size(inst);
    if (s > budget)
        fail("SpaceTooLarge", "orientation space holds " + s.str() + " candidates, budget " +
                                  std::to_string(budget));
}

// Odometer over owner slots, last item fastest; per(d) returns false to stop.
template <class F>
void iterate_digits(const Instance& inst, F&& per) {
    int m = inst.num_items();
    std::vector<int> d(m, 0);
    for (;;) {
        if (!per(d)) return;
        int k = m - 1;
        while (k >= 0) {
            if (++d[k] < inst.item(k).degree()) break;
            d[k] = 0;
            --k;
        }
        if (k < 0) return;
    }
}

Orientation digits_to_orientation(const Instance& inst, const std::vector<int>& d) {
    std::vector<int> owner(inst.num_items());
    for (int k = 0; k < inst.num_items(); ++k) owner[k] = inst.item(k).relevant[d[k]];
    return Orientation{std::move(owner)};
}

std::vector<int> orientation_to_digits(const Instance& inst, const Orientation& pi) {
    std::vector<int> d(inst.num_items());
    for (int k = 0; k < inst.num_items(); ++k) {
        d[k] = inst.item(k).slot_of(pi.owner[k]);
        if (d[k] < 0)
            fail("InfeasibleOwner", "item " + inst.item(k).id + " assigned to agent " +
                                        std::to_string(pi.owner[k]) +
                                        ", which is not relevant to it");
    }
    return d;
}

// Per-instance tables for one arithmetic type, plus scratch reused across the
// millions of predicate calls an exhaustive scan makes.
template <class T>
struct Ctx {
    int n = 0, m = 0;
    std::vector<std::vector<int>> rel;   // item -> 0-based agents
    std::vector<std::vector<T>> val;     // item -> slot values
    std::vector<T> share;                // proportional share per agent
    std::vector<T> sprop_rhs;            // (relevant total - best item) per agent
    bool goods_only = true;
    bool chores_only = true;
    std::vector<std::vector<std::pair<int, int>>> of_agent;  // agent -> (item, slot)

    mutable std::vector<T> v, stat_a, stat_b, cross, rm_best;
    mutable std::vector<char> flag_a, flag_b, rm_has;
    mutable std::vector<int> own_cnt, rel_cnt;

    void init_scratch() {
        v.resize(n);
        stat_a.resize(n);
        stat_b.resize(n);
        flag_a.resize(n);
        flag_b.resize(n);
        cross.resize(static_cast<size_t>(n) * n);
        rm_best.resize(static_cast<size_t>(n) * n);
        rm_has.resize(static_cast<size_t>(n) * n);
        own_cnt.resize(n);
        rel_cnt.resize(static_cast<size_t>(n) * n);
    }
};

template <class T>
void fill_values(const Ctx<T>& c, const std::vector<int>& d) {
    std::fill(c.v.begin(), c.v.end(), T(0));
    for (int k = 0; k < c.m; ++k) c.v[c.rel[k][d[k]]] += c.val[k][d[k]];
}

template <class T>
bool sat_prop(const Ctx<T>& c, const std::vector<int>& d) {
    fill_values(c, d);
    for (int i = 0; i < c.n; ++i)
        if (c.v[i] < c.share[i]) return false;
    return true;
}

template <class T>
bool sat_prop1(const Ctx<T>& c, const std::vector<int>& d) {
    fill_values(c, d);
    for (int i = 0; i < c.n; ++i) {
        if (c.v[i] >= c.share[i]) continue;
        bool ok = false;
        for (auto [k, s] : c.of_agent[i]) {
            T w = (d[k] == s) ? T(c.v[i] - c.val[k][s]) : T(c.v[i] + c.val[k][s]);
            if (w >= c.share[i]) {
                ok = true;
                break;
            }
        }
        if (!ok) return false;
    }
    return true;
}

// Pure-goods instances constrain only hypothetical additions, pure-chores
// instances only hypothetical removals, with zero-valued items counting on
// the active side; mixed instances constrain both sides by matching sign.
template <class T>
bool sat_propx(const Ctx<T>& c, const std::vector<int>& d) {
    fill_values(c, d);
    for (int i = 0; i < c.n; ++i) {
        if (c.v[i] >= c.share[i]) continue;
        for (auto [k, s] : c.of_agent[i]) {
            if (d[k] == s) {
                if (c.goods_only) continue;
                if (!c.chores_only && c.val[k][s] > T(0)) continue;
                if (c.v[i] - c.val[k][s] < c.share[i]) return false;
            } else {
                if (c.chores_only) continue;
                if (!c.goods_only && c.val[k][s] < T(0)) continue;
                if (c.v[i] + c.val[k][s] < c.share[i]) return false;
            }
        }
    }
    return true;
}

template <class T>
bool sat_sprop1(const Ctx<T>& c, const std::vector<int>& d) {
    fill_values(c, d);
    for (int i = 0; i < c.n; ++i)
        if (c.v[i] + c.v[i] < c.sprop_rhs[i]) return false;
    return true;
}

template <class T>
bool sat_eq(const Ctx<T>& c, const std::vector<int>& d) {
    fill_values(c, d);
    for (int i = 1; i < c.n; ++i)
        if (c.v[i] != c.v[0]) return false;
    return true;
}

// Own-bundle extremes: stat_a = max owned value, stat_b = min owned value,
// flag_a = owns anything.
template <class T>
void own_extremes(const Ctx<T>& c, const std::vector<int>& d) {
    std::fill(c.flag_a.begin(), c.flag_a.end(), 0);
    for (int k = 0; k < c.m; ++k) {
        int i = c.rel[k][d[k]];
        const T& x = c.val[k][d[k]];
        if (!c.flag_a[i]) {
            c.flag_a[i] = 1;
            c.stat_a[i] = x;
            c.stat_b[i] = x;
        } else {
            if (x > c.stat_a[i]) c.stat_a[i] = x;
            if (x < c.stat_b[i]) c.stat_b[i] = x;
        }
    }
}

template <class T>
bool sat_eq1(const Ctx<T>& c, const std::vector<int>& d) {
    fill_values(c, d);
    own_extremes(c, d);
    for (int i = 0; i < c.n; ++i)
        for (int j = 0; j < c.n; ++j) {
            if (i == j || c.v[i] == c.v[j]) continue;
            if (c.flag_a[j] && c.v[i] >= c.v[j] - c.stat_a[j]) continue;
            if (c.flag_a[i] && c.v[i] - c.stat_b[i] >= c.v[j]) continue;
            return false;
        }
    return true;
}

template <class T>
bool sat_eqx(const Ctx<T>& c, const std::vector<int>& d) {
    fill_values(c, d);
    // stat_a/flag_a: smallest strictly positive owned value;
    // stat_b/flag_b: largest strictly negative owned value.
    std::fill(c.flag_a.begin(), c.flag_a.end(), 0);
    std::fill(c.flag_b.begin(), c.flag_b.end(), 0);
    for (int k = 0; k < c.m; ++k) {
        int i = c.rel[k][d[k]];
        const T& x = c.val[k][d[k]];
        if (x > T(0)) {
            if (!c.flag_a[i] || x < c.stat_a[i]) c.stat_a[i] = x;
            c.flag_a[i] = 1;
        } else if (x < T(0)) {
            if (!c.flag_b[i] || x > c.stat_b[i]) c.stat_b[i] = x;
            c.flag_b[i] = 1;
        }
    }
    for (int i = 0; i < c.n; ++i)
        for (int j = 0; j < c.n; ++j) {
            if (i == j || c.v[i] == c.v[j]) continue;
            if (c.flag_a[j] && c.v[i] < c.v[j] - c.stat_a[j]) return false;
            if (c.flag_b[i] && c.v[i] - c.stat_b[i] < c.v[j]) return false;
        }
    return true;
}

// cross[i][j] = value of j's bundle to agent i (zero-extended); rm_best[i][j]
// = best value i assigns to any item j owns, rm_has marking presence;
// rel_cnt[i][j] counts j-owned items relevant to i; own_cnt[j] counts j's
// items.
template <class T>
void cross_tables(const Ctx<T>& c, const std::vector<int>& d) {
    std::fill(c.cross.begin(), c.cross.end(), T(0));
    std::fill(c.rm_has.begin(), c.rm_has.end(), 0);
    std::fill(c.own_cnt.begin(), c.own_cnt.end(), 0);
    std::fill(c.rel_cnt.begin(), c.rel_cnt.end(), 0);
    for (int k = 0; k < c.m; ++k) {
        int o = c.rel[k][d[k]];
        ++c.own_cnt[o];
        const auto& agents = c.rel[k];
        const auto& vals = c.val[k];
        for (size_t s = 0; s < agents.size(); ++s) {
            int a = agents[s];
            if (a == o) continue;
            size_t idx = static_cast<size_t>(a) * c.n + o;
            c.cross[idx] += vals[s];
            ++c.rel_cnt[idx];
            if (!c.rm_has[idx] || vals[s] > c.rm_best[idx]) {
                c.rm_best[idx] = vals[s];
                c.rm_has[idx] = 1;
            }
        }
    }
}

template <class T>
bool sat_ef(const Ctx<T>& c, const std::vector<int>& d) {
    fill_values(c, d);
    cross_tables(c, d);
    for (int i = 0; i < c.n; ++i)
        for (int j = 0; j < c.n; ++j) {
            if (i == j) continue;
            if (c.v[i] < c.cross[static_cast<size_t>(i) * c.n + j]) return false;
        }
    return true;
}

template <class T>
bool sat_ef1(const Ctx<T>& c, const std::vector<int>& d) {
    fill_values(c, d);
    cross_tables(c, d);
    own_extremes(c, d);
    for (int i = 0; i < c.n; ++i)
        for (int j = 0; j < c.n; ++j) {
            if (i == j) continue;
            size_t idx = static_cast<size_t>(i) * c.n + j;
            const T& other = c.cross[idx];
            if (c.v[i] >= other) continue;
            // Best removal from j's bundle through i's eyes; an item
            // irrelevant to i removes at value zero.
            bool have = false;
            T best{};
            if (c.rm_has[idx]) {
                best = c.rm_best[idx];
                have = true;
            }
            if (c.rel_cnt[idx] < c.own_cnt[j]) {
                if (!have || best < T(0)) best = T(0);
                have = true;
            }
            if (have && c.v[i] >= other - best) continue;
            if (c.flag_a[i] && c.v[i] - c.stat_b[i] >= other) continue;
            return false;
        }
    return true;
}

template <class T>
bool sat(const Ctx<T>& c, Notion n, const std::vector<int>& d,
         const std::vector<T>* mms = nullptr) {
    switch (n) {
        case Notion::prop: return sat_prop(c, d);
        case Notion::prop1: return sat_prop1(c, d);
        case Notion::propx: return sat_propx(c, d);
        case Notion::sprop1:
            if (!c.goods_only)
                fail("NegativeValues", "sprop1 is defined for goods instances only");
            return sat_sprop1(c, d);
        case Notion::eq: return sat_eq(c, d);
        case Notion::eq1: return sat_eq1(c, d);
        case Notion::eqx: return sat_eqx(c, d);
        case Notion::ef: return sat_ef(c, d);
        case Notion::ef1: return sat_ef1(c, d);
        case Notion::mms: {
            fill_values(c, d);
            for (int i = 0; i < c.n; ++i)
                if (c.v[i] < (*mms)[i]) return false;
            return true;
        }
    }
    return false;
}

// Exact maximin share over labeled partitions into n bundles; items the agent
// values at zero are dropped (they shift nothing), and the first remaining
// item is pinned to bundle 0 (bundle relabeling symmetry).
template <class T>
T mms_value(const Ctx<T>& c, int agent, std::uint64_t budget) {
    std::vector<T> items;
    for (auto [k, s] : c.of_agent[agent])
        if (c.val[k][s] != T(0)) items.push_back(c.val[k][s]);
    int kk = static_cast<int>(items.size());
    if (kk == 0) return T(0);

    BigInt space = 1;
    for (int t = 1; t < kk; ++t) space *= c.n;
    if (space > budget)
        fail("SpaceTooLarge", "maximin partition space holds " + space.str() +
                                  " candidates, budget " + std::to_string(budget));

    std::vector<int> a(kk, 0);
    std::vector<T> bundle(c.n);
    bool first = true;
    T best{};
    for (;;) {
        std::fill(bundle.begin(), bundle.end(), T(0));
        for (int t = 0; t < kk; ++t) bundle[a[t]] += items[t];
        T mn = bundle[0];
        for (int i = 1; i < c.n; ++i)
            if (bundle[i] < mn) mn = bundle[i];
        if (first || mn > best) {
            best = mn;
            first = false;
        }
        int t = kk - 1;
        while (t >= 1) {
            if (++a[t] < c.n) break;
            a[t] = 0;
            --t;
        }
        if (t < 1) break;
    }
    return best;
}

}  // namespace

struct ExhaustiveOracle::Impl {
    Instance inst;
    Ctx<Rational> rc;
    Ctx<long long> ic;
    bool int_ok = false;
    BigInt scale = 1;

    explicit Impl(const Instance& in) : inst(in) {
        build(rc, [](const Rational& r) { return r; }, Rational(1));
        try_int();
    }

    template <class T, class Conv>
    void build(Ctx<T>& c, Conv conv, T) {
        c.n = inst.num_agents();
        c.m = inst.num_items();
        c.rel.resize(c.m);
        c.val.resize(c.m);
        c.of_agent.assign(c.n, {});
        bool goods = true, chores = true;
        for (int k = 0; k < c.m; ++k) {
            const ItemSpec& it = inst.item(k);
            for (size_t s = 0; s < it.relevant.size(); ++s) {
                c.rel[k].push_back(it.relevant[s] - 1);
                c.val[k].push_back(conv(it.values[s]));
                c.of_agent[it.relevant[s] - 1].push_back({k, static_cast<int>(s)});
                if (it.values[s] < 0) goods = false;
                if (it.values[s] > 0) chores = false;
            }
        }
        c.goods_only = goods;
        c.chores_only = chores;
        auto shares = prop_share(inst);
        for (const Rational& s : shares) c.share.push_back(conv(s));
        for (int i = 1; i <= c.n; ++i) {
            Rational total = 0, bestv = 0;
            for (int k : inst.items_of(i)) {
                total += inst.value(i, k);
                if (inst.value(i, k) > bestv) bestv = inst.value(i, k);
            }
            c.sprop_rhs.push_back(conv(total - bestv));
        }
        c.init_scratch();
    }

    void try_int() {
        // scale = lcm(value denominators) * lcm(degrees): clears both values
        // and proportional shares.
        BigInt d = 1;
        for (const ItemSpec& it : inst.items()) {
            for (const Rational& v : it.values) d = lcm(d, denominator(v));
            d = lcm(d, BigInt(it.degree()));
        }
        BigInt maxabs = 0;
        for (const ItemSpec& it : inst.items())
            for (const Rational& v : it.values) {
                BigInt s = abs(numerator(v * Rational(d)));
                if (s > maxabs) maxabs = s;
            }
        // Working sums stay within (m+1) * maxabs; insist on lots of slack.
        BigInt bound = maxabs * (inst.num_items() + 2) * 4;
        if (bound >= (BigInt(1) << 62)) return;

        scale = d;
        Rational rs(d);
        build(ic, [&](const Rational& r) {
            Rational scaled = r * rs;
            return numerator(scaled).convert_to<long long>();
        }, 0LL);
        int_ok = true;
    }
};

ExhaustiveOracle::ExhaustiveOracle(const Instance& inst) : impl_(new Impl(inst)) {}
ExhaustiveOracle::~ExhaustiveOracle() = default;

const Instance& ExhaustiveOracle::instance() const { return impl_->inst; }
BigInt ExhaustiveOracle::space() const { return orientation_space_size(impl_->inst); }
bool ExhaustiveOracle::using_integer_fast_path() const { return impl_->int_ok; }

bool ExhaustiveOracle::satisfies(Notion n, const Orientation& pi) const {
    auto d = orientation_to_digits(impl_->inst, pi);
    if (n == Notion::mms) {
        auto shares = mms_all();
        return sat(impl_->rc, n, d, &shares);
    }
    if (impl_->int_ok) return sat(impl_->ic, n, d);
    return sat(impl_->rc, n, d);
}

std::optional<Orientation> ExhaustiveOracle::find(Notion n, std::uint64_t budget) const {
    ensure_budget(impl_->inst, budget);
    std::optional<Orientation> out;

    if (n == Notion::mms) {
        auto shares = mms_all(budget);
        if (impl_->int_ok) {
            std::vector<long long> ms;
            for (const Rational& s : shares)
                ms.push_back(numerator(s * Rational(impl_->scale)).convert_to<long long>());
            iterate_digits(impl_->inst, [&](const std::vector<int>& d) {
                if (sat(impl_->ic, n, d, &ms)) {
                    out = digits_to_orientation(impl_->inst, d);
                    return false;
                }
                return true;
            });
        } else {
            iterate_digits(impl_->inst, [&](const std::vector<int>& d) {
                if (sat(impl_->rc, n, d, &shares)) {
                    out = digits_to_orientation(impl_->inst, d);
                    return false;
                }
                return true;
            });
        }
        return out;
    }

    if (impl_->int_ok) {
        iterate_digits(impl_->inst, [&](const std::vector<int>& d) {
            if (sat(impl_->ic, n, d)) {
                out = digits_to_orientation(impl_->inst, d);
                return false;
            }
            return true;
        });
    } else {
        iterate_digits(impl_->inst, [&](const std::vector<int>& d) {
            if (sat(impl_->rc, n, d)) {
                out = digits_to_orientation(impl_->inst, d);
                return false;
            }
            return true;
        });
    }
    return out;
}

bool ExhaustiveOracle::exists(Notion n, std::uint64_t budget) const {
    return find(n, budget).has_value();
}

long long ExhaustiveOracle::count_satisfying(Notion n, std::uint64_t budget) const {
    ensure_budget(impl_->inst, budget);
    long long count = 0;
    std::vector<Rational> ms_rat;
    std::vector<long long> ms_int;
    const std::vector<Rational>* prat = nullptr;
    const std::vector<long long>* pint = nullptr;
    if (n == Notion::mms) {
        ms_rat = mms_all(budget);
        prat = &ms_rat;
        if (impl_->int_ok) {
            for (const Rational& s : ms_rat)
                ms_int.push_back(numerator(s * Rational(impl_->scale)).convert_to<long long>());
            pint = &ms_int;
        }
    }
    if (impl_->int_ok) {
        iterate_digits(impl_->inst, [&](const std::vector<int>& d) {
            if (sat(impl_->ic, n, d, pint)) ++count;
            return true;
        });
    } else {
        iterate_digits(impl_->inst, [&](const std::vector<int>& d) {
            if (sat(impl_->rc, n, d, prat)) ++count;
            return true;
        });
    }
    return count;
}

Rational ExhaustiveOracle::mms(int agent, std::uint64_t budget) const {
    if (agent < 1 || agent > impl_->inst.num_agents())
        fail("BadAgentId", "agent " + std::to_string(agent) + " out of range");
    if (impl_->int_ok) {
        long long r = mms_value(impl_->ic, agent - 1, budget);
        return Rational(BigInt(r), impl_->scale);
    }
    return mms_value(impl_->rc, agent - 1, budget);
}

std::vector<Rational> ExhaustiveOracle::mms_all(std::uint64_t budget) const {
    std::vector<Rational> out;
    for (int i = 1; i <= impl_->inst.num_agents(); ++i) out.push_back(mms(i, budget));
    return out;
}

std::optional<Orientation> ExhaustiveOracle::find_dominating(const Orientation& pi,
                                                             std::uint64_t budget) const {
    ensure_budget(impl_->inst, budget);
    const Instance& inst = impl_->inst;
    std::optional<Orientation> out;
    if (impl_->int_ok) {
        auto base = orientation_to_digits(inst, pi);
        fill_values(impl_->ic, base);
        std::vector<long long> v0 = impl_->ic.v;
        iterate_digits(inst, [&](const std::vector<int>& d) {
            fill_values(impl_->ic, d);
            bool weak = true, strict = false;
            for (int i = 0; i < impl_->ic.n; ++i) {
                if (impl_->ic.v[i] < v0[i]) {
                    weak = false;
                    break;
                }
                if (impl_->ic.v[i] > v0[i]) strict = true;
            }
            if (weak && strict) {
                out = digits_to_orientation(inst, d);
                return false;
            }
            return true;
        });
    } else {
        auto base = orientation_to_digits(inst, pi);
        fill_values(impl_->rc, base);
        std::vector<Rational> v0 = impl_->rc.v;
        iterate_digits(inst, [&](const std::vector<int>& d) {
            fill_values(impl_->rc, d);
            bool weak = true, strict = false;
            for (int i = 0; i < impl_->rc.n; ++i) {
                if (impl_->rc.v[i] < v0[i]) {
                    weak = false;
                    break;
                }
                if (impl_->rc.v[i] > v0[i]) strict = true;
            }
            if (weak && strict) {
                out = digits_to_orientation(inst, d);
                return false;
            }
            return true;
        });
    }
    return out;
}

void enumerate_orientations(const Instance& inst, std::uint64_t budget,
                            const std::function<bool(const Orientation&)>& visit) {
    ensure_budget(inst, budget);
    iterate_digits(inst, [&](const std::vector<int>& d) {
        return visit(digits_to_orientation(inst, d));
    });
}

std::optional<Orientation> find_orientation(const Instance& inst, Notion n,
                                            std::uint64_t budget) {
    return ExhaustiveOracle(inst).find(n, budget);
}

Rational mms_share(const Instance& inst, int agent, std::uint64_t budget) {
    return ExhaustiveOracle(inst).mms(agent, budget);
}

std::vector<Rational> mms_shares(const Instance& inst, std::uint64_t budget) {
    return ExhaustiveOracle(inst).mms_all(budget);
}

CheckReport check_po_exhaustive(const Instance& inst, const Orientation& pi,
                                std::uint64_t budget) {
    ExhaustiveOracle o(inst);
    CheckReport rep;
    auto dom = o.find_dominating(pi, budget);
    if (dom) {
        rep.holds = false;
        Violation v;
        v.notion = "po";
        auto vals = agent_values(inst, pi);
        auto dvals = agent_values(inst, *dom);
        for (int i = 1; i <= inst.num_agents(); ++i)
            if (dvals[i - 1] > vals[i - 1]) {
                v.agent = i;
                v.lhs = vals[i - 1];
                v.rhs = dvals[i - 1];
                break;
            }
        std::string moved;
        for (int k = 0; k < inst.num_items(); ++k)
            if (dom->owner[k] != pi.owner[k])
                moved += (moved.empty() ? "" : ", ") + inst.item(k).id + "->agent " +
                         std::to_string(dom->owner[k]);
        v.detail = "dominated by reassigning " + moved;
        rep.violations.push_back(std::move(v));
    }
    return rep;
}

void for_each_simple_instance(int num_agents, const std::vector<Rational>& alphabet,
                              const std::function<void(const Instance&)>& fn) {
    int n = num_agents;
    int A = static_cast<int>(alphabet.size());
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
    int P = static_cast<int>(pairs.size());
    std::vector<std::vector<int>> pair_idx(n, std::vector<int>(n, -1));
    for (int t = 0; t < P; ++t)
        pair_idx[pairs[t].first][pairs[t].second] = t;

    std::vector<std::vector<int>> perms;
    std::vector<int> idp(n);
    std::iota(idp.begin(), idp.end(), 0);
    do perms.push_back(idp);
    while (std::next_permutation(idp.begin(), idp.end()));

    // State per pair: 0 absent; otherwise 1 + va*A + vb where va/vb index the
    // alphabet values of the lower/higher endpoint. An instance is emitted
    // only when its state vector is lexicographically minimal over all vertex
    // relabelings (sound dedup: one representative per isomorphism class).
    int max_state = A * A;
    std::vector<int> code(P, 0), image(P, 0);
    auto canonical = [&]() {
        for (const auto& sigma : perms) {
            for (int t = 0; t < P; ++t) {
                int a = sigma[pairs[t].first], b = sigma[pairs[t].second];
                int st = code[t];
                int tgt, nst;
                if (a < b) {
                    tgt = pair_idx[a][b];
                    nst = st;
                } else {
                    tgt = pair_idx[b][a];
                    if (st == 0) nst = 0;
                    else {
                        int va = (st - 1) / A, vb = (st - 1) % A;
                        nst = 1 + vb * A + va;
                    }
                }
                image[tgt] = nst;
            }
            if (std::lexicographical_compare(image.begin(), image.end(), code.begin(),
                                             code.end()))
                return false;
        }
        return true;
    };

    for (;;) {
        if (canonical()) {
            std::vector<ItemSpec> items;
            for (int t = 0; t < P; ++t) {
                if (code[t] == 0) continue;
                int va = (code[t] - 1) / A, vb = (code[t] - 1) % A;
                ItemSpec it;
                it.id = "(" + std::to_string(pairs[t].first + 1) + "," +
                        std::to_string(pairs[t].second + 1) + ")";
                it.relevant = {pairs[t].first + 1, pairs[t].second + 1};
                it.values = {alphabet[va], alphabet[vb]};
                items.push_back(std::move(it));
            }
            Instance inst = Instance::build(n, std::move(items));
            fn(inst);
        }
        int t = P - 1;
        while (t >= 0) {
            if (++code[t] <= max_state) break;
            code[t] = 0;
            --t;
        }
        if (t < 0) break;
    }
}

void for_each_binary_simple_instance(int num_agents, bool chores,
                                     const std::function<void(const Instance&)>& fn) {
    std::vector<Rational> alphabet = {Rational(0), Rational(chores ? -1 : 1)};
    for_each_simple_instance(num_agents, alphabet, fn);
}

PropxScanResult scan_propx_nonexistence(bool chores, int max_agents) {
    PropxScanResult res;
    for (int n = 2; n <= max_agents; ++n) {
        for_each_binary_simple_instance(n, chores, [&](const Instance& inst) {
            ++res.instances_scanned;
            ExhaustiveOracle o(inst);
            if (!o.exists(Notion::propx, kDefaultBudget)) {
                ++res.witness_count;
                if (!res.first_witness) res.first_witness = inst;
            }
        });
    }
    return res;
}

std::optional<std::string> check_implication_chains(const Instance& inst, const Orientation& pi,
                                                    std::uint64_t po_budget) {
    struct Link {
        Notion weak;
        Notion strong;
    };
    static const Link links[] = {
        {Notion::propx, Notion::prop}, {Notion::prop1, Notion::propx},
        {Notion::eqx, Notion::eq},     {Notion::eq1, Notion::eqx},
        {Notion::ef1, Notion::ef},
    };
    for (const Link& l : links) {
        if (check_notion(inst, pi, l.strong).holds && !check_notion(inst, pi, l.weak).holds)
            return std::string(to_string(l.strong)) + " holds but " + to_string(l.weak) +
                   " fails";
    }
    if (orientation_space_size(inst) <= po_budget && check_fpo(inst, pi).holds) {
        if (!check_po_exhaustive(inst, pi, po_budget).holds)
            return std::string("fpo holds but exhaustive pareto optimality fails");
    }
    return std::nullopt;
}

}  // namespace fairorient
