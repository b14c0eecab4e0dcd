#include "tcg/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <random>
#include <set>

#include "tcg/saturation.hpp"

namespace tcg {

namespace {

void check_caps(const TemporalGraph& g, int k, const OracleCaps& caps) {
    if (g.vertex_count() > caps.max_vertices || g.lifetime() > caps.max_lifetime ||
        k > caps.max_budget)
        throw std::runtime_error("oracle scale limit");
}

// All slots (u,v,t), u < v, t in [1,T], in (t,u,v) order.
std::vector<TimeEdge> slot_universe(const TemporalGraph& g) {
    std::vector<TimeEdge> out;
    const int n = g.vertex_count();
    for (int t = 1; t <= g.lifetime(); ++t)
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v = u + 1; v < n; ++v) out.emplace_back(u, v, t);
    return out;
}

// Enumerates size-ascending lexicographic combinations of `slots`, applying
// each as a toggle set; returns the first passing recognition.
EtcOracleResult first_passing(const TemporalGraph& g, const Params& p, int k,
                              const std::vector<TimeEdge>& slots) {
    std::vector<std::size_t> pick;
    auto toggle_set = [&] {
        ModificationSet mods;
        for (std::size_t i : pick) {
            const TimeEdge& te = slots[i];
            mods.push_back({g.has_time_edge(te) ? ModOp::Delete : ModOp::Add, te});
        }
        return mods;
    };

    // Size 0 first: the graph itself.
    if (is_cluster_temporal_graph(g, p)) return {true, ModificationSet{}};

    for (int size = 1; size <= k; ++size) {
        if (static_cast<std::size_t>(size) > slots.size()) break;
        pick.resize(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) pick[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i);
        while (true) {
            ModificationSet mods = toggle_set();
            if (is_cluster_temporal_graph(apply_modifications(g, mods), p)) {
                sort_canonical(mods);
                return {true, std::move(mods)};
            }
            // next combination
            int i = size - 1;
            while (i >= 0 &&
                   pick[static_cast<std::size_t>(i)] ==
                       slots.size() - static_cast<std::size_t>(size - i))
                --i;
            if (i < 0) break;
            ++pick[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j)
                pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return {false, std::nullopt};
}

}  // namespace

EtcOracleResult etc_bruteforce(const TemporalGraph& g, const Params& p, int k,
                               const OracleCaps& caps) {
    if (k < 0) return {false, std::nullopt};
    check_caps(g, k, caps);
    return first_passing(g, p, k, slot_universe(g));
}

EtcOracleResult ctc_bruteforce(const TemporalGraph& g, const Params& p, int k,
                               const OracleCaps& caps) {
    if (k < 0) return {false, std::nullopt};
    check_caps(g, k, caps);
    std::vector<TimeEdge> absent;
    for (const TimeEdge& te : slot_universe(g))
        if (!g.has_time_edge(te)) absent.push_back(te);
    return first_passing(g, p, k, absent);
}

bool tm_bruteforce(const TmInstance& inst, const OracleCaps& caps) {
    check_caps(inst.graph, 0, caps);
    if (inst.delta < 1) throw std::invalid_argument("delta < 1");
    if (inst.k < 0) return false;
    if (inst.k == 0) return true;
    std::vector<TimeEdge> edges = inst.graph.time_edges();
    const int m = static_cast<int>(edges.size());
    if (inst.k > m) return false;

    auto independent = [&](const TimeEdge& x, const TimeEdge& y) {
        return !x.e.shares_endpoint(y.e) || std::abs(x.t - y.t) >= inst.delta;
    };

    std::vector<int> pick;
    auto rec = [&](auto&& self, int start) -> bool {
        if (static_cast<int>(pick.size()) == inst.k) return true;
        for (int i = start; i < m; ++i) {
            bool ok = true;
            for (int j : pick)
                if (!independent(edges[static_cast<std::size_t>(j)],
                                 edges[static_cast<std::size_t>(i)])) { ok = false; break; }
            if (!ok) continue;
            pick.push_back(i);
            if (self(self, i + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    return rec(rec, 0);
}

ReducedEtc reduce_tm_to_etc(const TmInstance& inst) {
    ReducedEtc out;
    out.nonstandard_delta = inst.delta != 2;
    for (VertexId v = 0; v < inst.graph.vertex_count(); ++v) out.graph.intern(inst.graph.label(v));
    for (const auto& [e, ts] : inst.graph.appearances())
        for (int t : ts) out.graph.add_appearance(e.u, e.v, 4 * t - 3);
    out.params = Params(1, 5);
    out.budget = static_cast<long long>(inst.graph.time_edge_count()) - inst.k;
    return out;
}

namespace {

// Platform-stable bounded draw.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("draw_below(0)");
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do { x = rng(); } while (x >= limit);
    return x % n;
}

int draw_range(std::mt19937_64& rng, int lo, int hi) {  // inclusive
    return lo + static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

bool draw_prob(std::mt19937_64& rng, double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return (static_cast<double>(rng() >> 11) * 0x1.0p-53) < p;
}

}  // namespace

TemporalGraph gen_planted(int n, int T, const Params& p, std::uint64_t seed, int perturbations) {
    if (n < 1 || T < 1 || perturbations < 0) throw std::invalid_argument("gen_planted: bad size");
    std::mt19937_64 rng(seed);
    TemporalGraph g;
    for (int v = 0; v < n; ++v) g.intern("v" + std::to_string(v));

    // Disjoint vertex groups of size >= 2 (a trailing singleton stays
    // isolated), each carrying one or more intervals >= delta2 apart.
    std::vector<std::pair<int, int>> groups;  // [lo, hi] of vertex ids
    int v = 0;
    while (n - v >= 2) {
        int size = std::min(n - v, draw_range(rng, 2, 4));
        groups.emplace_back(v, v + size - 1);
        v += size;
    }

    for (auto [lo, hi] : groups) {
        int cursor = 1;
        int intervals = draw_range(rng, 1, 2);
        for (int it = 0; it < intervals && cursor <= T; ++it) {
            int a = draw_range(rng, cursor, T);
            int b = draw_range(rng, a, T);
            for (int x = lo; x <= hi; ++x) {
                for (int y = x + 1; y <= hi; ++y) {
                    // Random delta1-dense appearance set for the pair in [a,b].
                    int prev = a - 1;
                    while (b + 1 - prev > p.delta1) {
                        int t = prev + draw_range(rng, 1, p.delta1);
                        t = std::min(t, b);
                        g.add_appearance(x, y, t);
                        prev = t;
                    }
                    if (prev < a) g.add_appearance(x, y, a);  // zero-length guard
                }
            }
            cursor = b + p.delta2;  // next interval of this group stays independent
        }
    }

    // Random toggles; each slot used at most once so the edit distance back
    // is at most `perturbations`.
    std::set<std::pair<StaticEdge, int>> used;
    const std::size_t total_slots =
        static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2 *
        static_cast<std::size_t>(T);
    int done = 0;
    while (done < perturbations) {
        if (n < 2 || used.size() == total_slots) break;
        VertexId x = draw_range(rng, 0, n - 1);
        VertexId y = draw_range(rng, 0, n - 1);
        if (x == y) continue;
        int t = draw_range(rng, 1, T);
        StaticEdge e(x, y);
        if (!used.insert({e, t}).second) continue;
        TimeEdge te(e, t);
        ModificationSet one{{g.has_time_edge(te) ? ModOp::Delete : ModOp::Add, te}};
        g = apply_modifications(g, one);
        ++done;
    }
    return g;
}

TemporalGraph gen_random(int n, int T, double edge_prob, double time_prob, std::uint64_t seed) {
    if (n < 0 || T < 0) throw std::invalid_argument("gen_random: bad size");
    if (edge_prob < 0 || edge_prob > 1 || time_prob < 0 || time_prob > 1)
        throw std::invalid_argument("gen_random: probability out of [0,1]");
    std::mt19937_64 rng(seed);
    TemporalGraph g;
    for (int v = 0; v < n; ++v) g.intern("v" + std::to_string(v));
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v2 = u + 1; v2 < n; ++v2) {
            if (!draw_prob(rng, edge_prob)) continue;
            for (int t = 1; t <= T; ++t)
                if (draw_prob(rng, time_prob)) g.add_appearance(u, v2, t);
        }
    }
    return g;
}

TemporalGraph gen_random_path(int n, int T, int sigma, std::uint64_t seed) {
    if (n < 1 || T < 1 || sigma < 1) throw std::invalid_argument("gen_random_path: bad size");
    std::mt19937_64 rng(seed);
    TemporalGraph g;
    for (int v = 0; v < n; ++v) g.intern("v" + std::to_string(v));
    for (int i = 0; i + 1 < n; ++i) {
        int count = draw_range(rng, 1, std::min(sigma, T));
        std::set<int> ts;
        while (static_cast<int>(ts.size()) < count) ts.insert(draw_range(rng, 1, T));
        for (int t : ts) g.add_appearance(i, i + 1, t);
    }
    return g;
}

TemporalGraph make_counterexample5(int delta1, int delta2) {
    if (!(delta2 > delta1 && delta1 > 1))
        throw std::invalid_argument("counterexample needs delta2 > delta1 > 1");
    TemporalGraph g;
    g.add_appearance("a", "c", 1);
    g.add_appearance("b", "c", 1);
    g.add_appearance("a", "b", 2);
    g.add_appearance("c", "d", delta2 + 2);
    g.add_appearance("c", "e", delta2 + 2);
    g.add_appearance("d", "e", delta2 + 1);
    return g;
}

}  // namespace tcg
