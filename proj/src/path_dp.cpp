#include "tcg/path_dp.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <unordered_map>

#include "tcg/completion.hpp"

namespace tcg {

PathInstance PathInstance::from_graph(const TemporalGraph& g, const Params& p) {
    PathInstance inst;
    inst.params = p;
    const int n = g.vertex_count();
    if (n == 0) return inst;

    std::vector<std::vector<VertexId>> adj(static_cast<std::size_t>(n));
    std::size_t edge_count = g.appearances().size();
    for (const auto& [e, ts] : g.appearances()) {
        adj[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    if (edge_count != static_cast<std::size_t>(n - 1))
        throw std::invalid_argument("underlying graph is not a path");
    VertexId start = -1;
    for (VertexId v = 0; v < n; ++v) {
        std::size_t d = adj[static_cast<std::size_t>(v)].size();
        if (d > 2) throw std::invalid_argument("underlying graph is not a path");
        if (d <= 1 && start == -1 && (n == 1 || d == 1)) start = v;
    }
    if (n == 1) {
        inst.order = {0};
        return inst;
    }
    if (start == -1) throw std::invalid_argument("underlying graph is not a path");

    inst.order.reserve(static_cast<std::size_t>(n));
    VertexId prev = -1, cur = start;
    while (true) {
        inst.order.push_back(cur);
        VertexId nxt = -1;
        for (VertexId w : adj[static_cast<std::size_t>(cur)])
            if (w != prev) nxt = w;
        if (nxt == -1) break;
        prev = cur;
        cur = nxt;
    }
    if (inst.order.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("underlying graph is not a path");

    inst.edge_times.reserve(static_cast<std::size_t>(n - 1));
    for (std::size_t i = 0; i + 1 < inst.order.size(); ++i) {
        const std::vector<int>* ts = g.times(inst.order[i], inst.order[i + 1]);
        if (!ts) throw std::invalid_argument("underlying graph is not a path");
        inst.edge_times.push_back(*ts);
        inst.sigma = std::max(inst.sigma, static_cast<int>(ts->size()));
        inst.lifetime = std::max(inst.lifetime, ts->back());
    }
    return inst;
}

namespace {

bool hits(const std::vector<int>& times, const Interval& iv) {
    auto it = std::lower_bound(times.begin(), times.end(), iv.a);
    return it != times.end() && *it <= iv.b;
}

// Minimal dense fill of a pair with no appearances at all; never zero, since
// an empty appearance list is not dense in any interval.
long long empty_fill_cost(const Interval& iv, int delta1) {
    return std::max(1, min_insertions_for_gap(iv.length() + 1, delta1));
}

}  // namespace

long long cost_new_pair_additions(const FeasibleCollection& coll, int level, int delta1) {
    long long total = 0;
    for (const PathTemplate& pt : coll) {
        long long extra_vertices = level - pt.left - 1;  // |X| - 2
        if (extra_vertices > 0) total += extra_vertices * empty_fill_cost(pt.span, delta1);
    }
    return total;
}

long long cost_uncovered_deletions(const FeasibleCollection& coll,
                                   const std::vector<int>& edge_times) {
    long long cnt = 0;
    for (int t : edge_times) {
        bool covered = false;
        for (const PathTemplate& pt : coll)
            if (pt.span.contains(t)) { covered = true; break; }
        if (!covered) ++cnt;
    }
    return cnt;
}

long long cost_path_edge_fill(const FeasibleCollection& coll,
                              const std::vector<int>& edge_times, int delta1) {
    long long total = 0;
    for (const PathTemplate& pt : coll) {
        int prev = pt.span.a - 1;
        for (int t : edge_times) {
            if (t < pt.span.a || t > pt.span.b) continue;
            total += min_insertions_for_gap(t - prev, delta1);
            prev = t;
        }
        total += min_insertions_for_gap(pt.span.b + 1 - prev, delta1);
    }
    return total;
}

bool extends(const FeasibleCollection& prev, const FeasibleCollection& next, int level,
             int delta2) {
    // Consumed predecessors are fully determined: same left endpoint, same
    // interval, one vertex shorter.
    std::vector<bool> consumed(prev.size(), false);
    for (const PathTemplate& t : next) {
        if (t.left > level - 2) continue;  // two-vertex template, born here
        bool found = false;
        for (std::size_t j = 0; j < prev.size(); ++j) {
            if (!consumed[j] && prev[j] == t) { consumed[j] = true; found = true; break; }
        }
        if (!found) return false;
    }
    // Unconsumed templates stay closed; they share the previous path vertex
    // with everything in `next`, so independence reduces to interval gaps.
    for (std::size_t j = 0; j < prev.size(); ++j) {
        if (consumed[j]) continue;
        for (const PathTemplate& t : next)
            if (interval_gap(prev[j].span, t.span) < delta2) return false;
    }
    return true;
}

namespace {

struct Level {
    std::vector<FeasibleCollection> states;
    std::vector<long long> cost;
    std::vector<int> parent;  // index into the previous level
};

struct CollectionHash {
    std::size_t operator()(const FeasibleCollection& c) const {
        std::size_t h = 1469598103934665603ull;
        auto mix = [&h](long long x) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        };
        for (const PathTemplate& t : c) { mix(t.left); mix(t.span.a); mix(t.span.b); }
        return h;
    }
};

// All candidate templates for a level, sorted by (a, b, left) so that sets
// built with strictly gapped intervals are produced once each.
std::vector<PathTemplate> level_candidates(const PathInstance& inst, int level,
                                           const PathDpOptions& opts) {
    std::vector<PathTemplate> out;
    const int T = inst.lifetime;
    const std::vector<int>& entering = inst.edge_times[static_cast<std::size_t>(level - 1)];

    std::vector<bool> endpoint_ok;
    if (opts.prune_endpoints) {
        endpoint_ok.assign(static_cast<std::size_t>(T + 2), false);
        for (const auto& ts : inst.edge_times)
            for (int t : ts)
                for (int d = -(inst.params.delta1 - 1); d <= inst.params.delta1 - 1; ++d)
                    if (t + d >= 1 && t + d <= T) endpoint_ok[static_cast<std::size_t>(t + d)] = true;
    }

    for (int a = 1; a <= T; ++a) {
        if (opts.prune_endpoints && !endpoint_ok[static_cast<std::size_t>(a)]) continue;
        for (int b = a; b <= T; ++b) {
            if (opts.prune_endpoints && !endpoint_ok[static_cast<std::size_t>(b)]) continue;
            Interval iv(a, b);
            if (!hits(entering, iv)) continue;  // feasibility (ii) at k = level-1
            // Walk left while every spanned edge has an appearance inside.
            for (int left = level - 1; left >= 0; --left) {
                if (left < level - 1 &&
                    !hits(inst.edge_times[static_cast<std::size_t>(left)], iv))
                    break;
                out.push_back({left, iv});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const PathTemplate& x, const PathTemplate& y) {
        if (x.span != y.span) return x.span < y.span;
        return x.left < y.left;
    });
    return out;
}

// Enumerates every pairwise delta2-independent set of candidates (all share
// the level vertex, so independence is interval separation), collections
// capped at the entering edge's appearance count.
void enumerate_collections(const std::vector<PathTemplate>& cands, std::size_t start,
                           int remaining, int last_b, int delta2,
                           FeasibleCollection& acc,
                           std::vector<FeasibleCollection>& out) {
    out.push_back(acc);
    if (remaining == 0) return;
    for (std::size_t i = start; i < cands.size(); ++i) {
        if (last_b >= 0 && cands[i].span.a < last_b + delta2) continue;
        acc.push_back(cands[i]);
        enumerate_collections(cands, i + 1, remaining - 1, cands[i].span.b, delta2, acc, out);
        acc.pop_back();
    }
}

void canonicalise(FeasibleCollection& c) { std::sort(c.begin(), c.end()); }

// Materialises the edits implied by one level's collection, in original ids.
void materialise_level(const PathInstance& inst, int level, const FeasibleCollection& coll,
                       ModificationSet& out) {
    const std::vector<int>& entering = inst.edge_times[static_cast<std::size_t>(level - 1)];
    const int delta1 = inst.params.delta1;
    VertexId vi = inst.order[static_cast<std::size_t>(level)];
    VertexId vp = inst.order[static_cast<std::size_t>(level - 1)];

    for (int t : entering) {
        bool covered = false;
        for (const PathTemplate& pt : coll)
            if (pt.span.contains(t)) { covered = true; break; }
        if (!covered) out.push_back({ModOp::Delete, TimeEdge(vp, vi, t)});
    }
    for (const PathTemplate& pt : coll) {
        auto push_fill = [&](VertexId u, int prev, int next) {
            int m = min_insertions_for_gap(next - prev, delta1);
            for (int j = 1; j <= m; ++j)
                out.push_back({ModOp::Add, TimeEdge(u, vi, prev + delta1 * j)});
        };
        int prev = pt.span.a - 1;
        for (int t : entering) {
            if (t < pt.span.a || t > pt.span.b) continue;
            push_fill(vp, prev, t);
            prev = t;
        }
        push_fill(vp, prev, pt.span.b + 1);
        for (int z = pt.left; z <= level - 2; ++z) {
            VertexId u = inst.order[static_cast<std::size_t>(z)];
            if (min_insertions_for_gap(pt.span.length() + 1, delta1) == 0)
                out.push_back({ModOp::Add, TimeEdge(u, vi, pt.span.a)});
            else
                push_fill(u, pt.span.a - 1, pt.span.b + 1);
        }
    }
}

}  // namespace

PathDpResult solve_path(const PathInstance& inst, long long budget, const PathDpOptions& opts) {
    const int n = static_cast<int>(inst.order.size());
    for (const auto& ts : inst.edge_times) {
        if (ts.empty()) throw std::invalid_argument("underlying graph is not a path");
        if (static_cast<int>(ts.size()) > inst.sigma)
            throw std::invalid_argument("sigma exceeded");
    }
    PathDpResult res;
    if (n <= 1) {
        res.min_cost = 0;
        res.decision = budget >= 0;
        return res;
    }

    Level prev_level;
    prev_level.states.push_back({});
    prev_level.cost.push_back(0);
    prev_level.parent.push_back(-1);
    std::vector<Level> levels;
    levels.push_back(prev_level);

    for (int i = 1; i < n; ++i) {
        const std::vector<int>& entering = inst.edge_times[static_cast<std::size_t>(i - 1)];
        std::vector<PathTemplate> cands = level_candidates(inst, i, opts);
        std::vector<FeasibleCollection> raw;
        FeasibleCollection acc;
        enumerate_collections(cands, 0, static_cast<int>(entering.size()), -1,
                              inst.params.delta2, acc, raw);

        Level cur;
        std::unordered_map<FeasibleCollection, int, CollectionHash> index;
        for (FeasibleCollection& c : raw) {
            canonicalise(c);
            if (index.count(c)) continue;
            index.emplace(c, static_cast<int>(cur.states.size()));
            cur.states.push_back(std::move(c));
        }
        cur.cost.assign(cur.states.size(), std::numeric_limits<long long>::max());
        cur.parent.assign(cur.states.size(), -1);

        const Level& below = levels.back();
        for (std::size_t s = 0; s < cur.states.size(); ++s) {
            const FeasibleCollection& next = cur.states[s];
            long long fgh = cost_new_pair_additions(next, i, inst.params.delta1) +
                            cost_uncovered_deletions(next, entering) +
                            cost_path_edge_fill(next, entering, inst.params.delta1);
            for (std::size_t q = 0; q < below.states.size(); ++q) {
                if (below.cost[q] == std::numeric_limits<long long>::max()) continue;
                if (!extends(below.states[q], next, i, inst.params.delta2)) continue;
                long long v = below.cost[q] + fgh;
                if (v < cur.cost[s]) {
                    cur.cost[s] = v;
                    cur.parent[s] = static_cast<int>(q);
                }
            }
        }
        levels.push_back(std::move(cur));
    }

    const Level& last = levels.back();
    long long best = std::numeric_limits<long long>::max();
    int best_idx = -1;
    for (std::size_t s = 0; s < last.states.size(); ++s) {
        if (last.cost[s] < best) {
            best = last.cost[s];
            best_idx = static_cast<int>(s);
        }
    }

    res.min_cost = best;
    res.decision = best <= budget;

    // Back-walk the chosen chain and materialise per-level edits.
    std::vector<int> chain(static_cast<std::size_t>(n), -1);
    int idx = best_idx;
    for (int i = n - 1; i >= 1 && idx >= 0; --i) {
        chain[static_cast<std::size_t>(i)] = idx;
        idx = levels[static_cast<std::size_t>(i)].parent[static_cast<std::size_t>(idx)];
    }
    for (int i = 1; i < n; ++i) {
        const Level& lv = levels[static_cast<std::size_t>(i)];
        materialise_level(inst, i, lv.states[static_cast<std::size_t>(chain[static_cast<std::size_t>(i)])],
                          res.witness);
    }
    sort_canonical(res.witness);
    return res;
}

PathDpResult solve_path(const TemporalGraph& g, const Params& p, long long budget,
                        const PathDpOptions& opts) {
    return solve_path(PathInstance::from_graph(g, p), budget, opts);
}

}  // namespace tcg
