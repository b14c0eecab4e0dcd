#pragma once

#include <vector>

#include "tcg/temporal_graph.hpp"
#include "tcg/types.hpp"

namespace tcg {

/// One DP template: vertex set {order[left] .. order[i]} at the current
/// level i, with its clique interval. left < i always.
struct PathTemplate {
    int left = 0;
    Interval span;

    friend auto operator<=>(const PathTemplate&, const PathTemplate&) = default;
};

/// Collection of templates feasible for the current path vertex, kept sorted
/// by (left, a, b). Pairwise delta2-independent; every template interval
/// meets the appearance set of each path edge it spans.
using FeasibleCollection = std::vector<PathTemplate>;

/// A temporal graph whose underlying static graph is exactly the path
/// order[0] - order[1] - ... - order[n-1].
struct PathInstance {
    std::vector<VertexId> order;              // original graph ids, v_1..v_n
    std::vector<std::vector<int>> edge_times; // size n-1, sorted ascending
    Params params;
    int sigma = 0;     // max appearances of any single edge
    int lifetime = 0;  // T; 0 when the path has no edges

    /// Detects the path order of g's underlying graph (error if it is not a
    /// path) and extracts per-edge appearance lists.
    static PathInstance from_graph(const TemporalGraph& g, const Params& p);
};

struct PathDpOptions {
    /// When set, template interval endpoints are restricted to within
    /// delta1 - 1 of some appearance time. Off by default.
    bool prune_endpoints = false;
};

struct PathDpResult {
    long long min_cost = 0;
    bool decision = false;      // min_cost <= budget
    ModificationSet witness;    // canonical order, |witness| == min_cost
};

/// Extension relation between consecutive levels. Every template of `next`
/// on more than two vertices must appear in `prev` shrunk by the level
/// vertex, interval unchanged; every unconsumed template of `prev` must be
/// delta2-independent from every template of `next` (they always share the
/// previous path vertex, so this is an interval-gap test).
bool extends(const FeasibleCollection& prev, const FeasibleCollection& next, int level,
             int delta2);

/// Additions of edges from the level vertex to non-neighbours on the path:
/// (|X|-2) minimal dense fills per template, |X| = level - left + 1.
long long cost_new_pair_additions(const FeasibleCollection& coll, int level, int delta1);

/// Appearances of the entering path edge covered by no template interval.
long long cost_uncovered_deletions(const FeasibleCollection& coll,
                                   const std::vector<int>& edge_times);

/// Minimal fill of the entering path edge inside each template interval
/// (sentinels a-1 and b+1).
long long cost_path_edge_fill(const FeasibleCollection& coll,
                              const std::vector<int>& edge_times, int delta1);

PathDpResult solve_path(const PathInstance& inst, long long budget,
                        const PathDpOptions& opts = {});

/// Convenience wrapper: builds the PathInstance from g (error if the
/// underlying graph is not a path).
PathDpResult solve_path(const TemporalGraph& g, const Params& p, long long budget,
                        const PathDpOptions& opts = {});

}  // namespace tcg
