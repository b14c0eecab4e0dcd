#pragma once

#include <optional>
#include <vector>

#include "tcg/temporal_graph.hpp"
#include "tcg/types.hpp"

namespace tcg {

/// One block of the saturated partition: a time-edge set (in (t,u,v) order)
/// with its generated template.
struct SaturatedBlock {
    std::vector<TimeEdge> edges;
    Template tmpl;
};

/// The unique decomposition of a graph's time-edges into delta2-saturated
/// blocks. Blocks are pairwise delta2-independent and ordered by their
/// earliest time-edge.
struct SaturatedPartition {
    std::vector<SaturatedBlock> blocks;
};

/// Independent iff the vertex sets are disjoint or the interval gap is at
/// least delta2.
bool templates_independent(const Template& c1, const Template& c2, int delta2);

SaturatedPartition saturated_partition(const TemporalGraph& g, int delta2);

/// List-merging on an explicit initial ordering of the time-edges; the result
/// is the same partition for every ordering (uniqueness).
SaturatedPartition saturated_partition_of_list(int vertex_count,
                                               const std::vector<TimeEdge>& edges, int delta2);

/// True iff every saturated block forms a delta1-temporal clique, checked on
/// the block's own appearances over the block's template interval.
bool is_cluster_temporal_graph(const TemporalGraph& g, const Params& p);

struct SubsetCheckResult {
    bool ok = true;
    std::optional<std::vector<VertexId>> violator;  // first in shortlex order
};

/// Scans vertex subsets of size 3..5 (3 only when delta1 == 1) in shortlex
/// order (size ascending, lexicographic within a size) and reports the first
/// whose induced subgraph is not a cluster temporal graph. Any violating
/// subset of size <= 2 sits inside a violating 3-subset, so those sizes are
/// skipped; graphs on fewer than 3 vertices are checked whole.
SubsetCheckResult subset_characterisation_check(const TemporalGraph& g, const Params& p,
                                                int threads = 1);

/// Same scan with an explicit size cap; lets the delta1 == 1 specialisation
/// be cross-checked against the five-vertex bound.
SubsetCheckResult subset_characterisation_check_with_cap(const TemporalGraph& g, const Params& p,
                                                         int cap, int threads = 1);

}  // namespace tcg
