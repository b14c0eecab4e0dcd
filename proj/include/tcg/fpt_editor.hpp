#pragma once

#include <optional>

#include "tcg/temporal_graph.hpp"
#include "tcg/types.hpp"

namespace tcg {

struct FptResult {
    bool decision = false;
    std::optional<ModificationSet> witness;  // verified, |witness| <= k
};

/// Search tree over violating vertex sets of size <= 5 (<= 3 when delta1 is
/// 1). At each node: if the graph is a cluster temporal graph, succeed; at
/// budget 0, fail; otherwise branch on every toggle of a pair within the
/// shortlex-first violator at every t in [1, T], T fixed from the input
/// graph. Time-edges already toggled on the current branch path are skipped.
/// Branch order: pairs by (min id, max id), times ascending.
FptResult fpt_solve(const TemporalGraph& g, const Params& p, int k);

/// Smallest k <= k_max for which fpt_solve succeeds, if any.
std::optional<int> min_edit_distance(const TemporalGraph& g, const Params& p, int k_max);

}  // namespace tcg
