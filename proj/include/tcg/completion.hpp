#pragma once

#include "tcg/saturation.hpp"
#include "tcg/temporal_graph.hpp"

namespace tcg {

/// Minimum number of points strictly between two markers at distance `gap`
/// leaving every consecutive distance <= delta1: ceil(gap/delta1) - 1.
int min_insertions_for_gap(int gap, int delta1);

struct CompletionResult {
    long long min_additions = 0;
    ModificationSet additions;  // canonical order, adds only

    bool decision(long long k) const { return min_additions <= k; }
};

/// Exact minimum-addition completion: per saturated block, fills every vertex
/// pair's gaps (with sentinels a-1 and b+1 around the block interval) at the
/// arithmetic progression prev + delta1, prev + 2*delta1, ...
CompletionResult complete(const TemporalGraph& g, const Params& p);

}  // namespace tcg
