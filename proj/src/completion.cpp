#include "tcg/completion.hpp"

#include <algorithm>
#include <map>

namespace tcg {

int min_insertions_for_gap(int gap, int delta1) {
    if (gap < 1) throw std::invalid_argument("gap < 1");
    if (delta1 < 1) throw std::invalid_argument("delta1 < 1");
    return (gap + delta1 - 1) / delta1 - 1;
}

namespace {

// Canonical filler times for one gap (prev, next): prev + delta1 * j.
void fill_gap(int prev, int next, int delta1, std::vector<int>& out) {
    int m = min_insertions_for_gap(next - prev, delta1);
    for (int j = 1; j <= m; ++j) out.push_back(prev + delta1 * j);
}

}  // namespace

CompletionResult complete(const TemporalGraph& g, const Params& p) {
    CompletionResult res;
    SaturatedPartition part = saturated_partition(g, p.delta2);
    for (const SaturatedBlock& b : part.blocks) {
        const Interval span = b.tmpl.span;
        std::map<StaticEdge, std::vector<int>> per_pair;
        for (const TimeEdge& te : b.edges) per_pair[te.e].push_back(te.t);
        const std::vector<VertexId>& xs = b.tmpl.vertices;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            for (std::size_t j = i + 1; j < xs.size(); ++j) {
                StaticEdge e(xs[i], xs[j]);
                auto it = per_pair.find(e);
                std::vector<int> fill;
                if (it == per_pair.end()) {
                    // A pair with no appearance is never dense, whatever the
                    // interval length: at least one addition is required.
                    if (min_insertions_for_gap(span.length() + 1, p.delta1) == 0)
                        fill.push_back(span.a);
                    else
                        fill_gap(span.a - 1, span.b + 1, p.delta1, fill);
                } else {
                    std::sort(it->second.begin(), it->second.end());
                    int prev = span.a - 1;
                    for (int t : it->second) {
                        fill_gap(prev, t, p.delta1, fill);
                        prev = t;
                    }
                    fill_gap(prev, span.b + 1, p.delta1, fill);
                }
                for (int t : fill) res.additions.push_back({ModOp::Add, TimeEdge(e, t)});
            }
        }
    }
    sort_canonical(res.additions);
    res.min_additions = static_cast<long long>(res.additions.size());
    return res;
}

}  // namespace tcg
