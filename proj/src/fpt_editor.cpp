#include "tcg/fpt_editor.hpp"

#include <algorithm>
#include <set>

#include "tcg/saturation.hpp"

namespace tcg {

namespace {

struct Search {
    const Params& params;
    int lifetime;  // of the root input (additions stay within it)
    ModificationSet path;
    std::set<TimeEdge> touched;

    bool run(const TemporalGraph& g, int budget, ModificationSet& out) {
        if (is_cluster_temporal_graph(g, params)) {
            out = path;
            sort_canonical(out);
            return true;
        }
        if (budget == 0) return false;
        SubsetCheckResult chk = subset_characterisation_check(g, params);
        // Recognition failed, so the characterisation guarantees a violator.
        if (chk.ok || !chk.violator) throw std::logic_error("recognition/characterisation disagree");
        const std::vector<VertexId>& w = *chk.violator;

        for (std::size_t i = 0; i < w.size(); ++i) {
            for (std::size_t j = i + 1; j < w.size(); ++j) {
                StaticEdge e(w[i], w[j]);
                for (int t = 1; t <= lifetime; ++t) {
                    TimeEdge te(e, t);
                    if (touched.count(te)) continue;  // one toggle per time-edge per path
                    Modification m{g.has_time_edge(te) ? ModOp::Delete : ModOp::Add, te};
                    touched.insert(te);
                    path.push_back(m);
                    bool ok = run(apply_modifications(g, {m}), budget - 1, out);
                    path.pop_back();
                    touched.erase(te);
                    if (ok) return true;
                }
            }
        }
        return false;
    }
};

}  // namespace

FptResult fpt_solve(const TemporalGraph& g, const Params& p, int k) {
    if (k < 0) throw std::invalid_argument("budget < 0");
    Search s{p, g.lifetime(), {}, {}};
    ModificationSet witness;
    if (s.run(g, k, witness)) return {true, std::move(witness)};
    return {false, std::nullopt};
}

std::optional<int> min_edit_distance(const TemporalGraph& g, const Params& p, int k_max) {
    if (k_max < 0) throw std::invalid_argument("k_max < 0");
    for (int k = 0; k <= k_max; ++k)
        if (fpt_solve(g, p, k).decision) return k;
    return std::nullopt;
}

}  // namespace tcg
