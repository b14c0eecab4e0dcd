#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tcg/types.hpp"

namespace tcg {

/// A temporal graph: an interned vertex set plus, per static edge, the sorted
/// set of timesteps at which it appears. Values are treated as immutable once
/// built; all operations below return new graphs.
class TemporalGraph {
public:
    TemporalGraph() = default;

    /// Interns a label, returning its dense id (existing id if already known).
    VertexId intern(std::string_view label);

    std::optional<VertexId> find_vertex(std::string_view label) const;

    /// Records appearance (uv, t). Duplicates merge silently; u == v or t < 1
    /// is an error.
    void add_appearance(VertexId u, VertexId v, int t);
    void add_appearance(std::string_view u, std::string_view v, int t);

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    const std::string& label(VertexId v) const;
    std::vector<std::string> labels_sorted() const;

    const std::map<StaticEdge, std::vector<int>>& appearances() const { return apps_; }
    const std::vector<int>* times(VertexId u, VertexId v) const;
    bool has_time_edge(const TimeEdge& te) const;

    std::size_t time_edge_count() const;
    /// All time-edges in (t, u, v) order.
    std::vector<TimeEdge> time_edges() const;

    /// Largest appearance time; 0 for an edgeless graph.
    int lifetime() const;
    /// Smallest appearance time; 0 for an edgeless graph.
    int min_time() const;

    /// Label-based equality: same vertex label set and the same appearances
    /// between identically labelled endpoints.
    friend bool operator==(const TemporalGraph& x, const TemporalGraph& y);

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, VertexId> ids_;
    std::map<StaticEdge, std::vector<int>> apps_;

    friend TemporalGraph apply_modifications(const TemporalGraph&, const ModificationSet&);
};

/// True iff every window [tau, tau+delta1-1], tau in [a, max(a, b-delta1+1)],
/// contains an element of `times`. Windows may overhang past b, and supplied
/// times outside [a,b] count; callers choose which appearance list to pass.
bool is_dense(std::span<const int> times, int delta1, const Interval& interval);

/// Template generated by a non-empty time-edge set: (V(S), [min t, max t]).
Template generate_template(std::span<const TimeEdge> s);

/// True iff every vertex pair of V(S) has its appearances within S dense over
/// the generated lifetime.
bool is_temporal_clique(std::span<const TimeEdge> s, int delta1);

/// Subgraph induced by vertex set `a` (subset of V). Vertices are re-interned
/// in ascending id order; isolated members of `a` are retained.
TemporalGraph induce(const TemporalGraph& g, std::span<const VertexId> a);

/// Time-edges with t in `interval`; vertex set unchanged.
TemporalGraph restrict(const TemporalGraph& g, const Interval& interval);

/// Time-edges present in exactly one of the two graphs, in g1's id space and
/// (t,u,v) order. The graphs must have identical vertex label sets.
std::vector<TimeEdge> symmetric_difference(const TemporalGraph& g1, const TemporalGraph& g2);

/// Applies toggles: each Add must target an absent time-edge, each Delete a
/// present one ("non-toggling modification" otherwise).
TemporalGraph apply_modifications(const TemporalGraph& g, const ModificationSet& pi);

/// Toggle set transforming g1 into g2 (canonically sorted).
ModificationSet modifications_between(const TemporalGraph& g1, const TemporalGraph& g2);

/// Shifts all appearance times so the earliest becomes 1. Explicit utility;
/// never applied automatically.
TemporalGraph normalise_times(const TemporalGraph& g);

}  // namespace tcg
