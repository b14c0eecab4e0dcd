#include "tcg/temporal_graph.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace tcg {

void sort_canonical(ModificationSet& mods) {
    std::sort(mods.begin(), mods.end(), canonical_less);
}

VertexId TemporalGraph::intern(std::string_view label) {
    if (label.empty()) throw std::invalid_argument("empty vertex label");
    auto it = ids_.find(std::string(label));
    if (it != ids_.end()) return it->second;
    VertexId id = static_cast<VertexId>(labels_.size());
    labels_.emplace_back(label);
    ids_.emplace(labels_.back(), id);
    return id;
}

std::optional<VertexId> TemporalGraph::find_vertex(std::string_view label) const {
    auto it = ids_.find(std::string(label));
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

void TemporalGraph::add_appearance(VertexId u, VertexId v, int t) {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw std::out_of_range("vertex id out of range");
    TimeEdge te(u, v, t);  // validates self-loop and t >= 1
    auto& list = apps_[te.e];
    auto it = std::lower_bound(list.begin(), list.end(), t);
    if (it != list.end() && *it == t) return;  // duplicate appearance merges
    list.insert(it, t);
}

void TemporalGraph::add_appearance(std::string_view u, std::string_view v, int t) {
    VertexId iu = intern(u);
    VertexId iv = intern(v);
    add_appearance(iu, iv, t);
}

const std::string& TemporalGraph::label(VertexId v) const {
    if (v < 0 || v >= vertex_count()) throw std::out_of_range("vertex id out of range");
    return labels_[static_cast<std::size_t>(v)];
}

std::vector<std::string> TemporalGraph::labels_sorted() const {
    std::vector<std::string> out = labels_;
    std::sort(out.begin(), out.end());
    return out;
}

const std::vector<int>* TemporalGraph::times(VertexId u, VertexId v) const {
    auto it = apps_.find(StaticEdge(u, v));
    return it == apps_.end() ? nullptr : &it->second;
}

bool TemporalGraph::has_time_edge(const TimeEdge& te) const {
    const std::vector<int>* list = times(te.e.u, te.e.v);
    if (!list) return false;
    return std::binary_search(list->begin(), list->end(), te.t);
}

std::size_t TemporalGraph::time_edge_count() const {
    std::size_t n = 0;
    for (const auto& [e, ts] : apps_) n += ts.size();
    return n;
}

std::vector<TimeEdge> TemporalGraph::time_edges() const {
    std::vector<TimeEdge> out;
    out.reserve(time_edge_count());
    for (const auto& [e, ts] : apps_)
        for (int t : ts) out.emplace_back(e, t);
    std::sort(out.begin(), out.end(), time_major_less);
    return out;
}

int TemporalGraph::lifetime() const {
    int best = 0;
    for (const auto& [e, ts] : apps_) best = std::max(best, ts.back());
    return best;
}

int TemporalGraph::min_time() const {
    if (apps_.empty()) return 0;
    int best = 0;
    for (const auto& [e, ts] : apps_) best = best == 0 ? ts.front() : std::min(best, ts.front());
    return best;
}

bool operator==(const TemporalGraph& x, const TemporalGraph& y) {
    if (x.labels_sorted() != y.labels_sorted()) return false;
    if (x.apps_.size() != y.apps_.size()) return false;
    // Compare appearances via labels; id assignment may differ.
    std::map<std::pair<std::string, std::string>, const std::vector<int>*> xs;
    for (const auto& [e, ts] : x.apps_) {
        std::string lu = x.label(e.u), lv = x.label(e.v);
        if (lv < lu) std::swap(lu, lv);
        xs[{lu, lv}] = &ts;
    }
    for (const auto& [e, ts] : y.apps_) {
        std::string lu = y.label(e.u), lv = y.label(e.v);
        if (lv < lu) std::swap(lu, lv);
        auto it = xs.find({lu, lv});
        if (it == xs.end() || *it->second != ts) return false;
    }
    return true;
}

bool is_dense(std::span<const int> times, int delta1, const Interval& interval) {
    if (delta1 < 1) throw std::invalid_argument("delta1 < 1");
    const int a = interval.a;
    const int tau_end = std::max(a, interval.b - delta1 + 1);
    // A window starting at tau is empty iff tau falls strictly between two
    // consecutive appearances p < q with q - p > delta1, at distance > 0 from
    // p and >= delta1 from q. Scan consecutive pairs with +-inf sentinels.
    long long prev = std::numeric_limits<long long>::min() / 4;
    for (std::size_t i = 0; i <= times.size(); ++i) {
        long long next = (i == times.size()) ? std::numeric_limits<long long>::max() / 4
                                             : static_cast<long long>(times[i]);
        long long lo = std::max(prev + 1, static_cast<long long>(a));
        long long hi = std::min(next - delta1, static_cast<long long>(tau_end));
        if (lo <= hi) return false;  // some window [tau, tau+delta1-1] is empty
        prev = next;
    }
    return true;
}

Template generate_template(std::span<const TimeEdge> s) {
    if (s.empty()) throw std::invalid_argument("empty time-edge set");
    std::set<VertexId> verts;
    int lo = s[0].t, hi = s[0].t;
    for (const TimeEdge& te : s) {
        verts.insert(te.e.u);
        verts.insert(te.e.v);
        lo = std::min(lo, te.t);
        hi = std::max(hi, te.t);
    }
    Template c;
    c.vertices.assign(verts.begin(), verts.end());
    c.span = Interval(lo, hi);
    return c;
}

bool is_temporal_clique(std::span<const TimeEdge> s, int delta1) {
    Template c = generate_template(s);  // rejects empty s
    std::map<StaticEdge, std::vector<int>> per_pair;
    for (const TimeEdge& te : s) per_pair[te.e].push_back(te.t);
    for (auto& [e, ts] : per_pair) std::sort(ts.begin(), ts.end());
    const std::vector<int> none;
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < c.vertices.size(); ++j) {
            auto it = per_pair.find(StaticEdge(c.vertices[i], c.vertices[j]));
            const std::vector<int>& ts = it == per_pair.end() ? none : it->second;
            if (!is_dense(ts, delta1, c.span)) return false;
        }
    }
    return true;
}

TemporalGraph induce(const TemporalGraph& g, std::span<const VertexId> a) {
    std::set<VertexId> keep;
    for (VertexId v : a) {
        if (v < 0 || v >= g.vertex_count()) throw std::out_of_range("induce: vertex not in graph");
        keep.insert(v);
    }
    TemporalGraph out;
    for (VertexId v : keep) out.intern(g.label(v));
    for (const auto& [e, ts] : g.appearances()) {
        if (!keep.count(e.u) || !keep.count(e.v)) continue;
        VertexId u2 = *out.find_vertex(g.label(e.u));
        VertexId v2 = *out.find_vertex(g.label(e.v));
        for (int t : ts) out.add_appearance(u2, v2, t);
    }
    return out;
}

TemporalGraph restrict(const TemporalGraph& g, const Interval& interval) {
    TemporalGraph out;
    for (VertexId v = 0; v < g.vertex_count(); ++v) out.intern(g.label(v));
    for (const auto& [e, ts] : g.appearances())
        for (int t : ts)
            if (interval.contains(t)) out.add_appearance(e.u, e.v, t);
    return out;
}

namespace {

// Re-expresses g2's time-edges in g1's id space; throws if label sets differ.
std::vector<TimeEdge> translated_edges(const TemporalGraph& g1, const TemporalGraph& g2) {
    if (g1.labels_sorted() != g2.labels_sorted())
        throw std::invalid_argument("vertex universe mismatch");
    std::vector<TimeEdge> out;
    out.reserve(g2.time_edge_count());
    for (const auto& [e, ts] : g2.appearances()) {
        VertexId u = *g1.find_vertex(g2.label(e.u));
        VertexId v = *g1.find_vertex(g2.label(e.v));
        for (int t : ts) out.emplace_back(u, v, t);
    }
    std::sort(out.begin(), out.end(), time_major_less);
    return out;
}

}  // namespace

std::vector<TimeEdge> symmetric_difference(const TemporalGraph& g1, const TemporalGraph& g2) {
    std::vector<TimeEdge> e1 = g1.time_edges();
    std::vector<TimeEdge> e2 = translated_edges(g1, g2);
    std::sort(e1.begin(), e1.end(), time_major_less);
    std::vector<TimeEdge> out;
    std::set_symmetric_difference(e1.begin(), e1.end(), e2.begin(), e2.end(),
                                  std::back_inserter(out), time_major_less);
    return out;
}

TemporalGraph apply_modifications(const TemporalGraph& g, const ModificationSet& pi) {
    TemporalGraph out = g;
    for (const Modification& m : pi) {
        auto it = out.apps_.find(m.te.e);
        bool present = false;
        if (it != out.apps_.end())
            present = std::binary_search(it->second.begin(), it->second.end(), m.te.t);
        if (m.op == ModOp::Add) {
            if (present) throw std::invalid_argument("non-toggling modification");
            out.add_appearance(m.te.e.u, m.te.e.v, m.te.t);
        } else {
            if (!present) throw std::invalid_argument("non-toggling modification");
            auto& ts = it->second;
            ts.erase(std::lower_bound(ts.begin(), ts.end(), m.te.t));
            if (ts.empty()) out.apps_.erase(it);
        }
    }
    return out;
}

ModificationSet modifications_between(const TemporalGraph& g1, const TemporalGraph& g2) {
    ModificationSet mods;
    for (const TimeEdge& te : symmetric_difference(g1, g2))
        mods.push_back({g1.has_time_edge(te) ? ModOp::Delete : ModOp::Add, te});
    sort_canonical(mods);
    return mods;
}

TemporalGraph normalise_times(const TemporalGraph& g) {
    int lo = g.min_time();
    if (lo <= 1) return g;
    TemporalGraph out;
    for (VertexId v = 0; v < g.vertex_count(); ++v) out.intern(g.label(v));
    for (const auto& [e, ts] : g.appearances())
        for (int t : ts) out.add_appearance(e.u, e.v, t - lo + 1);
    return out;
}

}  // namespace tcg
