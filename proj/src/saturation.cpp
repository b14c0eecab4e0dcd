#include "tcg/saturation.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <future>
#include <list>

namespace tcg {

bool templates_independent(const Template& c1, const Template& c2, int delta2) {
    if (delta2 < 1) throw std::invalid_argument("delta2 < 1");
    bool disjoint = true;
    // Both vertex lists are sorted.
    for (std::size_t i = 0, j = 0; i < c1.vertices.size() && j < c2.vertices.size();) {
        if (c1.vertices[i] < c2.vertices[j]) ++i;
        else if (c1.vertices[i] > c2.vertices[j]) ++j;
        else { disjoint = false; break; }
    }
    return disjoint || interval_gap(c1.span, c2.span) >= delta2;
}

namespace {

// Vertex set as a bitmask so block comparisons cost O(n/64).
struct Mask {
    std::vector<std::uint64_t> w;
    explicit Mask(int n) : w(static_cast<std::size_t>((n + 63) / 64), 0) {}
    void set(int i) { w[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63); }
    bool intersects(const Mask& o) const {
        for (std::size_t k = 0; k < w.size(); ++k)
            if (w[k] & o.w[k]) return true;
        return false;
    }
    void unite(const Mask& o) {
        for (std::size_t k = 0; k < w.size(); ++k) w[k] |= o.w[k];
    }
};

struct Block {
    Mask verts;
    Interval span;
    std::vector<std::uint32_t> members;  // indices into the input edge list
};

bool blocks_independent(const Block& x, const Block& y, int delta2) {
    return !x.verts.intersects(y.verts) || interval_gap(x.span, y.span) >= delta2;
}

}  // namespace

SaturatedPartition saturated_partition_of_list(int vertex_count,
                                               const std::vector<TimeEdge>& edges, int delta2) {
    if (delta2 < 1) throw std::invalid_argument("delta2 < 1");
    std::list<Block> cur;
    for (std::uint32_t i = 0; i < edges.size(); ++i) {
        Block b{Mask(vertex_count), Interval(edges[i].t, edges[i].t), {i}};
        b.verts.set(edges[i].e.u);
        b.verts.set(edges[i].e.v);
        cur.push_back(std::move(b));
    }

    // List-merging: pop the front element, merge it with the first
    // non-independent remaining element (if any), push to the next list;
    // repeat passes until one completes with no merge.
    bool merged = true;
    while (merged) {
        merged = false;
        std::list<Block> next;
        while (!cur.empty()) {
            Block head = std::move(cur.front());
            cur.pop_front();
            for (auto it = cur.begin(); it != cur.end(); ++it) {
                if (!blocks_independent(head, *it, delta2)) {
                    head.verts.unite(it->verts);
                    head.span = Interval(std::min(head.span.a, it->span.a),
                                         std::max(head.span.b, it->span.b));
                    head.members.insert(head.members.end(), it->members.begin(),
                                        it->members.end());
                    cur.erase(it);
                    merged = true;
                    break;
                }
            }
            next.push_back(std::move(head));
        }
        cur = std::move(next);
    }

    SaturatedPartition out;
    for (Block& b : cur) {
        SaturatedBlock sb;
        sb.edges.reserve(b.members.size());
        for (std::uint32_t i : b.members) sb.edges.push_back(edges[i]);
        std::sort(sb.edges.begin(), sb.edges.end(), time_major_less);
        sb.tmpl = generate_template(sb.edges);
        out.blocks.push_back(std::move(sb));
    }
    std::sort(out.blocks.begin(), out.blocks.end(),
              [](const SaturatedBlock& x, const SaturatedBlock& y) {
                  return time_major_less(x.edges.front(), y.edges.front());
              });
    return out;
}

SaturatedPartition saturated_partition(const TemporalGraph& g, int delta2) {
    return saturated_partition_of_list(g.vertex_count(), g.time_edges(), delta2);
}

namespace {

bool block_is_clique(const SaturatedBlock& b, int delta1) {
    return is_temporal_clique(b.edges, delta1);
}

}  // namespace

bool is_cluster_temporal_graph(const TemporalGraph& g, const Params& p) {
    SaturatedPartition part = saturated_partition(g, p.delta2);
    for (const SaturatedBlock& b : part.blocks)
        if (!block_is_clique(b, p.delta1)) return false;
    return true;
}

namespace {

// Next k-combination of {0..n-1} in lexicographic order; false when done.
bool next_combination(std::vector<VertexId>& c, int n) {
    int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[static_cast<std::size_t>(i)] < n - k + i) {
            ++c[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::vector<VertexId>> subsets_shortlex(int n, int lo, int hi) {
    std::vector<std::vector<VertexId>> out;
    for (int k = lo; k <= hi && k <= n; ++k) {
        std::vector<VertexId> c(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
        do out.push_back(c);
        while (next_combination(c, n));
    }
    return out;
}

}  // namespace

SubsetCheckResult subset_characterisation_check(const TemporalGraph& g, const Params& p,
                                                int threads) {
    return subset_characterisation_check_with_cap(g, p, p.delta1 == 1 ? 3 : 5, threads);
}

SubsetCheckResult subset_characterisation_check_with_cap(const TemporalGraph& g, const Params& p,
                                                         int cap, int threads) {
    if (threads < 1) throw std::invalid_argument("threads < 1");
    if (cap < 3) throw std::invalid_argument("cap < 3");
    const int n = g.vertex_count();
    if (n < 3) {
        if (is_cluster_temporal_graph(g, p)) return {true, std::nullopt};
        std::vector<VertexId> all(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
        return {false, all};
    }
    std::vector<std::vector<VertexId>> subsets = subsets_shortlex(n, 3, cap);

    auto violates = [&](const std::vector<VertexId>& s) {
        return !is_cluster_temporal_graph(induce(g, s), p);
    };

    if (threads == 1) {
        for (const auto& s : subsets)
            if (violates(s)) return {false, s};
        return {true, std::nullopt};
    }

    // Batched parallel scan; the reported violator stays the shortlex-first
    // one because batches are examined in order.
    const std::size_t batch = std::max<std::size_t>(64, subsets.size() / 64 + 1);
    for (std::size_t start = 0; start < subsets.size(); start += batch) {
        std::size_t end = std::min(subsets.size(), start + batch);
        std::atomic<std::size_t> first_bad{end};
        std::vector<std::future<void>> jobs;
        std::atomic<std::size_t> cursor{start};
        for (int w = 0; w < threads; ++w) {
            jobs.push_back(std::async(std::launch::async, [&] {
                for (std::size_t i = cursor.fetch_add(1); i < end; i = cursor.fetch_add(1)) {
                    if (i >= first_bad.load()) break;
                    if (violates(subsets[i])) {
                        std::size_t cur = first_bad.load();
                        while (i < cur && !first_bad.compare_exchange_weak(cur, i)) {}
                    }
                }
            }));
        }
        for (auto& j : jobs) j.get();
        if (first_bad.load() != end) return {false, subsets[first_bad.load()]};
    }
    return {true, std::nullopt};
}

}  // namespace tcg
