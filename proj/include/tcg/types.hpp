#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tcg {

/// Dense vertex identifier, 0..n-1 within one TemporalGraph.
using VertexId = int;

/// Closed integer interval [a,b] of timesteps, a <= b, a >= 1 for lifetimes.
struct Interval {
    int a = 1;
    int b = 1;

    Interval() = default;
    Interval(int a_, int b_) : a(a_), b(b_) {
        if (a > b) throw std::invalid_argument("interval: a > b");
    }

    int length() const { return b - a + 1; }
    bool contains(int t) const { return a <= t && t <= b; }

    friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// Gap between two intervals: 0 if they touch or overlap, otherwise the
/// smallest |s-t| over s in one, t in the other.
inline int interval_gap(const Interval& x, const Interval& y) {
    if (x.b < y.a) return y.a - x.b;
    if (y.b < x.a) return x.a - y.b;
    return 0;
}

/// Undirected static edge, canonically u < v.
struct StaticEdge {
    VertexId u = 0;
    VertexId v = 0;

    StaticEdge() = default;
    StaticEdge(VertexId x, VertexId y) : u(x < y ? x : y), v(x < y ? y : x) {
        if (x == y) throw std::invalid_argument("static edge: self-loop");
    }

    bool shares_endpoint(const StaticEdge& o) const {
        return u == o.u || u == o.v || v == o.u || v == o.v;
    }

    friend auto operator<=>(const StaticEdge&, const StaticEdge&) = default;
};

/// One appearance (e,t) of a static edge at a timestep.
struct TimeEdge {
    StaticEdge e;
    int t = 1;

    TimeEdge() = default;
    TimeEdge(StaticEdge e_, int t_) : e(e_), t(t_) {
        if (t < 1) throw std::invalid_argument("time-edge: t < 1");
    }
    TimeEdge(VertexId u, VertexId v, int t_) : TimeEdge(StaticEdge(u, v), t_) {}

    friend auto operator<=>(const TimeEdge&, const TimeEdge&) = default;
};

/// Canonical ordering used everywhere a list of time-edges is serialised or
/// enumerated: time-major, then endpoints.
inline bool time_major_less(const TimeEdge& x, const TimeEdge& y) {
    if (x.t != y.t) return x.t < y.t;
    return x.e < y.e;
}

/// Candidate clique blueprint: a vertex set with a time interval.
struct Template {
    std::vector<VertexId> vertices;  // sorted ascending, no duplicates
    Interval span;

    friend bool operator==(const Template&, const Template&) = default;
};

/// Density/independence parameters. delta2 > delta1 >= 1 always.
struct Params {
    int delta1 = 1;
    int delta2 = 2;

    Params() = default;
    Params(int d1, int d2) : delta1(d1), delta2(d2) {
        if (d1 < 1) throw std::invalid_argument("params: delta1 < 1");
        if (d2 <= d1) throw std::invalid_argument("params: delta2 must exceed delta1");
    }
};

enum class ModOp : std::uint8_t { Delete = 0, Add = 1 };

/// One toggle of a time-edge.
struct Modification {
    ModOp op = ModOp::Delete;
    TimeEdge te;

    friend bool operator==(const Modification&, const Modification&) = default;
};

/// Total order (t, u, v, op) with delete < add.
inline bool canonical_less(const Modification& x, const Modification& y) {
    if (x.te != y.te) return time_major_less(x.te, y.te);
    return x.op < y.op;
}

/// Ordered set of toggles; kept sorted in the canonical order.
using ModificationSet = std::vector<Modification>;

void sort_canonical(ModificationSet& mods);

}  // namespace tcg
