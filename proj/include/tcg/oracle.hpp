#pragma once

#include <cstdint>
#include <optional>

#include "tcg/temporal_graph.hpp"
#include "tcg/types.hpp"

namespace tcg {

/// Scale guards for the brute-force solvers; exceeding any is an error
/// ("oracle scale limit"), never a silent truncation.
struct OracleCaps {
    int max_vertices = 7;
    int max_lifetime = 6;
    int max_budget = 3;
};

struct EtcOracleResult {
    bool decision = false;
    /// Canonically first success; its size is the exact minimum over sets of
    /// size <= k when decision holds.
    std::optional<ModificationSet> witness;
};

/// Exhaustive ETC: enumerates modification sets over {(u,v,t) : u < v,
/// t in [1,T]} by size ascending, then lexicographically by slot, returning
/// the first whose application passes recognition.
EtcOracleResult etc_bruteforce(const TemporalGraph& g, const Params& p, int k,
                               const OracleCaps& caps = {});

/// Addition-only variant (CTC ground truth); enumerates absent slots only.
EtcOracleResult ctc_bruteforce(const TemporalGraph& g, const Params& p, int k,
                               const OracleCaps& caps = {});

/// Temporal-matching instance: a temporal graph on a path, an independence
/// gap delta, and a target matching size k.
struct TmInstance {
    TemporalGraph graph;
    int delta = 2;
    int k = 0;
};

/// True iff some k time-edges are pairwise delta-independent (disjoint static
/// edges or time gap >= delta).
bool tm_bruteforce(const TmInstance& inst, const OracleCaps& caps = {});

struct ReducedEtc {
    TemporalGraph graph;   // each (e,t) mapped to (e, 4t-3)
    Params params;         // (1, 5)
    long long budget = 0;  // |E(P)| - k; negative when k exceeds |E(P)|
    bool nonstandard_delta = false;  // instance delta != 2
};

/// Hardness-reduction construction from temporal matching to ETC.
ReducedEtc reduce_tm_to_etc(const TmInstance& inst);

/// Deterministic planted instance: pairwise delta2-independent templates on
/// disjoint vertex groups (possibly several per group, >= delta2 apart),
/// every pair filled delta1-densely, then r random toggles.
TemporalGraph gen_planted(int n, int T, const Params& p, std::uint64_t seed, int perturbations);

/// Erdos-Renyi static skeleton; each surviving edge keeps each t in [1,T]
/// independently with time_prob. Edges with no appearance are dropped.
TemporalGraph gen_random(int n, int T, double edge_prob, double time_prob, std::uint64_t seed);

/// Path-shaped random instance with at most sigma appearances per edge.
TemporalGraph gen_random_path(int n, int T, int sigma, std::uint64_t seed);

/// The five-vertex counterexample: fails recognition at (delta1, delta2)
/// while every induced subgraph on at most four vertices passes. Requires
/// delta2 > delta1 > 1.
TemporalGraph make_counterexample5(int delta1, int delta2);

}  // namespace tcg
