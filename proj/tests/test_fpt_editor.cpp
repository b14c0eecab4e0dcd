#include <doctest.h>

#include <random>

#include "tcg/fpt_editor.hpp"
#include "tcg/oracle.hpp"
#include "tcg/saturation.hpp"
#include "test_util.hpp"

using namespace tcg;
using tcg::test::graph_of;

TEST_CASE("fpt_solve on the five-vertex counterexample") {
    TemporalGraph ce5 = make_counterexample5(2, 3);
    Params p(2, 3);

    FptResult k1 = fpt_solve(ce5, p, 1);
    CHECK_FALSE(k1.decision);
    CHECK_FALSE(k1.witness.has_value());

    FptResult k2 = fpt_solve(ce5, p, 2);
    CHECK(k2.decision);
    REQUIRE(k2.witness.has_value());
    CHECK(k2.witness->size() <= 2);
    CHECK(is_cluster_temporal_graph(apply_modifications(ce5, *k2.witness), p));

    CHECK(min_edit_distance(ce5, p, 3) == 2);
    CHECK_FALSE(min_edit_distance(ce5, p, 1).has_value());
}

TEST_CASE("cluster temporal graphs need no edits") {
    TemporalGraph g = graph_of(2, {{0, 1, 1}, {0, 1, 2}});
    FptResult r = fpt_solve(g, Params(2, 3), 0);
    CHECK(r.decision);
    CHECK(r.witness->empty());
    CHECK(min_edit_distance(g, Params(2, 3), 2) == 0);
    CHECK(min_edit_distance(TemporalGraph{}, Params(1, 2), 0) == 0);
}

TEST_CASE("wedge needs exactly one edit") {
    TemporalGraph wedge = graph_of(3, {{0, 1, 1}, {1, 2, 1}});
    CHECK(min_edit_distance(wedge, Params(1, 2), 2) == 1);
}

TEST_CASE("two-vertex graphs with an in-block gap are editable") {
    // One block [1,3] that is not 1-dense; deleting either appearance fixes it.
    TemporalGraph g = graph_of(2, {{0, 1, 1}, {0, 1, 3}});
    Params p(1, 3);
    CHECK_FALSE(fpt_solve(g, p, 0).decision);
    CHECK(min_edit_distance(g, p, 2) == 1);
}

TEST_CASE("fpt decision matches the oracle on random instances") {
    std::mt19937_64 rng(71);
    OracleCaps caps{7, 6, 4};
    int yes = 0, no = 0;
    for (int round = 0; round < 160; ++round) {
        int d1 = test::draw(rng, 1, 3);
        Params p(d1, d1 + test::draw(rng, 1, 3));
        TemporalGraph g = gen_random(test::draw(rng, 2, 5), test::draw(rng, 1, 5), 0.45, 0.3,
                                     rng());
        int k = test::draw(rng, 0, 2);
        FptResult mine = fpt_solve(g, p, k);
        EtcOracleResult truth = etc_bruteforce(g, p, k, caps);
        CHECK(mine.decision == truth.decision);
        if (mine.decision) {
            ++yes;
            CHECK(mine.witness->size() <= static_cast<std::size_t>(k));
            CHECK(is_cluster_temporal_graph(apply_modifications(g, *mine.witness), p));
        } else {
            ++no;
        }
    }
    CHECK(yes >= 20);
    CHECK(no >= 20);
}

TEST_CASE("additions in witnesses never leave the input lifetime") {
    std::mt19937_64 rng(73);
    for (int round = 0; round < 60; ++round) {
        int d1 = test::draw(rng, 1, 2);
        Params p(d1, d1 + test::draw(rng, 1, 2));
        TemporalGraph g = gen_random(test::draw(rng, 2, 5), test::draw(rng, 2, 5), 0.5, 0.3,
                                     rng());
        FptResult r = fpt_solve(g, p, 2);
        if (!r.decision) continue;
        for (const Modification& m : *r.witness) {
            CHECK(m.te.t >= 1);
            CHECK(m.te.t <= g.lifetime());
        }
    }
}

TEST_CASE("delta1 = 1: three-subset scan decides exactly like five-subset scan") {
    std::mt19937_64 rng(83);
    for (int round = 0; round < 120; ++round) {
        Params p(1, test::draw(rng, 2, 5));
        TemporalGraph g = gen_random(test::draw(rng, 3, 7), test::draw(rng, 1, 6), 0.5, 0.35,
                                     rng());
        bool three = subset_characterisation_check_with_cap(g, p, 3).ok;
        bool five = subset_characterisation_check_with_cap(g, p, 5).ok;
        CHECK(three == five);
    }
}

TEST_CASE("perturbed planted instances are repaired within the toggle count") {
    std::mt19937_64 rng(79);
    for (int round = 0; round < 40; ++round) {
        int d1 = test::draw(rng, 1, 2);
        Params p(d1, d1 + test::draw(rng, 1, 2));
        int r = test::draw(rng, 0, 2);
        TemporalGraph g = gen_planted(test::draw(rng, 2, 6), test::draw(rng, 2, 5), p, rng(), r);
        std::optional<int> dist = min_edit_distance(g, p, r);
        REQUIRE(dist.has_value());
        CHECK(*dist <= r);
    }
}
