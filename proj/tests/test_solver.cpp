#include <algorithm>
#include <random>

#include "bcast/families.hpp"
#include "bcast/oracle.hpp"
#include "bcast/scheme.hpp"
#include "bcast/solver.hpp"
#include "catalog.hpp"
#include "doctest.h"

using namespace bcast;

namespace {

Graph k1() {
    Graph g;
    g.add_vertex({"z", "0"});
    return g;
}

std::vector<SolverConfig> ablations() {
    std::vector<SolverConfig> out(8);
    out[1].prune_doubling = false;
    out[2].prune_distance = false;
    out[3].prune_flow = false;
    out[4].prune_dominance = false;
    out[5].decompose = false;
    out[6].twin_symmetry = false;
    out[7].prune_doubling = out[7].prune_distance = out[7].prune_flow = out[7].prune_dominance = false;
    out[7].decompose = out[7].twin_symmetry = false;
    return out;
}

}  // namespace

TEST_CASE("lower bounds") {
    BinomialTree bt = binomial_tree(3);
    CHECK(lower_bound(bt.graph, bt.root) == 3);
    CHECK(lower_bound(path(4).graph, {"path", "0"}) == 3);
    CHECK(lower_bound(testing::complete_graph(4), {"k", "2"}) == 2);
}

TEST_CASE("broadcast time from a vertex") {
    SolveResult p = broadcast_time_from(path(4).graph, {"path", "0"});
    CHECK(p.exact());
    CHECK(p.time == 3);
    BinomialTree bt = binomial_tree(3);
    CHECK(broadcast_time_from(bt.graph, bt.root).time == 3);
    KnodelGraph kg = knodel(6);
    SolveResult k = broadcast_time_from(kg.graph, kg.vertex(0));
    CHECK(k.time == oracle_broadcast_time(kg.graph, {kg.vertex(0)}));
    REQUIRE(k.witness);
    CHECK(validate_scheme(kg.graph, *k.witness) == k.time);
    CHECK(k.proven_lower == k.time);
}

TEST_CASE("whole-graph broadcast time and broadcast graphs") {
    CHECK(broadcast_time(path(4).graph) == 3);
    CHECK(broadcast_time(k1()) == 0);
    KnodelGraph kg = knodel(6);
    int oracle_max = 0;
    for (const auto& v : kg.graph.labels()) oracle_max = std::max(oracle_max, oracle_broadcast_time(kg.graph, {v}));
    CHECK(broadcast_time(kg.graph) == oracle_max);
    CHECK(is_broadcast_graph(k1()));
    CHECK(is_broadcast_graph(kg.graph));
    CHECK_FALSE(is_broadcast_graph(path(4).graph));
    CHECK(is_broadcast_graph(knodel(16).graph));
}

TEST_CASE("disconnected input is rejected") {
    Graph g;
    g.add_vertex({"a", "0"});
    g.add_vertex({"a", "1"});
    CHECK_THROWS_AS(broadcast_time_from(g, {"a", "0"}), SolverError);
    CHECK_THROWS_AS(broadcast_center(g), SolverError);
}

TEST_CASE("solver agrees with the oracle and its witnesses hold") {
    for (const auto& g : testing::small_catalog())
        for (const auto& v : g.labels()) {
            SolveResult r = broadcast_time_from(g, v);
            REQUIRE(r.exact());
            CHECK(r.time == oracle_broadcast_time(g, {v}));
            REQUIRE(r.witness);
            CHECK(validate_scheme(g, *r.witness) == r.time);
            CHECK(lower_bound(g, v) <= r.time);
        }
}

TEST_CASE("switching pruning rules off never changes answers") {
    const auto& graphs = testing::small_catalog();
    const auto configs = ablations();
    for (std::size_t i = 0; i < graphs.size(); i += 3)
        for (const auto& v : graphs[i].labels()) {
            const int want = oracle_broadcast_time(graphs[i], {v});
            for (const auto& cfg : configs) CHECK(broadcast_time_from(graphs[i], v, cfg).time == want);
        }
}

TEST_CASE("larger random graphs against the oracle") {
    std::mt19937 rng(31);
    OracleConfig ocfg;
    ocfg.max_vertices = 12;
    for (int i = 0; i < 40; ++i) {
        Graph g = testing::random_connected(8 + static_cast<int>(rng() % 5), 0.12, rng);
        const VertexLabel v = g.label(static_cast<int>(rng() % g.vertex_count()));
        CHECK(broadcast_time_from(g, v).time == oracle_broadcast_time(g, {v}, ocfg));
    }
}

TEST_CASE("worker count does not change answers or witnesses") {
    KnodelGraph kg = knodel(10);
    SolverConfig one, four;
    four.workers = 4;
    auto a = broadcast_times(kg.graph, one);
    auto b = broadcast_times(kg.graph, four);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].time == b[i].time);
        REQUIRE(a[i].witness);
        REQUIRE(b[i].witness);
        CHECK(a[i].witness->rounds == b[i].witness->rounds);
    }
}

TEST_CASE("budgets give honest lower bounds") {
    std::mt19937 rng(2);
    Graph g = testing::random_connected(40, 0.06, rng);
    SolverConfig cfg;
    cfg.node_budget = 5;
    SolveResult r = broadcast_time_from(g, g.label(0), cfg);
    if (!r.exact()) {
        CHECK_FALSE(r.witness);
        CHECK(r.proven_lower >= lower_bound(g, g.label(0)));
        SolveResult full = broadcast_time_from(g, g.label(0));
        CHECK(r.proven_lower <= full.time);
    }
    Decision d = decide_within(g, {g.label(0)}, 100, cfg);
    CHECK(d.verdict != Feasibility::Infeasible);
}

TEST_CASE("decide_within with several origins") {
    Path p = path(7);
    CHECK(decide_within(p.graph, {p.first, p.last}, 3).verdict == Feasibility::Feasible);
    CHECK(decide_within(p.graph, {p.first, p.last}, 2).verdict == Feasibility::Infeasible);
    Decision d = decide_within(p.graph, {p.first, p.last}, 3);
    REQUIRE(d.witness);
    CHECK(validate_scheme(p.graph, *d.witness) <= 3);
}

TEST_CASE("broadcast centers") {
    BroadcastCenter p4 = broadcast_center(path(4).graph);
    std::sort(p4.members.begin(), p4.members.end());
    CHECK(p4.members == std::vector<VertexLabel>{{"path", "1"}, {"path", "2"}});
    CHECK(p4.min_time == 2);

    BroadcastCenter one = broadcast_center(k1());
    CHECK(one.members.size() == 1);
    CHECK(one.min_time == 0);

    BroadcastCenter p3 = broadcast_center(path(3).graph);
    CHECK(p3.members.size() == 3);
    CHECK(p3.min_time == 2);

    CHECK(bc_size_decision(path(4).graph, 2));
    CHECK_FALSE(bc_size_decision(path(4).graph, 3));
    CHECK(bc_size_decision(k1(), 1));
}

TEST_CASE("center decisions follow the oracle loop") {
    const auto& graphs = testing::small_catalog();
    for (std::size_t i = 0; i < graphs.size(); i += 2) {
        auto [members, time] = testing::center_by_oracle(graphs[i]);
        BroadcastCenter bc = broadcast_center(graphs[i]);
        std::sort(members.begin(), members.end());
        std::sort(bc.members.begin(), bc.members.end());
        CHECK(bc.members == members);
        CHECK(bc.min_time == time);
        for (int x = 0; x <= static_cast<int>(graphs[i].vertex_count()); ++x)
            CHECK(bc_size_decision(graphs[i], x) == testing::center_size_by_oracle(graphs[i], x));
    }
}
