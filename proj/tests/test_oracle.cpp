#include <algorithm>
#include <random>

#include "bcast/families.hpp"
#include "bcast/oracle.hpp"
#include "catalog.hpp"
#include "doctest.h"

using namespace bcast;

TEST_CASE("oracle broadcast times") {
    Graph k1;
    k1.add_vertex({"z", "0"});
    CHECK(oracle_broadcast_time(k1, {{"z", "0"}}) == 0);
    Graph c6 = testing::cycle_graph(6);
    for (const auto& v : c6.labels()) CHECK(oracle_broadcast_time(c6, {v}) == 3);
    BinomialTree bt = binomial_tree(3);
    CHECK(oracle_broadcast_time(bt.graph, {bt.root}) == 3);
    CHECK(oracle_broadcast_time(path(4).graph, {{"path", "0"}}) == 3);
    CHECK(oracle_broadcast_time(path(4).graph, {{"path", "1"}}) == 2);
}

TEST_CASE("oracle limits") {
    OracleConfig cfg;
    CHECK_THROWS_AS(oracle_broadcast_time(path(11).graph, {{"path", "0"}}, cfg), OracleError);
    cfg.max_vertices = 40;
    CHECK_THROWS_AS(oracle_broadcast_time(path(15).graph, {{"path", "0"}}, cfg), OracleError);
    Graph two;
    two.add_vertex({"a", "0"});
    two.add_vertex({"a", "1"});
    CHECK_THROWS_AS(oracle_broadcast_time(two, {{"a", "0"}}), OracleError);
    CHECK_THROWS_AS(oracle_broadcast_time(path(3).graph, {}), OracleError);
}

TEST_CASE("maximal call sets give the same times") {
    std::mt19937 rng(17);
    OracleConfig cfg;
    for (int i = 0; i < 120; ++i) {
        Graph g = testing::random_connected(2 + static_cast<int>(rng() % 7), 0.3, rng);
        const VertexLabel v = g.label(static_cast<int>(rng() % g.vertex_count()));
        CHECK(oracle_broadcast_time(g, {v}, cfg, CallSets::All) == oracle_broadcast_time(g, {v}, cfg, CallSets::Maximal));
    }
}

TEST_CASE("more origins never slow things down") {
    std::mt19937 rng(23);
    for (int i = 0; i < 80; ++i) {
        Graph g = testing::random_connected(3 + static_cast<int>(rng() % 6), 0.25, rng);
        const VertexLabel a = g.label(0), b = g.label(static_cast<int>(rng() % g.vertex_count()));
        if (a == b) continue;
        CHECK(oracle_broadcast_time(g, {a, b}) <= oracle_broadcast_time(g, {a}));
    }
}

TEST_CASE("oracle respects the counting and distance bounds") {
    for (const auto& g : testing::small_catalog()) {
        const int n = static_cast<int>(g.vertex_count());
        for (const auto& v : g.labels()) CHECK(oracle_broadcast_time(g, {v}) >= std::max(ceil_log2(n), eccentricity(g, v)));
    }
}

TEST_CASE("multicast") {
    Path p = path(5);
    CHECK(oracle_multicast_time(p.graph, {p.first}, {{"path", "2"}}) == 2);
    CHECK(oracle_multicast_time(p.graph, {p.first}, {p.first}) == 0);
}

TEST_CASE("3DM oracle") {
    ThreeDMInstance inst = testing::sample_3dm();
    auto m = solve_3dm(inst);
    REQUIRE(m);
    CHECK(m->size() == 3);
    CHECK(inst.is_matching(*m));
    std::vector<int> sorted = *m;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<int>{0, 1, 2});

    ThreeDMInstance shared;
    shared.k = 2;
    shared.X = {"x1", "x2"};
    shared.Y = {"y1", "y2"};
    shared.Z = {"z1", "z2"};
    shared.W = {{"x1", "y1", "z1"}, {"x1", "y2", "z2"}};
    CHECK_FALSE(solve_3dm(shared));

    ThreeDMInstance one;
    one.k = 1;
    one.X = {"a"};
    one.Y = {"b"};
    one.Z = {"c"};
    one.W = {{"a", "b", "c"}};
    auto single = solve_3dm(one);
    REQUIRE(single);
    CHECK(*single == std::vector<int>{0});
}

TEST_CASE("SAT oracle") {
    CnfFormula unique{2, {{{0, true}}, {{1, true}}}};
    SatClass u = sat_classify(unique);
    CHECK(u.kind == SatClass::Unique);
    CHECK(u.witness == std::vector<bool>{true, true});
    CHECK(u.models == 1);

    CHECK(sat_classify(CnfFormula{1, {{{0, true}}, {{0, false}}}}).kind == SatClass::Unsat);

    SatClass m = sat_classify(CnfFormula{2, {{{0, true}, {1, true}}}});
    CHECK(m.kind == SatClass::Multiple);
    CHECK(m.models == 3);

    CHECK(satisfiable_with(unique, {0, true}));
    CHECK_FALSE(satisfiable_with(unique, {0, false}));

    OracleConfig tight;
    tight.max_sat_vars = 3;
    CHECK_THROWS_AS(sat_classify(CnfFormula{4, {{{3, true}}}}, tight), OracleError);
}

TEST_CASE("DIMACS and 3DM documents") {
    CnfFormula phi = parse_dimacs("c sample\np cnf 2 2\n1 0\n-2 1 0\n");
    CHECK(phi.n == 2);
    REQUIRE(phi.c() == 2);
    CHECK(phi.clauses[1] == std::vector<Literal>{{1, false}, {0, true}});
    CHECK(parse_dimacs(to_dimacs(phi)).clauses == phi.clauses);
    CHECK_THROWS_AS(parse_dimacs("p cnf 1 1\n3 0\n"), FormatError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 1 1\n0\n"), FormatError);

    ThreeDMInstance inst = testing::sample_3dm();
    ThreeDMInstance back = three_dm_from_json(to_json(inst));
    CHECK(back.W == inst.W);
    CHECK_THROWS_AS(three_dm_from_json("{\"k\": 1, \"X\": [\"a\"], \"Y\": [\"b\"], \"Z\": [\"c\"], \"W\": [[\"a\", \"b\", \"q\"]]}"),
                    FormatError);
}
