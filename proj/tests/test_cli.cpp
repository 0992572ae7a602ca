#include <filesystem>
#include <fstream>
#include <sstream>

#include "bcast/cli.hpp"
#include "bcast/error.hpp"
#include "bcast/graph_io.hpp"
#include "bcast/families.hpp"
#include "bcast/scheme.hpp"
#include "catalog.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace bcast;
using json = nlohmann::json;

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int status = run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

std::string scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "bcast_cli_tests";
    std::filesystem::create_directories(dir);
    return (dir / name).string();
}

}  // namespace

TEST_CASE("parsing") {
    Command g = parse_command({"gen", "--family", "knodel", "--n", "6", "--out", "g.graph"});
    CHECK(g.verb == "gen");
    CHECK(g.get("family") == "knodel");
    CHECK(g.get("n") == "6");
    CHECK(g.get("out") == "g.graph");

    Command s = parse_command({"solve", "--graph", "g.graph", "--from", "v_0", "--budget", "30s"});
    CHECK(s.verb == "solve");
    CHECK(s.get("from") == "v_0");
    CHECK(parse_duration_ms(s.get("budget")) == 30000);

    try {
        parse_command({"gen", "--family", "bt"});
        FAIL("missing --k accepted");
    } catch (const UsageError& e) {
        CHECK(std::string(e.what()).find("k") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_command({"frobnicate"}), UsageError);
    CHECK_THROWS_AS(parse_command({"solve", "--graph", "g", "--bogus", "1"}), UsageError);
    CHECK_THROWS_AS(parse_command({"verify", "--graph", "g"}), UsageError);
}

TEST_CASE("durations") {
    CHECK(parse_duration_ms("250ms") == 250);
    CHECK(parse_duration_ms("2m") == 120000);
    CHECK(parse_duration_ms("1h") == 3600000);
    CHECK(parse_duration_ms("5") == 5000);
    CHECK_THROWS_AS(parse_duration_ms("soon"), UsageError);
}

TEST_CASE("exit statuses") {
    CHECK(run({"gen", "--family", "bt"}).status == 2);
    CHECK(run({"solve", "--graph", scratch("missing.graph")}).status == 1);
    CHECK(run({"gen", "--family", "knodel", "--n", "7"}).status == 1);
}

TEST_CASE("gen round-trips through a file") {
    const std::string path = scratch("kg8.graph");
    REQUIRE(run({"gen", "--family", "knodel", "--n", "8", "--out", path}).status == 0);
    GraphDocument doc = load_graph_document(path);
    KnodelGraph kg = knodel(8);
    CHECK(doc.graph.labels() == kg.graph.labels());
    CHECK(doc.graph.edges() == kg.graph.edges());
    CHECK(doc.edge_dimensions == kg.edge_dimension);
}

TEST_CASE("verify a binomial scheme") {
    const std::string g = scratch("bt3.graph"), s = scratch("bt3.scheme");
    REQUIRE(run({"gen", "--family", "bt", "--k", "3", "--out", g, "--scheme-out", s}).status == 0);
    Run r = run({"verify", "--graph", g, "--scheme", s});
    CHECK(r.status == 0);
    CHECK(r.out == "3\n");
}

TEST_CASE("verify reports a non-edge call") {
    const std::string g = scratch("p4.graph"), s = scratch("bad.scheme");
    REQUIRE(run({"gen", "--family", "path", "--m", "4", "--out", g}).status == 0);
    BroadcastScheme bad{{{"path", "0"}}, {{{{"path", "0"}, {"path", "2"}}}}};
    write_file(s, to_json(bad));
    Run r = run({"verify", "--graph", g, "--scheme", s});
    CHECK(r.status == 1);
    CHECK(r.err.find("path:0") != std::string::npos);
    CHECK(r.err.find("path:2") != std::string::npos);
    CHECK(r.err.find("1") != std::string::npos);
}

TEST_CASE("solve and center") {
    const std::string g = scratch("p4b.graph");
    REQUIRE(run({"gen", "--family", "path", "--m", "4", "--out", g}).status == 0);
    Run s = run({"solve", "--graph", g, "--from", "originator", "--workers", "2"});
    REQUIRE(s.status == 0);
    json j = json::parse(s.out);
    CHECK(j["time"] == 3);
    CHECK(j["status"] == "exact");

    Run all = run({"solve", "--graph", g});
    json ja = json::parse(all.out);
    CHECK(ja["broadcast_time"] == 3);
    CHECK(ja["broadcast_graph"] == false);

    Run c = run({"center", "--graph", g, "--x", "2"});
    REQUIRE(c.status == 0);
    json jc = json::parse(c.out);
    CHECK(jc["min_time"] == 2);
    CHECK(jc["members"].size() == 2);
    CHECK(jc["size_equals_x"] == true);

    Run o = run({"oracle", "--graph", g, "--from", "path:1"});
    REQUIRE(o.status == 0);
    CHECK(json::parse(o.out)["time"] == 2);
}

TEST_CASE("reduce from a CNF file") {
    const std::string in = scratch("phi.cnf"), params = scratch("phi.params"), out = scratch("phi.graph");
    write_file(in, "p cnf 2 2\n1 0\n2 0\n");
    Run r = run({"reduce", "--from", "usat", "--in", in, "--out", out, "--params", params});
    REQUIRE(r.status == 0);
    json j = json::parse(read_file(params));
    CHECK(j["params"]["t"] == 8);
    CHECK(j["params"]["d1"] == 2);
    CHECK(j["params"]["d2"] == 2);
    CHECK(load_graph_document(out).graph.vertex_count() == 76);
}

TEST_CASE("certificates verify at the target time") {
    const std::string inst = scratch("a1.json"), out = scratch("a1.graph"), params = scratch("a1.params"), cert = scratch("a1.cert");
    write_file(inst, to_json(testing::sample_3dm()));
    REQUIRE(run({"reduce", "--from", "3dm", "--in", inst, "--out", out, "--params", params, "--emit-certificate", cert}).status == 0);
    Run v = run({"verify", "--graph", out, "--scheme", cert});
    CHECK(v.status == 0);
    CHECK(std::stoi(v.out) == json::parse(read_file(params))["params"]["expected_time"].get<int>());

    const std::string src = scratch("k2.graph"), gu = scratch("gu.graph"), gp = scratch("gu.params"), gc = scratch("gu.cert");
    REQUIRE(run({"gen", "--family", "bt", "--k", "2", "--out", src}).status == 0);
    REQUIRE(run({"reduce", "--from", "stbt", "--in", src, "--origin", "root", "--out", gu, "--params", gp, "--emit-certificate", gc,
                 "--cert-origin", "T3:000"})
                .status == 0);
    Run vg = run({"verify", "--graph", gu, "--scheme", gc});
    CHECK(vg.status == 0);
    CHECK(std::stoi(vg.out) == json::parse(read_file(gp))["params"]["expected_time"].get<int>());
}

TEST_CASE("dot export") {
    const std::string dot = scratch("kg6.dot");
    REQUIRE(run({"gen", "--family", "knodel", "--n", "6", "--out", scratch("kg6.graph"), "--dot", dot}).status == 0);
    CHECK(read_file(dot).find("kg:0") != std::string::npos);
}

TEST_CASE("random graphs are reproducible") {
    Run a = run({"gen", "--family", "random", "--n", "9", "--seed", "4"});
    Run b = run({"gen", "--family", "random", "--n", "9", "--seed", "4"});
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
}
