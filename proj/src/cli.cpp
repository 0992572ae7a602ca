#include "bcast/cli.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bcast/graph_io.hpp"
#include "bcast/oracle.hpp"
#include "bcast/reductions.hpp"
#include "bcast/solver.hpp"

namespace bcast {

using nlohmann::json;

const std::string& Command::get(const std::string& key) const {
    auto it = options.find(key);
    if (it == options.end()) throw UsageError(verb + ": missing required option --" + key);
    return it->second;
}

std::string Command::get_or(const std::string& key, const std::string& fallback) const {
    auto it = options.find(key);
    return it == options.end() ? fallback : it->second;
}

long long parse_duration_ms(const std::string& text) {
    std::size_t used = 0;
    double value = 0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        throw UsageError("bad duration '" + text + "'");
    }
    const std::string unit = text.substr(used);
    double scale = 0;
    if (unit.empty() || unit == "s")
        scale = 1000;
    else if (unit == "ms")
        scale = 1;
    else if (unit == "m")
        scale = 60'000;
    else if (unit == "h")
        scale = 3'600'000;
    else
        throw UsageError("bad duration unit in '" + text + "'");
    if (value < 0) throw UsageError("negative duration '" + text + "'");
    return static_cast<long long>(value * scale);
}

namespace {

struct Spec {
    const char* name;
    const char* help;
};

const std::map<std::string, std::vector<Spec>>& verb_options() {
    static const std::map<std::string, std::vector<Spec>> table{
        {"gen",
         {{"family", "bt | pbt | knodel | star | path | random"},
          {"k", "binomial tree order"},
          {"i", "number of smallest branches removed (pbt)"},
          {"n", "vertex count (knodel, random)"},
          {"m", "vertex count (star, path)"},
          {"p", "edge probability for random graphs (default 0.3)"},
          {"seed", "random seed (default 1)"},
          {"out", "graph file to write (default: stdout)"},
          {"dot", "also write Graphviz DOT here"},
          {"scheme-out", "write the family's standard scheme here (bt, pbt, knodel)"}}},
        {"reduce",
         {{"from", "3dm | stbt | usat"},
          {"in", "source instance: 3DM document, graph file, or DIMACS CNF"},
          {"origin", "originator of an stbt source (label or mark; default mark 'originator')"},
          {"out", "graph file to write (default: stdout)"},
          {"params", "write the params document here (default: stdout)"},
          {"dot", "also write Graphviz DOT here"},
          {"emit-certificate", "write the yes-scheme here when a witness is available"},
          {"inner", "scheme for the stbt source, used for the certificate"},
          {"cert-origin", "originator of the stbt certificate (default v_s)"}}},
        {"solve",
         {{"graph", "graph file"},
          {"from", "originator (label or mark); omit for every vertex"},
          {"budget", "wall-clock budget, e.g. 30s"},
          {"node-budget", "search node budget"},
          {"workers", "worker threads"},
          {"out", "result document (default: stdout)"}}},
        {"center",
         {{"graph", "graph file"},
          {"x", "also decide whether the center has exactly x vertices"},
          {"budget", "wall-clock budget per decision"},
          {"node-budget", "search node budget per decision"},
          {"workers", "worker threads"},
          {"out", "result document (default: stdout)"}}},
        {"verify", {{"graph", "graph file"}, {"scheme", "scheme file"}}},
        {"oracle",
         {{"graph", "graph file"},
          {"from", "originator (label or mark); omit for every vertex"},
          {"max-vertices", "refuse graphs larger than this (at most 14)"},
          {"out", "result document (default: stdout)"}}},
    };
    return table;
}

const std::map<std::string, std::vector<std::string>>& required_options() {
    static const std::map<std::string, std::vector<std::string>> table{
        {"gen", {"family"}},     {"reduce", {"from", "in"}}, {"solve", {"graph"}},
        {"center", {"graph"}},   {"verify", {"graph", "scheme"}}, {"oracle", {"graph"}},
    };
    return table;
}

void check_family(const Command& c) {
    const std::string& f = c.get("family");
    std::vector<std::string> need;
    if (f == "bt")
        need = {"k"};
    else if (f == "pbt")
        need = {"k", "i"};
    else if (f == "knodel" || f == "random")
        need = {"n"};
    else if (f == "star" || f == "path")
        need = {"m"};
    else
        throw UsageError("gen: unknown family '" + f + "'");
    for (const auto& key : need)
        if (!c.has(key)) throw UsageError("gen --family " + f + ": missing required option --" + key);
}

int to_int(const Command& c, const std::string& key) {
    const std::string& text = c.get(key);
    try {
        std::size_t used = 0;
        long long v = std::stoll(text, &used);
        if (used != text.size() || v < 0 || v > (1LL << 30)) throw std::invalid_argument(text);
        return static_cast<int>(v);
    } catch (const std::exception&) {
        throw UsageError("--" + key + " expects a non-negative integer, got '" + text + "'");
    }
}

void emit(const Command& c, const std::string& key, const std::string& text, std::ostream& out) {
    if (c.has(key))
        write_file(c.get(key), text + "\n");
    else
        out << text << "\n";
}

VertexLabel resolve(const GraphDocument& doc, const std::string& text) {
    auto it = doc.marks.find(text);
    if (it != doc.marks.end()) return it->second;
    VertexLabel l = VertexLabel::parse(text);
    doc.graph.index_of(l);
    return l;
}

SolverConfig solver_config(const Command& c) {
    SolverConfig cfg;
    if (c.has("budget")) cfg.time_budget = std::chrono::milliseconds(parse_duration_ms(c.get("budget")));
    if (c.has("node-budget")) cfg.node_budget = to_int(c, "node-budget");
    if (c.has("workers")) cfg.workers = std::max(1, to_int(c, "workers"));
    return cfg;
}

json scheme_json(const BroadcastScheme& s) { return json::parse(to_json(s)); }

json result_json(const VertexLabel& v, const SolveResult& r) {
    json j{{"origin", v.str()},
           {"status", r.exact() ? "exact" : "lower_bounded"},
           {"time", r.time},
           {"proven_lower", r.proven_lower},
           {"nodes", r.nodes}};
    if (r.witness) j["witness"] = scheme_json(*r.witness);
    return j;
}

void write_graph(const Command& c, const GraphDocument& doc, std::ostream& out) {
    emit(c, "out", to_json(doc), out);
    if (c.has("dot")) {
        std::ofstream f(c.get("dot"));
        if (!f) throw FormatError("cannot write " + c.get("dot"));
        write_dot(f, doc.graph, doc.marks);
    }
}

Graph random_connected(int n, double p, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    Graph g;
    for (int v = 0; v < n; ++v) g.add_vertex({"v", std::to_string(v)});
    for (int v = 1; v < n; ++v) g.add_edge(v, static_cast<int>(std::uniform_int_distribution<int>(0, v - 1)(rng)));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (coin(rng) < p) g.add_edge(a, b);
    return g;
}

void run_gen(const Command& c, std::ostream& out) {
    const std::string& f = c.get("family");
    GraphDocument doc;
    std::optional<BroadcastScheme> scheme;
    if (f == "bt") {
        BinomialTree t = binomial_tree(to_int(c, "k"));
        doc.graph = t.graph;
        doc.marks["root"] = doc.marks["originator"] = t.root;
        for (std::size_t i = 0; i < t.leaves.size(); ++i) doc.marks["leaf:" + std::to_string(i)] = t.leaves[i];
        scheme = binomial_scheme(t.k);
    } else if (f == "pbt") {
        PrunedBinomialTree t = pruned_binomial(to_int(c, "k"), to_int(c, "i"));
        doc.graph = t.graph;
        doc.marks["root"] = doc.marks["originator"] = t.root;
        // The binomial scheme with calls into removed branches dropped.
        BroadcastScheme s = binomial_scheme(t.k, t.root.ns);
        for (auto& round : s.rounds) std::erase_if(round, [&](const Call& call) { return !t.graph.contains(call.to); });
        scheme = s;
    } else if (f == "knodel") {
        KnodelGraph kg = knodel(to_int(c, "n"));
        doc.graph = kg.graph;
        doc.edge_dimensions = kg.edge_dimension;
        doc.marks["originator"] = kg.vertex(0);
        scheme = knodel_scheme(kg, kg.vertex(0));
    } else if (f == "star") {
        Star s = star(to_int(c, "m"));
        doc.graph = s.graph;
        doc.marks["star_center"] = doc.marks["originator"] = s.center;
    } else if (f == "path") {
        Path p = path(to_int(c, "m"));
        doc.graph = p.graph;
        doc.marks["originator"] = p.first;
        doc.marks["path_end"] = p.last;
    } else {
        double prob = 0.3;
        if (c.has("p")) {
            try {
                prob = std::stod(c.get("p"));
            } catch (const std::exception&) {
                throw UsageError("--p expects a number");
            }
        }
        const unsigned long long seed = c.has("seed") ? static_cast<unsigned long long>(to_int(c, "seed")) : 1ULL;
        doc.graph = random_connected(to_int(c, "n"), prob, seed);
    }
    write_graph(c, doc, out);
    if (c.has("scheme-out")) {
        if (!scheme) throw UsageError("gen --family " + f + " has no standard scheme for --scheme-out");
        write_file(c.get("scheme-out"), to_json(*scheme) + "\n");
    }
}

void run_reduce(const Command& c, std::ostream& out) {
    const std::string& from = c.get("from");
    ReductionArtifact art;
    std::optional<BroadcastScheme> cert;
    const bool want_cert = c.has("emit-certificate");
    if (from == "3dm") {
        ThreeDMInstance inst = three_dm_from_json(read_file(c.get("in")));
        art = stbt_from_3dm(inst);
        art.marks["originator"] = art.mark("v_0");
        if (want_cert && !art.params.contains("no_instance")) {
            if (auto m = solve_3dm(inst)) {
                std::vector<Triple> triples;
                for (int i : *m) triples.push_back(inst.W[static_cast<std::size_t>(i)]);
                cert = stbt_yes_scheme(art, triples);
            }
        }
    } else if (from == "stbt") {
        GraphDocument src = load_graph_document(c.get("in"));
        const VertexLabel v_s = resolve(src, c.get_or("origin", "originator"));
        art = bg_from_stbt(src.graph, v_s);
        if (want_cert) {
            std::optional<BroadcastScheme> inner;
            if (c.has("inner")) {
                inner = scheme_from_json(read_file(c.get("inner")));
            } else {
                SolveResult r = broadcast_time_from(src.graph, v_s);
                if (r.exact() && r.time <= art.param("t")) inner = r.witness;
            }
            if (inner) {
                VertexLabel o = c.has("cert-origin") ? resolve(GraphDocument{art.graph, art.marks, {}}, c.get("cert-origin"))
                                                     : art.mark("v_s");
                cert = bg_yes_scheme(art, o, *inner);
            }
        }
    } else if (from == "usat") {
        CnfFormula phi = parse_dimacs(read_file(c.get("in")));
        art = bcsize_from_usat(phi);
        if (want_cert) cert = bcsize_center_schemes(art, phi, nullptr).at(art.mark("s"));
    } else {
        throw UsageError("reduce: unknown source '" + from + "' (expected 3dm, stbt or usat)");
    }

    GraphDocument doc{art.graph, art.marks, {}};
    write_graph(c, doc, out);
    json params{{"params", art.params}, {"warnings", art.warnings}};
    for (const auto& [role, l] : art.marks) params["marks"][role] = l.str();
    if (cert) params["certificate_rounds"] = validate_scheme(art.graph, *cert);
    emit(c, "params", params.dump(1), out);
    if (want_cert) {
        if (!cert) throw ReductionError("no witness available for a certificate");
        write_file(c.get("emit-certificate"), to_json(*cert) + "\n");
    }
}

void run_solve(const Command& c, std::ostream& out) {
    GraphDocument doc = load_graph_document(c.get("graph"));
    SolverConfig cfg = solver_config(c);
    json j;
    if (c.has("from")) {
        VertexLabel v = resolve(doc, c.get("from"));
        j = result_json(v, broadcast_time_from(doc.graph, v, cfg));
    } else {
        auto all = broadcast_times(doc.graph, cfg);
        j["per_origin"] = json::array();
        bool exact = true;
        int worst = 0;
        for (std::size_t v = 0; v < all.size(); ++v) {
            j["per_origin"].push_back(result_json(doc.graph.label(static_cast<int>(v)), all[v]));
            exact = exact && all[v].exact();
            worst = std::max(worst, all[v].time);
        }
        j["status"] = exact ? "exact" : "lower_bounded";
        j["broadcast_time"] = worst;
        j["broadcast_graph"] = exact ? json(worst == ceil_log2(static_cast<long long>(doc.graph.vertex_count()))) : json();
    }
    emit(c, "out", j.dump(1), out);
}

void run_center(const Command& c, std::ostream& out) {
    GraphDocument doc = load_graph_document(c.get("graph"));
    BroadcastCenter bc = broadcast_center(doc.graph, solver_config(c));
    json j{{"min_time", bc.min_time}, {"size", bc.members.size()}, {"members", json::array()}};
    for (const auto& m : bc.members) j["members"].push_back(m.str());
    if (c.has("x")) j["size_equals_x"] = static_cast<int>(bc.members.size()) == to_int(c, "x");
    emit(c, "out", j.dump(1), out);
}

void run_verify(const Command& c, std::ostream& out) {
    GraphDocument doc = load_graph_document(c.get("graph"));
    BroadcastScheme s = scheme_from_json(read_file(c.get("scheme")));
    out << validate_scheme(doc.graph, s) << "\n";
}

void run_oracle(const Command& c, std::ostream& out) {
    GraphDocument doc = load_graph_document(c.get("graph"));
    OracleConfig cfg;
    if (c.has("max-vertices")) cfg.max_vertices = to_int(c, "max-vertices");
    json j;
    if (c.has("from")) {
        VertexLabel v = resolve(doc, c.get("from"));
        j = {{"origin", v.str()}, {"time", oracle_broadcast_time(doc.graph, {v}, cfg)}};
    } else {
        int worst = 0;
        j["per_origin"] = json::array();
        for (const auto& v : doc.graph.labels()) {
            int t = oracle_broadcast_time(doc.graph, {v}, cfg);
            worst = std::max(worst, t);
            j["per_origin"].push_back({{"origin", v.str()}, {"time", t}});
        }
        j["broadcast_time"] = worst;
    }
    emit(c, "out", j.dump(1), out);
}

}  // namespace

Command parse_command(const std::vector<std::string>& args) {
    CLI::App app{"Broadcast-time toolkit", "bcast"};
    app.require_subcommand(1, 1);
    std::map<std::string, std::map<std::string, std::string>> values;
    std::map<std::string, std::vector<std::pair<std::string, CLI::Option*>>> given;
    std::map<std::string, CLI::App*> subs;
    for (const auto& [verb, specs] : verb_options()) {
        CLI::App* sub = app.add_subcommand(verb);
        subs[verb] = sub;
        for (const auto& s : specs) {
            CLI::Option* opt = sub->add_option(std::string("--") + s.name, values[verb][s.name], s.help);
            given[verb].push_back({s.name, opt});
        }
    }

    std::vector<std::string> argv{"bcast"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::vector<const char*> raw;
    for (const auto& a : argv) raw.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(raw.size()), raw.data());
    } catch (const CLI::CallForHelp&) {
        return Command{"help", {{"text", app.help()}}};
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    Command cmd;
    for (const auto& [verb, sub] : subs)
        if (sub->parsed()) cmd.verb = verb;
    for (const auto& [name, opt] : given[cmd.verb])
        if (opt->count() > 0) cmd.options[name] = values[cmd.verb][name];
    for (const auto& key : required_options().at(cmd.verb))
        if (!cmd.has(key)) throw UsageError(cmd.verb + ": missing required option --" + key);
    if (cmd.verb == "gen") check_family(cmd);
    return cmd;
}

void execute(const Command& cmd, std::ostream& out) {
    if (cmd.verb == "help")
        out << cmd.get("text");
    else if (cmd.verb == "gen")
        run_gen(cmd, out);
    else if (cmd.verb == "reduce")
        run_reduce(cmd, out);
    else if (cmd.verb == "solve")
        run_solve(cmd, out);
    else if (cmd.verb == "center")
        run_center(cmd, out);
    else if (cmd.verb == "verify")
        run_verify(cmd, out);
    else if (cmd.verb == "oracle")
        run_oracle(cmd, out);
    else
        throw UsageError("unknown verb '" + cmd.verb + "'");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        execute(parse_command(args), out);
        return 0;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace bcast
