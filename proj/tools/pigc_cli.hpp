#pragma once

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pigc/pigc.hpp"

namespace pigc::cli {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int { kOk = 0, kClass = 1, kInput = 2, kBudget = 3 };

inline std::string hex_digest(const Graph& g) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << graph_digest(g);
    return os.str();
}

inline json edges_json(const EdgeSet& edges) {
    json a = json::array();
    for (const Edge& e : edges) a.push_back({e.u, e.v});
    return a;
}

inline json class_report(const Graph& g) {
    return {{"threshold", threshold_creation_sequence(g).has_value()},
            {"quasiThreshold", quasi_threshold_forest(g).has_value()},
            {"caterpillar", caterpillar_decomposition(g).has_value()},
            {"properInterval", static_cast<bool>(is_proper_interval(g))},
            {"split", split_partition(g).has_value()}};
}

inline json certificate_json(const Certificate& c) {
    if (const auto* p = std::get_if<CliqueBipartition>(&c))
        return {{"type", "clique-bipartition"}, {"first", p->first}, {"second", p->second}, {"untouched", p->untouched}};
    const auto& pl = std::get<PointPlacement>(c);
    return {{"type", "point-placement"}, {"spine", pl.spine}, {"point", pl.point}};
}

inline json sequence_json(const CreationSequence& seq) {
    json a = json::array();
    for (const auto& s : seq.steps) a.push_back({{"vertex", s.vertex}, {"kind", s.kind == StepKind::Isolated ? "isolated" : "dominating"}});
    return a;
}

inline json forest_json(const QtForest& f) {
    json a = json::array();
    for (Vertex v = 0; v < f.size(); ++v) a.push_back(f.parent(v) ? json(*f.parent(v)) : json(nullptr));
    return a;
}

inline json decomposition_json(const CaterpillarDecomposition& d) {
    return {{"spine", d.spine}, {"buckets", d.buckets}};
}

struct Settings {
    bool as_json = false;
    bool cost_only = false;
    unsigned threads = 1;
    std::size_t max_n = 8;
    std::uint64_t seed = 1;
};

inline double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

inline void print_text_table(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows) {
    std::size_t w = 0;
    for (const auto& r : rows) w = std::max(w, r.first.size());
    for (const auto& r : rows) out << std::left << std::setw(static_cast<int>(w) + 2) << r.first << r.second << '\n';
}

inline std::string edges_text(const EdgeSet& edges) {
    std::string s;
    for (const Edge& e : edges) s += (s.empty() ? "" : " ") + std::to_string(e.u) + "-" + std::to_string(e.v);
    return s.empty() ? "(none)" : s;
}

// --- subcommands -----------------------------------------------------------

inline int cmd_recognize(const std::string& file, const Settings& s, std::ostream& out) {
    const Graph g = read_graph_file(file);
    json classes = class_report(g);
    if (s.as_json) {
        json j{{"schema_version", kSchemaVersion}, {"command", "recognize"}, {"input_digest", hex_digest(g)},
               {"n", g.size()},  {"m", g.edge_count()}, {"classes", classes}};
        if (auto why = threshold_obstruction(g)) j["witnesses"]["threshold"] = {{"kind", why->kind}, {"vertices", why->vertices}};
        if (auto why = quasi_threshold_obstruction(g))
            j["witnesses"]["quasiThreshold"] = {{"kind", why->kind}, {"vertices", why->vertices}};
        if (auto v = is_proper_interval(g); !v)
            j["witnesses"]["properInterval"] = {{"kind", to_string(v.kind)}, {"vertices", v.witness}};
        out << j.dump(2) << '\n';
        return kOk;
    }
    std::vector<std::pair<std::string, std::string>> rows{{"vertices", std::to_string(g.size())},
                                                           {"edges", std::to_string(g.edge_count())}};
    for (const auto& [k, v] : classes.items()) rows.emplace_back(k, v.get<bool>() ? "yes" : "no");
    print_text_table(out, rows);
    return kOk;
}

/// Runs one completion algorithm and fills the algorithm-specific fields.
inline json complete_with(const std::string& algo, const Graph& g, const Settings& s) {
    const CompletionOptions opts{.cost_only = s.cost_only};
    json j;
    auto put_result = [&](const CompletionResult& r) {
        j["algorithm"] = r.algorithm;
        j["cost"] = r.cost;
        j["fill_edges"] = s.cost_only ? json(nullptr) : edges_json(r.fill);
        j["certificate"] = certificate_json(r.certificate);
        if (const auto* p = std::get_if<CliqueBipartition>(&r.certificate))
            j["partition"] = {{"first", p->first}, {"second", p->second}, {"untouched", p->untouched}};
        else
            j["placement"] = std::get<PointPlacement>(r.certificate).point;
    };
    if (algo == "threshold") {
        const auto d = threshold_pig_completion_detailed(g, opts);
        put_result(d.result);
        j["sequence"] = sequence_json(d.sequence);
    } else if (algo == "qt-cobipartite") {
        put_result(qt_cobipartite_completion(g, opts));
        j["lower_bound_for"] = "pig-completion";
    } else if (algo == "caterpillar") {
        put_result(caterpillar_pig_completion(g, opts));
    } else if (algo == "oracle") {
        const auto r = brute_min_pig(g, {.max_vertices = s.max_n, .max_fill = std::nullopt, .threads = s.threads});
        j["algorithm"] = "oracle";
        j["cost"] = r.cost;
        j["fill_edges"] = s.cost_only ? json(nullptr) : edges_json(r.fill);
        j["certificate"] = nullptr;
    } else {
        throw InputError("unknown algorithm '" + algo + "'");
    }
    return j;
}

/// threshold > caterpillar > quasi-threshold > oracle (if small enough).
inline std::string pick_algorithm(const Graph& g, const Settings& s) {
    if (threshold_creation_sequence(g)) return "threshold";
    if (caterpillar_decomposition(g)) return "caterpillar";
    if (quasi_threshold_forest(g)) return "qt-cobipartite";
    if (g.size() <= s.max_n) return "oracle";
    throw ClassError("threshold, a caterpillar or quasi-threshold, and it exceeds the oracle budget", "", {});
}

inline int cmd_complete(const std::string& file, const std::string& algo, const Settings& s, std::ostream& out) {
    const Graph g = read_graph_file(file);
    const auto start = std::chrono::steady_clock::now();
    const std::string chosen = algo == "auto" ? pick_algorithm(g, s) : algo;
    json body = complete_with(chosen, g, s);
    const double ms = elapsed_ms(start);

    json j{{"schema_version", kSchemaVersion}, {"command", "complete"}, {"input_digest", hex_digest(g)},
           {"n", g.size()}, {"m", g.edge_count()}, {"classes", class_report(g)}};
    for (auto& [k, v] : body.items()) j[k] = v;
    j["runtime_ms"] = ms;
    if (s.as_json) {
        out << j.dump(2) << '\n';
        return kOk;
    }
    std::vector<std::pair<std::string, std::string>> rows{{"algorithm", chosen}, {"cost", std::to_string(j["cost"].get<std::size_t>())}};
    if (j.contains("lower_bound_for")) rows.emplace_back("note", "co-bipartite cost, a lower bound for PIG completion");
    if (!s.cost_only) {
        const auto& fe = j["fill_edges"];
        std::vector<Edge> edges;
        for (const auto& e : fe) edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
        rows.emplace_back("fill", edges_text(EdgeSet(std::move(edges))));
    }
    print_text_table(out, rows);
    return kOk;
}

inline int cmd_oracle(const std::string& which, const std::string& file, const Settings& s, std::ostream& out) {
    const Graph g = read_graph_file(file);
    const auto start = std::chrono::steady_clock::now();
    json j{{"schema_version", kSchemaVersion}, {"command", "oracle"}, {"oracle", which}, {"input_digest", hex_digest(g)},
           {"n", g.size()}, {"m", g.edge_count()}};
    if (which == "pig") {
        const auto r = brute_min_pig(g, {.max_vertices = s.max_n, .max_fill = std::nullopt, .threads = s.threads});
        j["cost"] = r.cost;
        j["fill_edges"] = edges_json(r.fill);
    } else if (which == "cobip" || which == "maxcut") {
        const OracleBudget budget{.max_vertices = std::max<std::size_t>(s.max_n, 20), .max_fill = std::nullopt, .threads = s.threads};
        CliqueBipartition parts;
        if (which == "cobip") {
            const auto r = brute_min_cobipartite(g, budget);
            j["cost"] = r.cost;
            parts = r.parts;
        } else {
            const auto r = brute_max_cut(g, budget);
            j["cut"] = r.cut;
            parts = r.parts;
        }
        j["partition"] = {{"first", parts.first}, {"second", parts.second}};
    } else {
        throw InputError("unknown oracle '" + which + "' (expected pig, cobip or maxcut)");
    }
    j["runtime_ms"] = elapsed_ms(start);
    if (s.as_json) {
        out << j.dump(2) << '\n';
        return kOk;
    }
    std::vector<std::pair<std::string, std::string>> rows{{"oracle", which}};
    if (j.contains("cost")) rows.emplace_back("cost", std::to_string(j["cost"].get<std::size_t>()));
    if (j.contains("cut")) rows.emplace_back("cut", std::to_string(j["cut"].get<std::size_t>()));
    if (j.contains("fill_edges")) {
        std::vector<Edge> edges;
        for (const auto& e : j["fill_edges"]) edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
        rows.emplace_back("fill", edges_text(EdgeSet(std::move(edges))));
    }
    if (j.contains("partition")) {
        std::ostringstream os;
        os << j["partition"]["first"].dump() << " | " << j["partition"]["second"].dump();
        rows.emplace_back("partition", os.str());
    }
    print_text_table(out, rows);
    return kOk;
}

struct GenParams {
    std::string cls;
    std::size_t n = 8;
    double p = 0.5;
    std::size_t spine = 4;
    std::size_t max_leaves = 2;
    std::size_t clique = 3;
    std::size_t independent = 3;
    std::string out_file;
};

inline int cmd_gen(const GenParams& gp, const Settings& s, std::ostream& out) {
    Graph g;
    json cert{{"schema_version", kSchemaVersion}, {"class", gp.cls}, {"seed", s.seed}};
    if (gp.cls == "threshold") {
        auto inst = gen_threshold(gp.n, gp.p, s.seed);
        g = inst.graph;
        cert["sequence"] = sequence_json(inst.sequence);
    } else if (gp.cls == "quasi-threshold") {
        auto inst = gen_quasi_threshold(gp.n, s.seed);
        g = inst.graph;
        cert["parents"] = forest_json(inst.forest);
    } else if (gp.cls == "caterpillar") {
        auto inst = gen_caterpillar(gp.spine, gp.max_leaves, s.seed);
        g = inst.graph;
        cert["decomposition"] = decomposition_json(inst.decomposition);
    } else if (gp.cls == "split") {
        auto inst = gen_split(gp.clique, gp.independent, gp.p, s.seed);
        g = inst.graph;
        cert["partition"] = {{"clique", inst.partition.clique}, {"independent", inst.partition.independent}};
    } else if (gp.cls == "split-gadget") {
        auto inst = gen_split(gp.clique, gp.independent, gp.p, s.seed);
        auto gadget = split_pig_reduction_gadget(inst.graph, inst.partition);
        g = gadget.graph;
        cert["source"] = {{"graph", serialize(inst.graph)},
                          {"clique", inst.partition.clique},
                          {"independent", inst.partition.independent}};
        cert["copy1"] = gadget.copy1;
        cert["copy2"] = gadget.copy2;
        cert["big_clique"] = gadget.big_clique;
        cert["independent"] = gadget.independent;
    } else {
        throw InputError("unknown class '" + gp.cls +
                         "' (expected threshold, quasi-threshold, caterpillar, split or split-gadget)");
    }
    cert["input_digest"] = hex_digest(g);
    if (gp.out_file.empty()) {
        if (s.as_json) {
            cert["graph"] = {{"n", g.size()}, {"edges", edges_json(g.edges())}};
            out << cert.dump(2) << '\n';
        } else {
            out << serialize(g);
        }
        return kOk;
    }
    write_graph_file(gp.out_file, g);
    std::ofstream side(gp.out_file + ".cert.json", std::ios::binary);
    if (!side) throw InputError("cannot write '" + gp.out_file + ".cert.json'");
    side << cert.dump(2) << '\n';
    if (s.as_json) out << json{{"graph", gp.out_file}, {"certificate", gp.out_file + ".cert.json"}}.dump(2) << '\n';
    return kOk;
}

/// Reads fill edges from either a bare [[u,v],...] array or an object with
/// a "fill_edges" member (such as a `complete --json` envelope).
inline std::vector<std::pair<std::int64_t, std::int64_t>> read_fill_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("'" + path + "' is not valid JSON: " + e.what());
    }
    if (j.is_object()) {
        if (!j.contains("fill_edges")) throw InputError("'" + path + "' has no fill_edges member");
        j = j["fill_edges"];
    }
    if (!j.is_array()) throw InputError("fill edges must be a JSON array of [u, v] pairs");
    std::vector<std::pair<std::int64_t, std::int64_t>> edges;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw InputError("fill edges must be [u, v] integer pairs");
        edges.emplace_back(e[0].get<std::int64_t>(), e[1].get<std::int64_t>());
    }
    return edges;
}

inline int cmd_verify(const std::string& file, const std::string& fill_file, const Settings& s, std::ostream& out) {
    const Graph g = read_graph_file(file);
    const auto raw = read_fill_file(fill_file);
    std::string reason;
    std::vector<Edge> fill;
    for (const auto& [a, b] : raw) {
        const auto n = static_cast<std::int64_t>(g.size());
        if (a < 0 || b < 0 || a >= n || b >= n) {
            reason = "edge " + std::to_string(a) + "-" + std::to_string(b) + " is out of range";
            break;
        }
        if (a == b) {
            reason = "self-loop on " + std::to_string(a);
            break;
        }
        const Edge e(static_cast<Vertex>(a), static_cast<Vertex>(b));
        if (g.adjacent(e.u, e.v)) {
            reason = "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is already in the graph";
            break;
        }
        fill.push_back(e);
    }
    const EdgeSet set(fill);
    if (reason.empty() && set.size() != fill.size()) reason = "duplicate fill edge";
    bool pig = false;
    if (reason.empty()) {
        const auto verdict = is_proper_interval(g.with_edges(set));
        pig = verdict.proper_interval;
        if (!pig) reason = std::string("augmented graph has an induced ") + to_string(verdict.kind);
    }
    const bool valid = reason.empty();
    json j{{"schema_version", kSchemaVersion}, {"command", "verify"}, {"input_digest", hex_digest(g)},
           {"valid", valid}, {"fill_size", raw.size()}, {"proper_interval", pig}};
    if (!valid) j["reason"] = reason;
    if (s.as_json) out << j.dump(2) << '\n';
    else print_text_table(out, {{"valid", valid ? "yes" : "no"}, {"fill size", std::to_string(raw.size())}, {"reason", valid ? "-" : reason}});
    return valid ? kOk : kClass;
}

inline int cmd_xcheck(const std::string& cls, const Settings& s, std::ostream& out) {
    std::vector<std::string> suites;
    if (cls == "all") suites = xcheck_suites();
    else suites = {cls};
    const XcheckOptions opts{.max_n = s.max_n, .threads = s.threads};
    json rows = json::array();
    bool all_ok = true;
    std::vector<std::pair<std::string, std::vector<XcheckRow>>> results;
    for (const auto& suite : suites) results.emplace_back(suite, run_xcheck(suite, opts));
    for (const auto& [suite, table] : results)
        for (const auto& r : table) {
            all_ok = all_ok && r.passed();
            json row{{"suite", suite}, {"check", r.check}, {"instances", r.instances}, {"failures", r.failures},
                     {"passed", r.passed()}, {"seconds", r.seconds}};
            if (!r.first_failure.empty()) row["first_failure"] = r.first_failure;
            if (!r.note.empty()) row["note"] = r.note;
            rows.push_back(row);
        }
    if (s.as_json) {
        out << json{{"schema_version", kSchemaVersion}, {"command", "xcheck"}, {"max_n", s.max_n}, {"all_passed", all_ok}, {"rows", rows}}.dump(2)
            << '\n';
    } else {
        out << std::left << std::setw(6) << "" << std::setw(17) << "suite" << std::setw(55) << "check" << std::right
            << std::setw(9) << "cases" << std::setw(9) << "fails" << '\n';
        for (const auto& r : rows) {
            out << std::left << std::setw(6) << (r["passed"].get<bool>() ? "PASS" : "FAIL") << std::setw(17)
                << r["suite"].get<std::string>() << std::setw(55) << r["check"].get<std::string>() << std::right
                << std::setw(9) << r["instances"].get<std::size_t>() << std::setw(9) << r["failures"].get<std::size_t>();
            if (r.contains("note")) out << "  (" << r["note"].get<std::string>() << ")";
            if (r.contains("first_failure")) out << "  first failure: " << r["first_failure"].get<std::string>();
            out << '\n';
        }
    }
    return all_ok ? kOk : kClass;
}

// --- entry point ------------------------------------------------------------

/// Parses argv and runs one subcommand. Exit codes: 0 success, 1 class
/// error or failed check, 2 parse/IO/usage error, 3 oracle budget refusal.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Proper interval completion on threshold, quasi-threshold and caterpillar graphs", "pigc"};
    app.require_subcommand(1);
    Settings s;
    app.add_flag("--json", s.as_json, "Emit JSON instead of a text table");
    app.add_option("--threads", s.threads, "Worker threads for the brute-force PIG oracle")->check(CLI::Range(1U, 256U));
    app.add_option("--max-n", s.max_n, "Vertex cap for brute-force oracles / size for xcheck")->check(CLI::Range(std::size_t{1}, std::size_t{32}));
    app.add_option("--seed", s.seed, "Seed for generators");
    app.add_flag("--cost-only", s.cost_only, "Skip materializing fill edges");
    app.fallthrough();

    std::string file, algo = "auto", oracle_kind, fill_file, xclass = "all";
    GenParams gp;

    auto* recognize = app.add_subcommand("recognize", "Report class membership");
    recognize->add_option("file", file, "Graph file (edge list or DIMACS)")->required();

    auto* complete = app.add_subcommand("complete", "Minimum completion with a class-specific algorithm");
    complete->add_option("--algo", algo, "auto|threshold|qt-cobipartite|caterpillar|oracle")
        ->check(CLI::IsMember({"auto", "threshold", "qt-cobipartite", "caterpillar", "oracle"}));
    complete->add_option("file", file, "Graph file")->required();

    auto* oracle = app.add_subcommand("oracle", "Brute-force solvers for small graphs");
    oracle->add_option("kind", oracle_kind, "pig|cobip|maxcut")->required()->check(CLI::IsMember({"pig", "cobip", "maxcut"}));
    oracle->add_option("file", file, "Graph file")->required();

    auto* gen = app.add_subcommand("gen", "Generate a seeded instance");
    gen->add_option("class", gp.cls, "threshold|quasi-threshold|caterpillar|split|split-gadget")->required();
    gen->add_option("--n", gp.n, "Vertex count (threshold, quasi-threshold)");
    gen->add_option("--p", gp.p, "Probability (dominating tag / extra clique neighbour)")->check(CLI::Range(0.0, 1.0));
    gen->add_option("--spine", gp.spine, "Caterpillar spine length");
    gen->add_option("--max-leaves", gp.max_leaves, "Caterpillar leaves per spine vertex, at most");
    gen->add_option("--clique", gp.clique, "Split clique size");
    gen->add_option("--independent", gp.independent, "Split independent set size");
    gen->add_option("--out", gp.out_file, "Write the graph here and the certificate to FILE.cert.json");

    auto* verify = app.add_subcommand("verify", "Check a claimed PIG completion");
    verify->add_option("file", file, "Graph file")->required();
    verify->add_option("--fill", fill_file, "JSON array of [u, v] fill edges, or a complete --json envelope")->required();

    auto* xcheck = app.add_subcommand("xcheck", "Run oracle cross-check suites");
    xcheck->add_option("--class", xclass, "threshold|quasi-threshold|lower-bound|caterpillar|recognition|all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInput;
    }

    try {
        if (*recognize) return cmd_recognize(file, s, out);
        if (*complete) return cmd_complete(file, algo, s, out);
        if (*oracle) return cmd_oracle(oracle_kind, file, s, out);
        if (*gen) return cmd_gen(gp, s, out);
        if (*verify) return cmd_verify(file, fill_file, s, out);
        if (*xcheck) {
            if (app.count("--max-n") == 0) s.max_n = 6;
            return cmd_xcheck(xclass, s, out);
        }
    } catch (const ClassError& e) {
        err << "error: " << e.what() << '\n';
        if (s.as_json) {
            out << json{{"schema_version", kSchemaVersion},
                        {"error", "class"},
                        {"message", e.what()},
                        {"required_class", e.required_class()},
                        {"witness", {{"kind", e.witness_kind()}, {"vertices", e.witness()}}}}
                       .dump(2)
                << '\n';
        }
        return kClass;
    } catch (const BudgetError& e) {
        err << "error: " << e.what() << '\n';
        return kBudget;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInput;
    }
    return kInput;
}

}  // namespace pigc::cli
