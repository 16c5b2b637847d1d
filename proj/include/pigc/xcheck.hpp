#pragma once

#include <chrono>
#include <sstream>
#include <string>
#include <vector>

#include "pigc/caterpillar.hpp"
#include "pigc/generators.hpp"
#include "pigc/oracle.hpp"
#include "pigc/quasi_threshold.hpp"
#include "pigc/threshold.hpp"
#include "pigc/io.hpp"

namespace pigc {

/// One line of a cross-check table.
struct XcheckRow {
    explicit XcheckRow(std::string name = {}) : check(std::move(name)) {}

    std::string check;
    std::size_t instances = 0;
    std::size_t failures = 0;
    std::string first_failure;  // empty when everything passed
    std::string note;
    double seconds = 0.0;

    bool passed() const noexcept { return failures == 0; }
};

struct XcheckOptions {
    std::size_t max_n = 6;
    unsigned threads = 1;
};

namespace detail {

class RowTimer {
public:
    explicit RowTimer(XcheckRow& row) : row_(row), start_(std::chrono::steady_clock::now()) {}
    ~RowTimer() { row_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }
    RowTimer(const RowTimer&) = delete;
    RowTimer& operator=(const RowTimer&) = delete;

private:
    XcheckRow& row_;
    std::chrono::steady_clock::time_point start_;
};

inline void record(XcheckRow& row, bool ok, const std::string& what) {
    ++row.instances;
    if (ok) return;
    if (row.failures++ == 0) row.first_failure = what;
}

inline std::string tag_string(const std::vector<StepKind>& tags) {
    std::string s;
    for (auto t : tags) s += t == StepKind::Isolated ? 'i' : 'd';
    return s;
}

inline std::string bucket_string(const std::vector<std::size_t>& b) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
    os << ']';
    return os.str();
}

inline std::string parent_string(const QtForest& f) {
    std::ostringstream os;
    os << '[';
    for (Vertex v = 0; v < f.size(); ++v) {
        if (v) os << ',';
        if (f.parent(v)) os << *f.parent(v);
        else os << '-';
    }
    os << ']';
    return os.str();
}

inline void require_max_n(std::size_t max_n, std::size_t cap, const char* suite) {
    if (max_n > cap)
        throw BudgetError(std::string(suite) + " cross-check is limited to --max-n " + std::to_string(cap));
}

inline OracleBudget pig_budget(const XcheckOptions& o) {
    return {.max_vertices = std::max<std::size_t>(8, o.max_n), .max_fill = std::nullopt, .threads = o.threads};
}

}  // namespace detail

/// Every creation sequence with n <= max_n: greedy vs brute-force PIG,
/// PIG vs co-bipartite (isolated vertices stripped), max-cut identity and
/// soundness of the returned fill.
inline std::vector<XcheckRow> xcheck_threshold(const XcheckOptions& opts) {
    detail::require_max_n(opts.max_n, 9, "threshold");
    XcheckRow opt{"threshold greedy == brute-force PIG"};
    XcheckRow cob{"brute-force PIG == brute-force co-bipartite"};
    XcheckRow cut{"min fill == C(n,2) - |E| - maxcut(complement)"};
    XcheckRow fill{"fill is a PIG completion of the claimed size"};
    {
        detail::RowTimer t1(opt);
        for (std::size_t n = 1; n <= opts.max_n; ++n)
            for (const auto& tags : enumerate_threshold(n)) {
                const auto inst = threshold_from_tags(tags);
                const auto res = threshold_pig_completion(inst.graph);
                const auto pig = brute_min_pig(inst.graph, detail::pig_budget(opts));
                const auto label = detail::tag_string(tags);
                detail::record(opt, res.cost == pig.cost, label);
                const auto core = strip_isolated(inst.graph);
                detail::record(cob, brute_min_cobipartite(core.graph).cost == pig.cost, label);
                detail::record(cut, maxcut_identity_check(inst.graph).identity_holds, label);
                detail::record(fill,
                               res.fill.size() == res.cost && is_proper_interval(inst.graph.with_edges(res.fill)) &&
                                   std::none_of(res.fill.begin(), res.fill.end(),
                                                [&](Edge e) { return inst.graph.adjacent(e.u, e.v); }),
                               label);
            }
    }
    cob.seconds = cut.seconds = fill.seconds = 0.0;
    return {opt, cob, cut, fill};
}

/// Every rooted forest with n <= max_n: DP vs brute-force co-bipartite, the
/// C(v,i,j) = C(v,i,x-j) symmetry and the backtracked partition's cost.
inline std::vector<XcheckRow> xcheck_quasi_threshold(const XcheckOptions& opts) {
    detail::require_max_n(opts.max_n, 12, "quasi-threshold");
    XcheckRow opt{"DP == brute-force co-bipartite"};
    XcheckRow sym{"C(v,i,j) == C(v,i,x_i-j) on every cell"};
    XcheckRow back{"backtracked partition attains the DP cost"};
    {
        detail::RowTimer t(opt);
        for (std::size_t n = 1; n <= opts.max_n; ++n)
            for (const auto& forest : enumerate_rooted_forests(n)) {
                const Graph g = forest.ancestor_graph();
                const auto label = detail::parent_string(forest);
                const auto tables = build_dp_tables(forest);
                detail::record(opt, tables.optimum() == brute_min_cobipartite(g).cost, label);
                bool symmetric = true;
                const std::size_t nodes = n + (tables.has_virtual_root() ? 1 : 0);
                for (std::size_t v = 0; v < nodes; ++v)
                    for (std::size_t i = 0; i <= tables.child_count(v); ++i) {
                        const std::size_t x = tables.prefix_size(v, i);
                        for (std::size_t j = 0; j <= x; ++j)
                            symmetric = symmetric && tables.c(v, i, j) == tables.c(v, i, x - j);
                    }
                detail::record(sym, symmetric, label);
                const auto parts = backtrack_bipartition(tables);
                detail::record(back, partition_cost(g, parts) == tables.optimum(), label);
            }
    }
    return {opt, sym, back};
}

/// Connected quasi-threshold graphs with n <= max_n: the co-bipartite DP
/// never exceeds the PIG optimum. Strict gaps are counted in the note.
inline std::vector<XcheckRow> xcheck_lower_bound(const XcheckOptions& opts) {
    detail::require_max_n(opts.max_n, 8, "lower-bound");
    XcheckRow row{"DP cost <= brute-force PIG (connected)"};
    std::size_t strict = 0;
    std::string example;
    {
        detail::RowTimer t(row);
        for (std::size_t n = 1; n <= opts.max_n; ++n)
            for (const auto& forest : enumerate_rooted_forests(n)) {
                if (forest.roots().size() != 1) continue;
                const Graph g = forest.ancestor_graph();
                const auto dp = build_dp_tables(forest).optimum();
                const auto pig = brute_min_pig(g, detail::pig_budget(opts)).cost;
                const auto label = detail::parent_string(forest);
                detail::record(row, dp <= pig, label);
                if (dp < pig && strict++ == 0) example = label;
            }
    }
    row.note = std::to_string(strict) + " strict gap(s)" + (example.empty() ? "" : ", first " + example);
    return {row};
}

/// Every caterpillar with n <= max_n: DP vs brute-force PIG, fill soundness
/// and invariance under reversing the spine.
inline std::vector<XcheckRow> xcheck_caterpillar(const XcheckOptions& opts) {
    detail::require_max_n(opts.max_n, 9, "caterpillar");
    XcheckRow opt{"caterpillar DP == brute-force PIG"};
    XcheckRow fill{"fill is a PIG completion of the claimed size"};
    XcheckRow rev{"cost invariant under spine reversal"};
    {
        detail::RowTimer t(opt);
        for (std::size_t n = 1; n <= opts.max_n; ++n)
            for (const auto& buckets : enumerate_caterpillar_buckets(n)) {
                const auto inst = caterpillar_from_buckets(buckets);
                const auto label = detail::bucket_string(buckets);
                const auto res = caterpillar_pig_completion(inst.graph, inst.decomposition);
                detail::record(opt, res.cost == brute_min_pig(inst.graph, detail::pig_budget(opts)).cost, label);
                detail::record(fill,
                               res.fill.size() == res.cost && is_proper_interval(inst.graph.with_edges(res.fill)),
                               label);
                const auto back = caterpillar_pig_completion(inst.graph, inst.decomposition.reversed());
                detail::record(rev, back.cost == res.cost, label);
            }
    }
    return {opt, fill, rev};
}

/// Every labelled graph with n <= max_n: recognizers vs the definition-level
/// forbidden subgraph scan, and certificate round trips.
inline std::vector<XcheckRow> xcheck_recognition(const XcheckOptions& opts) {
    detail::require_max_n(opts.max_n, 7, "recognition");
    XcheckRow pig{"PIG recognizer == chordless cycle/claw/net/tent scan"};
    XcheckRow thr{"threshold recognizer == 2K2/C4/P4 scan"};
    XcheckRow qt{"quasi-threshold recognizer == P4/C4 scan"};
    XcheckRow cert{"certificates reproduce the input"};
    {
        detail::RowTimer t(pig);
        for (std::size_t n = 1; n <= opts.max_n; ++n)
            for_each_graph(n, [&](const Graph& g) {
                const auto label = serialize(g);
                detail::record(pig,
                               static_cast<bool>(is_proper_interval(g)) ==
                                   !forbidden_subgraph_scan(g, ForbiddenFamily::ProperInterval),
                               label);
                const auto seq = threshold_creation_sequence(g);
                detail::record(thr, seq.has_value() == !forbidden_subgraph_scan(g, ForbiddenFamily::Threshold), label);
                const auto forest = quasi_threshold_forest(g);
                detail::record(qt, forest.has_value() == !forbidden_subgraph_scan(g, ForbiddenFamily::QuasiThreshold),
                               label);
                const auto cat = caterpillar_decomposition(g);
                detail::record(cert,
                               (!seq || replay(*seq) == g) && (!forest || forest->ancestor_graph() == g) &&
                                   (!cat || decomposition_matches(g, *cat)),
                               label);
            });
    }
    return {pig, thr, qt, cert};
}

inline const std::vector<std::string>& xcheck_suites() {
    static const std::vector<std::string> names{"threshold", "quasi-threshold", "lower-bound", "caterpillar",
                                                "recognition"};
    return names;
}

/// Dispatches by suite name; throws InputError for unknown names.
inline std::vector<XcheckRow> run_xcheck(const std::string& suite, const XcheckOptions& opts) {
    if (suite == "threshold") return xcheck_threshold(opts);
    if (suite == "quasi-threshold") return xcheck_quasi_threshold(opts);
    if (suite == "lower-bound") return xcheck_lower_bound(opts);
    if (suite == "caterpillar") return xcheck_caterpillar(opts);
    if (suite == "recognition") return xcheck_recognition(opts);
    throw InputError("unknown cross-check suite '" + suite + "'");
}

}  // namespace pigc
