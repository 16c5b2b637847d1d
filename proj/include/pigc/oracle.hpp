#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "pigc/completion_result.hpp"
#include "pigc/graph.hpp"
#include "pigc/recognition.hpp"
#include "pigc/threshold.hpp"

namespace pigc {

/// Limits for the exhaustive solvers. They refuse (BudgetError) rather than
/// truncate.
struct OracleBudget {
    std::size_t max_vertices = 8;
    std::optional<std::size_t> max_fill;  // give up once more fill would be needed
    unsigned threads = 1;
};

namespace detail {

/// Advances `idx` (strictly increasing, values < limit) to the next
/// combination in lexicographic order, leaving positions < `fixed` alone.
inline bool next_combination(std::vector<std::size_t>& idx, std::size_t limit, std::size_t fixed = 0) {
    const std::size_t k = idx.size();
    std::size_t i = k;
    while (i > fixed) {
        --i;
        if (idx[i] < limit - (k - i)) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace detail

struct PigOracleResult {
    std::size_t cost = 0;
    EdgeSet fill;
};

/// Minimum PIG completion by escalating k: all k-subsets of non-edges in
/// lexicographic order, first one whose augmented graph is PIG wins.
///
/// With several threads the k-subsets are grouped by their first non-edge;
/// each group is scanned in order and the hit from the smallest group is
/// kept, so the witness is the same for any thread count.
inline PigOracleResult brute_min_pig(const Graph& g, const OracleBudget& budget = {}) {
    if (budget.max_vertices < 1) throw InputError("oracle budget needs max_vertices >= 1");
    if (g.size() > budget.max_vertices)
        throw BudgetError("brute-force PIG completion refuses " + std::to_string(g.size()) +
                          " vertices (budget " + std::to_string(budget.max_vertices) + ")");
    if (check_proper_interval(g.matrix())) return {};

    std::vector<Edge> missing;
    for (Vertex u = 0; u < g.size(); ++u)
        for (Vertex v = u + 1; v < g.size(); ++v)
            if (!g.adjacent(u, v)) missing.emplace_back(u, v);
    const std::size_t m = missing.size();
    const unsigned threads = std::max(1U, budget.threads);

    for (std::size_t k = 1; k <= m; ++k) {
        if (budget.max_fill && k > *budget.max_fill)
            throw BudgetError("no PIG completion with at most " + std::to_string(*budget.max_fill) + " fill edges");
        const std::size_t groups = m - k + 1;
        std::atomic<std::size_t> next_group{0};
        std::atomic<std::size_t> best_group{groups};
        std::vector<std::vector<std::size_t>> hit(groups);

        auto worker = [&] {
            BitMatrix scratch = g.matrix();
            std::vector<std::size_t> idx(k);
            for (std::size_t grp; (grp = next_group.fetch_add(1)) < groups;) {
                if (grp >= best_group.load()) break;
                for (std::size_t i = 0; i < k; ++i) idx[i] = grp + i;
                do {
                    for (std::size_t i : idx) scratch.set_sym(missing[i].u, missing[i].v);
                    const bool ok = check_proper_interval(scratch).proper_interval;
                    for (std::size_t i : idx) scratch.reset_sym(missing[i].u, missing[i].v);
                    if (ok) {
                        hit[grp] = idx;
                        std::size_t cur = best_group.load();
                        while (grp < cur && !best_group.compare_exchange_weak(cur, grp)) {
                        }
                        break;
                    }
                } while (grp < best_group.load() && detail::next_combination(idx, m, 1));
            }
        };
        if (threads == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }
        const std::size_t b = best_group.load();
        if (b < groups) {
            std::vector<Edge> fill;
            for (std::size_t i : hit[b]) fill.push_back(missing[i]);
            return {k, EdgeSet(std::move(fill))};
        }
    }
    // the complete graph is PIG, so this is unreachable for m >= 1
    throw BudgetError("no PIG completion found");
}

inline OracleBudget ordering_budget() { return {.max_vertices = 10, .max_fill = std::nullopt}; }

/// Second, structurally different PIG oracle. A graph is PIG iff some vertex
/// ordering is an umbrella ordering (for a < b < c, ac in E implies ab, bc
/// in E). For a fixed ordering the smallest umbrella supergraph joins every
/// pair lying inside the span of some edge, so the optimum is the minimum of
/// that closure over all orderings (one of each reversed pair). The first
/// optimal ordering in lexicographic permutation order supplies the fill.
inline PigOracleResult ordering_min_pig(const Graph& g, const OracleBudget& budget = ordering_budget()) {
    const std::size_t n = g.size();
    if (n > budget.max_vertices)
        throw BudgetError("ordering PIG oracle refuses " + std::to_string(n) + " vertices (budget " +
                          std::to_string(budget.max_vertices) + ")");
    if (n <= 2) return {};
    std::vector<Vertex> order(n);
    for (Vertex v = 0; v < n; ++v) order[v] = v;
    std::vector<Vertex> best_order;
    std::size_t best_closure = std::numeric_limits<std::size_t>::max();
    do {
        if (order.front() > order.back()) continue;
        std::size_t closure = 0, span = 0;
        for (std::size_t a = 0; a < n; ++a) {
            std::size_t r = a;
            for (std::size_t b = n; b-- > a + 1;)
                if (g.adjacent(order[a], order[b])) {
                    r = b;
                    break;
                }
            span = std::max(span, r);
            closure += span - a;
            if (closure >= best_closure) break;
        }
        if (closure < best_closure) {
            best_closure = closure;
            best_order = order;
            if (closure == g.edge_count()) break;
        }
    } while (std::next_permutation(order.begin(), order.end()));

    std::vector<Edge> fill;
    std::size_t span = 0;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = n; b-- > a + 1;)
            if (g.adjacent(best_order[a], best_order[b])) {
                span = std::max(span, b);
                break;
            }
        for (std::size_t b = a + 1; b <= span; ++b)
            if (!g.adjacent(best_order[a], best_order[b])) fill.emplace_back(best_order[a], best_order[b]);
    }
    return {best_closure - g.edge_count(), EdgeSet(std::move(fill))};
}

namespace detail {

using Mask = std::uint64_t;

inline std::vector<Mask> small_rows(const Graph& g) {
    std::vector<Mask> rows(g.size(), 0);
    for (Vertex v = 0; v < g.size(); ++v)
        for (Vertex w : g.neighbors(v)) rows[v] |= Mask{1} << w;
    return rows;
}

inline std::size_t edges_inside(const std::vector<Mask>& rows, Mask s) {
    std::size_t twice = 0;
    for (Mask r = s; r; r &= r - 1) twice += static_cast<std::size_t>(std::popcount(rows[std::countr_zero(r)] & s));
    return twice / 2;
}

/// Lexicographic order of the sorted vertex lists of two sets.
inline bool lex_less(Mask a, Mask b) {
    const Mask diff = a ^ b;
    if (!diff) return false;
    const int bit = std::countr_zero(diff);
    const Mask above = ~Mask{0} << bit << 1;
    const bool a_has = (a >> bit) & 1U;
    const Mask other = a_has ? b : a;
    const bool other_continues = (other & above) != 0;
    return a_has ? other_continues : !other_continues;
}

inline std::vector<Vertex> mask_vertices(Mask s) {
    std::vector<Vertex> out;
    for (; s; s &= s - 1) out.push_back(static_cast<Vertex>(std::countr_zero(s)));
    return out;
}

/// Scans every bipartition with vertex 0 on side A. `score` is maximised;
/// ties go to the lexicographically smallest A.
template <typename Score>
std::pair<Mask, std::int64_t> scan_bipartitions(std::size_t n, Score&& score) {
    if (n == 0) return {0, score(Mask{0})};
    const Mask full = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    Mask best = 1;
    std::int64_t best_score = score(Mask{1});
    const Mask rest = Mask{1} << (n - 1);
    for (Mask m = 1; m < rest; ++m) {
        const Mask a = (m << 1) | 1;
        const std::int64_t s = score(a & full);
        if (s > best_score || (s == best_score && lex_less(a, best))) {
            best = a;
            best_score = s;
        }
    }
    return {best, best_score};
}

inline void require_small(const Graph& g, const OracleBudget& budget, std::size_t hard_cap, const char* what) {
    if (budget.max_vertices < 1) throw InputError("oracle budget needs max_vertices >= 1");
    const std::size_t cap = std::min(budget.max_vertices, hard_cap);
    if (g.size() > cap)
        throw BudgetError(std::string(what) + " refuses " + std::to_string(g.size()) + " vertices (budget " +
                          std::to_string(cap) + ")");
}

}  // namespace detail

struct CobipartiteOracleResult {
    std::size_t cost = 0;
    CliqueBipartition parts;  // `first` holds vertex 0
};

inline OracleBudget bipartition_budget() { return {.max_vertices = 20, .max_fill = std::nullopt}; }

/// Minimum co-bipartite completion over all 2^(n-1) bipartitions.
inline CobipartiteOracleResult brute_min_cobipartite(const Graph& g, const OracleBudget& budget = bipartition_budget()) {
    detail::require_small(g, budget, 32, "brute-force co-bipartite completion");
    const auto rows = detail::small_rows(g);
    const std::size_t n = g.size();
    const detail::Mask full = n == 0 ? 0 : (detail::Mask{1} << n) - 1;
    auto [best, score] = detail::scan_bipartitions(n, [&](detail::Mask a) {
        const detail::Mask b = full & ~a;
        const auto ca = static_cast<std::size_t>(std::popcount(a));
        const auto cb = static_cast<std::size_t>(std::popcount(b));
        const std::size_t cost =
            pairs_of(ca) - detail::edges_inside(rows, a) + pairs_of(cb) - detail::edges_inside(rows, b);
        return -static_cast<std::int64_t>(cost);
    });
    CobipartiteOracleResult r;
    r.cost = static_cast<std::size_t>(-score);
    r.parts.first = detail::mask_vertices(best);
    r.parts.second = detail::mask_vertices(full & ~best);
    return r;
}

struct MaxCutOracleResult {
    std::size_t cut = 0;
    CliqueBipartition parts;  // `first` holds vertex 0
};

inline MaxCutOracleResult brute_max_cut(const Graph& g, const OracleBudget& budget = bipartition_budget()) {
    detail::require_small(g, budget, 32, "brute-force max-cut");
    const auto rows = detail::small_rows(g);
    const std::size_t n = g.size();
    const detail::Mask full = n == 0 ? 0 : (detail::Mask{1} << n) - 1;
    const std::size_t m = g.edge_count();
    auto [best, score] = detail::scan_bipartitions(n, [&](detail::Mask a) {
        return static_cast<std::int64_t>(m - detail::edges_inside(rows, a) - detail::edges_inside(rows, full & ~a));
    });
    MaxCutOracleResult r;
    r.cut = static_cast<std::size_t>(score);
    r.parts.first = detail::mask_vertices(best);
    r.parts.second = detail::mask_vertices(full & ~best);
    return r;
}

/// Threshold max-cut identity with the brute-force max-cut.
inline MaxCutIdentityReport maxcut_identity_check(const Graph& g) {
    return maxcut_identity_check(g, [](const Graph& h) { return brute_max_cut(h).cut; });
}

// ---------------------------------------------------------------------------
// Definition-level forbidden induced subgraph scan.
// ---------------------------------------------------------------------------

enum class ForbiddenFamily {
    ProperInterval,  // chordless cycles C_k (k >= 4), claw, net, tent
    Threshold,       // 2K2, C4, P4
    QuasiThreshold,  // P4, C4
    Split,           // 2K2, C4, C5
};

struct InducedWitness {
    std::string kind;
    std::vector<Vertex> vertices;  // ascending
};

namespace detail {

/// Names the induced subgraph on `s` if it is one of the patterns the
/// families use. Each pattern is pinned down by its size, edge count and
/// degree sequence (cycles additionally by connectivity).
inline std::string classify_pattern(const Graph& g, const std::vector<Vertex>& s) {
    const std::size_t k = s.size();
    std::vector<std::size_t> deg(k, 0);
    std::size_t edges = 0;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (g.adjacent(s[i], s[j])) {
                ++deg[i];
                ++deg[j];
                ++edges;
            }
    std::vector<std::size_t> sorted = deg;
    std::sort(sorted.rbegin(), sorted.rend());
    using D = std::vector<std::size_t>;
    if (k == 4) {
        if (edges == 3 && sorted == D{3, 1, 1, 1}) return "claw";
        if (edges == 3 && sorted == D{2, 2, 1, 1}) return "P4";
        if (edges == 2 && sorted == D{1, 1, 1, 1}) return "2K2";
    }
    if (k == 6) {
        if (edges == 6 && sorted == D{3, 3, 3, 1, 1, 1}) return "net";
        if (edges == 9 && sorted == D{4, 4, 4, 2, 2, 2}) return "tent";
    }
    if (k >= 4 && edges == k && std::all_of(deg.begin(), deg.end(), [](std::size_t d) { return d == 2; })) {
        // 2-regular: a single cycle iff connected
        std::vector<bool> seen(k, false);
        std::size_t cur = 0, prev = k, count = 0;
        while (!seen[cur]) {
            seen[cur] = true;
            ++count;
            std::size_t nxt = k;
            for (std::size_t j = 0; j < k; ++j)
                if (j != cur && j != prev && g.adjacent(s[cur], s[j])) {
                    nxt = j;
                    break;
                }
            if (nxt == k) break;
            prev = cur;
            cur = nxt;
        }
        if (count == k) return "C" + std::to_string(k);
    }
    return {};
}

inline bool family_accepts(ForbiddenFamily f, const std::string& kind) {
    switch (f) {
        case ForbiddenFamily::ProperInterval:
            return kind == "claw" || kind == "net" || kind == "tent" || (kind.size() >= 2 && kind[0] == 'C');
        case ForbiddenFamily::Threshold: return kind == "2K2" || kind == "C4" || kind == "P4";
        case ForbiddenFamily::QuasiThreshold: return kind == "P4" || kind == "C4";
        case ForbiddenFamily::Split: return kind == "2K2" || kind == "C4" || kind == "C5";
    }
    return false;
}

inline std::size_t family_max_size(ForbiddenFamily f, std::size_t n) {
    switch (f) {
        case ForbiddenFamily::ProperInterval: return n;
        case ForbiddenFamily::Threshold:
        case ForbiddenFamily::QuasiThreshold: return 4;
        case ForbiddenFamily::Split: return 5;
    }
    return 0;
}

}  // namespace detail

/// First induced member of `family`: subsets by increasing size, each size
/// in lexicographic order.
inline std::optional<InducedWitness> forbidden_subgraph_scan(const Graph& g, ForbiddenFamily family) {
    const std::size_t n = g.size();
    const std::size_t top = std::min(n, detail::family_max_size(family, n));
    for (std::size_t k = 4; k <= top; ++k) {
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        std::vector<Vertex> s(k);
        do {
            for (std::size_t i = 0; i < k; ++i) s[i] = idx[i];
            auto kind = detail::classify_pattern(g, s);
            if (!kind.empty() && detail::family_accepts(family, kind)) return InducedWitness{kind, s};
        } while (detail::next_combination(idx, n));
    }
    return std::nullopt;
}

}  // namespace pigc
