#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "pigc/completion_result.hpp"
#include "pigc/graph.hpp"
#include "pigc/recognition.hpp"

namespace pigc {

/// Caterpillar DP state. Spine vertex v_i is the interval [i, i+1]; its
/// leaves V_i are split into j left sons on point i and |V_i| - j right sons
/// on point i+1. Every leaf on an inner point 1..k also meets the second
/// spine interval through that point, so a clique of w leaves on an inner
/// point costs C(w+1, 2) fill edges and on an outer point C(w, 2).
///
/// N[i][j] is the cheapest completion of everything right of point i given
/// |V_i^l| = j:
///   N[k][j] = C(|V_k| - j, 2)
///   N[i][j] = min_{j'} C(|V_i| - j + j' + 1, 2) + N[i+1][j']
/// and the answer is min_j C(j, 2) + N[0][j].
struct PlacementTables {
    using Cost = std::uint64_t;

    std::vector<std::size_t> bucket_sizes;
    std::vector<std::vector<Cost>> n;               // n[i][j]
    std::vector<std::vector<std::size_t>> choice;   // argmin j' for i < k
    std::vector<std::size_t> left_sons;             // backtracked j_i
    Cost optimum = 0;
    std::uint64_t evaluations = 0;                  // (i, j, j') terms plus the final minimisation
};

inline PlacementTables build_placement_tables(const CaterpillarDecomposition& d) {
    using Cost = PlacementTables::Cost;
    PlacementTables t;
    const std::size_t spine = d.spine.size();
    if (spine == 0) return t;
    const std::size_t k = spine - 1;
    t.bucket_sizes.resize(spine);
    for (std::size_t i = 0; i < spine; ++i) t.bucket_sizes[i] = d.buckets[i].size();
    const auto& b = t.bucket_sizes;

    t.n.assign(spine, {});
    t.choice.assign(spine, {});
    t.n[k].resize(b[k] + 1);
    for (std::size_t j = 0; j <= b[k]; ++j) t.n[k][j] = pairs_of(b[k] - j);
    for (std::size_t i = k; i-- > 0;) {
        t.n[i].assign(b[i] + 1, std::numeric_limits<Cost>::max());
        t.choice[i].assign(b[i] + 1, 0);
        for (std::size_t j = 0; j <= b[i]; ++j)
            for (std::size_t jn = 0; jn <= b[i + 1]; ++jn) {
                ++t.evaluations;
                const Cost val = pairs_of(b[i] - j + jn + 1) + t.n[i + 1][jn];
                if (val < t.n[i][j]) {
                    t.n[i][j] = val;
                    t.choice[i][j] = jn;
                }
            }
    }

    std::size_t best = 0;
    t.optimum = std::numeric_limits<Cost>::max();
    for (std::size_t j = 0; j <= b[0]; ++j) {
        ++t.evaluations;
        const Cost val = pairs_of(j) + t.n[0][j];
        if (val < t.optimum) {
            t.optimum = val;
            best = j;
        }
    }
    t.left_sons.resize(spine);
    t.left_sons[0] = best;
    for (std::size_t i = 0; i < k; ++i) t.left_sons[i + 1] = t.choice[i][t.left_sons[i]];
    return t;
}

/// The first j_i leaves of V_i (ascending id) go to point i, the rest to i+1.
inline PointPlacement make_placement(std::size_t n, const CaterpillarDecomposition& d,
                                     const std::vector<std::size_t>& left_sons) {
    PointPlacement p;
    p.spine = d.spine;
    p.point.assign(n, -1);
    for (std::size_t i = 0; i < d.spine.size(); ++i) {
        p.point[d.spine[i]] = static_cast<std::int64_t>(i);
        for (std::size_t r = 0; r < d.buckets[i].size(); ++r)
            p.point[d.buckets[i][r]] = static_cast<std::int64_t>(r < left_sons[i] ? i : i + 1);
    }
    return p;
}

/// Edges of the interval model minus E(g): all pairs on a common point, and
/// each leaf on point i joined to v_{i-1} and v_i where they exist.
inline EdgeSet materialize_fill_edges(const Graph& g, const PointPlacement& p) {
    const std::size_t spine = p.spine.size();
    std::vector<bool> on_spine(g.size(), false);
    for (Vertex v : p.spine) on_spine[v] = true;
    std::vector<std::vector<Vertex>> at(spine + 1);
    for (Vertex v = 0; v < g.size(); ++v) {
        if (on_spine[v]) continue;
        if (p.point[v] < 0 || static_cast<std::size_t>(p.point[v]) > spine)
            throw InputError("leaf " + std::to_string(v) + " has no valid point");
        at[static_cast<std::size_t>(p.point[v])].push_back(v);
    }
    std::vector<Edge> fill;
    for (std::size_t i = 0; i <= spine; ++i) {
        const auto& w = at[i];
        for (std::size_t a = 0; a < w.size(); ++a) {
            for (std::size_t c = a + 1; c < w.size(); ++c)
                if (!g.adjacent(w[a], w[c])) fill.emplace_back(w[a], w[c]);
            if (i >= 1 && !g.adjacent(w[a], p.spine[i - 1])) fill.emplace_back(w[a], p.spine[i - 1]);
            if (i < spine && !g.adjacent(w[a], p.spine[i])) fill.emplace_back(w[a], p.spine[i]);
        }
    }
    return EdgeSet(std::move(fill));
}

inline CompletionResult caterpillar_pig_completion(const Graph& g, const CaterpillarDecomposition& d,
                                                   CompletionOptions opts = {}) {
    if (!decomposition_matches(g, d)) throw InputError("decomposition does not describe the graph");
    const auto tables = build_placement_tables(d);
    CompletionResult r;
    auto placement = make_placement(g.size(), d, tables.left_sons);
    r.cost = tables.optimum;
    if (!opts.cost_only) r.fill = materialize_fill_edges(g, placement);
    r.certificate = std::move(placement);
    r.algorithm = "caterpillar";
    return r;
}

/// Minimum PIG completion of a caterpillar; throws ClassError otherwise.
inline CompletionResult caterpillar_pig_completion(const Graph& g, CompletionOptions opts = {}) {
    auto d = caterpillar_decomposition(g);
    if (!d) throw ClassError("a caterpillar", "", {});
    return caterpillar_pig_completion(g, *d, opts);
}

}  // namespace pigc
