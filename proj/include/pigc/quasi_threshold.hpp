#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "pigc/completion_result.hpp"
#include "pigc/graph.hpp"
#include "pigc/recognition.hpp"

namespace pigc {

/// Tables of the co-bipartite completion DP over a quasi-threshold forest.
///
/// For a node v with children v_1..v_c (in forest order) and
/// X_i = T(v_1) u ... u T(v_i), C(v,i,j) is the cheapest way to split X_i
/// into two cliques of sizes j and x_i - j. D(v,j) is the same for the whole
/// subtree T(v) with one clique of size j; v itself is adjacent to all of
/// T(v) so it joins either clique for free.
///
/// Node ids 0..n-1 are the graph's vertices. When the forest has several
/// roots a virtual node n is added whose children are the roots; only its C
/// row is evaluated, so it contributes no vertex of its own.
class DpTables {
public:
    using Cost = std::uint64_t;

    std::size_t vertex_count() const noexcept { return n_; }
    bool has_virtual_root() const noexcept { return virtual_root_; }
    std::size_t top_node() const noexcept { return top_; }

    const std::vector<Vertex>& children(std::size_t node) const { return children_[node]; }
    std::size_t child_count(std::size_t node) const { return children_[node].size(); }
    /// x_{i,v}
    std::size_t prefix_size(std::size_t node, std::size_t i) const { return prefix_[node][i]; }
    Cost c(std::size_t node, std::size_t i, std::size_t j) const { return c_[node][i][j]; }
    Cost d(Vertex v, std::size_t j) const { return d_[v][j]; }
    /// True when D(v,j) puts v itself in the clique of size j.
    bool d_root_in_j_side(Vertex v, std::size_t j) const { return d_side_[v][j]; }
    /// argmin k for C(node, i, j), i >= 1.
    std::size_t choice(std::size_t node, std::size_t i, std::size_t j) const { return choice_[node][i][j]; }

    /// min_j D(r,j) for a single root, min_j C(virtual, c, j) otherwise.
    Cost optimum() const noexcept { return optimum_; }
    /// Smallest j attaining the optimum: size of the first clique.
    std::size_t optimum_split() const noexcept { return best_j_; }
    /// Number of (node, i, j, k) recurrence evaluations.
    std::uint64_t evaluations() const noexcept { return evaluations_; }

    friend DpTables build_dp_tables(const QtForest& forest);

private:
    std::size_t n_ = 0;
    bool virtual_root_ = false;
    std::size_t top_ = 0;
    std::vector<std::vector<Vertex>> children_;
    std::vector<std::vector<std::size_t>> prefix_;
    std::vector<std::vector<std::vector<Cost>>> c_;
    std::vector<std::vector<std::vector<std::uint32_t>>> choice_;
    std::vector<std::vector<Cost>> d_;
    std::vector<std::vector<bool>> d_side_;
    Cost optimum_ = 0;
    std::size_t best_j_ = 0;
    std::uint64_t evaluations_ = 0;
};

/// Bottom-up over the forest, children left to right:
///   C(v,0,0) = 0
///   C(v,i,j) = min_k C(v,i-1,k) + D(v_i,j-k) + k(j-k) + (x_{i-1}-k)(n_{v_i}-j+k)
/// for max(0, j-n_{v_i}) <= k <= min(j, x_{i-1}); the two products pay for
/// the missing pairs between earlier subtrees and T(v_i) on each side.
///   D(v,j) = min(C(v,c_v,j-1), C(v,c_v,j))
/// where the first term places v in the clique of size j (needs j >= 1) and
/// the second places it in the other one (needs j < n_v). Ties go to the
/// smallest k and to v joining the size-j clique.
inline DpTables build_dp_tables(const QtForest& forest) {
    using Cost = DpTables::Cost;
    DpTables t;
    const std::size_t n = forest.size();
    t.n_ = n;
    t.virtual_root_ = forest.roots().size() > 1;
    const std::size_t nodes = n + (t.virtual_root_ ? 1 : 0);
    t.children_.resize(nodes);
    t.prefix_.resize(nodes);
    t.c_.resize(nodes);
    t.choice_.resize(nodes);
    t.d_.resize(n);
    t.d_side_.resize(n);
    for (Vertex v = 0; v < n; ++v) t.children_[v] = forest.children(v);
    if (t.virtual_root_) t.children_[n] = forest.roots();

    auto fill_c = [&](std::size_t node) {
        const auto& kids = t.children_[node];
        auto& x = t.prefix_[node];
        auto& rows = t.c_[node];
        auto& picks = t.choice_[node];
        x.assign(kids.size() + 1, 0);
        for (std::size_t i = 1; i <= kids.size(); ++i) x[i] = x[i - 1] + forest.subtree_size(kids[i - 1]);
        rows.assign(kids.size() + 1, {});
        picks.assign(kids.size() + 1, {});
        rows[0] = {0};
        for (std::size_t i = 1; i <= kids.size(); ++i) {
            const Vertex child = kids[i - 1];
            const std::size_t nc = forest.subtree_size(child);
            const std::size_t xp = x[i - 1];
            rows[i].assign(x[i] + 1, std::numeric_limits<Cost>::max());
            picks[i].assign(x[i] + 1, 0);
            for (std::size_t j = 0; j <= x[i]; ++j) {
                const std::size_t lo = j > nc ? j - nc : 0;
                const std::size_t hi = std::min(j, xp);
                for (std::size_t k = lo; k <= hi; ++k) {
                    ++t.evaluations_;
                    const Cost val = rows[i - 1][k] + t.d_[child][j - k] + Cost{k} * (j - k) +
                                     Cost{xp - k} * (nc - j + k);
                    if (val < rows[i][j]) {
                        rows[i][j] = val;
                        picks[i][j] = static_cast<std::uint32_t>(k);
                    }
                }
            }
        }
    };

    const auto& pre = forest.preorder();
    for (auto it = pre.rbegin(); it != pre.rend(); ++it) {
        const Vertex v = *it;
        fill_c(v);
        const auto& last = t.c_[v].back();
        const std::size_t nv = forest.subtree_size(v);
        auto& d = t.d_[v];
        auto& side = t.d_side_[v];
        d.assign(nv + 1, 0);
        side.assign(nv + 1, true);
        for (std::size_t j = 0; j <= nv; ++j) {
            if (j == 0 || (j < nv && last[j] < last[j - 1])) {
                d[j] = last[j];
                side[j] = false;
            } else {
                d[j] = last[j - 1];
            }
        }
    }

    if (n == 0) return t;
    if (t.virtual_root_) {
        t.top_ = n;
        fill_c(n);
        const auto& last = t.c_[n].back();
        t.best_j_ = static_cast<std::size_t>(std::min_element(last.begin(), last.end()) - last.begin());
        t.optimum_ = last[t.best_j_];
    } else {
        const Vertex r = forest.roots().front();
        t.top_ = r;
        const auto& d = t.d_[r];
        t.best_j_ = static_cast<std::size_t>(std::min_element(d.begin(), d.end()) - d.begin());
        t.optimum_ = d[t.best_j_];
    }
    return t;
}

/// Recovers the clique bipartition behind the optimum; the first part has
/// exactly optimum_split() vertices.
inline CliqueBipartition backtrack_bipartition(const DpTables& t) {
    CliqueBipartition parts;
    if (t.vertex_count() == 0) return parts;
    struct Task {
        std::size_t node;
        std::size_t i;
        std::size_t j;
        bool first_is_s1;
        bool is_d;  // D(node, j) rather than C(node, i, j)
    };
    auto put = [&](Vertex v, bool in_s1) { (in_s1 ? parts.first : parts.second).push_back(v); };
    std::vector<Task> stack;
    if (t.has_virtual_root())
        stack.push_back({t.top_node(), t.child_count(t.top_node()), t.optimum_split(), true, false});
    else
        stack.push_back({t.top_node(), 0, t.optimum_split(), true, true});
    while (!stack.empty()) {
        Task task = stack.back();
        stack.pop_back();
        if (task.is_d) {
            const Vertex v = task.node;
            const std::size_t c = t.child_count(v);
            const bool in_j_side = t.d_root_in_j_side(v, task.j);
            put(v, in_j_side == task.first_is_s1);
            stack.push_back({v, c, in_j_side ? task.j - 1 : task.j, task.first_is_s1, false});
            continue;
        }
        std::size_t j = task.j;
        for (std::size_t i = task.i; i > 0; --i) {
            const std::size_t k = t.choice(task.node, i, j);
            stack.push_back({t.children(task.node)[i - 1], 0, j - k, task.first_is_s1, true});
            j = k;
        }
    }
    std::sort(parts.first.begin(), parts.first.end());
    std::sort(parts.second.begin(), parts.second.end());
    return parts;
}

/// Minimum completion of a quasi-threshold graph to a co-bipartite graph
/// (two cliques). This bounds the PIG completion number from below but is
/// not always a PIG completion itself.
inline CompletionResult qt_cobipartite_completion(const Graph& g, const QtForest& forest,
                                                  CompletionOptions opts = {}) {
    const auto tables = build_dp_tables(forest);
    CompletionResult r;
    auto parts = backtrack_bipartition(tables);
    r.cost = tables.optimum();
    if (!opts.cost_only) r.fill = bipartition_fill(g, parts);
    r.certificate = std::move(parts);
    r.algorithm = "qt-cobipartite";
    return r;
}

/// As above, recognizing the forest first. Throws ClassError with a P4/C4
/// witness on non-quasi-threshold input.
inline CompletionResult qt_cobipartite_completion(const Graph& g, CompletionOptions opts = {}) {
    Obstruction why;
    auto forest = detail::build_qt_forest(g, &why);
    if (!forest) throw ClassError("quasi-threshold", why.kind, why.vertices);
    return qt_cobipartite_completion(g, *forest, opts);
}

}  // namespace pigc
