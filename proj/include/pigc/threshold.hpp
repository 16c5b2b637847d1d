#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pigc/completion_result.hpp"
#include "pigc/graph.hpp"
#include "pigc/recognition.hpp"

namespace pigc {

enum class Side { S1, S2 };

/// Trace of the greedy clique assignment over a creation sequence.
struct ThresholdRun {
    CreationSequence sequence;           // non-isolated part only
    std::vector<Side> assignment;        // parallel to sequence.steps
    std::vector<std::size_t> s1_sizes;   // |S1| after each step
    std::vector<std::size_t> s2_sizes;   // |S2| after each step
    std::size_t cost = 0;                // sum of per-step charges
    std::size_t steps_executed = 0;      // loop iterations; used for the linear-time check
};

/// Places vertices in creation order. A dominating vertex always goes to S1.
/// An isolated vertex goes to S1 while the isolated vertices still to be
/// added (itself included) outnumber |S1|, otherwise to S2. It is charged
/// the size of its clique at the moment it joins.
inline ThresholdRun assign_threshold_cliques(const CreationSequence& seq) {
    ThresholdRun run;
    run.sequence = seq;
    const std::size_t n = seq.size();
    std::vector<std::size_t> isolated_from(n + 1, 0);
    for (std::size_t i = n; i-- > 0;)
        isolated_from[i] = isolated_from[i + 1] + (seq.steps[i].kind == StepKind::Isolated ? 1 : 0);

    run.assignment.reserve(n);
    run.s1_sizes.reserve(n);
    run.s2_sizes.reserve(n);
    std::size_t s1 = 0, s2 = 0;
    for (std::size_t i = 0; i < n; ++i) {
        ++run.steps_executed;
        Side side = Side::S1;
        if (seq.steps[i].kind == StepKind::Isolated) {
            side = isolated_from[i] > s1 ? Side::S1 : Side::S2;
            run.cost += side == Side::S1 ? s1 : s2;
        }
        (side == Side::S1 ? s1 : s2) += 1;
        run.assignment.push_back(side);
        run.s1_sizes.push_back(s1);
        run.s2_sizes.push_back(s2);
    }
    return run;
}

/// |non-edges within S1| + |non-edges within S2|. Vertices in `untouched`
/// are ignored; throws InputError if the parts are not a partition.
inline std::size_t partition_cost(const Graph& g, const CliqueBipartition& parts) {
    require_partition(g, parts);
    return count_non_edges_within(g, parts.first) + count_non_edges_within(g, parts.second);
}

inline std::size_t partition_cost(const Graph& g, const std::vector<Vertex>& s1, const std::vector<Vertex>& s2) {
    return partition_cost(g, CliqueBipartition{s1, s2, {}});
}

namespace detail {

inline CreationSequence require_threshold(const Graph& g) {
    Obstruction why;
    auto seq = peel_threshold(g, &why);
    if (!seq) throw ClassError("threshold", why.kind, why.vertices);
    return *seq;
}

/// Drops vertices of degree 0 in g from the sequence. What remains is a valid
/// creation sequence of the single non-trivial component.
inline CreationSequence without_isolated(const Graph& g, const CreationSequence& seq) {
    CreationSequence out;
    for (const auto& s : seq.steps)
        if (g.degree(s.vertex) > 0) out.steps.push_back(s);
    return out;
}

}  // namespace detail

/// Full run including the creation sequence of the whole graph.
struct ThresholdCompletion {
    CompletionResult result;
    CreationSequence sequence;
    ThresholdRun run;
};

inline ThresholdCompletion threshold_pig_completion_detailed(const Graph& g, CompletionOptions opts = {}) {
    ThresholdCompletion out;
    out.sequence = detail::require_threshold(g);
    out.run = assign_threshold_cliques(detail::without_isolated(g, out.sequence));

    CliqueBipartition parts;
    for (std::size_t i = 0; i < out.run.sequence.size(); ++i)
        (out.run.assignment[i] == Side::S1 ? parts.first : parts.second).push_back(out.run.sequence.steps[i].vertex);
    for (Vertex v = 0; v < g.size(); ++v)
        if (g.degree(v) == 0) parts.untouched.push_back(v);
    std::sort(parts.first.begin(), parts.first.end());
    std::sort(parts.second.begin(), parts.second.end());

    out.result.cost = out.run.cost;
    if (!opts.cost_only) out.result.fill = bipartition_fill(g, parts);
    out.result.certificate = std::move(parts);
    out.result.algorithm = "threshold";
    return out;
}

/// Minimum PIG completion of a threshold graph. Throws ClassError with a
/// 2K2/C4/P4 witness otherwise.
inline CompletionResult threshold_pig_completion(const Graph& g, CompletionOptions opts = {}) {
    return threshold_pig_completion_detailed(g, opts).result;
}

struct MaxCutIdentityReport {
    std::size_t vertices = 0;  // size of the non-trivial part the identity is evaluated on
    std::size_t min_fill = 0;
    std::size_t max_cut_complement = 0;
    bool identity_holds = false;
};

/// Removes vertices of degree 0.
inline InducedSubgraph strip_isolated(const Graph& g) {
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < g.size(); ++v)
        if (g.degree(v) > 0) keep.push_back(v);
    return induced_subgraph(g, keep);
}

/// Checks min fill == C(n,2) - |E| - maxcut(complement) on the non-trivial
/// component. `max_cut` is any exact max-cut routine (the oracle's brute
/// force in practice) taking a Graph and returning the cut size.
template <typename MaxCut>
MaxCutIdentityReport maxcut_identity_check(const Graph& g, MaxCut&& max_cut) {
    MaxCutIdentityReport r;
    const auto core = strip_isolated(g);
    r.vertices = core.graph.size();
    r.min_fill = threshold_pig_completion(g, {.cost_only = true}).cost;
    r.max_cut_complement = max_cut(complement(core.graph));
    r.identity_holds = pairs_of(r.vertices) == core.graph.edge_count() + r.max_cut_complement + r.min_fill;
    return r;
}

}  // namespace pigc
