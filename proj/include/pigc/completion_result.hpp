#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "pigc/graph.hpp"

namespace pigc {

/// Two vertex sets completed to cliques. `untouched` holds vertices left out
/// of both (isolated vertices a completion never has to touch).
struct CliqueBipartition {
    std::vector<Vertex> first;
    std::vector<Vertex> second;
    std::vector<Vertex> untouched;
};

/// Caterpillar certificate: spine vertex v_i is the interval [i, i+1] and
/// each leaf sits on an integer point in 0..k+1.
struct PointPlacement {
    std::vector<Vertex> spine;
    std::vector<std::int64_t> point;  // per vertex; for spine vertices the left end of its interval
};

using Certificate = std::variant<CliqueBipartition, PointPlacement>;

struct CompletionResult {
    EdgeSet fill;
    std::size_t cost = 0;  // == fill.size() unless produced in cost-only mode
    Certificate certificate;
    std::string algorithm;
};

struct CompletionOptions {
    /// Skip materializing fill edges; only cost and certificate are filled.
    bool cost_only = false;
};

/// Checks S1/S2(/untouched) partition V; throws InputError otherwise.
inline void require_partition(const Graph& g, const CliqueBipartition& p) {
    std::vector<bool> seen(g.size(), false);
    std::size_t total = 0;
    for (const auto* part : {&p.first, &p.second, &p.untouched})
        for (Vertex v : *part) {
            if (v >= g.size()) throw InputError("vertex " + std::to_string(v) + " out of range");
            if (seen[v]) throw InputError("vertex " + std::to_string(v) + " appears in more than one part");
            seen[v] = true;
            ++total;
        }
    if (total != g.size()) throw InputError("parts do not cover every vertex");
}

/// Non-edges within the first part plus non-edges within the second.
inline EdgeSet bipartition_fill(const Graph& g, const CliqueBipartition& p) {
    return non_edges_within(g, p.first).merged(non_edges_within(g, p.second));
}

}  // namespace pigc
