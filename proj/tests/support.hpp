#pragma once

#include <string>
#include <vector>

#include "pigc/pigc.hpp"

namespace pigc::testing {

inline Graph path(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::span<const Edge>(e));
}

inline Graph cycle(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, std::span<const Edge>(e));
}

inline Graph complete(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, std::span<const Edge>(e));
}

/// Centre 0, leaves 1..t.
inline Graph star(std::size_t t) {
    std::vector<Edge> e;
    for (Vertex v = 1; v <= t; ++v) e.emplace_back(0, v);
    return Graph(t + 1, std::span<const Edge>(e));
}

inline Graph claw() { return star(3); }

/// Centres 0 and 1, leaves 2,3 on 0 and 4,5 on 1.
inline Graph double_star() { return Graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}}); }

/// Triangle 0,1,2 with pendants 3,4,5.
inline Graph net() { return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}}); }

/// Triangle 0,1,2; 3 ~ 0,1; 4 ~ 1,2; 5 ~ 2,0.
inline Graph tent() { return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}, {2, 5}, {0, 5}}); }

inline Graph two_k2() { return Graph(4, {{0, 1}, {2, 3}}); }

inline Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.chance(p)) e.emplace_back(u, v);
    return Graph(n, std::span<const Edge>(e));
}

inline Graph permuted(const Graph& g, const std::vector<Vertex>& perm) {
    std::vector<Edge> e;
    for (const Edge& x : g.edges()) e.emplace_back(perm[x.u], perm[x.v]);
    return Graph(g.size(), std::span<const Edge>(e));
}

inline std::vector<Vertex> random_permutation(std::size_t n, std::uint64_t seed) {
    std::vector<Vertex> p(n);
    for (Vertex v = 0; v < n; ++v) p[v] = v;
    Rng rng(seed);
    rng.shuffle(p);
    return p;
}

inline bool fill_is_valid(const Graph& g, const EdgeSet& fill) {
    for (const Edge& e : fill)
        if (e.v >= g.size() || g.adjacent(e.u, e.v)) return false;
    return static_cast<bool>(is_proper_interval(g.with_edges(fill)));
}

}  // namespace pigc::testing
