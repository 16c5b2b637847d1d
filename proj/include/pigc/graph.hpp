#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pigc/bit_matrix.hpp"
#include "pigc/errors.hpp"

namespace pigc {

/// Unordered vertex pair in canonical form (u < v).
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

    auto operator<=>(const Edge&) const = default;
};

/// Sorted, duplicate-free set of canonical edges.
class EdgeSet {
public:
    EdgeSet() = default;
    EdgeSet(std::initializer_list<Edge> edges) : edges_(edges) { normalize(); }
    explicit EdgeSet(std::vector<Edge> edges) : edges_(std::move(edges)) { normalize(); }

    std::size_t size() const noexcept { return edges_.size(); }
    bool empty() const noexcept { return edges_.empty(); }
    auto begin() const noexcept { return edges_.begin(); }
    auto end() const noexcept { return edges_.end(); }
    const Edge& operator[](std::size_t i) const { return edges_[i]; }
    const std::vector<Edge>& items() const noexcept { return edges_; }

    bool contains(Edge e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

    /// Set union; both inputs are already sorted.
    EdgeSet merged(const EdgeSet& other) const {
        EdgeSet out;
        out.edges_.reserve(size() + other.size());
        std::set_union(edges_.begin(), edges_.end(), other.edges_.begin(), other.edges_.end(),
                       std::back_inserter(out.edges_));
        return out;
    }

    bool operator==(const EdgeSet&) const = default;

private:
    void normalize() {
        for (auto& e : edges_) e = Edge(e.u, e.v);
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    }

    std::vector<Edge> edges_;
};

/// Undirected simple graph on vertices 0..n-1. Immutable after construction;
/// keeps sorted neighbour lists for iteration and a bit matrix for O(1)
/// adjacency tests.
class Graph {
public:
    Graph() = default;

    /// Throws InputError on out-of-range endpoints or self-loops; duplicate
    /// pairs collapse.
    Graph(std::size_t n, std::span<const Edge> edges) : adj_(n), matrix_(n) {
        for (const Edge& e : edges) {
            if (e.u >= n || e.v >= n)
                throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                 ") has an endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
            if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
            if (matrix_.test(e.u, e.v)) continue;
            matrix_.set_sym(e.u, e.v);
            adj_[e.u].push_back(e.v);
            adj_[e.v].push_back(e.u);
            ++m_;
        }
        for (auto& list : adj_) std::sort(list.begin(), list.end());
    }
    Graph(std::size_t n, const EdgeSet& edges) : Graph(n, std::span<const Edge>(edges.items())) {}
    Graph(std::size_t n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    std::size_t size() const noexcept { return adj_.size(); }
    std::size_t edge_count() const noexcept { return m_; }
    std::size_t degree(Vertex v) const { return adj_[v].size(); }
    bool adjacent(Vertex u, Vertex v) const { return matrix_.test(u, v); }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    const BitMatrix& matrix() const noexcept { return matrix_; }

    EdgeSet edges() const {
        std::vector<Edge> out;
        out.reserve(m_);
        for (Vertex u = 0; u < size(); ++u)
            for (Vertex v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return EdgeSet(std::move(out));
    }

    /// Same vertex set with `extra` added; extra edges may overlap E.
    Graph with_edges(const EdgeSet& extra) const { return Graph(size(), edges().merged(extra)); }

    bool operator==(const Graph& o) const { return matrix_ == o.matrix_; }

private:
    std::vector<std::vector<Vertex>> adj_;
    BitMatrix matrix_;
    std::size_t m_ = 0;
};

inline Graph build_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [u, v] : pairs) {
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
        edges.emplace_back(u, v);
    }
    return Graph(n, std::span<const Edge>(edges));
}

inline Graph complement(const Graph& g) {
    std::vector<Edge> out;
    const std::size_t n = g.size();
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) out.emplace_back(u, v);
    return Graph(n, std::span<const Edge>(out));
}

struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> original;  // new id -> old id
};

/// Relabels `s` (in ascending order) to 0..|s|-1.
inline InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
    std::vector<Vertex> keep(s.begin(), s.end());
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    for (Vertex v : keep)
        if (v >= g.size()) throw InputError("vertex " + std::to_string(v) + " out of range");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (g.adjacent(keep[i], keep[j])) edges.emplace_back(i, j);
    return {Graph(keep.size(), std::span<const Edge>(edges)), std::move(keep)};
}

/// Components in order of their smallest vertex; each list is sorted.
inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    const std::size_t n = g.size();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> comp;
        seen[s] = true;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

inline bool is_connected(const Graph& g) { return g.size() <= 1 || connected_components(g).size() == 1; }

inline EdgeSet non_edges_within(const Graph& g, std::span<const Vertex> s) {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[i] != s[j] && !g.adjacent(s[i], s[j])) out.emplace_back(s[i], s[j]);
    return EdgeSet(std::move(out));
}

/// Number of non-adjacent pairs inside `s` without materializing them.
inline std::size_t count_non_edges_within(const Graph& g, std::span<const Vertex> s) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.adjacent(s[i], s[j])) ++c;
    return c;
}

/// Non-adjacent pairs with one endpoint in each of `a`, `b`.
inline std::size_t count_non_edges_across(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b) {
    std::size_t c = 0;
    for (Vertex u : a)
        for (Vertex v : b)
            if (!g.adjacent(u, v)) ++c;
    return c;
}

inline constexpr std::size_t pairs_of(std::size_t k) noexcept { return k < 2 ? 0 : k * (k - 1) / 2; }

}  // namespace pigc
