#pragma once

#include <algorithm>
#include <deque>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "pigc/bit_matrix.hpp"
#include "pigc/graph.hpp"

namespace pigc {

// ---------------------------------------------------------------------------
// Proper interval graphs: chordal and {claw, net, tent}-free.
// ---------------------------------------------------------------------------

enum class PigObstruction { None, ChordlessCycle, Claw, Net, Tent };

inline const char* to_string(PigObstruction o) {
    switch (o) {
        case PigObstruction::None: return "none";
        case PigObstruction::ChordlessCycle: return "chordless-cycle";
        case PigObstruction::Claw: return "claw";
        case PigObstruction::Net: return "net";
        case PigObstruction::Tent: return "tent";
    }
    return "unknown";
}

/// Result of the PIG test. On failure `witness` lists the obstruction's
/// vertices: a cycle in cyclic order; a claw as centre then leaves; a net or
/// tent as the triangle a,b,c followed by the three outer vertices (for the
/// net, the i-th outer vertex hangs off the i-th triangle vertex; for the
/// tent it sees ab, bc and ac respectively).
struct PigVerdict {
    bool proper_interval = true;
    PigObstruction kind = PigObstruction::None;
    std::vector<Vertex> witness;

    explicit operator bool() const noexcept { return proper_interval; }
};

namespace detail {

/// Induced cycle of length >= 4 through v, u, w where u, w are non-adjacent
/// neighbours of v, found as v + a shortest u-w path avoiding N[v] \ {u,w}.
inline std::optional<std::vector<Vertex>> cycle_through(const BitMatrix& m, Vertex v, Vertex u, Vertex w) {
    const std::size_t n = m.size();
    std::vector<bool> blocked(n, false);
    blocked[v] = true;
    for (Vertex x = 0; x < n; ++x)
        if (m.test(v, x) && x != u && x != w) blocked[x] = true;
    std::vector<Vertex> prev(n, n);
    std::deque<Vertex> q{u};
    prev[u] = u;
    while (!q.empty()) {
        Vertex x = q.front();
        q.pop_front();
        if (x == w) break;
        for (Vertex y = 0; y < n; ++y)
            if (m.test(x, y) && !blocked[y] && prev[y] == n) {
                prev[y] = x;
                q.push_back(y);
            }
    }
    if (prev[w] == n) return std::nullopt;
    std::vector<Vertex> path;
    for (Vertex x = w; x != u; x = prev[x]) path.push_back(x);
    path.push_back(u);
    std::reverse(path.begin(), path.end());
    std::vector<Vertex> cyc{v};
    cyc.insert(cyc.end(), path.begin(), path.end());
    return cyc;
}

/// Maximum cardinality search (ties to the smallest id); returns visit order.
inline std::vector<Vertex> mcs_order(const BitMatrix& m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> weight(n, 0);
    std::vector<bool> done(n, false);
    std::vector<Vertex> order;
    order.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        Vertex best = n;
        for (Vertex v = 0; v < n; ++v)
            if (!done[v] && (best == n || weight[v] > weight[best])) best = v;
        done[best] = true;
        order.push_back(best);
        for (Vertex w = 0; w < n; ++w)
            if (!done[w] && m.test(best, w)) ++weight[w];
    }
    return order;
}

/// Chordality by MCS + perfect elimination check. On failure stores a
/// chordless cycle in `cycle`.
inline bool is_chordal(const BitMatrix& m, std::vector<Vertex>* cycle) {
    const std::size_t n = m.size();
    const auto order = mcs_order(m);
    std::vector<std::size_t> visit(n);
    for (std::size_t i = 0; i < n; ++i) visit[order[i]] = i;
    BitRow visited(n);
    for (Vertex v : order) {
        BitRow later(m, v);
        later &= visited;
        visited.set(v);
        if (!later.any()) continue;
        Vertex p = later.first();
        later.for_each([&](std::size_t x) {
            if (visit[x] > visit[p]) p = x;
        });
        later.reset(p);
        later.and_not_row(m, p);
        if (!later.any()) continue;
        if (cycle) {
            const Vertex w = later.first();
            if (auto c = cycle_through(m, v, p, w)) {
                *cycle = std::move(*c);
                return false;
            }
            for (Vertex c0 = 0; c0 < n; ++c0)
                for (Vertex a = 0; a < n; ++a) {
                    if (!m.test(c0, a)) continue;
                    for (Vertex b = a + 1; b < n; ++b) {
                        if (!m.test(c0, b) || m.test(a, b)) continue;
                        if (auto c = cycle_through(m, c0, a, b)) {
                            *cycle = std::move(*c);
                            return false;
                        }
                    }
                }
        }
        return false;
    }
    return true;
}

inline bool find_claw(const BitMatrix& m, std::vector<Vertex>& out) {
    const std::size_t n = m.size();
    for (Vertex c = 0; c < n; ++c) {
        BitRow nc(m, c);
        for (Vertex a = nc.first(); a < n; a = nc.next(a + 1)) {
            BitRow ca = nc;
            ca.and_not_row(m, a).keep_above(a);
            for (Vertex b = ca.first(); b < n; b = ca.next(b + 1)) {
                BitRow cb = ca;
                cb.and_not_row(m, b).keep_above(b);
                if (cb.any()) {
                    out = {c, a, b, cb.first()};
                    return true;
                }
            }
        }
    }
    return false;
}

/// Searches triangles a<b<c for a net (pendants private to one corner each)
/// or a tent (outer vertices seeing exactly two corners each).
inline PigObstruction find_net_or_tent(const BitMatrix& m, std::vector<Vertex>& out) {
    const std::size_t n = m.size();
    for (Vertex a = 0; a < n; ++a) {
        BitRow na(m, a);
        BitRow nab_candidates = na;
        nab_candidates.keep_above(a);
        for (Vertex b = nab_candidates.first(); b < n; b = nab_candidates.next(b + 1)) {
            BitRow third = na;
            third.and_row(m, b).keep_above(b);
            for (Vertex c = third.first(); c < n; c = third.next(c + 1)) {
                auto outside = [&](BitRow r) {
                    r.reset(a);
                    r.reset(b);
                    r.reset(c);
                    return r;
                };
                // net
                BitRow xa = outside(BitRow(m, a));
                xa.and_not_row(m, b).and_not_row(m, c);
                BitRow yb = outside(BitRow(m, b));
                yb.and_not_row(m, a).and_not_row(m, c);
                BitRow zc = outside(BitRow(m, c));
                zc.and_not_row(m, a).and_not_row(m, b);
                for (Vertex x = xa.first(); x < n; x = xa.next(x + 1)) {
                    BitRow ys = yb;
                    ys.and_not_row(m, x);
                    for (Vertex y = ys.first(); y < n; y = ys.next(y + 1)) {
                        BitRow zs = zc;
                        zs.and_not_row(m, x).and_not_row(m, y);
                        if (zs.any()) {
                            out = {a, b, c, x, y, zs.first()};
                            return PigObstruction::Net;
                        }
                    }
                }
                // tent
                BitRow xab = outside(BitRow(m, a));
                xab.and_row(m, b).and_not_row(m, c);
                BitRow ybc = outside(BitRow(m, b));
                ybc.and_row(m, c).and_not_row(m, a);
                BitRow zac = outside(BitRow(m, a));
                zac.and_row(m, c).and_not_row(m, b);
                for (Vertex x = xab.first(); x < n; x = xab.next(x + 1)) {
                    BitRow ys = ybc;
                    ys.and_not_row(m, x);
                    for (Vertex y = ys.first(); y < n; y = ys.next(y + 1)) {
                        BitRow zs = zac;
                        zs.and_not_row(m, x).and_not_row(m, y);
                        if (zs.any()) {
                            out = {a, b, c, x, y, zs.first()};
                            return PigObstruction::Tent;
                        }
                    }
                }
            }
        }
    }
    return PigObstruction::None;
}

}  // namespace detail

/// Dense-matrix entry point; also used by the oracles on scratch matrices.
inline PigVerdict check_proper_interval(const BitMatrix& m) {
    PigVerdict r;
    if (!detail::is_chordal(m, &r.witness)) {
        r.proper_interval = false;
        r.kind = PigObstruction::ChordlessCycle;
        return r;
    }
    if (detail::find_claw(m, r.witness)) {
        r.proper_interval = false;
        r.kind = PigObstruction::Claw;
        return r;
    }
    if (auto k = detail::find_net_or_tent(m, r.witness); k != PigObstruction::None) {
        r.proper_interval = false;
        r.kind = k;
        return r;
    }
    r.witness.clear();
    return r;
}

inline PigVerdict is_proper_interval(const Graph& g) { return check_proper_interval(g.matrix()); }

// ---------------------------------------------------------------------------
// Small induced obstructions used for class-error witnesses.
// ---------------------------------------------------------------------------

struct Obstruction {
    std::string kind;  // "P4", "C4", "2K2"
    std::vector<Vertex> vertices;
};

namespace detail {

/// In a connected vertex set without a universal vertex there is an induced
/// P4 or C4: take v of maximum degree, a neighbour a with a neighbour w
/// outside N[v]; then some x in N(v) \ N[a] closes x-v-a-w.
inline std::optional<Obstruction> p4_or_c4_in(const Graph& g, const std::vector<Vertex>& comp) {
    BitRow inside(g.size());
    for (Vertex v : comp) inside.set(v);
    auto deg_in = [&](Vertex v) {
        BitRow r(g.matrix(), v);
        r &= inside;
        return r.count();
    };
    Vertex v = comp.front();
    for (Vertex u : comp)
        if (deg_in(u) > deg_in(v)) v = u;
    BitRow nv(g.matrix(), v);
    nv &= inside;
    for (Vertex a = nv.first(); a < g.size(); a = nv.next(a + 1)) {
        BitRow far(g.matrix(), a);
        far &= inside;
        far.and_not_row(g.matrix(), v);
        far.reset(v);
        if (!far.any()) continue;
        const Vertex w = far.first();
        BitRow xs = nv;
        xs.and_not_row(g.matrix(), a);
        xs.reset(a);
        if (!xs.any()) continue;
        const Vertex x = xs.first();
        return Obstruction{g.adjacent(x, w) ? "C4" : "P4", {x, v, a, w}};
    }
    return std::nullopt;
}

inline Obstruction two_k2_or_path(const Graph& g, const std::vector<Vertex>& alive) {
    const auto sub = induced_subgraph(g, alive);
    const auto comps = connected_components(sub.graph);
    if (comps.size() >= 2) {
        std::vector<Vertex> w;
        for (std::size_t i = 0; i < 2; ++i) {
            const Vertex x = comps[i].front();
            w.push_back(sub.original[x]);
            w.push_back(sub.original[sub.graph.neighbors(x).front()]);
        }
        return {"2K2", w};
    }
    auto ob = p4_or_c4_in(sub.graph, comps.front());
    for (auto& x : ob->vertices) x = sub.original[x];
    return *ob;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Threshold graphs.
// ---------------------------------------------------------------------------

enum class StepKind { Isolated, Dominating };

struct CreationStep {
    Vertex vertex = 0;
    StepKind kind = StepKind::Isolated;

    bool operator==(const CreationStep&) const = default;
};

/// Vertices in the order they are added, each isolated or dominating at the
/// moment it appears.
struct CreationSequence {
    std::vector<CreationStep> steps;

    std::size_t size() const noexcept { return steps.size(); }
    bool operator==(const CreationSequence&) const = default;
};

/// Rebuilds the graph a creation sequence describes. Vertex ids must be a
/// permutation of 0..size-1.
inline Graph replay(const CreationSequence& seq) {
    const std::size_t n = seq.size();
    std::vector<bool> seen(n, false);
    std::vector<Edge> edges;
    std::vector<Vertex> earlier;
    for (const auto& s : seq.steps) {
        if (s.vertex >= n || seen[s.vertex]) throw InputError("creation sequence is not a permutation of 0..n-1");
        seen[s.vertex] = true;
        if (s.kind == StepKind::Dominating)
            for (Vertex u : earlier) edges.emplace_back(u, s.vertex);
        earlier.push_back(s.vertex);
    }
    return Graph(n, std::span<const Edge>(edges));
}

namespace detail {

/// Peels a universal vertex (preferred) or an isolated one, smallest id
/// first, and reverses. The final remaining vertex is tagged Isolated.
inline std::optional<CreationSequence> peel_threshold(const Graph& g, Obstruction* why) {
    const std::size_t n = g.size();
    std::vector<std::size_t> deg(n);
    for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<bool> alive(n, true);
    std::size_t left = n;
    std::vector<CreationStep> peeled;
    peeled.reserve(n);
    while (left > 0) {
        Vertex pick = n;
        StepKind kind = StepKind::Isolated;
        if (left == 1) {
            for (Vertex v = 0; v < n; ++v)
                if (alive[v]) pick = v;
        } else {
            for (Vertex v = 0; v < n && pick == n; ++v)
                if (alive[v] && deg[v] == left - 1) {
                    pick = v;
                    kind = StepKind::Dominating;
                }
            for (Vertex v = 0; v < n && pick == n; ++v)
                if (alive[v] && deg[v] == 0) pick = v;
        }
        if (pick == n) {
            if (why) {
                std::vector<Vertex> rest;
                for (Vertex v = 0; v < n; ++v)
                    if (alive[v]) rest.push_back(v);
                *why = two_k2_or_path(g, rest);
            }
            return std::nullopt;
        }
        alive[pick] = false;
        --left;
        for (Vertex w : g.neighbors(pick))
            if (alive[w]) --deg[w];
        peeled.push_back({pick, kind});
    }
    std::reverse(peeled.begin(), peeled.end());
    return CreationSequence{std::move(peeled)};
}

}  // namespace detail

inline std::optional<CreationSequence> threshold_creation_sequence(const Graph& g) {
    return detail::peel_threshold(g, nullptr);
}

// ---------------------------------------------------------------------------
// Quasi-threshold graphs.
// ---------------------------------------------------------------------------

/// Rooted forest whose ancestor/descendant pairs are exactly the edges of a
/// quasi-threshold graph. Children are kept in ascending id order.
class QtForest {
public:
    QtForest() = default;

    /// Throws InputError if the parent array has a cycle or bad ids.
    static QtForest from_parents(std::vector<std::optional<Vertex>> parent) {
        QtForest f;
        const std::size_t n = parent.size();
        f.parent_ = std::move(parent);
        f.children_.assign(n, {});
        for (Vertex v = 0; v < n; ++v) {
            if (!f.parent_[v]) {
                f.roots_.push_back(v);
                continue;
            }
            const Vertex p = *f.parent_[v];
            if (p >= n || p == v) throw InputError("invalid parent for vertex " + std::to_string(v));
            f.children_[p].push_back(v);
        }
        f.subtree_.assign(n, 0);
        // post-order via explicit stack; also detects cycles (unreached vertices)
        std::vector<Vertex> order;
        order.reserve(n);
        std::vector<Vertex> stack(f.roots_.rbegin(), f.roots_.rend());
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            order.push_back(v);
            for (auto it = f.children_[v].rbegin(); it != f.children_[v].rend(); ++it) stack.push_back(*it);
        }
        if (order.size() != n) throw InputError("parent array contains a cycle");
        f.preorder_ = order;
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            std::size_t s = 1;
            for (Vertex c : f.children_[*it]) s += f.subtree_[c];
            f.subtree_[*it] = s;
        }
        return f;
    }

    std::size_t size() const noexcept { return parent_.size(); }
    const std::optional<Vertex>& parent(Vertex v) const { return parent_[v]; }
    const std::vector<Vertex>& children(Vertex v) const { return children_[v]; }
    const std::vector<Vertex>& roots() const noexcept { return roots_; }
    /// n_v: vertices in the subtree rooted at v, v included.
    std::size_t subtree_size(Vertex v) const { return subtree_[v]; }
    /// c_v
    std::size_t child_count(Vertex v) const { return children_[v].size(); }
    /// Roots first, each subtree contiguous, children in stored order.
    const std::vector<Vertex>& preorder() const noexcept { return preorder_; }

    /// Graph whose edges are the strict ancestor pairs.
    Graph ancestor_graph() const {
        std::vector<Edge> edges;
        for (Vertex v = 0; v < size(); ++v)
            for (auto p = parent_[v]; p; p = parent_[*p]) edges.emplace_back(*p, v);
        return Graph(size(), std::span<const Edge>(edges));
    }

private:
    std::vector<std::optional<Vertex>> parent_;
    std::vector<std::vector<Vertex>> children_;
    std::vector<Vertex> roots_;
    std::vector<std::size_t> subtree_;
    std::vector<Vertex> preorder_;
};

namespace detail {

inline std::optional<QtForest> build_qt_forest(const Graph& g, Obstruction* why) {
    const std::size_t n = g.size();
    std::vector<std::optional<Vertex>> parent(n);
    struct Task {
        std::vector<Vertex> set;
        std::optional<Vertex> parent;
    };
    std::vector<Task> work;
    {
        std::vector<Vertex> all(n);
        std::iota(all.begin(), all.end(), Vertex{0});
        work.push_back({std::move(all), std::nullopt});
    }
    while (!work.empty()) {
        Task t = std::move(work.back());
        work.pop_back();
        if (t.set.empty()) continue;
        const auto sub = induced_subgraph(g, t.set);
        for (const auto& comp : connected_components(sub.graph)) {
            Vertex root = n;
            for (Vertex v : comp)
                if (sub.graph.degree(v) == comp.size() - 1) {
                    root = v;
                    break;
                }
            if (root == n) {
                if (why) {
                    auto ob = p4_or_c4_in(sub.graph, comp);
                    for (auto& x : ob->vertices) x = sub.original[x];
                    *why = *ob;
                }
                return std::nullopt;
            }
            parent[sub.original[root]] = t.parent;
            std::vector<Vertex> rest;
            for (Vertex v : comp)
                if (v != root) rest.push_back(sub.original[v]);
            work.push_back({std::move(rest), sub.original[root]});
        }
    }
    return QtForest::from_parents(std::move(parent));
}

}  // namespace detail

/// Per component the smallest universal vertex becomes the root; recurse on
/// the components of the remainder.
inline std::optional<QtForest> quasi_threshold_forest(const Graph& g) { return detail::build_qt_forest(g, nullptr); }

// ---------------------------------------------------------------------------
// Caterpillars.
// ---------------------------------------------------------------------------

struct CaterpillarDecomposition {
    std::vector<Vertex> spine;                 // v_0 .. v_k
    std::vector<std::vector<Vertex>> buckets;  // V_i: leaves of v_i, ascending

    std::size_t leaf_count() const {
        std::size_t s = 0;
        for (const auto& b : buckets) s += b.size();
        return s;
    }
    CaterpillarDecomposition reversed() const {
        return {{spine.rbegin(), spine.rend()}, {buckets.rbegin(), buckets.rend()}};
    }
    bool operator==(const CaterpillarDecomposition&) const = default;
};

/// Checks that the decomposition describes `g` exactly: spine is an induced
/// path, every other vertex is a leaf of its spine vertex, nothing else.
inline bool decomposition_matches(const Graph& g, const CaterpillarDecomposition& d) {
    if (d.spine.empty() || d.buckets.size() != d.spine.size()) return false;
    if (d.spine.size() + d.leaf_count() != g.size()) return false;
    std::vector<bool> seen(g.size(), false);
    auto claim = [&](Vertex v) {
        if (v >= g.size() || seen[v]) return false;
        seen[v] = true;
        return true;
    };
    std::size_t expected_edges = d.spine.size() - 1;
    for (std::size_t i = 0; i < d.spine.size(); ++i) {
        if (!claim(d.spine[i])) return false;
        if (i + 1 < d.spine.size() && !g.adjacent(d.spine[i], d.spine[i + 1])) return false;
    }
    for (std::size_t i = 0; i < d.buckets.size(); ++i)
        for (Vertex leaf : d.buckets[i]) {
            if (!claim(leaf) || g.degree(leaf) != 1 || !g.adjacent(leaf, d.spine[i])) return false;
            ++expected_edges;
        }
    return g.edge_count() == expected_edges;
}

/// Trees whose non-leaf vertices induce a path. The spine starts at the
/// endpoint with the smaller id; K1 -> [v], K2 -> [smaller id], stars ->
/// [centre].
inline std::optional<CaterpillarDecomposition> caterpillar_decomposition(const Graph& g) {
    const std::size_t n = g.size();
    if (n == 0) return std::nullopt;
    if (g.edge_count() != n - 1 || !is_connected(g)) return std::nullopt;
    if (n == 1) return CaterpillarDecomposition{{0}, {{}}};
    if (n == 2) return CaterpillarDecomposition{{0}, {{1}}};

    std::vector<Vertex> inner;
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) > 1) inner.push_back(v);
    std::vector<bool> is_inner(n, false);
    for (Vertex v : inner) is_inner[v] = true;
    auto inner_deg = [&](Vertex v) {
        std::size_t d = 0;
        for (Vertex w : g.neighbors(v)) d += is_inner[w] ? 1 : 0;
        return d;
    };
    std::vector<Vertex> ends;
    for (Vertex v : inner) {
        const auto d = inner_deg(v);
        if (d > 2) return std::nullopt;
        if (d <= 1) ends.push_back(v);
    }
    // the inner vertices of a tree form a subtree, so max inner degree 2 means a path
    CaterpillarDecomposition out;
    Vertex cur = inner.size() == 1 ? inner.front() : *std::min_element(ends.begin(), ends.end());
    Vertex prev = n;
    while (true) {
        out.spine.push_back(cur);
        std::vector<Vertex> leaves;
        Vertex next = n;
        for (Vertex w : g.neighbors(cur)) {
            if (!is_inner[w])
                leaves.push_back(w);
            else if (w != prev)
                next = w;
        }
        out.buckets.push_back(std::move(leaves));
        if (next == n) break;
        prev = cur;
        cur = next;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Split graphs.
// ---------------------------------------------------------------------------

struct SplitPartition {
    std::vector<Vertex> clique;       // C
    std::vector<Vertex> independent;  // I
};

/// C is a clique, I is independent, together they partition V.
inline bool is_split_partition(const Graph& g, const SplitPartition& p) {
    if (p.clique.size() + p.independent.size() != g.size()) return false;
    std::vector<bool> seen(g.size(), false);
    for (const auto* side : {&p.clique, &p.independent})
        for (Vertex v : *side) {
            if (v >= g.size() || seen[v]) return false;
            seen[v] = true;
        }
    for (std::size_t i = 0; i < p.clique.size(); ++i)
        for (std::size_t j = i + 1; j < p.clique.size(); ++j)
            if (!g.adjacent(p.clique[i], p.clique[j])) return false;
    for (std::size_t i = 0; i < p.independent.size(); ++i)
        for (std::size_t j = i + 1; j < p.independent.size(); ++j)
            if (g.adjacent(p.independent[i], p.independent[j])) return false;
    return true;
}

/// Degree-sequence test: with degrees d_1 >= ... >= d_n and
/// m = max{i : d_i >= i-1}, g is split iff
/// sum_{i<=m} d_i == m(m-1) + sum_{i>m} d_i. The top m vertices form C.
/// Afterwards any I-vertex complete to C is moved into C.
inline std::optional<SplitPartition> split_partition(const Graph& g) {
    const std::size_t n = g.size();
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    std::size_t m = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (g.degree(order[i]) + 1 >= i + 1) m = i + 1;
    std::size_t top = 0, bottom = 0;
    for (std::size_t i = 0; i < n; ++i) (i < m ? top : bottom) += g.degree(order[i]);
    if (top != m * (m - (m > 0 ? 1 : 0)) + bottom) return std::nullopt;

    SplitPartition p;
    p.clique.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(m));
    p.independent.assign(order.begin() + static_cast<std::ptrdiff_t>(m), order.end());
    std::sort(p.independent.begin(), p.independent.end());
    for (auto it = p.independent.begin(); it != p.independent.end(); ++it) {
        if (std::all_of(p.clique.begin(), p.clique.end(), [&](Vertex c) { return g.adjacent(c, *it); })) {
            p.clique.push_back(*it);
            p.independent.erase(it);
            break;  // I is independent, so no second vertex can now be complete to C
        }
    }
    std::sort(p.clique.begin(), p.clique.end());
    return p;
}

// ---------------------------------------------------------------------------
// Class-error helpers used by the completion algorithms.
// ---------------------------------------------------------------------------

/// Obstruction explaining why g is not threshold (2K2, C4 or P4).
inline std::optional<Obstruction> threshold_obstruction(const Graph& g) {
    Obstruction why;
    if (detail::peel_threshold(g, &why)) return std::nullopt;
    return why;
}

/// Obstruction explaining why g is not quasi-threshold (P4 or C4).
inline std::optional<Obstruction> quasi_threshold_obstruction(const Graph& g) {
    Obstruction why;
    if (detail::build_qt_forest(g, &why)) return std::nullopt;
    return why;
}

}  // namespace pigc
