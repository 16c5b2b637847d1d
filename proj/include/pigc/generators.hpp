#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "pigc/graph.hpp"
#include "pigc/recognition.hpp"

namespace pigc {

/// Seeded 64-bit generator. Bounded draws use rejection sampling so results
/// do not depend on the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound); bound must be > 0.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % bound;
        std::uint64_t x;
        do x = engine_();
        while (x >= limit);
        return x % bound;
    }

    bool chance(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

// ---------------------------------------------------------------------------
// Threshold graphs
// ---------------------------------------------------------------------------

struct ThresholdInstance {
    Graph graph;
    CreationSequence sequence;
};

/// Vertex i is added at step i with tag tags[i].
inline ThresholdInstance threshold_from_tags(const std::vector<StepKind>& tags) {
    ThresholdInstance out;
    for (std::size_t i = 0; i < tags.size(); ++i) out.sequence.steps.push_back({i, tags[i]});
    out.graph = replay(out.sequence);
    return out;
}

/// Random tags with P(dominating) = p_dominating. The first tag is Isolated
/// and, for n >= 2, the last is Dominating so the graph is connected.
inline ThresholdInstance gen_threshold(std::size_t n, double p_dominating, std::uint64_t seed) {
    if (n < 1) throw InputError("threshold generator needs n >= 1");
    if (!(p_dominating >= 0.0 && p_dominating <= 1.0)) throw InputError("p must lie in [0, 1]");
    Rng rng(seed);
    std::vector<StepKind> tags(n, StepKind::Isolated);
    for (std::size_t i = 1; i < n; ++i) tags[i] = rng.chance(p_dominating) ? StepKind::Dominating : StepKind::Isolated;
    if (n >= 2) tags[n - 1] = StepKind::Dominating;
    return threshold_from_tags(tags);
}

/// All 2^(n-1) tag strings (first tag Isolated, the rest free), in binary
/// counting order with Isolated = 0.
inline std::vector<std::vector<StepKind>> enumerate_threshold(std::size_t n) {
    std::vector<std::vector<StepKind>> out;
    if (n == 0) return out;
    const std::uint64_t count = std::uint64_t{1} << (n - 1);
    for (std::uint64_t m = 0; m < count; ++m) {
        std::vector<StepKind> tags(n, StepKind::Isolated);
        for (std::size_t i = 1; i < n; ++i)
            if ((m >> (i - 1)) & 1U) tags[i] = StepKind::Dominating;
        out.push_back(std::move(tags));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Quasi-threshold graphs
// ---------------------------------------------------------------------------

struct QuasiThresholdInstance {
    Graph graph;
    QtForest forest;
};

inline QuasiThresholdInstance qt_from_forest(QtForest forest) {
    Graph g = forest.ancestor_graph();
    return {std::move(g), std::move(forest)};
}

/// Random recursive forest over a random labelling: vertices arrive in a
/// shuffled order and each picks "no parent" or one of the earlier arrivals
/// uniformly.
inline QuasiThresholdInstance gen_quasi_threshold(std::size_t n, std::uint64_t seed) {
    if (n < 1) throw InputError("quasi-threshold generator needs n >= 1");
    Rng rng(seed);
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    rng.shuffle(order);
    std::vector<std::optional<Vertex>> parent(n);
    for (std::size_t i = 1; i < n; ++i) {
        const auto pick = rng.below(i + 1);
        if (pick < i) parent[order[i]] = order[pick];
    }
    return qt_from_forest(QtForest::from_parents(std::move(parent)));
}

/// Every rooted forest on n vertices up to isomorphism, labelled in
/// preorder (roots and children in the generation order).
inline std::vector<QtForest> enumerate_rooted_forests(std::size_t n) {
    // trees[id] = child tree ids (non-increasing); ids grow with tree size
    std::vector<std::vector<std::size_t>> trees;
    std::vector<std::size_t> tree_size;
    std::vector<std::size_t> first_of_size{0};  // first id of each size; size 0 has none

    // forests of total size s using ids <= max_id, as non-increasing id lists
    std::function<void(std::size_t, std::size_t, std::vector<std::size_t>&, std::vector<std::vector<std::size_t>>&)>
        forests = [&](std::size_t s, std::size_t max_id, std::vector<std::size_t>& cur,
                      std::vector<std::vector<std::size_t>>& out) {
            if (s == 0) {
                out.push_back(cur);
                return;
            }
            for (std::size_t id = std::min(max_id + 1, trees.size()); id-- > 0;) {
                if (tree_size[id] > s) continue;
                cur.push_back(id);
                forests(s - tree_size[id], id, cur, out);
                cur.pop_back();
            }
        };

    for (std::size_t m = 1; m <= n; ++m) {
        std::vector<std::vector<std::size_t>> kids;
        std::vector<std::size_t> cur;
        forests(m - 1, trees.size(), cur, kids);
        for (auto& k : kids) {
            trees.push_back(std::move(k));
            tree_size.push_back(m);
        }
    }
    std::vector<std::vector<std::size_t>> tops;
    {
        std::vector<std::size_t> cur;
        forests(n, trees.size(), cur, tops);
    }

    std::vector<QtForest> out;
    out.reserve(tops.size());
    for (const auto& top : tops) {
        std::vector<std::optional<Vertex>> parent(n);
        Vertex next = 0;
        std::function<void(std::size_t, std::optional<Vertex>)> place = [&](std::size_t id, std::optional<Vertex> p) {
            const Vertex me = next++;
            parent[me] = p;
            for (std::size_t c : trees[id]) place(c, me);
        };
        for (std::size_t id : top) place(id, std::nullopt);
        out.push_back(QtForest::from_parents(std::move(parent)));
    }
    return out;
}

/// Applies a vertex relabelling old -> perm[old] to a forest.
inline QtForest relabel(const QtForest& f, const std::vector<Vertex>& perm) {
    std::vector<std::optional<Vertex>> parent(f.size());
    for (Vertex v = 0; v < f.size(); ++v)
        if (f.parent(v)) parent[perm[v]] = perm[*f.parent(v)];
    return QtForest::from_parents(std::move(parent));
}

// ---------------------------------------------------------------------------
// Caterpillars
// ---------------------------------------------------------------------------

struct CaterpillarInstance {
    Graph graph;
    CaterpillarDecomposition decomposition;
};

/// Spine vertices 0..s-1, then the leaves bucket by bucket.
inline CaterpillarInstance caterpillar_from_buckets(const std::vector<std::size_t>& bucket_sizes) {
    if (bucket_sizes.empty()) throw InputError("caterpillar needs a spine of length >= 1");
    const std::size_t s = bucket_sizes.size();
    CaterpillarInstance out;
    std::vector<Edge> edges;
    for (Vertex i = 0; i + 1 < s; ++i) edges.emplace_back(i, i + 1);
    Vertex next = s;
    out.decomposition.spine.resize(s);
    out.decomposition.buckets.resize(s);
    for (std::size_t i = 0; i < s; ++i) {
        out.decomposition.spine[i] = i;
        for (std::size_t r = 0; r < bucket_sizes[i]; ++r) {
            out.decomposition.buckets[i].push_back(next);
            edges.emplace_back(i, next++);
        }
    }
    out.graph = Graph(next, std::span<const Edge>(edges));
    return out;
}

inline CaterpillarInstance gen_caterpillar(std::size_t spine_length, std::size_t max_leaves, std::uint64_t seed) {
    if (spine_length < 1) throw InputError("caterpillar generator needs spine length >= 1");
    Rng rng(seed);
    std::vector<std::size_t> sizes(spine_length);
    for (auto& s : sizes) s = rng.below(max_leaves + 1);
    return caterpillar_from_buckets(sizes);
}

/// Every (spine length, bucket sizes) with spine + leaves == n.
inline std::vector<std::vector<std::size_t>> enumerate_caterpillar_buckets(std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 1; s <= n; ++s) {
        std::vector<std::size_t> cur(s, 0);
        std::function<void(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t left) {
            if (i + 1 == s) {
                cur[i] = left;
                out.push_back(cur);
                return;
            }
            for (std::size_t x = 0; x <= left; ++x) {
                cur[i] = x;
                go(i + 1, left - x);
            }
        };
        go(0, n - s);
    }
    return out;
}

// ---------------------------------------------------------------------------
// All labelled graphs
// ---------------------------------------------------------------------------

/// Calls fn(graph) for each of the 2^C(n,2) labelled graphs on n vertices.
template <typename F>
void for_each_graph(std::size_t n, F&& fn) {
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    const std::uint64_t count = std::uint64_t{1} << pairs.size();
    std::vector<Edge> edges;
    for (std::uint64_t m = 0; m < count; ++m) {
        edges.clear();
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if ((m >> i) & 1U) edges.push_back(pairs[i]);
        fn(Graph(n, std::span<const Edge>(edges)));
    }
}

// ---------------------------------------------------------------------------
// Split graphs and the PIG-hardness gadget
// ---------------------------------------------------------------------------

struct SplitInstance {
    Graph graph;
    SplitPartition partition;
};

/// Clique 0..c-1, independent c..c+i-1; each independent vertex gets one
/// guaranteed clique neighbour plus each other one with probability p, so the
/// graph is connected when c >= 1.
inline SplitInstance gen_split(std::size_t clique, std::size_t independent, double p, std::uint64_t seed) {
    if (clique < 1) throw InputError("split generator needs a non-empty clique");
    Rng rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < clique; ++u)
        for (Vertex v = u + 1; v < clique; ++v) edges.emplace_back(u, v);
    SplitInstance out;
    for (Vertex u = 0; u < clique; ++u) out.partition.clique.push_back(u);
    for (std::size_t r = 0; r < independent; ++r) {
        const Vertex x = clique + r;
        out.partition.independent.push_back(x);
        const Vertex anchor = rng.below(clique);
        for (Vertex c = 0; c < clique; ++c)
            if (c == anchor || rng.chance(p)) edges.emplace_back(c, x);
    }
    out.graph = Graph(clique + independent, std::span<const Edge>(edges));
    return out;
}

/// Two copies of a split graph glued into one big clique. With n = |V(g)|:
/// copy t consists of a copy of C, a pad clique of n^2 fresh vertices and a
/// copy of I with g's C-I adjacencies; all copies of C and both pads form
/// one clique of size 2|C| + 2n^2.
struct SplitGadget {
    Graph graph;
    std::vector<Vertex> copy1;       // V(g) -> V(G'), first copy
    std::vector<Vertex> copy2;       // second copy
    std::vector<Vertex> pad1;        // C'_1
    std::vector<Vertex> pad2;        // C'_2
    std::vector<Vertex> big_clique;  // C' = C_1 u C_2, ascending
    std::vector<Vertex> independent; // I_1 u I_2, ascending
};

inline SplitGadget split_pig_reduction_gadget(const Graph& g, const SplitPartition& p) {
    if (!is_split_partition(g, p)) throw ClassError("split (with the given partition)", "", {});
    if (!is_connected(g)) throw InputError("gadget input must be connected");
    const std::size_t n = g.size();
    const std::size_t pad = n * n;
    const std::size_t block = p.clique.size() + pad + p.independent.size();

    SplitGadget out;
    out.copy1.assign(n, 0);
    out.copy2.assign(n, 0);
    for (std::size_t t = 0; t < 2; ++t) {
        auto& copy = t == 0 ? out.copy1 : out.copy2;
        auto& pads = t == 0 ? out.pad1 : out.pad2;
        const std::size_t base = t * block;
        for (std::size_t i = 0; i < p.clique.size(); ++i) {
            copy[p.clique[i]] = base + i;
            out.big_clique.push_back(base + i);
        }
        for (std::size_t r = 0; r < pad; ++r) {
            pads.push_back(base + p.clique.size() + r);
            out.big_clique.push_back(base + p.clique.size() + r);
        }
        for (std::size_t i = 0; i < p.independent.size(); ++i) {
            copy[p.independent[i]] = base + p.clique.size() + pad + i;
            out.independent.push_back(base + p.clique.size() + pad + i);
        }
    }
    std::sort(out.big_clique.begin(), out.big_clique.end());

    std::vector<Edge> edges;
    for (std::size_t a = 0; a < out.big_clique.size(); ++a)
        for (std::size_t b = a + 1; b < out.big_clique.size(); ++b)
            edges.emplace_back(out.big_clique[a], out.big_clique[b]);
    for (const auto* copy : {&out.copy1, &out.copy2})
        for (Vertex x : p.independent)
            for (Vertex c : p.clique)
                if (g.adjacent(x, c)) edges.emplace_back((*copy)[x], (*copy)[c]);
    out.graph = Graph(2 * block, std::span<const Edge>(edges));
    return out;
}

}  // namespace pigc
