#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace pigc;
using namespace pigc::testing;

namespace {
constexpr auto I = StepKind::Isolated;
constexpr auto D = StepKind::Dominating;
}  // namespace

TEST(ThresholdGenerator, TagExamples) {
    EXPECT_EQ(threshold_from_tags({I, D, D, D}).graph, complete(4));
    EXPECT_EQ(threshold_from_tags({I, I, I, D}).graph, permuted(claw(), {3, 0, 1, 2}));
    EXPECT_EQ(enumerate_threshold(3).size(), 4U);
    EXPECT_EQ(enumerate_threshold(7).size(), 64U);
}

TEST(ThresholdGenerator, SeededAndConnected) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto a = gen_threshold(2 + seed % 12, 0.3, seed);
        const auto b = gen_threshold(2 + seed % 12, 0.3, seed);
        EXPECT_EQ(serialize(a.graph), serialize(b.graph));
        EXPECT_TRUE(is_connected(a.graph));
        EXPECT_EQ(replay(a.sequence), a.graph);
        EXPECT_TRUE(threshold_creation_sequence(a.graph));
    }
    EXPECT_THROW(gen_threshold(0, 0.5, 1), InputError);
    EXPECT_THROW(gen_threshold(3, 1.5, 1), InputError);
}

TEST(QuasiThresholdGenerator, ShapeExamples) {
    // root with two children -> P3
    EXPECT_EQ(QtForest::from_parents({std::nullopt, Vertex{0}, Vertex{0}}).ancestor_graph(),
              Graph(3, {{0, 1}, {0, 2}}));
    // chain -> complete graph
    EXPECT_EQ(QtForest::from_parents({std::nullopt, Vertex{0}, Vertex{1}, Vertex{2}}).ancestor_graph(), complete(4));
    // two chains -> two disjoint cliques
    const Graph two = QtForest::from_parents({std::nullopt, Vertex{0}, std::nullopt, Vertex{2}}).ancestor_graph();
    EXPECT_EQ(two, two_k2());
}

TEST(QuasiThresholdGenerator, SeededAndCertified) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const auto a = gen_quasi_threshold(1 + seed % 15, seed);
        EXPECT_EQ(serialize(a.graph), serialize(gen_quasi_threshold(1 + seed % 15, seed).graph));
        EXPECT_EQ(a.forest.ancestor_graph(), a.graph);
        EXPECT_TRUE(quasi_threshold_forest(a.graph));
    }
}

TEST(RootedForestEnumeration, CountsMatchRootedTrees) {
    // forests on n vertices <-> rooted trees on n + 1 vertices
    const std::vector<std::size_t> expected{1, 1, 2, 4, 9, 20, 48, 115, 286};
    for (std::size_t n = 0; n < expected.size(); ++n) EXPECT_EQ(enumerate_rooted_forests(n).size(), expected[n]);
}

TEST(RootedForestEnumeration, NoTwoForestsAreIsomorphic) {
    // canonical string of a rooted forest: sorted child strings, recursively
    auto canon = [](const QtForest& f) {
        std::function<std::string(Vertex)> rec = [&](Vertex v) {
            std::vector<std::string> kids;
            for (Vertex c : f.children(v)) kids.push_back(rec(c));
            std::sort(kids.begin(), kids.end());
            std::string s = "(";
            for (auto& k : kids) s += k;
            return s + ")";
        };
        std::vector<std::string> trees;
        for (Vertex r : f.roots()) trees.push_back(rec(r));
        std::sort(trees.begin(), trees.end());
        std::string s;
        for (auto& t : trees) s += t;
        return s;
    };
    for (std::size_t n = 1; n <= 8; ++n) {
        std::set<std::string> seen;
        for (const auto& f : enumerate_rooted_forests(n)) EXPECT_TRUE(seen.insert(canon(f)).second);
    }
}

TEST(CaterpillarGenerator, ShapeExamples) {
    EXPECT_EQ(gen_caterpillar(4, 0, 9).graph, path(4));
    EXPECT_EQ(caterpillar_from_buckets({3}).graph, claw());
    EXPECT_EQ(caterpillar_from_buckets({2, 2}).graph, permuted(double_star(), {0, 1, 2, 3, 4, 5}));
    EXPECT_EQ(enumerate_caterpillar_buckets(4).size(), 8U);
}

TEST(CaterpillarGenerator, SeededAndCertified) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const auto a = gen_caterpillar(1 + seed % 7, seed % 4, seed);
        EXPECT_EQ(serialize(a.graph), serialize(gen_caterpillar(1 + seed % 7, seed % 4, seed).graph));
        EXPECT_TRUE(decomposition_matches(a.graph, a.decomposition));
        for (const auto& b : a.decomposition.buckets) EXPECT_LE(b.size(), seed % 4);
        EXPECT_TRUE(caterpillar_decomposition(a.graph));
    }
}

TEST(SplitGenerator, ConnectedSplitGraphs) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto s = gen_split(1 + seed % 5, seed % 6, 0.4, seed);
        EXPECT_TRUE(is_split_partition(s.graph, s.partition));
        EXPECT_TRUE(is_connected(s.graph));
        EXPECT_TRUE(split_partition(s.graph));
    }
}

TEST(SplitGadget, K2Example) {
    const Graph k2 = complete(2);
    const SplitPartition p{{0}, {1}};
    const auto gadget = split_pig_reduction_gadget(k2, p);
    EXPECT_EQ(gadget.graph.size(), 12U);
    EXPECT_EQ(gadget.big_clique.size(), 10U);
    for (std::size_t a = 0; a < gadget.big_clique.size(); ++a)
        for (std::size_t b = a + 1; b < gadget.big_clique.size(); ++b)
            EXPECT_TRUE(gadget.graph.adjacent(gadget.big_clique[a], gadget.big_clique[b]));
}

TEST(SplitGadget, StructureOnRandomInputs) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto s = gen_split(1 + seed % 4, 1 + seed % 3, 0.5, seed);
        const auto p = *split_partition(s.graph);
        const auto gadget = split_pig_reduction_gadget(s.graph, p);
        const std::size_t n = s.graph.size();
        const Graph& h = gadget.graph;
        EXPECT_EQ(h.size(), 2 * p.clique.size() + 2 * n * n + 2 * p.independent.size());
        EXPECT_EQ(gadget.big_clique.size(), 2 * p.clique.size() + 2 * n * n);
        const auto hp = split_partition(h);
        ASSERT_TRUE(hp);
        EXPECT_TRUE(is_split_partition(h, SplitPartition{gadget.big_clique, gadget.independent}));

        // both copy maps are injective and preserve adjacency
        for (const auto* copy : {&gadget.copy1, &gadget.copy2}) {
            std::set<Vertex> image(copy->begin(), copy->end());
            EXPECT_EQ(image.size(), n);
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v)
                    EXPECT_EQ(s.graph.adjacent(u, v), h.adjacent((*copy)[u], (*copy)[v]));
        }
    }
}

TEST(SplitGadget, RejectsBadInput) {
    EXPECT_THROW(split_pig_reduction_gadget(cycle(4), SplitPartition{{0, 1}, {2, 3}}), ClassError);
    EXPECT_THROW(split_pig_reduction_gadget(Graph(3, {{0, 1}}), SplitPartition{{0, 1}, {2}}), InputError);
}

TEST(ForEachGraph, VisitsEveryLabelledGraph) {
    std::size_t count = 0;
    std::set<std::string> seen;
    for_each_graph(4, [&](const Graph& g) {
        ++count;
        seen.insert(serialize(g));
    });
    EXPECT_EQ(count, 64U);
    EXPECT_EQ(seen.size(), 64U);
}
