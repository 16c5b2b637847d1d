#include <gtest/gtest.h>

#include "support.hpp"

using namespace pigc;
using namespace pigc::testing;

TEST(BuildGraph, PathOnThreeVertices) {
    const std::vector<std::pair<Vertex, Vertex>> pairs{{0, 1}, {1, 2}};
    const Graph g = build_graph(3, pairs);
    EXPECT_EQ(g.size(), 3U);
    EXPECT_EQ(g.edge_count(), 2U);
    EXPECT_TRUE(g.adjacent(1, 0));
    EXPECT_FALSE(g.adjacent(0, 2));
}

TEST(BuildGraph, SingleVertex) {
    const Graph g = build_graph(1, {});
    EXPECT_EQ(g.size(), 1U);
    EXPECT_EQ(g.edge_count(), 0U);
}

TEST(BuildGraph, DuplicatesCollapse) {
    const std::vector<std::pair<Vertex, Vertex>> pairs{{0, 1}, {1, 0}};
    const Graph g = build_graph(4, pairs);
    EXPECT_EQ(g.edge_count(), 1U);
    EXPECT_EQ(g.neighbors(0), std::vector<Vertex>{1});
}

TEST(BuildGraph, RejectsBadEndpoints) {
    const std::vector<std::pair<Vertex, Vertex>> out_of_range{{0, 3}};
    EXPECT_THROW(build_graph(3, out_of_range), InputError);
    const std::vector<std::pair<Vertex, Vertex>> loop{{1, 1}};
    EXPECT_THROW(build_graph(3, loop), InputError);
}

TEST(BuildGraph, AdjacencyIsSymmetricAndSorted) {
    const Graph g = random_graph(12, 0.4, 5);
    for (Vertex u = 0; u < g.size(); ++u) {
        EXPECT_TRUE(std::is_sorted(g.neighbors(u).begin(), g.neighbors(u).end()));
        EXPECT_FALSE(g.adjacent(u, u));
        for (Vertex v : g.neighbors(u)) EXPECT_TRUE(g.adjacent(v, u));
    }
}

TEST(Complement, Examples) {
    EXPECT_EQ(complement(complete(3)).edge_count(), 0U);
    const Graph c = complement(claw());
    EXPECT_EQ(c, Graph(4, {{1, 2}, {1, 3}, {2, 3}}));
    EXPECT_EQ(complement(Graph(2, {})), complete(2));
}

TEST(Complement, IsAnInvolution) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph g = random_graph(9, 0.5, seed);
        EXPECT_EQ(complement(complement(g)), g);
        EXPECT_EQ(g.edge_count() + complement(g).edge_count(), pairs_of(9));
    }
}

TEST(InducedSubgraph, Examples) {
    const std::vector<Vertex> ends{0, 2};
    const auto p3 = induced_subgraph(path(3), ends);
    EXPECT_EQ(p3.graph.size(), 2U);
    EXPECT_EQ(p3.graph.edge_count(), 0U);
    EXPECT_EQ(p3.original, ends);

    const std::vector<Vertex> three{1, 2, 3};
    EXPECT_EQ(induced_subgraph(complete(4), three).graph, complete(3));

    const std::vector<Vertex> centre_leaf{0, 2};
    EXPECT_EQ(induced_subgraph(claw(), centre_leaf).graph, complete(2));
}

TEST(ConnectedComponents, Examples) {
    const auto two = connected_components(two_k2());
    ASSERT_EQ(two.size(), 2U);
    EXPECT_EQ(two[0], (std::vector<Vertex>{0, 1}));
    EXPECT_EQ(two[1], (std::vector<Vertex>{2, 3}));

    const auto mixed = connected_components(Graph(4, {{1, 2}, {2, 3}}));
    ASSERT_EQ(mixed.size(), 2U);
    EXPECT_EQ(mixed[0].size(), 1U);
    EXPECT_EQ(mixed[1].size(), 3U);

    EXPECT_EQ(connected_components(path(6)).size(), 1U);
    EXPECT_TRUE(is_connected(path(6)));
}

TEST(NonEdgesWithin, Examples) {
    const std::vector<Vertex> leaves{1, 2, 3};
    EXPECT_EQ(non_edges_within(claw(), leaves).size(), 3U);
    const std::vector<Vertex> all{0, 1, 2, 3};
    EXPECT_TRUE(non_edges_within(complete(4), all).empty());
    const std::vector<Vertex> p3{0, 1, 2};
    EXPECT_EQ(non_edges_within(path(3), p3), EdgeSet({{0, 2}}));
}

TEST(PairIdentity, EdgesPlusCrossPlusWithinIsAllPairs) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const std::size_t n = 2 + seed % 9;
        const Graph g = random_graph(n, 0.45, seed);
        Rng rng(seed + 100);
        std::vector<Vertex> a, b;
        for (Vertex v = 0; v < n; ++v) (rng.chance(0.5) ? a : b).push_back(v);
        const std::size_t within = count_non_edges_within(g, a) + count_non_edges_within(g, b);
        EXPECT_EQ(g.edge_count() + count_non_edges_across(g, a, b) + within, pairs_of(n));
    }
}

TEST(EdgeSet, CanonicalSortedUnique) {
    const EdgeSet s{{3, 1}, {0, 2}, {1, 3}};
    ASSERT_EQ(s.size(), 2U);
    EXPECT_EQ(s[0], Edge(0, 2));
    EXPECT_EQ(s[1], Edge(1, 3));
    EXPECT_TRUE(s.contains(Edge(3, 1)));
}

TEST(Io, ParsesEdgeListWithComments) {
    const Graph g = parse_graph("# a path\n3\n0 1\n\n  1 2  \n");
    EXPECT_EQ(g, path(3));
}

TEST(Io, ParsesDimacs) {
    const Graph g = parse_graph("c comment\np edge 3 2\ne 1 2\ne 2 3\n");
    EXPECT_EQ(g, path(3));
}

TEST(Io, RejectsMalformedInput) {
    EXPECT_THROW(parse_graph(""), InputError);
    EXPECT_THROW(parse_graph("3\n0 5\n"), InputError);
    EXPECT_THROW(parse_graph("3\n0 x\n"), InputError);
    EXPECT_THROW(parse_graph("3\n1 1\n"), InputError);
    EXPECT_THROW(parse_graph("p edge 2 1\ne 0 1\n"), InputError);
    EXPECT_THROW(read_graph_file("/nonexistent/graph.txt"), InputError);
}

TEST(Io, SerializeRoundTrip) {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const Graph g = random_graph(1 + seed % 11, 0.3, seed);
        EXPECT_EQ(parse_graph(serialize(g)), g);
    }
    EXPECT_EQ(serialize(Graph(3, {{2, 1}, {0, 1}})), "3\n0 1\n1 2\n");
}

TEST(Io, DigestDependsOnlyOnTheGraph) {
    EXPECT_EQ(graph_digest(parse_graph("3\n1 2\n0 1\n")), graph_digest(path(3)));
    EXPECT_NE(graph_digest(path(3)), graph_digest(complete(3)));
}

TEST(Io, DemoDataFilesParse) {
    const std::string dir = PIGC_DEMO_DATA;
    EXPECT_EQ(read_graph_file(dir + "/p4.txt"), path(4));
    EXPECT_EQ(read_graph_file(dir + "/claw.txt"), claw());
    EXPECT_EQ(read_graph_file(dir + "/qt6.dimacs").edge_count(), 8U);
}
