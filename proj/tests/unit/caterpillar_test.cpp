#include <gtest/gtest.h>

#include "support.hpp"

using namespace pigc;
using namespace pigc::testing;

TEST(PlacementTables, PathNeedsNothing) {
    const auto d = *caterpillar_decomposition(path(7));
    const auto t = build_placement_tables(d);
    EXPECT_EQ(t.optimum, 0U);
}

TEST(PlacementTables, ClawSplitsItsLeaves) {
    const auto t = build_placement_tables(*caterpillar_decomposition(claw()));
    EXPECT_EQ(t.optimum, 1U);
    EXPECT_TRUE(t.left_sons[0] == 1 || t.left_sons[0] == 2);
    EXPECT_EQ(t.left_sons[0], 1U);  // smallest j on ties
}

TEST(PlacementTables, DoubleStar) {
    const auto t = build_placement_tables(*caterpillar_decomposition(double_star()));
    EXPECT_EQ(t.optimum, 2U);
    // base row N[k][j] = C(|V_k| - j, 2)
    EXPECT_EQ(t.n[1], (std::vector<std::uint64_t>{1, 0, 0}));
    for (std::size_t i = 0; i < t.left_sons.size(); ++i) EXPECT_LE(t.left_sons[i], t.bucket_sizes[i]);
}

TEST(CaterpillarCompletion, Examples) {
    const auto p5 = caterpillar_pig_completion(path(5));
    EXPECT_EQ(p5.cost, 0U);
    EXPECT_TRUE(p5.fill.empty());

    const auto s4 = caterpillar_pig_completion(star(4));
    EXPECT_EQ(s4.cost, 2U);
    EXPECT_EQ(s4.cost, threshold_pig_completion(star(4)).cost);

    const auto ds = caterpillar_pig_completion(double_star());
    EXPECT_EQ(ds.cost, 2U);
    EXPECT_TRUE(fill_is_valid(double_star(), ds.fill));
    EXPECT_EQ(ds.algorithm, "caterpillar");
}

TEST(CaterpillarCompletion, NonCaterpillarIsAClassError) {
    EXPECT_THROW(caterpillar_pig_completion(cycle(5)), ClassError);
    EXPECT_THROW(caterpillar_pig_completion(path(4), CaterpillarDecomposition{{0, 1}, {{}, {2, 3}}}), InputError);
}

TEST(MaterializeFill, P4PlacementIsEmpty) {
    PointPlacement p{{1, 2}, {0, 0, 1, 2}};
    EXPECT_TRUE(materialize_fill_edges(path(4), p).empty());
}

TEST(MaterializeFill, ClawWithTwoLeavesOnTheRight) {
    PointPlacement p{{0}, {0, 0, 1, 1}};
    EXPECT_EQ(materialize_fill_edges(claw(), p), EdgeSet({{2, 3}}));
}

TEST(MaterializeFill, DoubleStarExample) {
    // spine 0-1; W_0 = {2,3}, W_1 = {4}, W_2 = {5}
    PointPlacement p{{0, 1}, {0, 1, 0, 0, 1, 2}};
    const auto fill = materialize_fill_edges(double_star(), p);
    EXPECT_EQ(fill, EdgeSet({{2, 3}, {0, 4}}));
    EXPECT_TRUE(fill_is_valid(double_star(), fill));
}

TEST(CaterpillarCompletion, PlacementPutsLeavesNextToTheirSpineVertex) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto inst = gen_caterpillar(1 + seed % 6, 3, seed);
        const auto r = caterpillar_pig_completion(inst.graph, inst.decomposition);
        const auto& p = std::get<PointPlacement>(r.certificate);
        for (std::size_t i = 0; i < inst.decomposition.spine.size(); ++i)
            for (Vertex leaf : inst.decomposition.buckets[i]) {
                ASSERT_GE(p.point[leaf], static_cast<std::int64_t>(i));
                ASSERT_LE(p.point[leaf], static_cast<std::int64_t>(i + 1));
            }
    }
}

TEST(CaterpillarCompletion, ExhaustiveUpToEight) {
    for (std::size_t n = 1; n <= 8; ++n)
        for (const auto& b : enumerate_caterpillar_buckets(n)) {
            const auto inst = caterpillar_from_buckets(b);
            const auto r = caterpillar_pig_completion(inst.graph, inst.decomposition);
            ASSERT_EQ(r.cost, brute_min_pig(inst.graph).cost) << detail::bucket_string(b);
            ASSERT_EQ(r.fill.size(), r.cost);
            ASSERT_TRUE(fill_is_valid(inst.graph, r.fill));
            ASSERT_EQ(caterpillar_pig_completion(inst.graph, inst.decomposition.reversed()).cost, r.cost);
        }
}

TEST(CaterpillarCompletion, WorkIsQuadratic) {
    for (std::size_t n = 4; n <= 200; n += 13) {
        const auto inst = caterpillar_from_buckets({n / 2, n - n / 2 - 2});
        EXPECT_LE(build_placement_tables(inst.decomposition).evaluations, n * n);
    }
}

TEST(CaterpillarCompletion, RelabelledInputGivesTheSameCost) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto inst = gen_caterpillar(2 + seed % 5, 3, seed);
        const Graph h = permuted(inst.graph, random_permutation(inst.graph.size(), seed));
        const auto r = caterpillar_pig_completion(h);
        EXPECT_EQ(r.cost, caterpillar_pig_completion(inst.graph).cost);
        EXPECT_TRUE(fill_is_valid(h, r.fill));
    }
}
