#include <gtest/gtest.h>

#include "support.hpp"

using namespace pigc;
using namespace pigc::testing;

namespace {
constexpr auto I = StepKind::Isolated;
constexpr auto D = StepKind::Dominating;
}  // namespace

TEST(ThresholdCompletion, P3NeedsNothing) {
    const auto r = threshold_pig_completion(path(3));
    EXPECT_EQ(r.cost, 0U);
    EXPECT_TRUE(r.fill.empty());
    EXPECT_EQ(r.algorithm, "threshold");
}

TEST(ThresholdCompletion, ClawCostsOneLeafPair) {
    const auto r = threshold_pig_completion(claw());
    EXPECT_EQ(r.cost, 1U);
    ASSERT_EQ(r.fill.size(), 1U);
    EXPECT_NE(r.fill[0].u, 0U);  // a leaf-leaf edge
    const auto& parts = std::get<CliqueBipartition>(r.certificate);
    EXPECT_EQ(partition_cost(claw(), parts), 1U);
    EXPECT_TRUE(std::binary_search(parts.first.begin(), parts.first.end(), Vertex{0}));
    EXPECT_TRUE(fill_is_valid(claw(), r.fill));
}

TEST(ThresholdCompletion, StarWithFourLeaves) {
    const auto r = threshold_pig_completion(star(4));
    EXPECT_EQ(r.cost, 2U);
    const auto& parts = std::get<CliqueBipartition>(r.certificate);
    EXPECT_EQ(parts.first.size(), 3U);
    EXPECT_EQ(parts.second.size(), 2U);
    EXPECT_TRUE(fill_is_valid(star(4), r.fill));
}

TEST(ThresholdCompletion, IsolatedVerticesAreUntouched) {
    // claw plus two isolated vertices
    const Graph g(6, {{1, 0}, {1, 2}, {1, 4}});
    const auto r = threshold_pig_completion(g);
    EXPECT_EQ(r.cost, 1U);
    const auto& parts = std::get<CliqueBipartition>(r.certificate);
    EXPECT_EQ(parts.untouched, (std::vector<Vertex>{3, 5}));
    EXPECT_NO_THROW(require_partition(g, parts));
    EXPECT_TRUE(fill_is_valid(g, r.fill));
    EXPECT_EQ(threshold_pig_completion(Graph(4, {})).cost, 0U);
}

TEST(ThresholdCompletion, NonThresholdInputCarriesWitness) {
    try {
        threshold_pig_completion(path(4));
        FAIL() << "expected ClassError";
    } catch (const ClassError& e) {
        EXPECT_EQ(e.witness_kind(), "P4");
        EXPECT_EQ(e.witness().size(), 4U);
    }
    EXPECT_THROW(threshold_pig_completion(two_k2()), ClassError);
}

TEST(ThresholdCompletion, CostOnlySkipsFill) {
    const auto r = threshold_pig_completion(star(6), {.cost_only = true});
    EXPECT_EQ(r.cost, 6U);
    EXPECT_TRUE(r.fill.empty());
}

TEST(PartitionCost, Examples) {
    EXPECT_EQ(partition_cost(claw(), {0, 1}, {2, 3}), 1U);
    EXPECT_EQ(partition_cost(complete(4), {0, 3}, {1, 2}), 0U);
    EXPECT_EQ(partition_cost(star(4), {0, 1, 2}, {3, 4}), 2U);
    EXPECT_THROW(partition_cost(claw(), {0, 1}, {1, 2, 3}), InputError);
    EXPECT_THROW(partition_cost(claw(), {0, 1}, {2}), InputError);
}

TEST(AssignThresholdCliques, PrefixInvariantAndDominatingInS1) {
    for (std::size_t n = 1; n <= 12; ++n)
        for (const auto& tags : enumerate_threshold(n)) {
            const auto inst = threshold_from_tags(tags);
            const auto seq = detail::without_isolated(inst.graph, *threshold_creation_sequence(inst.graph));
            const auto run = assign_threshold_cliques(seq);
            ASSERT_EQ(run.steps_executed, seq.size());
            for (std::size_t i = 0; i < seq.size(); ++i) {
                ASSERT_GE(run.s1_sizes[i], run.s2_sizes[i]);
                if (seq.steps[i].kind == D) {
                    ASSERT_EQ(run.assignment[i], Side::S1);
                }
            }
        }
}

TEST(AssignThresholdCliques, IncrementalCostMatchesPartitionCost) {
    for (std::size_t n = 1; n <= 10; ++n)
        for (const auto& tags : enumerate_threshold(n)) {
            const auto inst = threshold_from_tags(tags);
            const auto res = threshold_pig_completion(inst.graph);
            ASSERT_EQ(partition_cost(inst.graph, std::get<CliqueBipartition>(res.certificate)), res.cost);
            ASSERT_EQ(res.fill.size(), res.cost);
        }
}

TEST(AssignThresholdCliques, TieGoesToS2) {
    // i, i: second vertex sees one remaining isolated vertex (itself) and |S1| = 1
    CreationSequence seq{{{0, I}, {1, I}}};
    const auto run = assign_threshold_cliques(seq);
    EXPECT_EQ(run.assignment, (std::vector<Side>{Side::S1, Side::S2}));
    EXPECT_EQ(run.cost, 0U);
}

TEST(ThresholdCompletion, MatchesBruteForceUpToSeven) {
    for (std::size_t n = 1; n <= 7; ++n)
        for (const auto& tags : enumerate_threshold(n)) {
            const auto inst = threshold_from_tags(tags);
            const auto r = threshold_pig_completion(inst.graph);
            ASSERT_EQ(r.cost, brute_min_pig(inst.graph).cost) << detail::tag_string(tags);
            ASSERT_TRUE(fill_is_valid(inst.graph, r.fill));
        }
}

TEST(ThresholdCompletion, InvariantUnderRelabelling) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto inst = gen_threshold(6 + seed % 10, 0.4, seed);
        const Graph h = permuted(inst.graph, random_permutation(inst.graph.size(), seed + 7));
        EXPECT_EQ(threshold_pig_completion(h).cost, threshold_pig_completion(inst.graph).cost);
    }
}

TEST(MaxCutIdentity, Examples) {
    const auto c = maxcut_identity_check(claw());
    EXPECT_EQ(c.min_fill, 1U);
    EXPECT_EQ(c.max_cut_complement, 2U);
    EXPECT_TRUE(c.identity_holds);

    const auto k4 = maxcut_identity_check(complete(4));
    EXPECT_EQ(k4.min_fill, 0U);
    EXPECT_EQ(k4.max_cut_complement, 0U);
    EXPECT_TRUE(k4.identity_holds);

    const auto s4 = maxcut_identity_check(star(4));
    EXPECT_EQ(s4.max_cut_complement, 4U);
    EXPECT_EQ(s4.min_fill, 2U);
    EXPECT_TRUE(s4.identity_holds);
}

TEST(MaxCutIdentity, HoldsOnGeneratedInstancesUpToSixteen) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto inst = gen_threshold(2 + seed % 15, 0.5, seed);
        EXPECT_TRUE(maxcut_identity_check(inst.graph).identity_holds) << seed;
    }
}

TEST(MaxCutIdentity, StarsAgreeWithCaterpillarAlgorithm) {
    for (std::size_t t = 1; t <= 12; ++t)
        EXPECT_EQ(threshold_pig_completion(star(t)).cost, caterpillar_pig_completion(star(t)).cost);
}
