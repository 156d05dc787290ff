#include "support.hpp"

#include <splitirr/errors.hpp>
#include <splitirr/split.hpp>

#include <gtest/gtest.h>

using namespace splitirr;
using namespace splitirr::testing;

namespace
{
    std::vector<Vertex> sorted(std::vector<Vertex> v)
    {
        std::sort(v.begin(), v.end());
        return v;
    }

    // Independent restatement of every partition invariant.
    void expect_valid(const SplitPartition & p)
    {
        const Graph & g = *p.graph;
        ASSERT_EQ(p.X.size() + p.Y.size(), static_cast<size_t>(g.vertex_count()));
        for (size_t i = 0; i < p.X.size(); ++i)
            for (size_t j = i + 1; j < p.X.size(); ++j)
                EXPECT_TRUE(g.adjacent(p.X[i], p.X[j]));
        for (size_t i = 0; i < p.Y.size(); ++i)
            for (size_t j = i + 1; j < p.Y.size(); ++j)
                EXPECT_FALSE(g.adjacent(p.Y[i], p.Y[j]));
        // Maximal: every Y vertex misses some clique vertex.
        for (Vertex y : p.Y) {
            bool misses = std::any_of(p.X.begin(), p.X.end(), [&](Vertex x) { return ! g.adjacent(x, y); });
            EXPECT_TRUE(misses || p.X.empty());
        }
        for (int i = 1; i <= p.n(); ++i) {
            int count = 0;
            for (Vertex y : p.Y)
                count += g.adjacent(p.v(i), y);
            EXPECT_EQ(p.d_at(i), count);
            if (i > 1) {
                EXPECT_GE(p.d_at(i - 1), p.d_at(i));
                if (p.d_at(i - 1) == p.d_at(i))
                    EXPECT_LT(p.v(i - 1), p.v(i));
            }
        }
    }
}

TEST(SplitPartition, FiveCycleIsNotSplit)
{
    EXPECT_THROW(split_partition(cycle(5)), NotSplit);
}

TEST(SplitPartition, CompleteGraph)
{
    auto p = split_partition(Graph::complete(4));
    EXPECT_EQ(sorted(p.X), (std::vector<Vertex>{0, 1, 2, 3}));
    EXPECT_TRUE(p.Y.empty());
    EXPECT_EQ(p.d, (std::vector<int>{0, 0, 0, 0}));
}

TEST(SplitPartition, PathOnFourVertices)
{
    auto p = split_partition(path(4));
    EXPECT_EQ(sorted(p.X), (std::vector<Vertex>{1, 2}));
    EXPECT_EQ(sorted(p.Y), (std::vector<Vertex>{0, 3}));
    EXPECT_EQ(p.d, (std::vector<int>{1, 1}));
}

TEST(DSequence, Examples)
{
    EXPECT_EQ(d_sequence(split_partition(Graph::complete(4))), (std::vector<int>{0, 0, 0, 0}));

    auto bistar = make(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 6}});
    EXPECT_EQ(d_sequence(split_partition(bistar)), (std::vector<int>{3, 2}));

    auto p = split_partition(star(4));
    EXPECT_EQ(d_sequence(p), (std::vector<int>{3, 0}));
    EXPECT_EQ(p.v(1), 0);
}

TEST(SplitPartition, TiesOrderedByVertexId)
{
    auto p = split_partition(Graph::complete(5));
    EXPECT_EQ(p.X, (std::vector<Vertex>{0, 1, 2, 3, 4}));
}

TEST(ValidatePartition, NamesBrokenInvariant)
{
    auto p = split_partition(path(4));
    auto bad = p;
    std::swap(bad.X[0], bad.Y[0]);
    EXPECT_THROW(validate_partition(bad), ContractError);
    bad = p;
    bad.d[0] = 5;
    EXPECT_THROW(validate_partition(bad), ContractError);
    EXPECT_NO_THROW(validate_partition(p));
}

TEST(StripIsolated, Examples)
{
    auto edgeless = strip_isolated(Graph(5, {}));
    EXPECT_EQ(edgeless.graph.vertex_count(), 0);
    EXPECT_EQ(edgeless.removed.size(), 5u);

    auto k3 = strip_isolated(make(5, {{0, 2}, {2, 4}, {0, 4}}));
    EXPECT_EQ(k3.graph.vertex_count(), 3);
    EXPECT_EQ(k3.graph.edge_count(), 3);
    EXPECT_EQ(k3.removed, (std::vector<Vertex>{1, 3}));
    EXPECT_EQ(k3.original, (std::vector<Vertex>{0, 2, 4}));

    auto p4 = strip_isolated(path(4));
    EXPECT_EQ(p4.graph, path(4));
    EXPECT_TRUE(p4.removed.empty());
}

// Every labelled graph on up to 6 vertices: recognition agrees with brute force over all
// vertex bipartitions, and each partition satisfies the invariants.
TEST(SplitPartition, ExhaustiveAgreementUpToSixVertices)
{
    for (int n = 1; n <= 6; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (1ull << pairs); ++mask) {
            auto g = from_mask(n, mask);
            bool split = brute_is_split(g);
            try {
                auto p = split_partition(g);
                EXPECT_TRUE(split) << "n=" << n << " mask=" << mask;
                expect_valid(p);
            }
            catch (const NotSplit &) {
                EXPECT_FALSE(split) << "n=" << n << " mask=" << mask;
            }
        }
    }
}

TEST(SplitPartition, SampledSevenVertexGraphs)
{
    std::mt19937_64 rng(7);
    for (int t = 0; t < 20000; ++t) {
        auto g = from_mask(7, rng() & ((1ull << 21) - 1));
        bool split = brute_is_split(g);
        try {
            expect_valid(split_partition(g));
            EXPECT_TRUE(split);
        }
        catch (const NotSplit &) {
            EXPECT_FALSE(split);
        }
    }
}

TEST(StripIsolated, SplitGraphsBecomeConnected)
{
    for (int n = 2; n <= 6; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 1; mask < (1ull << pairs); ++mask) {
            auto g = from_mask(n, mask);
            if (! brute_is_split(g))
                continue;
            auto s = strip_isolated(g);
            // Flood fill from vertex 0.
            std::vector<char> seen(s.graph.vertex_count(), 0);
            std::vector<Vertex> stack{0};
            seen[0] = 1;
            int reached = 1;
            while (! stack.empty()) {
                Vertex v = stack.back();
                stack.pop_back();
                for (auto [w, e] : s.graph.incident(v))
                    if (! seen[w]) {
                        seen[w] = 1;
                        ++reached;
                        stack.push_back(w);
                    }
            }
            EXPECT_EQ(reached, s.graph.vertex_count()) << "mask=" << mask;
        }
    }
}
