#pragma once

#include <splitirr/graph.hpp>
#include <splitirr/split.hpp>
#include <splitirr/status.hpp>

#include <optional>
#include <string>
#include <vector>

namespace splitirr
{
    /// Which construction certifies a split graph.
    enum class Recipe
    {
        empty,
        not_decomposable,
        monochrome,        ///< d strictly decreasing: the graph is already locally irregular
        clique_three,      ///< three colours, green star at v1
        heavy,             ///< normal coloring, d_floor(n/2) >= 1
        light,             ///< strange coloring, d_floor(n/2) = 0, d2 >= 1
        pendant_star,      ///< normal coloring with v1's pendants matching its conflicting colour
        small_sequence,    ///< hand-picked sequences for 4 <= n <= 9
        bistar,
        exact_two,
        exact_three
    };

    std::string rule_name(Recipe r);

    struct ChiResult
    {
        ChiStatus status;
        std::optional<EdgeColoring> certificate;
        std::string rule;
        std::vector<std::string> repairs; ///< fallback repairs that fired, in order
    };

    /// Classification only; no certificate.
    ChiResult classify(const SplitPartition & p);
    ChiStatus classify_status(int n, const std::vector<int> & d, bool has_edges);
    Recipe plan(const SplitPartition & p);

    /// Classification plus a verified certificate. Throws ConstructionFailed if every repair fails.
    ChiResult decompose(const SplitPartition & p);

    struct GraphDecomposition
    {
        std::optional<SplitPartition> partition; ///< of the graph with isolated vertices removed
        std::vector<Vertex> isolated;
        ChiResult result; ///< certificate is expressed on the input graph
    };

    /// Strips isolated vertices, partitions and decomposes. Throws NotSplit.
    GraphDecomposition decompose_graph(const Graph & g);

    EdgeColoring construct_chi1(const SplitPartition & p);
    EdgeColoring construct_3coloring(const SplitPartition & p);
    EdgeColoring construct_2coloring_heavy(const SplitPartition & p);
    EdgeColoring construct_2coloring_light(const SplitPartition & p);
    EdgeColoring construct_small(const SplitPartition & p);
}
