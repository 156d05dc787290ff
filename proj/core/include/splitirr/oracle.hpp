#pragma once

#include <splitirr/graph.hpp>
#include <splitirr/status.hpp>

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace splitirr
{
    struct OracleOptions
    {
        int k_max = 4;
        int edge_budget = 40;
        bool colour_symmetry = true; ///< colours appear in first-use order
        bool twin_symmetry = true;   ///< false twins carry lexicographically ordered colour vectors
    };

    struct OracleResult
    {
        ChiStatus chi;
        std::optional<EdgeColoring> witness;
        long long nodes_explored = 0;
    };

    /// Exhaustive smallest k <= k_max with a locally irregular k-edge coloring.
    /// Throws BudgetExceeded when the graph has more edges than the budget.
    OracleResult oracle_chi(const Graph & g, int k_max = 4, int edge_budget = 40);
    OracleResult oracle_chi(const Graph & g, const OracleOptions & options);

    struct StructureReport
    {
        std::array<bool, 6> items{};
        std::string text;

        bool ok() const;
    };

    /// For a connected graph with exactly one pair of equal-degree vertices, checks the six
    /// structural items (degree value, sorted positions, clique/stable split, neighbourhoods,
    /// adjacency parity). Throws ContractError when the precondition fails.
    StructureReport check_single_repeat_structure(const Graph & g);

    /// Clique on ids 0..n-1 (v_i = i-1 gets d[i-1] Y-neighbours) plus Y vertices with the
    /// given degrees, wired by a seeded Ryser-style greedy. Throws InputError if unrealizable.
    Graph gen_split_graph(int n, const std::vector<int> & d, const std::vector<int> & y_profile, std::uint64_t seed);

    /// One representative per isomorphism class of split graphs on 1..max_vertices vertices.
    /// max_vertices above 8 throws BudgetExceeded.
    std::vector<Graph> enumerate_split_graphs(int max_vertices);

    bool isomorphic(const Graph & a, const Graph & b);
}
