#pragma once

// Fallback machinery shared by the constructions. Not installed.

#include <splitirr/graph.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace splitirr::detail
{
    inline constexpr std::uint64_t local_search_seed = 0x5eed;

    bool conflict_free(const EdgeColoring & col);

    /// Inverts the cycle if every template edge exists and the cycle is alternating.
    bool try_invert(EdgeColoring & col, const std::vector<Vertex> & cycle);

    /// Repeatedly inverts an alternating cycle (length <= 8) through some conflicting edge.
    /// Each inversion removes that edge's conflict and creates none.
    bool repair_by_cycles(EdgeColoring & col, std::vector<std::string> & log);

    /// Seeded min-conflicts search over single-edge red/blue flips.
    bool repair_by_local_search(EdgeColoring & col, std::vector<std::string> & log,
        std::uint64_t seed = local_search_seed, int max_steps = 20000);

    /// Plain backtracking for a locally irregular k-coloring; nullopt when none exists or
    /// node_limit is hit.
    std::optional<EdgeColoring> exact_coloring(const std::shared_ptr<const Graph> & g, int k,
        long node_limit = 50'000'000);
}
