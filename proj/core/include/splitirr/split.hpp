#pragma once

#include <splitirr/graph.hpp>

#include <memory>
#include <vector>

namespace splitirr
{
    /// G(X, Y): X is a maximal clique ordered v1..vn with d1 >= ... >= dn, Y is stable.
    struct SplitPartition
    {
        std::shared_ptr<const Graph> graph;
        std::vector<Vertex> X;
        std::vector<Vertex> Y;
        std::vector<int> d;

        int n() const { return static_cast<int>(X.size()); }
        /// 1-based clique label v_i.
        Vertex v(int i) const { return X.at(i - 1); }
        /// 1-based d_i.
        int d_at(int i) const { return d.at(i - 1); }
    };

    /// Throws NotSplit when no clique/stable-set partition exists.
    SplitPartition split_partition(std::shared_ptr<const Graph> g);
    SplitPartition split_partition(const Graph & g);

    std::vector<int> d_sequence(const SplitPartition & p);

    /// Throws ContractError naming the first violated invariant.
    void validate_partition(const SplitPartition & p);

    struct StrippedGraph
    {
        Graph graph;
        std::vector<Vertex> removed;  ///< isolated vertices of the input
        std::vector<Vertex> original; ///< new id -> input id
    };

    StrippedGraph strip_isolated(const Graph & g);
}
