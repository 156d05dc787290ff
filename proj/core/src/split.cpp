#include <splitirr/errors.hpp>
#include <splitirr/split.hpp>

#include <algorithm>
#include <numeric>

using std::make_shared;
using std::shared_ptr;
using std::vector;

namespace splitirr
{
    namespace
    {
        bool adjacent_to_all(const Graph & g, Vertex y, const vector<Vertex> & X)
        {
            if (g.degree(y) < static_cast<int>(X.size()))
                return false;
            return std::all_of(X.begin(), X.end(), [&](Vertex x) { return g.adjacent(x, y); });
        }
    }

    SplitPartition split_partition(shared_ptr<const Graph> gp)
    {
        const Graph & g = *gp;
        const int total = g.vertex_count();

        vector<Vertex> order(total);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
            [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

        // Hammer-Simeone: with m the largest i such that deg_i >= i - 1, the graph is split
        // iff sum_{i<=m} deg_i == m(m-1) + sum_{i>m} deg_i, and then the top m form a clique.
        int m = 0;
        for (int i = 1; i <= total; ++i)
            if (g.degree(order[i - 1]) >= i - 1)
                m = i;
        long top = 0, rest = 0;
        for (int i = 0; i < total; ++i)
            (i < m ? top : rest) += g.degree(order[i]);
        if (top != long(m) * (m - 1) + rest)
            throw NotSplit();

        SplitPartition p;
        p.graph = gp;
        p.X.assign(order.begin(), order.begin() + m);
        p.Y.assign(order.begin() + m, order.end());

        for (bool moved = true; moved;) {
            moved = false;
            for (auto it = p.Y.begin(); it != p.Y.end(); ++it)
                if (adjacent_to_all(g, *it, p.X)) {
                    p.X.push_back(*it);
                    p.Y.erase(it);
                    moved = true;
                    break;
                }
        }

        vector<int> y_degree(total, 0);
        for (Vertex x : p.X)
            for (auto [w, e] : g.incident(x))
                if (std::find(p.X.begin(), p.X.end(), w) == p.X.end())
                    ++y_degree[x];

        std::sort(p.X.begin(), p.X.end(), [&](Vertex a, Vertex b) {
            return y_degree[a] != y_degree[b] ? y_degree[a] > y_degree[b] : a < b;
        });
        std::sort(p.Y.begin(), p.Y.end());
        for (Vertex x : p.X)
            p.d.push_back(y_degree[x]);

        validate_partition(p);
        return p;
    }

    SplitPartition split_partition(const Graph & g)
    {
        return split_partition(make_shared<const Graph>(g));
    }

    vector<int> d_sequence(const SplitPartition & p)
    {
        return p.d;
    }

    void validate_partition(const SplitPartition & p)
    {
        if (! p.graph)
            throw ContractError("partition has no graph");
        const Graph & g = *p.graph;
        if (p.X.size() + p.Y.size() != static_cast<size_t>(g.vertex_count()))
            throw ContractError("X and Y do not cover the vertex set");

        vector<char> in_x(g.vertex_count(), 0);
        for (Vertex x : p.X)
            in_x.at(x) = 1;
        for (Vertex y : p.Y)
            if (in_x.at(y))
                throw ContractError("X and Y overlap");

        for (size_t i = 0; i < p.X.size(); ++i)
            for (size_t j = i + 1; j < p.X.size(); ++j)
                if (! g.adjacent(p.X[i], p.X[j]))
                    throw ContractError("X is not a clique");

        for (Vertex y : p.Y) {
            for (auto [w, e] : g.incident(y))
                if (! in_x[w])
                    throw ContractError("Y is not a stable set");
            if (! p.X.empty() && g.degree(y) >= p.n())
                throw ContractError("X is not a maximal clique");
        }

        if (p.d.size() != p.X.size())
            throw ContractError("d-sequence length differs from |X|");
        for (int i = 0; i < p.n(); ++i) {
            if (p.d[i] != g.degree(p.X[i]) - (p.n() - 1))
                throw ContractError("d_i does not count Y-neighbours");
            if (i > 0 && p.d[i] > p.d[i - 1])
                throw ContractError("d-sequence is not non-increasing");
        }
    }

    StrippedGraph strip_isolated(const Graph & g)
    {
        StrippedGraph out;
        vector<Vertex> renumber(g.vertex_count(), -1);
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            if (g.degree(v) == 0)
                out.removed.push_back(v);
            else {
                renumber[v] = static_cast<Vertex>(out.original.size());
                out.original.push_back(v);
            }
        }
        vector<Edge> edges;
        edges.reserve(g.edge_count());
        for (const auto & e : g.edges())
            edges.push_back({renumber[e.u], renumber[e.v]});
        out.graph = Graph(static_cast<int>(out.original.size()), std::move(edges));
        return out;
    }
}
