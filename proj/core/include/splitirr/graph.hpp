#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace splitirr
{
    using Vertex = int;
    using Color = int;

    inline constexpr Color red = 1;
    inline constexpr Color blue = 2;
    inline constexpr Color green = 3;
    inline constexpr int max_colors = 4;

    /// Undirected edge, always stored with u < v.
    struct Edge
    {
        Vertex u;
        Vertex v;

        friend auto operator<=>(const Edge &, const Edge &) = default;
    };

    struct Incidence
    {
        Vertex neighbour;
        int edge;
    };

    /// Finite simple undirected graph on dense ids 0..n-1. Immutable once built.
    class Graph
    {
    public:
        Graph() = default;

        /// Throws InputError on self-loops, duplicate edges or out-of-range ids.
        Graph(int vertex_count, std::vector<Edge> edges);

        static Graph complete(int n);

        int vertex_count() const { return _n; }
        int edge_count() const { return static_cast<int>(_edges.size()); }
        const std::vector<Edge> & edges() const { return _edges; }
        const Edge & edge(int id) const { return _edges.at(id); }

        int degree(Vertex v) const;
        std::span<const Incidence> incident(Vertex v) const;

        std::optional<int> edge_id(Vertex u, Vertex v) const;
        bool adjacent(Vertex u, Vertex v) const { return edge_id(u, v).has_value(); }

        friend bool operator==(const Graph & a, const Graph & b)
        {
            return a._n == b._n && a._edges == b._edges;
        }

    private:
        void check_vertex(Vertex v) const;
        static std::uint64_t key(Vertex u, Vertex v);

        int _n = 0;
        std::vector<Edge> _edges;
        std::vector<std::vector<Incidence>> _adjacency;
        std::unordered_map<std::uint64_t, int> _index;
    };

    /// Total (or, during construction, partial) map from edge ids to colors 1..k.
    /// Color 0 marks an uncolored edge.
    class EdgeColoring
    {
    public:
        EdgeColoring(std::shared_ptr<const Graph> graph, int k);
        EdgeColoring(std::shared_ptr<const Graph> graph, int k, std::vector<std::uint8_t> colors);

        const Graph & graph() const { return *_graph; }
        const std::shared_ptr<const Graph> & graph_ptr() const { return _graph; }
        int k() const { return _k; }

        Color color(int edge) const { return _colors.at(edge); }
        Color color(Vertex u, Vertex v) const;
        void set(int edge, Color c);
        void set(Vertex u, Vertex v, Color c);
        void flip(int edge); ///< swaps red and blue on one edge

        bool total() const;
        int colors_used() const;
        const std::vector<std::uint8_t> & colors() const { return _colors; }

        int color_degree(Vertex v, Color c) const;
        /// Color-c degree of every vertex.
        std::vector<int> degrees(Color c) const;

        friend bool operator==(const EdgeColoring & a, const EdgeColoring & b)
        {
            return a._k == b._k && a._colors == b._colors && *a._graph == *b._graph;
        }

    private:
        std::shared_ptr<const Graph> _graph;
        int _k;
        std::vector<std::uint8_t> _colors;
    };

    struct Conflict
    {
        Edge edge;
        Color color;
        int degree; ///< the shared color-degree of both endpoints
    };

    struct ConflictReport
    {
        int k = 0;
        std::vector<Conflict> conflicts;

        bool clean() const { return conflicts.empty(); }
        std::vector<Edge> in_color(Color c) const;
    };

    int degree(const Graph & g, Vertex v);
    Graph color_subgraph(const EdgeColoring & col, Color c);
    bool is_locally_irregular(const Graph & g);
    std::vector<Edge> conflicting_edges(const Graph & g);

    /// Throws InputError if the coloring leaves an edge uncolored.
    ConflictReport verify_decomposition(const EdgeColoring & col);

    std::string color_name(Color c);
}
