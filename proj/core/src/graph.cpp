#include <splitirr/errors.hpp>
#include <splitirr/graph.hpp>

#include <algorithm>
#include <bit>
#include <string>

using std::shared_ptr;
using std::to_string;
using std::vector;

namespace splitirr
{
    Graph::Graph(int vertex_count, vector<Edge> edges) :
        _n(vertex_count),
        _edges(std::move(edges)),
        _adjacency(vertex_count < 0 ? 0 : vertex_count)
    {
        if (vertex_count < 0)
            throw InputError("negative vertex count");

        _index.reserve(_edges.size() * 2);
        for (int id = 0; id < edge_count(); ++id) {
            auto & e = _edges[id];
            if (e.u < 0 || e.v < 0 || e.u >= _n || e.v >= _n)
                throw InputError("edge endpoint out of range: " + to_string(e.u) + " " + to_string(e.v));
            if (e.u == e.v)
                throw InputError("self-loop at vertex " + to_string(e.u));
            if (e.u > e.v)
                std::swap(e.u, e.v);
            if (! _index.emplace(key(e.u, e.v), id).second)
                throw InputError("duplicate edge " + to_string(e.u) + " " + to_string(e.v));
            _adjacency[e.u].push_back({e.v, id});
            _adjacency[e.v].push_back({e.u, id});
        }
    }

    Graph Graph::complete(int n)
    {
        vector<Edge> edges;
        edges.reserve(n > 1 ? n * (n - 1) / 2 : 0);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                edges.push_back({u, v});
        return Graph(n, std::move(edges));
    }

    void Graph::check_vertex(Vertex v) const
    {
        if (v < 0 || v >= _n)
            throw InputError("vertex " + to_string(v) + " out of range [0, " + to_string(_n) + ")");
    }

    std::uint64_t Graph::key(Vertex u, Vertex v)
    {
        if (u > v)
            std::swap(u, v);
        return (std::uint64_t(std::uint32_t(u)) << 32) | std::uint32_t(v);
    }

    int Graph::degree(Vertex v) const
    {
        check_vertex(v);
        return static_cast<int>(_adjacency[v].size());
    }

    std::span<const Incidence> Graph::incident(Vertex v) const
    {
        check_vertex(v);
        return _adjacency[v];
    }

    std::optional<int> Graph::edge_id(Vertex u, Vertex v) const
    {
        auto it = _index.find(key(u, v));
        if (it == _index.end())
            return std::nullopt;
        return it->second;
    }

    EdgeColoring::EdgeColoring(shared_ptr<const Graph> graph, int k) :
        _graph(std::move(graph)),
        _k(k),
        _colors(_graph->edge_count(), 0)
    {
        if (k < 1 || k > max_colors)
            throw InputError("color count must be in 1.." + to_string(max_colors));
    }

    EdgeColoring::EdgeColoring(shared_ptr<const Graph> graph, int k, vector<std::uint8_t> colors) :
        EdgeColoring(std::move(graph), k)
    {
        if (colors.size() != _colors.size())
            throw InputError("coloring size does not match edge count");
        for (int e = 0; e < static_cast<int>(colors.size()); ++e)
            set(e, colors[e]);
    }

    Color EdgeColoring::color(Vertex u, Vertex v) const
    {
        auto id = _graph->edge_id(u, v);
        if (! id)
            throw InputError("no edge " + to_string(u) + " " + to_string(v));
        return _colors[*id];
    }

    void EdgeColoring::set(int edge, Color c)
    {
        if (c < 0 || c > _k)
            throw InputError("color " + to_string(c) + " outside 1.." + to_string(_k));
        _colors.at(edge) = static_cast<std::uint8_t>(c);
    }

    void EdgeColoring::set(Vertex u, Vertex v, Color c)
    {
        auto id = _graph->edge_id(u, v);
        if (! id)
            throw InputError("no edge " + to_string(u) + " " + to_string(v));
        set(*id, c);
    }

    void EdgeColoring::flip(int edge)
    {
        auto & c = _colors.at(edge);
        if (c != red && c != blue)
            throw ContractError("flip applies to red/blue edges only");
        c = static_cast<std::uint8_t>(red + blue - c);
    }

    bool EdgeColoring::total() const
    {
        return std::find(_colors.begin(), _colors.end(), 0) == _colors.end();
    }

    int EdgeColoring::colors_used() const
    {
        unsigned mask = 0;
        for (auto c : _colors)
            if (c)
                mask |= 1u << c;
        return std::popcount(mask);
    }

    int EdgeColoring::color_degree(Vertex v, Color c) const
    {
        int d = 0;
        for (auto [w, e] : _graph->incident(v))
            d += (_colors[e] == c);
        return d;
    }

    vector<int> EdgeColoring::degrees(Color c) const
    {
        vector<int> d(_graph->vertex_count(), 0);
        const auto & edges = _graph->edges();
        for (int e = 0; e < static_cast<int>(edges.size()); ++e)
            if (_colors[e] == c) {
                ++d[edges[e].u];
                ++d[edges[e].v];
            }
        return d;
    }

    vector<Edge> ConflictReport::in_color(Color c) const
    {
        vector<Edge> out;
        for (const auto & conflict : conflicts)
            if (conflict.color == c)
                out.push_back(conflict.edge);
        return out;
    }

    int degree(const Graph & g, Vertex v)
    {
        return g.degree(v);
    }

    Graph color_subgraph(const EdgeColoring & col, Color c)
    {
        if (c < 1 || c > col.k())
            throw InputError("color " + to_string(c) + " outside 1.." + to_string(col.k()));
        vector<Edge> edges;
        const auto & all = col.graph().edges();
        for (int e = 0; e < static_cast<int>(all.size()); ++e)
            if (col.color(e) == c)
                edges.push_back(all[e]);
        return Graph(col.graph().vertex_count(), std::move(edges));
    }

    vector<Edge> conflicting_edges(const Graph & g)
    {
        vector<Edge> out;
        for (const auto & e : g.edges())
            if (g.degree(e.u) == g.degree(e.v))
                out.push_back(e);
        return out;
    }

    bool is_locally_irregular(const Graph & g)
    {
        for (const auto & e : g.edges())
            if (g.degree(e.u) == g.degree(e.v))
                return false;
        return true;
    }

    ConflictReport verify_decomposition(const EdgeColoring & col)
    {
        if (! col.total())
            throw InputError("coloring is partial: some edge has no color");

        ConflictReport report;
        report.k = col.k();
        const auto & edges = col.graph().edges();
        for (Color c = 1; c <= col.k(); ++c) {
            auto deg = col.degrees(c);
            for (int e = 0; e < static_cast<int>(edges.size()); ++e)
                if (col.color(e) == c && deg[edges[e].u] == deg[edges[e].v])
                    report.conflicts.push_back({edges[e], c, deg[edges[e].u]});
        }
        return report;
    }

    std::string color_name(Color c)
    {
        switch (c) {
            case red: return "red";
            case blue: return "blue";
            case green: return "green";
            case 4: return "purple";
            default: return "none";
        }
    }
}
