#include <splitirr/errors.hpp>
#include <splitirr/io.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

using std::string;
using std::to_string;
using std::vector;

namespace splitirr
{
    ParseError::ParseError(const string & source, int line, const string & what) :
        InputError(source + (line > 0 ? ":" + to_string(line) : string()) + ": " + what),
        _line(line)
    {
    }

    namespace
    {
        bool blank(const string & s)
        {
            return s.find_first_not_of(" \t\r") == string::npos;
        }

        // Reads exactly `count` integers from the rest of the line; nothing else may follow.
        bool read_ints(std::istringstream & fields, vector<long> & out, int count)
        {
            out.assign(count, 0);
            for (auto & x : out)
                if (! (fields >> x))
                    return false;
            string extra;
            return ! (fields >> extra);
        }

        std::ifstream open(const std::filesystem::path & path)
        {
            std::ifstream in(path);
            if (! in)
                throw ParseError(path.string(), 0, "cannot open file");
            return in;
        }
    }

    Graph parse_graph(std::istream & in, const string & source)
    {
        string line;
        int number = 0;
        long n = -1, m = -1;
        vector<Edge> edges;
        std::set<std::pair<long, long>> seen;
        vector<long> v;

        while (std::getline(in, line)) {
            ++number;
            if (blank(line))
                continue;
            std::istringstream fields(line);
            string tag;
            fields >> tag;
            if (tag == "c")
                continue;
            if (tag == "p") {
                string kind;
                fields >> kind;
                if (n >= 0)
                    throw ParseError(source, number, "second header line");
                if (kind != "edge" || ! read_ints(fields, v, 2) || v[0] < 0 || v[1] < 0)
                    throw ParseError(source, number, "expected 'p edge <n> <m>'");
                n = v[0];
                m = v[1];
            }
            else if (tag == "e") {
                if (n < 0)
                    throw ParseError(source, number, "edge line before header");
                if (! read_ints(fields, v, 2))
                    throw ParseError(source, number, "expected 'e <u> <v>'");
                if (v[0] < 1 || v[0] > n || v[1] < 1 || v[1] > n)
                    throw ParseError(source, number, "vertex id outside 1.." + to_string(n));
                if (v[0] == v[1])
                    throw ParseError(source, number, "self-loop");
                auto key = std::minmax(v[0], v[1]);
                if (! seen.insert(key).second)
                    throw ParseError(source, number, "duplicate edge");
                edges.push_back({static_cast<Vertex>(v[0] - 1), static_cast<Vertex>(v[1] - 1)});
            }
            else
                throw ParseError(source, number, "unknown line type '" + tag + "'");
        }

        if (n < 0)
            throw ParseError(source, number, "missing 'p edge' header");
        if (static_cast<long>(edges.size()) != m)
            throw ParseError(source, number, "header promises " + to_string(m) + " edges, found " + to_string(edges.size()));
        return Graph(static_cast<int>(n), std::move(edges));
    }

    Graph read_graph(const std::filesystem::path & path)
    {
        auto in = open(path);
        return parse_graph(in, path.string());
    }

    void write_graph(std::ostream & out, const Graph & g, const vector<string> & comments)
    {
        for (const auto & c : comments)
            out << "c " << c << '\n';
        out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
        for (const auto & e : g.edges())
            out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
    }

    EdgeColoring parse_coloring(std::istream & in, std::shared_ptr<const Graph> g, const string & source)
    {
        string line;
        int number = 0;
        vector<long> v;
        vector<std::uint8_t> colours(g->edge_count(), 0);
        int k = 1;

        while (std::getline(in, line)) {
            ++number;
            if (blank(line) || line.find_first_not_of(" \t") == line.find('#'))
                continue;
            std::istringstream fields(line);
            if (! read_ints(fields, v, 3))
                throw ParseError(source, number, "expected '<u> <v> <c>'");
            if (v[2] < 1 || v[2] > 3)
                throw ParseError(source, number, "colour " + to_string(v[2]) + " outside 1..3");
            if (v[0] < 1 || v[1] < 1 || v[0] > g->vertex_count() || v[1] > g->vertex_count())
                throw ParseError(source, number, "vertex id out of range");
            auto id = g->edge_id(static_cast<Vertex>(v[0] - 1), static_cast<Vertex>(v[1] - 1));
            if (! id)
                throw ParseError(source, number, "not an edge of the graph");
            if (colours[*id])
                throw ParseError(source, number, "edge coloured twice");
            colours[*id] = static_cast<std::uint8_t>(v[2]);
            k = std::max<int>(k, static_cast<int>(v[2]));
        }
        for (int e = 0; e < g->edge_count(); ++e)
            if (! colours[e])
                throw ParseError(source, 0, "edge " + to_string(g->edge(e).u + 1) + " " + to_string(g->edge(e).v + 1)
                    + " has no colour");
        return EdgeColoring(std::move(g), k, std::move(colours));
    }

    EdgeColoring read_coloring(const std::filesystem::path & path, std::shared_ptr<const Graph> g)
    {
        auto in = open(path);
        return parse_coloring(in, std::move(g), path.string());
    }

    void write_coloring(std::ostream & out, const EdgeColoring & col)
    {
        const auto & edges = col.graph().edges();
        for (int e = 0; e < static_cast<int>(edges.size()); ++e)
            out << edges[e].u + 1 << ' ' << edges[e].v + 1 << ' ' << col.color(e) << '\n';
    }

    string to_dot(const EdgeColoring & col, const std::optional<SplitPartition> & partition)
    {
        std::ostringstream out;
        const Graph & g = col.graph();
        out << "graph G {\n";
        vector<string> labels(g.vertex_count());
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            labels[v] = to_string(v + 1);
        vector<char> in_clique(g.vertex_count(), 0);
        if (partition && partition->graph && partition->graph->vertex_count() == g.vertex_count())
            for (int i = 1; i <= partition->n(); ++i) {
                Vertex x = partition->v(i);
                labels[x] += "\\nv" + to_string(i) + " d=" + to_string(partition->d_at(i));
                in_clique[x] = 1;
            }
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            out << "  " << v + 1 << " [label=\"" << labels[v] << "\""
                << (in_clique[v] ? ", shape=box" : "") << "];\n";
        for (int e = 0; e < g.edge_count(); ++e)
            out << "  " << g.edge(e).u + 1 << " -- " << g.edge(e).v + 1 << " [color=" << color_name(col.color(e)) << "];\n";
        out << "}\n";
        return out.str();
    }
}
