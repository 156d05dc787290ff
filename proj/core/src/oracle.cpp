#include <splitirr/errors.hpp>
#include <splitirr/oracle.hpp>

#include <algorithm>
#include <memory>
#include <numeric>
#include <string>
#include <tuple>

using std::make_shared;
using std::vector;

namespace splitirr
{
    namespace
    {
        // Depth-first colour assignment over a fixed edge order. A vertex is checked once all
        // its edges are coloured; from then on its colour-degrees are final.
        class ExhaustiveSearch
        {
        public:
            ExhaustiveSearch(const Graph & g, const OracleOptions & options) :
                _g(g), _options(options),
                _colour(g.edge_count(), 0),
                _remaining(g.vertex_count()),
                _twin_prev(g.vertex_count(), -1),
                _owner_slot(g.edge_count(), -1),
                _owner(g.edge_count(), -1)
            {
                for (Vertex v = 0; v < g.vertex_count(); ++v)
                    _remaining[v] = g.degree(v);
                if (options.twin_symmetry)
                    find_twins();
                order_edges();
            }

            bool run(int k)
            {
                _k = k;
                _deg.assign(static_cast<size_t>(_g.vertex_count()) * (k + 1), 0);
                std::fill(_colour.begin(), _colour.end(), 0);
                for (Vertex v = 0; v < _g.vertex_count(); ++v)
                    _remaining[v] = _g.degree(v);
                return assign(0, 0);
            }

            long long nodes() const { return _nodes; }
            const vector<std::uint8_t> & colours() const { return _colour; }

        private:
            // False twins whose neighbours all have strictly larger degree: all their edges
            // share one sort key, so each twin's edges form a block ordered by neighbour id.
            void find_twins()
            {
                const int n = _g.vertex_count();
                _twin_edges.resize(n);
                vector<vector<Vertex>> nbrs(n);
                for (Vertex v = 0; v < n; ++v) {
                    for (auto [w, e] : _g.incident(v))
                        nbrs[v].push_back(w);
                    std::sort(nbrs[v].begin(), nbrs[v].end());
                }
                auto eligible = [&](Vertex v) {
                    if (nbrs[v].empty())
                        return false;
                    for (Vertex w : nbrs[v])
                        if (_g.degree(w) <= _g.degree(v))
                            return false;
                    return true;
                };
                for (Vertex v = 0; v < n; ++v) {
                    if (! eligible(v))
                        continue;
                    for (Vertex u = v - 1; u >= 0; --u)
                        if (eligible(u) && nbrs[u] == nbrs[v]) {
                            _twin_prev[v] = u;
                            break;
                        }
                }
                for (Vertex v = 0; v < n; ++v) {
                    bool in_class = _twin_prev[v] >= 0;
                    for (Vertex u = v + 1; u < n && ! in_class; ++u)
                        in_class = _twin_prev[u] == v;
                    if (! in_class)
                        continue;
                    for (Vertex w : nbrs[v]) {
                        int e = *_g.edge_id(v, w);
                        _owner[e] = v;
                        _owner_slot[e] = static_cast<int>(_twin_edges[v].size());
                        _twin_edges[v].push_back(e);
                    }
                }
            }

            void order_edges()
            {
                _order.resize(_g.edge_count());
                std::iota(_order.begin(), _order.end(), 0);
                auto key = [&](int e) {
                    const auto & ed = _g.edge(e);
                    int anchor = _owner[e] >= 0 ? _owner[e] : ed.u;
                    int partner = _owner[e] >= 0 ? (ed.u == _owner[e] ? ed.v : ed.u) : ed.v;
                    return std::tuple(-std::min(_g.degree(ed.u), _g.degree(ed.v)), anchor, partner);
                };
                std::sort(_order.begin(), _order.end(), [&](int a, int b) { return key(a) < key(b); });
            }

            int & deg(Vertex v, Color c) { return _deg[static_cast<size_t>(v) * (_k + 1) + c]; }

            bool settled_ok(Vertex v)
            {
                for (auto [w, e] : _g.incident(v))
                    if (_remaining[w] == 0 && deg(v, _colour[e]) == deg(w, _colour[e]))
                        return false;
                return true;
            }

            // Smallest colour allowed on e by the twin ordering.
            int twin_floor(int e) const
            {
                Vertex y = _owner[e];
                if (y < 0 || _twin_prev[y] < 0)
                    return 1;
                const auto & mine = _twin_edges[y];
                const auto & theirs = _twin_edges[_twin_prev[y]];
                int slot = _owner_slot[e];
                for (int i = 0; i < slot; ++i)
                    if (_colour[mine[i]] != _colour[theirs[i]])
                        return 1;
                return _colour[theirs[slot]];
            }

            bool assign(size_t i, int used)
            {
                ++_nodes;
                if (i == _order.size())
                    return true;
                int e = _order[i];
                const auto & ed = _g.edge(e);
                int top = _options.colour_symmetry ? std::min(_k, used + 1) : _k;
                int bottom = _options.twin_symmetry ? twin_floor(e) : 1;
                for (Color c = bottom; c <= top; ++c) {
                    _colour[e] = static_cast<std::uint8_t>(c);
                    ++deg(ed.u, c), ++deg(ed.v, c);
                    --_remaining[ed.u], --_remaining[ed.v];
                    bool ok = (_remaining[ed.u] > 0 || settled_ok(ed.u)) && (_remaining[ed.v] > 0 || settled_ok(ed.v));
                    if (ok && assign(i + 1, std::max(used, c)))
                        return true;
                    ++_remaining[ed.u], ++_remaining[ed.v];
                    --deg(ed.u, c), --deg(ed.v, c);
                    _colour[e] = 0;
                }
                return false;
            }

            const Graph & _g;
            OracleOptions _options;
            int _k = 1;
            long long _nodes = 0;
            vector<std::uint8_t> _colour;
            vector<int> _remaining;
            vector<int> _deg;
            vector<int> _order;
            vector<Vertex> _twin_prev;
            vector<vector<int>> _twin_edges;
            vector<int> _owner_slot;
            vector<Vertex> _owner;
        };
    }

    OracleResult oracle_chi(const Graph & g, const OracleOptions & options)
    {
        if (options.k_max < 1 || options.k_max > max_colors)
            throw InputError("k_max must be in 1..4");
        if (g.edge_count() > options.edge_budget)
            throw BudgetExceeded("oracle budget is " + std::to_string(options.edge_budget) + " edges, graph has "
                + std::to_string(g.edge_count()));

        OracleResult result;
        if (g.edge_count() == 0) {
            result.chi = ChiStatus::chi(0);
            return result;
        }

        auto shared = make_shared<const Graph>(g);
        ExhaustiveSearch search(*shared, options);
        for (int k = 1; k <= options.k_max; ++k)
            if (search.run(k)) {
                result.chi = ChiStatus::chi(k);
                result.witness = EdgeColoring(shared, k, search.colours());
                result.nodes_explored = search.nodes();
                return result;
            }
        result.chi = ChiStatus::not_decomposable();
        result.nodes_explored = search.nodes();
        return result;
    }

    OracleResult oracle_chi(const Graph & g, int k_max, int edge_budget)
    {
        OracleOptions options;
        options.k_max = k_max;
        options.edge_budget = edge_budget;
        return oracle_chi(g, options);
    }
}
