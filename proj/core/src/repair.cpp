#include "repair.hpp"

#include <splitirr/colorings.hpp>
#include <splitirr/errors.hpp>

#include <algorithm>
#include <numeric>
#include <random>

using std::optional;
using std::string;
using std::to_string;
using std::vector;

namespace splitirr::detail
{
    bool conflict_free(const EdgeColoring & col)
    {
        return verify_decomposition(col).clean();
    }

    bool try_invert(EdgeColoring & col, const vector<Vertex> & cycle)
    {
        auto sorted = cycle;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            return false;
        for (size_t i = 0; i < cycle.size(); ++i)
            if (! col.graph().adjacent(cycle[i], cycle[(i + 1) % cycle.size()]))
                return false;
        CycleTemplate t{cycle};
        if (! is_alternating_cycle(col, t))
            return false;
        col = invert_cycle(col, t);
        return true;
    }

    namespace
    {
        struct CycleSearch
        {
            const EdgeColoring & col;
            vector<int> deg[3];
            vector<Vertex> path;
            vector<char> on_path;
            long budget = 200'000;

            explicit CycleSearch(const EdgeColoring & c) :
                col(c),
                on_path(c.graph().vertex_count(), 0)
            {
                deg[red] = col.degrees(red);
                deg[blue] = col.degrees(blue);
            }

            bool opposite_ok(Vertex a, Vertex b, int edge) const
            {
                Color other = red + blue - col.color(edge);
                return deg[other][a] != deg[other][b];
            }

            // Extends path (ending at cur) with an edge of colour `need`; closes at path[0].
            bool extend(Vertex cur, Color need, Color first, size_t max_len)
            {
                if (--budget < 0)
                    return false;
                for (auto [w, e] : col.graph().incident(cur)) {
                    if (col.color(e) != need || ! opposite_ok(cur, w, e))
                        continue;
                    if (w == path[0]) {
                        if (path.size() >= 4 && path.size() % 2 == 0 && need != first)
                            return true;
                        continue;
                    }
                    if (on_path[w] || path.size() >= max_len)
                        continue;
                    path.push_back(w);
                    on_path[w] = 1;
                    if (extend(w, red + blue - need, first, max_len))
                        return true;
                    on_path[w] = 0;
                    path.pop_back();
                }
                return false;
            }

            optional<vector<Vertex>> through(const Conflict & c)
            {
                int id = *col.graph().edge_id(c.edge.u, c.edge.v);
                if (! opposite_ok(c.edge.u, c.edge.v, id))
                    return std::nullopt;
                path = {c.edge.u, c.edge.v};
                std::fill(on_path.begin(), on_path.end(), 0);
                on_path[c.edge.u] = on_path[c.edge.v] = 1;
                if (extend(c.edge.v, red + blue - c.color, c.color, 8))
                    return path;
                return std::nullopt;
            }
        };
    }

    bool repair_by_cycles(EdgeColoring & col, vector<string> & log)
    {
        while (true) {
            auto report = verify_decomposition(col);
            if (report.clean())
                return true;
            bool progressed = false;
            CycleSearch search(col);
            for (const auto & conflict : report.conflicts) {
                if (auto cycle = search.through(conflict)) {
                    col = invert_cycle(col, CycleTemplate{*cycle});
                    log.push_back("alternating-cycle(" + to_string(cycle->size()) + ")");
                    progressed = true;
                    break;
                }
            }
            if (! progressed)
                return false;
        }
    }

    bool repair_by_local_search(EdgeColoring & col, vector<string> & log, std::uint64_t seed, int max_steps)
    {
        const Graph & g = col.graph();
        vector<int> deg[3] = {{}, col.degrees(red), col.degrees(blue)};
        auto conflicting = [&](int e) {
            const auto & ed = g.edge(e);
            Color c = col.color(e);
            return deg[c][ed.u] == deg[c][ed.v];
        };
        auto local = [&](Vertex a, Vertex b) {
            int count = 0;
            for (Vertex x : {a, b})
                for (auto [w, e] : g.incident(x))
                    if (! (x == b && w == a) && conflicting(e))
                        ++count;
            return count;
        };
        auto toggle = [&](int e) {
            const auto & ed = g.edge(e);
            Color c = col.color(e), o = red + blue - c;
            --deg[c][ed.u], --deg[c][ed.v], ++deg[o][ed.u], ++deg[o][ed.v];
            col.flip(e);
        };

        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> noise(0.0, 0.5);
        vector<int> bad;
        for (int step = 0; step < max_steps; ++step) {
            bad.clear();
            for (int e = 0; e < g.edge_count(); ++e)
                if (conflicting(e))
                    bad.push_back(e);
            if (bad.empty()) {
                log.push_back("local-search(seed=" + to_string(seed) + ",steps=" + to_string(step) + ")");
                return true;
            }
            const auto & target = g.edge(bad[rng() % bad.size()]);

            int best = -1;
            double best_delta = 0;
            for (Vertex x : {target.u, target.v})
                for (auto [w, e] : g.incident(x)) {
                    const auto & ed = g.edge(e);
                    int before = local(ed.u, ed.v);
                    toggle(e);
                    int after = local(ed.u, ed.v);
                    toggle(e);
                    double delta = after - before + noise(rng);
                    if (best < 0 || delta < best_delta) {
                        best = e;
                        best_delta = delta;
                    }
                }
            toggle(best);
        }
        return false;
    }

    namespace
    {
        class Backtracker
        {
        public:
            Backtracker(const Graph & g, int k, long limit) :
                _g(g), _k(k), _limit(limit),
                _colour(g.edge_count(), 0),
                _remaining(g.vertex_count()),
                _deg(static_cast<size_t>(g.vertex_count()) * (k + 1), 0)
            {
                for (Vertex v = 0; v < g.vertex_count(); ++v)
                    _remaining[v] = g.degree(v);
                _order.resize(g.edge_count());
                std::iota(_order.begin(), _order.end(), 0);
                std::stable_sort(_order.begin(), _order.end(), [&](int a, int b) {
                    auto key = [&](int e) { return std::min(g.degree(g.edge(e).u), g.degree(g.edge(e).v)); };
                    return key(a) > key(b);
                });
            }

            bool run() { return assign(0, 0); }
            const vector<std::uint8_t> & colours() const { return _colour; }

        private:
            int & deg(Vertex v, Color c) { return _deg[static_cast<size_t>(v) * (_k + 1) + c]; }

            bool settled_ok(Vertex v)
            {
                for (auto [w, e] : _g.incident(v))
                    if (_remaining[w] == 0 && deg(v, _colour[e]) == deg(w, _colour[e]))
                        return false;
                return true;
            }

            bool assign(size_t i, int used)
            {
                if (--_limit < 0)
                    return false;
                if (i == _order.size())
                    return true;
                int e = _order[i];
                const auto & ed = _g.edge(e);
                for (Color c = 1; c <= std::min(_k, used + 1); ++c) {
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
            int _k;
            long _limit;
            vector<std::uint8_t> _colour;
            vector<int> _remaining;
            vector<int> _deg;
            vector<int> _order;
        };
    }

    optional<EdgeColoring> exact_coloring(const std::shared_ptr<const Graph> & g, int k, long node_limit)
    {
        Backtracker search(*g, k, node_limit);
        if (! search.run())
            return std::nullopt;
        return EdgeColoring(g, k, search.colours());
    }
}
