#pragma once

// Brute-force references used as independent oracles by the unit and acceptance tests.
// Everything here is deliberately naive.

#include <splitirr/colorings.hpp>
#include <splitirr/graph.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace splitirr::testing
{
    inline std::filesystem::path data_dir()
    {
        return SPLITIRR_TEST_DATA;
    }

    inline Graph make(int n, std::initializer_list<std::pair<int, int>> pairs)
    {
        std::vector<Edge> edges;
        for (auto [u, v] : pairs)
            edges.push_back({u, v});
        return Graph(n, edges);
    }

    inline Graph path(int n)
    {
        std::vector<Edge> edges;
        for (int i = 0; i + 1 < n; ++i)
            edges.push_back({i, i + 1});
        return Graph(n, edges);
    }

    inline Graph cycle(int n)
    {
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            edges.push_back({i, (i + 1) % n});
        return Graph(n, edges);
    }

    /// Centre 0 with k leaves.
    inline Graph star(int k)
    {
        std::vector<Edge> edges;
        for (int i = 1; i <= k; ++i)
            edges.push_back({0, i});
        return Graph(k + 1, edges);
    }

    /// Clique on 0..n-1 where vertex i gets d[i] pendant Y vertices.
    inline Graph pendant_split(const std::vector<int> & d)
    {
        const int n = static_cast<int>(d.size());
        std::vector<Edge> edges;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                edges.push_back({a, b});
        int y = n;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < d[i]; ++j)
                edges.push_back({i, y++});
        return Graph(y, edges);
    }

    /// Labelled graph on n vertices from the bits of mask, one bit per pair (a<b) in
    /// lexicographic order.
    inline Graph from_mask(int n, std::uint64_t mask)
    {
        std::vector<Edge> edges;
        int bit = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b, ++bit)
                if (mask >> bit & 1)
                    edges.push_back({a, b});
        return Graph(n, edges);
    }

    inline Graph random_graph(int n, double p, std::mt19937_64 & rng)
    {
        std::bernoulli_distribution coin(p);
        std::vector<Edge> edges;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (coin(rng))
                    edges.push_back({a, b});
        return Graph(n, edges);
    }

    inline std::vector<int> naive_degrees(const Graph & g)
    {
        std::vector<int> deg(g.vertex_count(), 0);
        for (const auto & e : g.edges())
            ++deg[e.u], ++deg[e.v];
        return deg;
    }

    inline std::set<Edge> naive_conflicts(const Graph & g)
    {
        auto deg = naive_degrees(g);
        std::set<Edge> out;
        for (const auto & e : g.edges())
            if (deg[e.u] == deg[e.v])
                out.insert(e);
        return out;
    }

    /// True when some vertex subset is a clique whose complement is stable.
    inline bool brute_is_split(const Graph & g)
    {
        const int n = g.vertex_count();
        for (std::uint32_t s = 0; s < (1u << n); ++s) {
            bool ok = true;
            for (int a = 0; a < n && ok; ++a)
                for (int b = a + 1; b < n && ok; ++b) {
                    bool ina = s >> a & 1, inb = s >> b & 1;
                    if (ina && inb && ! g.adjacent(a, b))
                        ok = false;
                    if (! ina && ! inb && g.adjacent(a, b))
                        ok = false;
                }
            if (ok)
                return true;
        }
        return false;
    }

    /// Every k-colouring of every edge; -1 when no k <= k_max works (or edges exist but
    /// none decomposes). Only for tiny graphs.
    inline int brute_chi(const Graph & g, int k_max)
    {
        const int m = g.edge_count();
        if (m == 0)
            return 0;
        for (int k = 1; k <= k_max; ++k) {
            std::vector<int> c(m, 0);
            while (true) {
                bool clean = true;
                for (int col = 0; col < k && clean; ++col) {
                    std::vector<int> deg(g.vertex_count(), 0);
                    for (int e = 0; e < m; ++e)
                        if (c[e] == col)
                            ++deg[g.edge(e).u], ++deg[g.edge(e).v];
                    for (int e = 0; e < m && clean; ++e)
                        if (c[e] == col && deg[g.edge(e).u] == deg[g.edge(e).v])
                            clean = false;
                }
                if (clean)
                    return k;
                int i = 0;
                while (i < m && ++c[i] == k)
                    c[i++] = 0;
                if (i == m)
                    break;
            }
        }
        return -1;
    }

    /// Canonical adjacency string: lexicographically least over all vertex permutations.
    inline std::string canonical(const Graph & g)
    {
        const int n = g.vertex_count();
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::string best;
        do {
            std::string s;
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    s += g.adjacent(perm[a], perm[b]) ? '1' : '0';
            if (best.empty() || s < best)
                best = s;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return std::to_string(n) + ":" + best;
    }

    inline std::shared_ptr<const Graph> share(Graph g)
    {
        return std::make_shared<const Graph>(std::move(g));
    }
}

namespace splitirr::testing
{
    struct AlternatingInstance
    {
        EdgeColoring coloring;
        CycleTemplate cycle;
    };

    /// Random graph on <= 12 vertices containing a planted even cycle whose colours
    /// alternate; resampled until the opposite-colour degree condition holds on every
    /// cycle edge. The check is restated here rather than borrowed from the library.
    inline AlternatingInstance random_alternating_instance(std::mt19937_64 & rng)
    {
        while (true) {
            const int n = 4 + static_cast<int>(rng() % 9);
            int len = 4 + 2 * static_cast<int>(rng() % 3);
            if (len > n)
                len = n % 2 == 0 ? n : n - 1;
            std::vector<Vertex> order(n);
            std::iota(order.begin(), order.end(), 0);
            std::shuffle(order.begin(), order.end(), rng);
            std::vector<Vertex> cyc(order.begin(), order.begin() + len);

            std::set<std::pair<int, int>> planted;
            for (int i = 0; i < len; ++i)
                planted.insert(std::minmax(cyc[i], cyc[(i + 1) % len]));
            std::bernoulli_distribution coin(0.45);
            std::vector<Edge> edges;
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    if (planted.count({a, b}) || coin(rng))
                        edges.push_back({a, b});
            auto g = share(Graph(n, edges));

            std::vector<std::uint8_t> colours(g->edge_count());
            for (auto & c : colours)
                c = static_cast<std::uint8_t>(1 + rng() % 2);
            Color first = static_cast<Color>(1 + rng() % 2);
            for (int i = 0; i < len; ++i)
                colours[*g->edge_id(cyc[i], cyc[(i + 1) % len])] = static_cast<std::uint8_t>(i % 2 == 0 ? first : 3 - first);
            EdgeColoring col(g, 2, colours);

            bool ok = true;
            for (int i = 0; i < len && ok; ++i) {
                Vertex a = cyc[i], b = cyc[(i + 1) % len];
                Color other = 3 - col.color(a, b);
                int da = 0, db = 0;
                for (int e = 0; e < g->edge_count(); ++e)
                    if (col.color(e) == other) {
                        da += g->edge(e).u == a || g->edge(e).v == a;
                        db += g->edge(e).u == b || g->edge(e).v == b;
                    }
                ok = da != db;
            }
            if (ok)
                return {std::move(col), CycleTemplate{cyc}};
        }
    }
}
