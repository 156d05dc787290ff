#include <splitirr/errors.hpp>
#include <splitirr/oracle.hpp>

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <tuple>

using std::string;
using std::to_string;
using std::vector;

namespace splitirr
{
    bool StructureReport::ok() const
    {
        return std::all_of(items.begin(), items.end(), [](bool b) { return b; });
    }

    namespace
    {
        bool connected(const Graph & g)
        {
            if (g.vertex_count() == 0)
                return true;
            vector<char> seen(g.vertex_count(), 0);
            vector<Vertex> stack{0};
            seen[0] = 1;
            int reached = 1;
            while (! stack.empty()) {
                Vertex v = stack.back();
                stack.pop_back();
                for (auto [w, e] : g.incident(v))
                    if (! seen[w]) {
                        seen[w] = 1;
                        ++reached;
                        stack.push_back(w);
                    }
            }
            return reached == g.vertex_count();
        }
    }

    StructureReport check_single_repeat_structure(const Graph & g)
    {
        const int n = g.vertex_count();
        if (n < 2 || ! connected(g))
            throw ContractError("structure check needs a connected graph on at least 2 vertices");

        vector<Vertex> sorted(n);
        std::iota(sorted.begin(), sorted.end(), 0);
        std::stable_sort(sorted.begin(), sorted.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

        int equal_pairs = 0;
        Vertex u = -1, v = -1;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (g.degree(sorted[i]) == g.degree(sorted[j])) {
                    ++equal_pairs;
                    u = sorted[i];
                    v = sorted[j];
                }
        if (equal_pairs != 1)
            throw ContractError("structure check needs exactly one pair of equal-degree vertices, found "
                + to_string(equal_pairs));

        const int h = (n + 1) / 2;
        vector<Vertex> X(sorted.begin(), sorted.begin() + (h - 1));
        vector<Vertex> Y(sorted.begin() + std::min(n, h + 1), sorted.end());

        StructureReport r;
        r.items[0] = g.degree(u) == n / 2;
        r.items[1] = (sorted[h - 1] == u && sorted[h] == v) || (sorted[h - 1] == v && sorted[h] == u);

        bool clique = true, stable = true;
        for (size_t i = 0; i < X.size(); ++i)
            for (size_t j = i + 1; j < X.size(); ++j)
                clique = clique && g.adjacent(X[i], X[j]);
        for (size_t i = 0; i < Y.size(); ++i)
            for (size_t j = i + 1; j < Y.size(); ++j)
                stable = stable && ! g.adjacent(Y[i], Y[j]);
        r.items[2] = clique && stable;

        r.items[3] = std::all_of(X.begin(), X.end(), [&](Vertex x) { return g.adjacent(x, u) && g.adjacent(x, v); });
        r.items[4] = std::none_of(Y.begin(), Y.end(), [&](Vertex y) { return g.adjacent(y, u) || g.adjacent(y, v); });
        r.items[5] = g.adjacent(u, v) == (n % 2 == 0);

        static const char * names[6] = {
            "equal degree is floor(n/2)", "pair at sorted positions ceil(n/2), ceil(n/2)+1",
            "top clique and bottom stable set", "clique inside both neighbourhoods",
            "no neighbour in the stable tail", "pair adjacent iff n even"};
        for (int i = 0; i < 6; ++i)
            r.text += string(r.items[i] ? "ok   " : "FAIL ") + names[i] + "\n";
        return r;
    }

    Graph gen_split_graph(int n, const vector<int> & d, const vector<int> & y_profile, std::uint64_t seed)
    {
        if (n < 1)
            throw InputError("clique size must be at least 1");
        if (static_cast<int>(d.size()) != n)
            throw InputError("d-sequence length " + to_string(d.size()) + " differs from n=" + to_string(n));
        for (int x : d)
            if (x < 0)
                throw InputError("negative entry in d-sequence");
        for (int y : y_profile)
            if (y < 0 || y > n - 1)
                throw InputError("Y degree " + to_string(y) + " outside 0..n-1 (X must stay a maximal clique)");
        if (std::accumulate(d.begin(), d.end(), 0L) != std::accumulate(y_profile.begin(), y_profile.end(), 0L))
            throw InputError("sum of d differs from sum of Y degrees");

        std::mt19937_64 rng(seed);
        vector<Edge> edges;
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b)
                edges.push_back({a, b});

        vector<int> capacity = d;
        vector<Vertex> pool(n);
        vector<size_t> y_order(y_profile.size());
        std::iota(y_order.begin(), y_order.end(), 0);
        std::stable_sort(y_order.begin(), y_order.end(), [&](size_t a, size_t b) { return y_profile[a] > y_profile[b]; });
        for (size_t j : y_order) {
            std::iota(pool.begin(), pool.end(), 0);
            std::shuffle(pool.begin(), pool.end(), rng);
            std::stable_sort(pool.begin(), pool.end(), [&](Vertex a, Vertex b) { return capacity[a] > capacity[b]; });
            for (int t = 0; t < y_profile[j]; ++t) {
                Vertex x = pool[t];
                if (capacity[x] == 0)
                    throw InputError("degree profile is not realizable");
                --capacity[x];
                edges.push_back({x, static_cast<Vertex>(n + j)});
            }
        }
        return Graph(n + static_cast<int>(y_profile.size()), std::move(edges));
    }

    namespace
    {
        using Key = std::tuple<int, int, vector<int>>;

        Key invariant(const Graph & g)
        {
            vector<int> degs(g.vertex_count());
            for (Vertex v = 0; v < g.vertex_count(); ++v)
                degs[v] = g.degree(v);
            std::sort(degs.begin(), degs.end());
            return {g.vertex_count(), g.edge_count(), degs};
        }

        struct IsoSearch
        {
            const Graph & a;
            const Graph & b;
            vector<Vertex> map;
            vector<char> used;

            bool extend(Vertex v)
            {
                if (v == a.vertex_count())
                    return true;
                for (Vertex w = 0; w < b.vertex_count(); ++w) {
                    if (used[w] || a.degree(v) != b.degree(w))
                        continue;
                    bool ok = true;
                    for (Vertex u = 0; u < v && ok; ++u)
                        ok = a.adjacent(u, v) == b.adjacent(map[u], w);
                    if (! ok)
                        continue;
                    map[v] = w;
                    used[w] = 1;
                    if (extend(v + 1))
                        return true;
                    used[w] = 0;
                }
                return false;
            }
        };
    }

    bool isomorphic(const Graph & a, const Graph & b)
    {
        if (invariant(a) != invariant(b))
            return false;
        IsoSearch s{a, b, vector<Vertex>(a.vertex_count(), -1), vector<char>(b.vertex_count(), 0)};
        return s.extend(0);
    }

    vector<Graph> enumerate_split_graphs(int max_vertices)
    {
        if (max_vertices > 8)
            throw BudgetExceeded("split graph enumeration is limited to 8 vertices");

        vector<Graph> out;
        std::map<Key, vector<size_t>> classes;

        auto offer = [&](Graph g) {
            auto & bucket = classes[invariant(g)];
            for (size_t idx : bucket)
                if (isomorphic(out[idx], g))
                    return;
            bucket.push_back(out.size());
            out.push_back(std::move(g));
        };

        // A clique of size n plus a non-decreasing multiset of Y neighbourhoods, each missing at
        // least one clique vertex so the clique stays maximal.
        for (int total = 1; total <= max_vertices; ++total)
            for (int n = 1; n <= total; ++n) {
                const int m = total - n;
                vector<unsigned> masks;
                for (unsigned s = 0; s < (1u << n); ++s)
                    if (std::popcount(s) <= n - 1)
                        masks.push_back(s);

                vector<int> pick(m, 0);
                while (true) {
                    vector<Edge> edges;
                    for (Vertex a = 0; a < n; ++a)
                        for (Vertex b = a + 1; b < n; ++b)
                            edges.push_back({a, b});
                    for (int j = 0; j < m; ++j)
                        for (int x = 0; x < n; ++x)
                            if (masks[pick[j]] >> x & 1u)
                                edges.push_back({x, n + j});
                    offer(Graph(total, std::move(edges)));

                    int j = m - 1;
                    while (j >= 0 && pick[j] == static_cast<int>(masks.size()) - 1)
                        --j;
                    if (j < 0)
                        break;
                    ++pick[j];
                    for (int t = j + 1; t < m; ++t)
                        pick[t] = pick[j];
                }
            }
        return out;
    }
}
