#include <splitirr/colorings.hpp>
#include <splitirr/errors.hpp>

#include <algorithm>
#include <memory>
#include <set>
#include <string>
#include <utility>

using std::make_shared;
using std::pair;
using std::set;
using std::to_string;
using std::vector;

namespace splitirr
{
    PairPattern::PairPattern(int n) :
        _n(n),
        _cells(static_cast<size_t>(n) * n, blue)
    {
    }

    int PairPattern::index(int i, int j) const
    {
        if (i < 1 || j < 1 || i > _n || j > _n || i == j)
            throw ContractError("pattern position out of range");
        return (i - 1) * _n + (j - 1);
    }

    void PairPattern::set(int i, int j, Color c)
    {
        _cells[index(i, j)] = static_cast<std::uint8_t>(c);
        _cells[index(j, i)] = static_cast<std::uint8_t>(c);
    }

    int PairPattern::red_degree(int i) const
    {
        int d = 0;
        for (int j = 1; j <= _n; ++j)
            if (j != i && at(i, j) == red)
                ++d;
        return d;
    }

    PairPattern normal_pattern(int n)
    {
        if (n < 2)
            throw InputError("normal coloring needs n >= 2");
        const int h = (n + 1) / 2;
        PairPattern pattern(n);
        for (int i = 1; i <= h; ++i)
            for (int j = i + 1; j <= h; ++j)
                pattern.set(i, j, red);
        for (int i = h + 1; i <= n; ++i)
            for (int j = 1; j <= n - i + 1; ++j)
                pattern.set(i, j, red);
        return pattern;
    }

    VertexSequence strange_reference_sequence(int n)
    {
        if (n < 10)
            throw InputError("strange coloring is defined for n >= 10");
        const int h = (n + 1) / 2, f = n / 2;
        vector<int> labels;
        for (int i = 3; i <= f + 1; ++i)
            labels.push_back(i);
        labels.push_back(1);
        labels.push_back(f + 2);
        if (h % 2 == 0) {
            labels.push_back(f + 3);
            labels.push_back(2);
            for (int i = f + 4; i <= n; ++i)
                labels.push_back(i);
        }
        else {
            labels.push_back(2);
            for (int i = f + 3; i <= n; ++i)
                labels.push_back(i);
        }
        VertexSequence seq;
        for (int label : labels)
            seq.push_back(label - 1);
        return seq;
    }

    namespace
    {
        void check_strange_identities(const PairPattern & pattern)
        {
            const int n = pattern.n(), h = (n + 1) / 2, f = n / 2;
            auto seq = strange_reference_sequence(n);
            vector<int> position(n + 1);
            for (int p = 1; p <= n; ++p)
                position[seq[p - 1] + 1] = p;

            auto fail = [&](const std::string & what) {
                throw ConstructionFailed("strange coloring identity violated for n=" + to_string(n) + ": " + what);
            };

            vector<int> deg(n + 1);
            for (int i = 1; i <= n; ++i)
                deg[i] = pattern.red_degree(position[i]);
            for (int i = 3; i <= n; ++i)
                if (deg[i] != n - i + 1)
                    fail("red degree of v" + to_string(i));
            if (deg[1] != n - f - 1)
                fail("red degree of v1");
            if (deg[2] != (h % 2 == 0 ? n - f - 2 : n - f - 1))
                fail("red degree of v2");

            set<pair<int, int>> red_conflicts, blue_conflicts;
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    bool is_red = pattern.at(position[i], position[j]) == red;
                    int di = is_red ? deg[i] : n - 1 - deg[i];
                    int dj = is_red ? deg[j] : n - 1 - deg[j];
                    if (di == dj)
                        (is_red ? red_conflicts : blue_conflicts).insert({i, j});
                }
            if (red_conflicts != set<pair<int, int>>{{1, f + 2}})
                fail("red conflicting edges");
            set<pair<int, int>> expected_blue = h % 2 == 0
                ? set<pair<int, int>>{{2, f + 3}}
                : set<pair<int, int>>{{1, 2}, {2, f + 2}};
            if (blue_conflicts != expected_blue)
                fail("blue conflicting edges");
        }
    }

    PairPattern strange_pattern(int n)
    {
        if (n < 10)
            throw InputError("strange coloring is defined for n >= 10");
        const int h = (n + 1) / 2, f = n / 2;
        PairPattern p(n);

        for (int i = 1; i <= h; ++i)
            for (int j = i + 1; j <= h; ++j)
                p.set(i, j, red);
        for (int i = h + 1; i <= n - 1; ++i)
            for (int j = 1; j <= n - i; ++j)
                p.set(i, j, red);
        p.set(1, n, red);
        // For n = 1 (mod 4) the ladder already balances v_f and v_{h+1}; adding this edge
        // would break the degree identities (the n = 13 drawing omits it as well).
        if (n % 4 != 1)
            p.set(h + 1, f, red);

        p.set(f, f - 1, blue);
        p.set(f - 1, n - 1, red);
        if (h % 2 == 0)
            p.set(1, h + 1, blue);
        else
            p.set(1, f + 1, blue);

        auto ladder = [&](int from, int down_to) {
            for (int a = from; a >= down_to; a -= 2)
                p.set(a, a - 1, red);
        };
        switch (n % 4) {
            case 0: ladder(n - 2, n / 2 + 4); break;
            case 1:
                p.set(n - 1, f - 1, red);
                p.set(n - 2, f, red);
                p.set(n - 3, f + 1, red);
                ladder(n - 4, f + 3);
                break;
            case 2: ladder(n - 2, n / 2 + 3); break;
            case 3: ladder(n - 2, f + 4); break;
        }

        check_strange_identities(p);
        return p;
    }

    namespace
    {
        void check_permutation(const VertexSequence & seq)
        {
            vector<char> seen(seq.size(), 0);
            for (Vertex v : seq) {
                if (v < 0 || v >= static_cast<int>(seq.size()) || seen[v])
                    throw InputError("sequence must be a permutation of 0..n-1");
                seen[v] = 1;
            }
        }

        SequencedColoring colour_complete(const VertexSequence & seq, const PairPattern & pattern)
        {
            auto g = make_shared<const Graph>(Graph::complete(static_cast<int>(seq.size())));
            EdgeColoring col(g, 2);
            paint_clique(col, pattern, seq);
            return {seq, std::move(col)};
        }
    }

    SequencedColoring normal_coloring(const VertexSequence & seq)
    {
        if (seq.size() < 2)
            throw InputError("normal coloring needs n >= 2");
        check_permutation(seq);
        return colour_complete(seq, normal_pattern(static_cast<int>(seq.size())));
    }

    SequencedColoring strange_coloring(const VertexSequence & seq)
    {
        if (seq.size() < 10)
            throw InputError("strange coloring is defined for n >= 10");
        check_permutation(seq);
        return colour_complete(seq, strange_pattern(static_cast<int>(seq.size())));
    }

    void paint_clique(EdgeColoring & col, const PairPattern & pattern, const VertexSequence & seq)
    {
        if (static_cast<int>(seq.size()) != pattern.n())
            throw ContractError("sequence length differs from pattern size");
        for (int i = 1; i <= pattern.n(); ++i)
            for (int j = i + 1; j <= pattern.n(); ++j)
                col.set(seq[i - 1], seq[j - 1], pattern.at(i, j));
    }

    namespace
    {
        // Edge ids around the cycle, validating the template against the host graph.
        vector<int> cycle_edges(const EdgeColoring & col, const CycleTemplate & cycle)
        {
            auto vs = cycle.vertices;
            if (vs.size() > 1 && vs.front() == vs.back())
                vs.pop_back();
            if (vs.size() < 4 || vs.size() % 2 != 0)
                throw InputError("cycle template needs an even number (>= 4) of vertices");
            auto sorted = vs;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                throw InputError("cycle template repeats a vertex");

            vector<int> ids;
            for (size_t i = 0; i < vs.size(); ++i) {
                auto id = col.graph().edge_id(vs[i], vs[(i + 1) % vs.size()]);
                if (! id)
                    throw InputError("cycle template uses a non-edge");
                ids.push_back(*id);
            }
            return ids;
        }
    }

    bool is_alternating_cycle(const EdgeColoring & col, const CycleTemplate & cycle)
    {
        auto ids = cycle_edges(col, cycle);
        for (size_t i = 0; i < ids.size(); ++i) {
            Color c = col.color(ids[i]);
            if (c != red && c != blue)
                return false;
            if (col.color(ids[(i + 1) % ids.size()]) == c)
                return false;
            const auto & e = col.graph().edge(ids[i]);
            Color other = red + blue - c;
            if (col.color_degree(e.u, other) == col.color_degree(e.v, other))
                return false;
        }
        return true;
    }

    EdgeColoring invert_cycle(const EdgeColoring & col, const CycleTemplate & cycle)
    {
        if (! is_alternating_cycle(col, cycle))
            throw ContractError("cycle is not alternating");
        EdgeColoring out = col;
        for (int id : cycle_edges(col, cycle))
            out.flip(id);
        return out;
    }
}
