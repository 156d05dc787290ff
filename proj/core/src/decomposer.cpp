#include "repair.hpp"

#include <splitirr/colorings.hpp>
#include <splitirr/decomposer.hpp>
#include <splitirr/errors.hpp>

#include <algorithm>
#include <numeric>
#include <optional>

using std::make_shared;
using std::string;
using std::to_string;
using std::vector;

namespace splitirr
{
    string rule_name(Recipe r)
    {
        switch (r) {
            case Recipe::empty: return "empty";
            case Recipe::not_decomposable: return "non-decomposable";
            case Recipe::monochrome: return "strict-d-sequence";
            case Recipe::clique_three: return "clique-three-coloring";
            case Recipe::heavy: return "normal-split-heavy";
            case Recipe::light: return "strange-split-light";
            case Recipe::pendant_star: return "pendant-star";
            case Recipe::small_sequence: return "small-sequence";
            case Recipe::bistar: return "bistar";
            case Recipe::exact_two:
            case Recipe::exact_three: return "exact-search";
        }
        return "unknown";
    }

    ChiStatus classify_status(int n, const vector<int> & d, bool has_edges)
    {
        if (! has_edges)
            return ChiStatus::chi(0);
        auto d_ = [&](int i) { return i <= n ? d[i - 1] : 0; };
        int sum = std::accumulate(d.begin(), d.end(), 0);
        if ((n == 2 && sum == 0) || (n == 3 && sum == 0) || (n == 2 && d_(1) == 1 && d_(2) == 1))
            return ChiStatus::not_decomposable();
        bool strict = true;
        for (int i = 1; i < n; ++i)
            strict = strict && d_(i) > d_(i + 1);
        if (strict)
            return ChiStatus::chi(1);

        const int f = n / 2;
        if (n >= 10)
            return ChiStatus::chi(d_(1) >= f || d_(2) >= 1 ? 2 : 3);

        bool two = (n >= 3 && sum >= f)
            || (n >= 8 && d_(1) + d_(2) + d_(3) == 3 && d_(2) >= 1)
            || (n == 9 && d_(1) == 1 && d_(2) == 1)
            || (n == 2 && d_(1) == d_(2) && d_(1) >= 2);
        return ChiStatus::chi(two ? 2 : 3);
    }

    namespace
    {
        bool small_sequence_applies(const SplitPartition & p)
        {
            const int n = p.n();
            auto d = [&](int i) { return p.d_at(i); };
            if (n == 4 || n == 5)
                return d(2) == 0 && d(1) >= 2;
            if (n == 6 || n == 7)
                return d(3) == 0 && (d(1) >= 3 || (d(1) == 2 && d(2) >= 1));
            if (n == 9 && d(1) == 1 && d(2) == 1 && d(3) == 0)
                return true;
            if (n == 8 || n == 9)
                return d(4) == 0 && (d(1) >= 4 || (d(1) == 3 && d(2) >= 1) || (d(1) == 2 && d(2) == 2)
                    || (d(1) == 2 && d(2) == 1 && d(3) == 1));
            return false;
        }
    }

    Recipe plan(const SplitPartition & p)
    {
        auto status = classify_status(p.n(), p.d, p.graph->edge_count() > 0);
        if (! status.decomposable)
            return Recipe::not_decomposable;
        const int n = p.n(), f = n / 2;
        switch (status.k) {
            case 0: return Recipe::empty;
            case 1: return Recipe::monochrome;
            case 3:
                if (n >= 4 && p.d_at(1) < f && p.d_at(2) == 0)
                    return Recipe::clique_three;
                return Recipe::exact_three;
        }
        if (n == 2)
            return Recipe::bistar;
        if (p.d_at(f) >= 1)
            return Recipe::heavy;
        if (n >= 10)
            return p.d_at(2) == 0 ? Recipe::pendant_star : Recipe::light;
        return small_sequence_applies(p) ? Recipe::small_sequence : Recipe::exact_two;
    }

    ChiResult classify(const SplitPartition & p)
    {
        ChiResult r;
        r.status = classify_status(p.n(), p.d, p.graph->edge_count() > 0);
        r.rule = rule_name(plan(p));
        return r;
    }

    namespace
    {
        struct Built
        {
            EdgeColoring coloring;
            vector<string> repairs;
        };

        VertexSequence by_labels(const SplitPartition & p, std::initializer_list<int> labels)
        {
            VertexSequence seq;
            for (int i : labels)
                seq.push_back(p.v(i));
            return seq;
        }

        VertexSequence label_range(const SplitPartition & p, int from, int to)
        {
            VertexSequence seq;
            for (int i = from; from <= to ? i <= to : i >= to; i += from <= to ? 1 : -1)
                seq.push_back(p.v(i));
            return seq;
        }

        VertexSequence concat(std::initializer_list<VertexSequence> parts)
        {
            VertexSequence out;
            for (const auto & part : parts)
                out.insert(out.end(), part.begin(), part.end());
            return out;
        }

        EdgeColoring fresh(const SplitPartition & p, int k)
        {
            return EdgeColoring(p.graph, k);
        }

        // Colours every edge between clique vertex x and Y.
        void paint_y_edges(EdgeColoring & col, const SplitPartition & p, Vertex x, Color c)
        {
            for (Vertex y : p.Y)
                if (auto e = p.graph->edge_id(x, y))
                    col.set(*e, c);
        }

        void require(bool ok, const string & what)
        {
            if (! ok)
                throw ContractError(what);
        }

        // When Y hangs off v1 and v2 alone: a normal coloring with those two moved to some
        // positions p1, p2 and each Y-star monochrome. Tries every placement and colour pair.
        std::optional<EdgeColoring> star_placement(const SplitPartition & p, vector<string> & repairs)
        {
            const int n = p.n();
            if (n < 3 || p.d_at(3) != 0)
                return std::nullopt;
            const auto pattern = normal_pattern(n);
            for (int p1 = 0; p1 < n; ++p1)
                for (int p2 = 0; p2 < n; ++p2) {
                    if (p1 == p2)
                        continue;
                    VertexSequence seq(n, -1);
                    seq[p1] = p.v(1);
                    seq[p2] = p.v(2);
                    for (int i = 3, pos = 0; i <= n; ++i, ++pos) {
                        while (seq[pos] != -1)
                            ++pos;
                        seq[pos] = p.v(i);
                    }
                    for (Color c1 : {red, blue})
                        for (Color c2 : {red, blue}) {
                            EdgeColoring col(p.graph, 2);
                            paint_clique(col, pattern, seq);
                            paint_y_edges(col, p, p.v(1), c1);
                            paint_y_edges(col, p, p.v(2), c2);
                            if (detail::conflict_free(col)) {
                                repairs.push_back("star-placement(" + to_string(p1 + 1) + "," + to_string(p2 + 1) + ")");
                                return col;
                            }
                        }
                }
            return std::nullopt;
        }

        // Fallback chain for 2-colorings. The literal recipe has already been applied.
        Built finish_two(const SplitPartition & p, EdgeColoring col, vector<string> repairs)
        {
            if (detail::conflict_free(col))
                return {std::move(col), std::move(repairs)};
            if (detail::repair_by_cycles(col, repairs))
                return {std::move(col), std::move(repairs)};
            if (auto placed = star_placement(p, repairs))
                return {std::move(*placed), std::move(repairs)};
            if (detail::repair_by_local_search(col, repairs))
                return {std::move(col), std::move(repairs)};
            if (p.n() <= 9) {
                if (auto exact = detail::exact_coloring(p.graph, 2)) {
                    repairs.push_back("exact-search");
                    return {std::move(*exact), std::move(repairs)};
                }
            }
            throw ConstructionFailed("2-coloring could not be repaired (n=" + to_string(p.n()) + ")");
        }

        Built build_chi1(const SplitPartition & p)
        {
            require(p.n() >= 2, "monochrome construction needs n >= 2");
            for (int i = 1; i < p.n(); ++i)
                require(p.d_at(i) > p.d_at(i + 1), "monochrome construction needs a strictly decreasing d-sequence");
            auto col = fresh(p, 1);
            for (int e = 0; e < p.graph->edge_count(); ++e)
                col.set(e, red);
            return {std::move(col), {}};
        }

        Built build_three(const SplitPartition & p)
        {
            const int n = p.n(), h = (n + 1) / 2, f = n / 2;
            require(n >= 4 && p.d_at(1) < f && p.d_at(2) == 0, "three-colour construction needs n >= 4, d1 < floor(n/2), d2 = 0");

            auto seq = concat({label_range(p, 2, h), {p.v(1)}, label_range(p, h + 1, n)});
            auto col = fresh(p, 3);
            paint_clique(col, normal_pattern(n), seq);
            paint_y_edges(col, p, p.v(1), green);
            col.set(p.v(1), p.v(h + 1), green);
            if (p.d_at(1) == 0) {
                if (n % 2 == 0)
                    col.set(p.v(1), p.v(h), green);
                else
                    col.set(p.v(h + 1), p.v(h + 2), green);
            }
            return {std::move(col), {}};
        }

        // Normal coloring along seq, Y-edges red on the first h positions and blue after,
        // then the single flip that clears a Y-edge clash at positions h, h+1.
        EdgeColoring paint_heavy(const SplitPartition & p, const VertexSequence & seq)
        {
            const int n = p.n(), h = (n + 1) / 2;
            auto col = fresh(p, 2);
            paint_clique(col, normal_pattern(n), seq);
            for (int i = 0; i < n; ++i)
                paint_y_edges(col, p, seq[i], i < h ? red : blue);

            const Vertex a = seq[h - 1], b = seq[h];
            auto report = verify_decomposition(col);
            for (const auto & c : report.conflicts) {
                Vertex x = c.edge.u, y = c.edge.v;
                if (x != a && x != b)
                    std::swap(x, y);
                if ((x != a && x != b) || std::find(p.Y.begin(), p.Y.end(), y) == p.Y.end())
                    continue;
                col.flip(*p.graph->edge_id(x, y));
                Vertex partner = x == a ? b : a;
                int partner_d = p.graph->degree(partner) - (n - 1);
                if (partner_d == 1)
                    for (auto [z, e] : p.graph->incident(partner))
                        if (std::find(p.X.begin(), p.X.end(), z) == p.X.end())
                            col.set(e, c.color);
                break;
            }
            return col;
        }

        Built build_heavy(const SplitPartition & p)
        {
            const int n = p.n(), h = (n + 1) / 2, f = n / 2;
            require(n >= 3 && p.d_at(f) >= 1, "heavy construction needs n >= 3 and d_floor(n/2) >= 1");

            auto seq = n % 2 == 0
                ? concat({label_range(p, 1, n / 2), label_range(p, n, n / 2 + 1)})
                : concat({label_range(p, h, n), label_range(p, f, 1)});
            auto col = paint_heavy(p, seq);
            vector<string> repairs;
            if (detail::conflict_free(col))
                return {std::move(col), {}};
            {
                auto attempt = col;
                if (detail::repair_by_cycles(attempt, repairs))
                    return {std::move(attempt), std::move(repairs)};
                repairs.clear();
            }

            // The flip can land on the same Y vertex that caused the clash. Moving one pair of
            // clique vertices usually separates them.
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    auto moved = seq;
                    std::swap(moved[i], moved[j]);
                    auto attempt = paint_heavy(p, moved);
                    vector<string> log{"transpose(" + to_string(i + 1) + "," + to_string(j + 1) + ")"};
                    if (detail::conflict_free(attempt) || detail::repair_by_cycles(attempt, log))
                        return {std::move(attempt), std::move(log)};
                }
            return finish_two(p, std::move(col), std::move(repairs));
        }

        Built build_pendant_star(const SplitPartition & p)
        {
            const int n = p.n(), h = (n + 1) / 2;
            auto seq = concat({label_range(p, 2, h), {p.v(1)}, label_range(p, h + 1, n)});
            auto col = fresh(p, 2);
            paint_clique(col, normal_pattern(n), seq);
            paint_y_edges(col, p, p.v(1), n % 2 == 0 ? red : blue);
            return finish_two(p, std::move(col), {});
        }

        // v_k: the unique clique vertex other than v3 joined to v3 in blue.
        std::optional<Vertex> blue_partner_of_v3(const EdgeColoring & col, const SplitPartition & p)
        {
            std::optional<Vertex> found;
            for (int i = 1; i <= p.n(); ++i) {
                if (i == 3 || col.color(p.v(3), p.v(i)) != blue)
                    continue;
                if (found)
                    return std::nullopt;
                found = p.v(i);
            }
            return found;
        }

        Built build_light(const SplitPartition & p)
        {
            const int n = p.n(), f = n / 2;
            require(n >= 10 && p.d_at(f) == 0 && (p.d_at(1) >= f || p.d_at(2) >= 1),
                "light construction needs n >= 10, d_floor(n/2) = 0 and (d1 >= floor(n/2) or d2 >= 1)");
            if (p.d_at(2) == 0)
                return build_pendant_star(p);

            VertexSequence seq;
            for (Vertex label : strange_reference_sequence(n))
                seq.push_back(p.v(label + 1));
            auto col = fresh(p, 2);
            paint_clique(col, strange_pattern(n), seq);
            for (int i = 1; i <= n; ++i)
                paint_y_edges(col, p, p.v(i), i == 2 ? blue : red);

            vector<string> repairs;
            auto v = [&](int i) { return p.v(i); };

            auto red_conflicts = verify_decomposition(col).in_color(red);
            if (red_conflicts.size() == 1) {
                auto e = red_conflicts.front();
                if (e.u == v(1) || e.v == v(1)) {
                    Vertex other = e.u == v(1) ? e.v : e.u;
                    if (other != v(3)) {
                        if (detail::try_invert(col, {v(1), other, v(n - 1), v(f + 1)}))
                            repairs.push_back("C1");
                    }
                    else if (auto vk = blue_partner_of_v3(col, p)) {
                        if (detail::try_invert(col, {v(1), v(3), *vk, v(f + 1)}))
                            repairs.push_back("C2");
                    }
                }
            }

            auto blue_conflicts = verify_decomposition(col).in_color(blue);
            if (blue_conflicts.size() == 1) {
                auto e = blue_conflicts.front();
                if (e.u == v(2) || e.v == v(2)) {
                    Vertex other = e.u == v(2) ? e.v : e.u;
                    if (auto vk = blue_partner_of_v3(col, p))
                        if (detail::try_invert(col, {v(2), other, v(3), *vk, v(f + 1), v(f + 3)}))
                            repairs.push_back("C6");
                }
            }
            return finish_two(p, std::move(col), std::move(repairs));
        }

        Built build_bistar(const SplitPartition & p)
        {
            require(p.n() == 2 && p.d_at(1) == p.d_at(2) && p.d_at(1) >= 2, "bistar construction needs n = 2, d1 = d2 >= 2");
            auto col = fresh(p, 2);
            col.set(p.v(1), p.v(2), red);
            paint_y_edges(col, p, p.v(1), red);
            paint_y_edges(col, p, p.v(2), blue);
            return {std::move(col), {}};
        }

        Built build_small_sequence(const SplitPartition & p)
        {
            const int n = p.n(), h = (n + 1) / 2;
            auto d = [&](int i) { return p.d_at(i); };
            require(small_sequence_applies(p), "no hand-picked sequence covers this d-sequence");

            if (n == 9 && d(1) == 1 && d(2) == 1) {
                // Not a normal coloring; no sequence works here and exhaustive search is slow.
                static constexpr int red_pairs[][2] = {{1, 4}, {1, 6}, {1, 8}, {1, 9}, {2, 3}, {2, 4}, {2, 7}, {2, 9},
                    {3, 4}, {3, 7}, {3, 8}, {3, 9}, {4, 5}, {4, 7}, {4, 8}, {4, 9}, {6, 9}, {8, 9}};
                PairPattern table(9);
                for (auto [i, j] : red_pairs)
                    table.set(i, j, red);
                auto col = fresh(p, 2);
                paint_clique(col, table, label_range(p, 1, 9));
                paint_y_edges(col, p, p.v(1), red);
                paint_y_edges(col, p, p.v(2), blue);
                return finish_two(p, std::move(col), {});
            }

            VertexSequence seq;
            Vertex anchor = -1;     // Y-edges of v1 take the colour of v1-anchor
            bool v2_same = false;   // v2's Y-edges share v1's colour (otherwise the other colour)
            bool v3_colored = false; // v3's Y-edges get the other colour

            if (n == 4 || n == 5) {
                seq = n == 4 ? by_labels(p, {2, 1, 4, 3}) : by_labels(p, {2, 3, 1, 4, 5});
                anchor = p.v(4);
            }
            else if (n == 6 || n == 7) {
                seq = concat({by_labels(p, {2, 3, 4, 1}), label_range(p, 5, n)});
                anchor = p.v(h + 1);
                v2_same = d(1) < 3;
            }
            else if (d(1) >= 4) {
                seq = n == 8 ? by_labels(p, {2, 4, 5, 1, 6, 7, 8, 3}) : by_labels(p, {2, 3, 4, 5, 1, 6, 7, 8, 9});
                anchor = p.v(6);
                v3_colored = true;
            }
            else {
                if (d(1) == 3)
                    seq = n == 8 ? by_labels(p, {2, 4, 5, 1, 6, 7, 8, 3}) : by_labels(p, {3, 4, 5, 6, 1, 7, 8, 9, 2});
                else if (d(2) == 2)
                    seq = n == 8 ? by_labels(p, {4, 2, 5, 1, 6, 7, 8, 3}) : by_labels(p, {3, 4, 5, 6, 1, 7, 8, 2, 9});
                else
                    seq = n == 8 ? by_labels(p, {2, 3, 4, 1, 5, 6, 7, 8}) : by_labels(p, {4, 5, 6, 7, 1, 8, 9, 2, 3});
                anchor = seq[h];
                v2_same = true;
                v3_colored = true;
            }

            auto col = fresh(p, 2);
            paint_clique(col, normal_pattern(n), seq);
            Color main = col.color(p.v(1), anchor), other = red + blue - main;
            paint_y_edges(col, p, p.v(1), main);
            paint_y_edges(col, p, p.v(2), v2_same ? main : other);
            if (v3_colored)
                paint_y_edges(col, p, p.v(3), other);
            return finish_two(p, std::move(col), {});
        }

        Built build_exact(const SplitPartition & p, int k)
        {
            if (k == 2) {
                // Heuristic seed first; finish_two ends in the same exact search.
                VertexSequence seq;
                for (int i = 1; i <= p.n(); ++i)
                    seq.push_back(p.v(i));
                auto col = fresh(p, 2);
                paint_clique(col, normal_pattern(p.n()), seq);
                for (int i = 1; i <= p.n(); ++i)
                    paint_y_edges(col, p, p.v(i), i <= (p.n() + 1) / 2 ? red : blue);
                return finish_two(p, std::move(col), {});
            }
            auto found = detail::exact_coloring(p.graph, k);
            if (! found)
                throw ConstructionFailed("exact search found no " + to_string(k) + "-coloring");
            return {std::move(*found), {}};
        }

        Built build(const SplitPartition & p, Recipe r)
        {
            switch (r) {
                case Recipe::monochrome: return build_chi1(p);
                case Recipe::clique_three: return build_three(p);
                case Recipe::heavy: return build_heavy(p);
                case Recipe::light: return build_light(p);
                case Recipe::pendant_star: return build_pendant_star(p);
                case Recipe::small_sequence: return build_small_sequence(p);
                case Recipe::bistar: return build_bistar(p);
                case Recipe::exact_two: return build_exact(p, 2);
                case Recipe::exact_three: return build_exact(p, 3);
                default: throw ContractError("recipe builds no coloring");
            }
        }

        EdgeColoring verified(Built b, const string & what)
        {
            auto report = verify_decomposition(b.coloring);
            if (! report.clean())
                throw ConstructionFailed(what + " produced " + to_string(report.conflicts.size()) + " conflicting edges");
            return std::move(b.coloring);
        }
    }

    ChiResult decompose(const SplitPartition & p)
    {
        validate_partition(p);
        ChiResult r = classify(p);
        Recipe recipe = plan(p);
        if (recipe == Recipe::empty || recipe == Recipe::not_decomposable)
            return r;

        Built built = build(p, recipe);
        r.repairs = built.repairs;
        auto col = verified(std::move(built), r.rule);
        if (col.colors_used() > r.status.k)
            throw ConstructionFailed(r.rule + " used more colours than classified");
        r.certificate = std::move(col);
        return r;
    }

    GraphDecomposition decompose_graph(const Graph & g)
    {
        auto stripped = strip_isolated(g);
        auto inner = make_shared<const Graph>(stripped.graph);
        GraphDecomposition out;
        out.isolated = stripped.removed;
        out.partition = split_partition(inner);
        out.result = decompose(*out.partition);

        if (out.result.certificate) {
            auto original = make_shared<const Graph>(g);
            EdgeColoring mapped(original, out.result.certificate->k());
            for (int e = 0; e < inner->edge_count(); ++e) {
                const auto & ed = inner->edge(e);
                mapped.set(stripped.original[ed.u], stripped.original[ed.v], out.result.certificate->color(e));
            }
            out.result.certificate = std::move(mapped);
        }
        return out;
    }

    EdgeColoring construct_chi1(const SplitPartition & p)
    {
        return verified(build_chi1(p), "monochrome construction");
    }

    EdgeColoring construct_3coloring(const SplitPartition & p)
    {
        return verified(build_three(p), "three-colour construction");
    }

    EdgeColoring construct_2coloring_heavy(const SplitPartition & p)
    {
        return verified(build_heavy(p), "heavy construction");
    }

    EdgeColoring construct_2coloring_light(const SplitPartition & p)
    {
        return verified(build_light(p), "light construction");
    }

    EdgeColoring construct_small(const SplitPartition & p)
    {
        require(p.n() >= 2 && p.n() <= 9, "small construction needs 2 <= n <= 9");
        Recipe r = plan(p);
        require(r != Recipe::empty && r != Recipe::not_decomposable && r != Recipe::monochrome,
            "small construction needs chi in {2, 3}");
        return verified(build(p, r), rule_name(r));
    }
}
