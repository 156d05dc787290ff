#pragma once

#include <splitirr/graph.hpp>

#include <vector>

namespace splitirr
{
    /// Ordered clique vertices; position p (1-based) holds sequence[p - 1].
    using VertexSequence = std::vector<Vertex>;

    /// Closed walk u1..uk back to u1; k even and at least 4. The closing vertex is not repeated.
    struct CycleTemplate
    {
        std::vector<Vertex> vertices;
    };

    /// Red/blue coloring of K_n indexed by sequence positions 1..n.
    class PairPattern
    {
    public:
        explicit PairPattern(int n);

        int n() const { return _n; }
        Color at(int i, int j) const { return _cells[index(i, j)]; }
        void set(int i, int j, Color c);
        int red_degree(int i) const;

    private:
        int index(int i, int j) const;

        int _n;
        std::vector<std::uint8_t> _cells;
    };

    /// Positional normal coloring: red is complete on the first ceil(n/2) positions,
    /// and position i > ceil(n/2) is red-adjacent to positions 1..n-i+1.
    PairPattern normal_pattern(int n);

    /// Positional strange coloring for n >= 10. Its degree identities are checked on
    /// construction against the labels of strange_reference_sequence.
    PairPattern strange_pattern(int n);

    /// The labelling under which the strange coloring's degree identities are stated:
    /// entry p is the 0-based label (i - 1) of v_i placed at position p + 1.
    VertexSequence strange_reference_sequence(int n);

    struct SequencedColoring
    {
        VertexSequence sequence;
        EdgeColoring coloring;

        Vertex at(int position) const { return sequence.at(position - 1); }
    };

    /// seq must be a permutation of 0..n-1; the result colors K_n on those ids.
    SequencedColoring normal_coloring(const VertexSequence & seq);
    SequencedColoring strange_coloring(const VertexSequence & seq);

    /// Colors every pair of seq (host vertices, pairwise adjacent) by the pattern.
    void paint_clique(EdgeColoring & col, const PairPattern & pattern, const VertexSequence & seq);

    bool is_alternating_cycle(const EdgeColoring & col, const CycleTemplate & cycle);

    /// Swaps red and blue on the cycle's edges. Throws ContractError if the cycle is not alternating.
    EdgeColoring invert_cycle(const EdgeColoring & col, const CycleTemplate & cycle);
}
