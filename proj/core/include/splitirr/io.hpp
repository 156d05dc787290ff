#pragma once

#include <splitirr/graph.hpp>
#include <splitirr/split.hpp>

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>

namespace splitirr
{
    /// Malformed file content; carries the 1-based line number (0 when not line-specific).
    class ParseError : public InputError
    {
    public:
        ParseError(const std::string & source, int line, const std::string & what);
        int line() const { return _line; }

    private:
        int _line;
    };

    /// DIMACS-style graph: optional "c" comment lines, one "p edge <n> <m>" header, then m
    /// lines "e <u> <v>" with 1-based ids.
    Graph parse_graph(std::istream & in, const std::string & source = "<input>");
    Graph read_graph(const std::filesystem::path & path);
    void write_graph(std::ostream & out, const Graph & g, const std::vector<std::string> & comments = {});

    /// Lines "<u> <v> <c>" with 1-based ids and c in {1,2,3}, covering every edge exactly once.
    /// Blank lines and lines starting with '#' are ignored.
    EdgeColoring parse_coloring(std::istream & in, std::shared_ptr<const Graph> g, const std::string & source = "<input>");
    EdgeColoring read_coloring(const std::filesystem::path & path, std::shared_ptr<const Graph> g);
    void write_coloring(std::ostream & out, const EdgeColoring & col);

    /// Graphviz text; clique vertices are annotated with their position and d_i when a
    /// partition of the same graph is supplied.
    std::string to_dot(const EdgeColoring & col, const std::optional<SplitPartition> & partition = std::nullopt);
}
