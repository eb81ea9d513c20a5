#pragma once

#include <string>
#include <vector>

#include "prclab/graph.hpp"

namespace prclab {

// Standard graph6 encoding (McKay), single-byte size header (n <= 62).
// Parse errors throw std::invalid_argument with one of the distinct
// messages: "graph6: malformed header", "graph6: truncated bitstream",
// "graph6: out-of-range character", "graph6: trailing data".
Graph parse_graph6(const std::string& text);
std::string write_graph6(const Graph& g);

// Reads every line of a graph6 stream, skipping blank lines and an
// optional ">>graph6<<" header.
std::vector<Graph> parse_graph6_lines(const std::string& text);

struct EdgeListParse {
    Graph graph;
    bool had_duplicates = false;  // duplicates are collapsed, not fatal
};

// Plain text edge list: optional first line "n m", then lines "u v" with
// 0-based ids. Self-loops are an error; duplicate edges collapse with the
// warning flag set.
EdgeListParse parse_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);

}  // namespace prclab
