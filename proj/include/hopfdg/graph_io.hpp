#pragma once

// Text format:
//
//   # comment
//   vertices: 0 1 2
//   0 -> 1
//   1 -> 2
//
// The first non-blank, non-comment line lists the vertices; each later line
// holds one edge. '#' starts a comment anywhere on a line.

#include <string>
#include <string_view>

#include "hopfdg/digraph.hpp"

namespace hopfdg {

/// Throws ParseError (1-based line and column) on malformed input.
Digraph parse_graph(std::string_view text);

/// Reads and parses a file; throws ParseError if it cannot be read.
Digraph read_graph_file(const std::string& path);

/// Inverse of parse_graph, in canonical order.
std::string format_graph(const Digraph& g);

}  // namespace hopfdg
