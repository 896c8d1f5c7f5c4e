#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "zfb/graph.hpp"
#include "zfb/orientation.hpp"

namespace zfb {

/// graph6 short form (n <= 62): byte 0 is n+63, then the upper triangle of
/// the adjacency matrix column by column (x01, x02, x12, x03, ...) packed
/// big-endian into 6-bit groups, zero padded, each group emitted as value+63.
/// A leading ">>graph6<<" header is skipped. Longer forms are rejected.
Graph parse_graph6(std::string_view bytes);
std::string write_graph6(const Graph& g);

/// Lines "u v" with nonnegative integers; an optional first line
/// "n <count>" declares the vertex count (otherwise 1 + max index).
/// Blank lines are ignored.
Graph parse_edgelist(std::string_view text);

/// One graph per non-empty line.
std::vector<Graph> parse_graph6_file(std::string_view contents);

/// DOT text for report output: directed edges as "u -> v", unoriented as
/// "u -- v", isolated vertices listed bare.
std::string to_dot(const Orientation& o);

} // namespace zfb
