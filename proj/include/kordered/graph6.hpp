#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "kordered/graph.hpp"

namespace kord {

// graph6 (McKay). Encoding never emits the optional ">>graph6<<" header; decoding accepts it.
std::string encode_graph6(const Graph& g);
// Throws ParseError carrying the offending byte offset.
Graph decode_graph6(std::string_view text);

// Plain edge list: one "u v" pair per line, 0-indexed. A "# n <count>" line fixes the
// vertex count (otherwise max index + 1); other '#' lines are comments.
std::string write_edge_list(const Graph& g);
Graph read_edge_list(std::istream& in);

} // namespace kord
