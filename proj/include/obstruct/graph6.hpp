#pragma once

#include <obstruct/graph.hpp>

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace obstruct {

/// Standard graph6 encoding: order prefix, then the upper triangle in
/// column order (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed into 6-bit
/// chunks offset by 63. No trailing newline.
std::string graph6_encode(const Graph& g);

/// Decodes one graph6 line. A leading ">>graph6<<" header and a trailing
/// newline are tolerated. Throws ParseError with the offending byte offset.
Graph graph6_decode(std::string_view line);

/// Reads every non-empty line of a graph6 stream.
std::vector<Graph> read_graph6(std::istream& in);

} // namespace obstruct
