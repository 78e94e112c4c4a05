#pragma once

#include <string>
#include <string_view>

#include "rankbrittle/graph.hpp"

namespace rankbrittle {

// graph6, short form only (n <= 62). The size byte is n + 63; the upper triangle
// of the adjacency matrix follows column by column (x(0,1), x(0,2), x(1,2), ...)
// packed six bits per byte, each byte offset by 63, zero-padded.

std::string to_graph6(const Graph& g);

/// Throws FormatError (with byte offset) on malformed input, long-form size
/// prefixes, nonzero padding, or trailing bytes. An optional ">>graph6<<" header
/// and a single trailing newline are accepted.
Graph from_graph6(std::string_view text);

}  // namespace rankbrittle
