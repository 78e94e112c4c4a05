#pragma once

#include <string_view>

#include "rankbrittle/graph.hpp"

namespace rankbrittle {

/// Graph construction expressions:
///   name:arg                      a named family, e.g. path:4, subdiv_star:3
///   copies:k:<expr>               k disjoint copies
///   complement(<expr>)
///   prod(kind, <expr>, <expr>)    kind is match, antimatch or half
///   blown(kind, <expr>, <expr>, t, a, b, c, d)
/// Whitespace around tokens is ignored. Throws FormatError with the offending offset.
Graph parse_graph_expression(std::string_view text);

}  // namespace rankbrittle
