#pragma once

#include <iosfwd>
#include <string_view>

#include "startorus/graph.hpp"

namespace startorus {

/// Reads a DIMACS `p edge V E` graph (1-based ids, `c` comment lines).
/// Duplicate edges collapse; the declared edge count is informational only.
/// Throws ParseError with the offending line number.
Graph parse_dimacs(std::istream& in);
Graph parse_dimacs(std::string_view text);

/// Emits `p edge V E` followed by one `e u v` line per edge (u < v, 1-based).
void write_dimacs(std::ostream& out, const Graph& g);

} // namespace startorus
