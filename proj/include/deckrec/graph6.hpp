#pragma once

#include <string>
#include <string_view>

#include "deckrec/graph.hpp"

namespace deckrec {

// Short-form graph6 (n <= 62): one size byte chr(n+63), then the upper
// triangle in column-major order ((0,1),(0,2),(1,2),(0,3),...) packed
// big-endian into 6-bit groups, each emitted as chr(group+63), with zero
// padding bits in the final group.
std::string to_graph6(const Graph& g);

// Strict inverse: rejects wrong length, bytes outside [63,126], long-form
// headers, and nonzero padding bits.
Graph parse_graph6(std::string_view text);

} // namespace deckrec
