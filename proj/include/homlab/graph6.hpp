#pragma once

#include <string>
#include <string_view>

#include "homlab/graph.hpp"

namespace homlab {

// graph6 codec, single-byte size form (n <= 62). Bytes are offset by 63;
// the upper triangle is packed column by column, most significant bit
// first, zero-padded to a multiple of six bits.

Graph parse_graph6(std::string_view line);
std::string emit_graph6(const Graph& g);

}  // namespace homlab
