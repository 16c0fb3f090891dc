#pragma once

#include <optional>

#include "homlab/graph.hpp"

namespace homlab {

// Exact isomorphism test: returns a witnessing map when the graphs are
// isomorphic, nothing otherwise. Backtracking over an individualization-
// refinement search; color refinement (1-WL) prunes the tree.
std::optional<VertexMap> is_isomorphic(const Graph& g, const Graph& h);

}  // namespace homlab
