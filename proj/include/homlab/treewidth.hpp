#pragma once

#include <utility>
#include <vector>

#include "homlab/graph.hpp"

namespace homlab {

// Tree of bags witnessing a width bound for a host graph.
struct TreeDecomposition {
  std::vector<std::vector<int>> bags;
  std::vector<std::pair<int, int>> tree;  // bag-index pairs
  int width = -1;                         // max bag size - 1
};

struct TreewidthResult {
  int width = -1;
  TreeDecomposition decomposition;
};

// Exact treewidth via elimination-ordering DP over vertex subsets, with a
// witnessing decomposition rebuilt from the optimal order. Guarded to
// n <= 15.
TreewidthResult treewidth_exact(const Graph& g);

// Checks the three decomposition axioms plus the declared width. Total.
bool validate_decomposition(const Graph& g, const TreeDecomposition& td);

// Do k cops have a winning strategy in the one-cop-relocates pursuit game
// on g? The robber is abstracted to its connected component relative to
// the standing cops. Guarded to n <= 12.
bool cops_win(const Graph& g, int cop_count);

// Smallest k for which cops_win(g, k) holds.
int min_cops_to_win(const Graph& g);

}  // namespace homlab
