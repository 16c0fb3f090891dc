#pragma once

#include <cstddef>
#include <vector>

#include "homlab/graph.hpp"

namespace homlab {

// Stable coloring of the k-tuples of a graph's vertices. Tuple (v1,..,vk)
// lives at index v1*n^(k-1) + ... + vk. Color ids are dense and, when two
// graphs are refined jointly, comparable across them: equal ids mean equal
// refinement histories.
struct Coloring {
  int k = 1;
  int rounds = 0;  // first round index whose partition equals the next one
  std::vector<int> colors;
  int color_count = 0;
  // color-class counts after the initial coloring and after each adopted
  // refinement round; strictly increasing
  std::vector<int> class_counts;
};

Coloring wl_stable_coloring(const Graph& g, int k);

struct WlComparison {
  bool distinguished = false;
  int rounds = 0;
  int joint_color_count = 0;
  std::size_t colors_in_g = 0;  // distinct stable colors per graph
  std::size_t colors_in_h = 0;
};

// Joint k-WL refinement of both graphs through one shared signature
// dictionary per round; verdicts compare the stable tuple-color histograms.
WlComparison wl_compare(const Graph& g, const Graph& h, int k);
bool wl_distinguishes(const Graph& g, const Graph& h, int k);

}  // namespace homlab
