#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "homlab/graph.hpp"

namespace homlab::testing {

// Independent oracle: isomorphism by exhausting all n! vertex bijections.
// Only for n <= 8.
inline std::optional<VertexMap> brute_force_isomorphic(const Graph& g,
                                                       const Graph& h) {
  if (g.vertex_count() != h.vertex_count() ||
      g.edge_count() != h.edge_count())
    return std::nullopt;
  int n = g.vertex_count();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (auto [u, v] : g.edges())
      if (!h.has_edge(perm[u], perm[v])) {
        ok = false;
        break;
      }
    if (ok) {
      VertexMap m;
      m.domain_size = m.codomain_size = n;
      m.image = perm;
      if (is_isomorphism_map(g, h, m)) return m;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace homlab::testing
