#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "homlab/graph.hpp"

namespace homlab {

// Vertex (v, S) of a CFI graph: a base vertex together with a subset of
// its incident edges, encoded as a bitmask over the base's incident-edge
// list in ascending canonical edge-index order.
struct CfiVertex {
  int base_vertex = -1;
  std::uint32_t mask = 0;
  bool operator==(const CfiVertex&) const = default;
};

// Result of the CFI construction over a base graph and twist set U:
// vertices are all (v, S) with |S| congruent to |U ∩ {v}| mod 2, and
// (v,S)(u,T) is an edge iff uv is a base edge outside the symmetric
// difference of S and T. Dense ids are sorted by (base vertex, mask).
struct CfiGraph {
  Graph graph;
  Graph base;
  std::vector<int> twist;  // sorted twist set U
  std::vector<std::vector<std::uint32_t>> gadget_masks;  // per base vertex
  std::vector<int> gadget_offset;  // size n+1; dense ids of gadget v are
                                   // [offset[v], offset[v+1])

  int gadget_size(int v) const {
    return gadget_offset[v + 1] - gadget_offset[v];
  }
  CfiVertex vertex(int dense_id) const;
  int dense_id(int base_vertex, std::uint32_t mask) const;  // -1 if absent
};

// Builds CFI(base, twist). The base needs minimum degree 1 (an isolated
// vertex would make the gadget semantics degenerate) and maximum degree 20.
CfiGraph cfi_build(const Graph& base, const std::vector<int>& twist);

// (CFI(base, {}), CFI(base, {0})) for a connected base; all twist choices
// are isomorphic, vertex 0 keeps outputs reproducible.
std::pair<CfiGraph, CfiGraph> cfi_pair(const Graph& base);

// The path-twist isomorphism CFI(base,{u}) -> CFI(base,{v}) mapping (w,S)
// to (w, S xor (path edges incident to w)). The returned map is verified;
// it fixes every gadget off the path and maps each gadget onto itself.
VertexMap twist_isomorphism(const Graph& base, int u, int v,
                            const std::vector<int>& path);

// Are CFI(base,U) and CFI(base,U') isomorphic? (Empirically: iff |U| and
// |U'| have equal parity, for connected bases.)
bool cfi_parity_check(const Graph& base, const std::vector<int>& u_set,
                      const std::vector<int>& u_prime_set);

}  // namespace homlab
