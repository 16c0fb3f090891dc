#pragma once

#include <vector>

#include "homlab/counts.hpp"
#include "homlab/graph.hpp"

namespace homlab {

// One homomorphic image of a pattern: the quotient by some partition into
// independent blocks, with enough provenance to recover the basis
// coefficient without re-matching partitions later.
struct SpasmMember {
  Graph graph;
  int treewidth = -1;
  Count partition_count = 0;  // partitions realizing this image
  // sum over those partitions of prod_B (-1)^(|B|-1) * (|B|-1)!
  Count signed_weight = 0;
  Partition witness;  // one realizing partition
};

struct Spasm {
  Graph source;
  std::vector<SpasmMember> members;  // pairwise non-isomorphic; the
                                     // pattern itself is members.front()
};

// All homomorphic images of f up to isomorphism, by enumerating the
// partitions of V(f) into independent blocks. Guarded to |V(f)| <= 9.
Spasm spasm(const Graph& f);

// Hereditary treewidth: the maximum treewidth over spasm(f).
int htw(const Graph& f);

struct BasisTerm {
  Graph graph;
  Rational coefficient;  // nonzero by construction
};

// The unique expansion sub(f, .) = sum alpha(L) * hom(L, .) over the
// spasm, via Moebius inversion on the partition lattice restricted to
// independent-block partitions. The result is self-checked against brute
// subgraph counts on a fixed battery of targets before being returned.
struct HomBasis {
  Graph pattern;
  std::vector<BasisTerm> terms;
};

HomBasis sub_basis(const Graph& f);

}  // namespace homlab
