#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace homlab {

// Immutable simple undirected graph on vertices 0..n-1.
//
// Edges carry a canonical index 0..m-1, assigned lexicographically on the
// sorted endpoint pair (u,v), u < v. Neighbor lists are sorted; edge
// membership is O(1) via a packed adjacency matrix.
class Graph {
 public:
  using Edge = std::pair<int, int>;  // normalized: first < second

  Graph() = default;
  explicit Graph(int n) : Graph(n, {}) {}
  Graph(int n, const std::vector<Edge>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  bool has_edge(int u, int v) const {
    return u != v && (adj_bits_[static_cast<std::size_t>(u) * row_words_ +
                                static_cast<std::size_t>(v) / 64] >>
                      (v % 64)) &
                         1u;
  }

  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  // Edges in canonical order; position in this list is the edge index.
  const std::vector<Edge>& edges() const { return edges_; }
  // Canonical index of edge uv, or -1 when uv is not an edge.
  int edge_index(int u, int v) const;
  // Indices of edges incident to v, ascending.
  const std::vector<int>& incident_edges(int v) const { return incident_[v]; }

  int max_degree() const;
  bool is_connected() const;

  // Labeled equality (same n, identical edge set).
  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::size_t row_words_ = 1;
  std::vector<std::vector<int>> adj_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_;
  std::vector<std::uint64_t> adj_bits_;
};

// Total map from the vertices of one graph into another. Houses
// homomorphisms, embeddings and isomorphisms alike; which of those a given
// map is gets checked by the predicates below.
struct VertexMap {
  int domain_size = 0;
  int codomain_size = 0;
  std::vector<int> image;  // image[v] for v in 0..domain_size-1

  int operator()(int v) const { return image[v]; }
  static VertexMap identity(int n);
};

bool is_homomorphism(const Graph& f, const Graph& g, const VertexMap& m);
bool is_isomorphism_map(const Graph& g, const Graph& h, const VertexMap& m);

// Partition of {0..n-1} into disjoint nonempty blocks. Canonical form:
// each block sorted, blocks ordered by smallest element.
struct Partition {
  std::vector<std::vector<int>> blocks;

  static Partition discrete(int n);
  // block_of[v] = arbitrary block label per vertex; labels get compacted.
  static Partition from_block_ids(const std::vector<int>& block_of);

  int ground_size() const;
  std::vector<int> block_ids() const;  // inverse of from_block_ids
  bool valid_for(int n) const;
};

// Quotient g/p: one vertex per block, an edge between two blocks iff some
// cross edge exists. A block with an internal edge would force a loop in
// the simple-graph setting; the first such block is reported and the caller
// decides whether that disqualifies the result (spasm) or is expected
// contraction (minors).
struct QuotientResult {
  Graph graph;
  std::optional<int> loop_block;
  bool loop_free() const { return !loop_block.has_value(); }
};

QuotientResult quotient(const Graph& g, const Partition& p);

struct ComponentSplit {
  std::vector<Graph> parts;
  // original vertex id for each part-local vertex
  std::vector<std::vector<int>> to_parent;
};

ComponentSplit components(const Graph& g);

struct UnionResult {
  Graph graph;
  std::vector<int> offsets;  // offsets[i] = first vertex id of summand i
};

UnionResult disjoint_union(const std::vector<Graph>& gs);

// Subgraph of g induced on the given vertices (which get relabeled
// 0..|vertices|-1 in the given order).
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// Arbitrary subgraph: keep the listed vertices (relabeled in order) and
// only the listed edges, all of which must exist in g between kept vertices.
Graph subgraph(const Graph& g, const std::vector<int>& vertices,
               const std::vector<Graph::Edge>& edges);

// Relabel by permutation: vertex v of g becomes perm[v].
Graph relabel(const Graph& g, const std::vector<int>& perm);

// Does h embed into g as a (not necessarily induced) subgraph?
bool embeds_as_subgraph(const Graph& h, const Graph& g);

// Minor test by exhaustion over partitions of V(g) into connected blocks,
// then subgraph embedding into the quotient. Guarded to |V(g)| <= 10.
bool is_minor(const Graph& h, const Graph& g);

}  // namespace homlab
