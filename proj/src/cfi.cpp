#include "homlab/cfi.hpp"

#include <algorithm>
#include <string>

#include "homlab/errors.hpp"
#include "homlab/iso.hpp"

namespace homlab {

namespace {

constexpr int kMaxGadgetDegree = 20;
constexpr long long kMaxCfiVertices = 20000;

std::vector<int> normalize_twist(const Graph& base,
                                 const std::vector<int>& twist) {
  std::vector<int> t = twist;
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  for (int v : t)
    if (v < 0 || v >= base.vertex_count())
      throw Error("cfi: twist vertex out of range");
  return t;
}

}  // namespace

CfiVertex CfiGraph::vertex(int dense_id) const {
  int v = static_cast<int>(
      std::upper_bound(gadget_offset.begin(), gadget_offset.end(), dense_id) -
      gadget_offset.begin() - 1);
  return CfiVertex{v, gadget_masks[v][dense_id - gadget_offset[v]]};
}

int CfiGraph::dense_id(int base_vertex, std::uint32_t mask) const {
  const auto& masks = gadget_masks[base_vertex];
  auto it = std::lower_bound(masks.begin(), masks.end(), mask);
  if (it == masks.end() || *it != mask) return -1;
  return gadget_offset[base_vertex] + static_cast<int>(it - masks.begin());
}

CfiGraph cfi_build(const Graph& base, const std::vector<int>& twist) {
  int n = base.vertex_count();
  if (n == 0) throw Error("cfi: empty base graph");
  long long total = 0;
  for (int v = 0; v < n; ++v) {
    int d = base.degree(v);
    if (d == 0)
      throw Error("cfi: base has an isolated vertex (minimum degree 1 required)");
    if (d > kMaxGadgetDegree)
      throw SizeLimitError("cfi: base degree beyond " +
                           std::to_string(kMaxGadgetDegree));
    total += 1ll << (d - 1);
  }
  if (total > kMaxCfiVertices)
    throw SizeLimitError("cfi: construction beyond " +
                         std::to_string(kMaxCfiVertices) + " vertices");

  CfiGraph out;
  out.base = base;
  out.twist = normalize_twist(base, twist);

  std::vector<char> twisted(n, 0);
  for (int v : out.twist) twisted[v] = 1;

  out.gadget_masks.resize(n);
  out.gadget_offset.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) {
    int d = base.degree(v);
    for (std::uint32_t mask = 0; mask < (1u << d); ++mask)
      if ((__builtin_popcount(mask) & 1) == twisted[v])
        out.gadget_masks[v].push_back(mask);  // ascending by construction
    out.gadget_offset[v + 1] =
        out.gadget_offset[v] + static_cast<int>(out.gadget_masks[v].size());
  }

  // bit position of edge e within the incident list of each endpoint
  std::vector<std::pair<int, int>> bit_of(base.edge_count());
  for (int v = 0; v < n; ++v) {
    const auto& inc = base.incident_edges(v);
    for (int j = 0; j < static_cast<int>(inc.size()); ++j) {
      auto [a, b] = base.edges()[inc[j]];
      (v == a ? bit_of[inc[j]].first : bit_of[inc[j]].second) = j;
    }
  }

  std::vector<Graph::Edge> edges;
  for (int e = 0; e < base.edge_count(); ++e) {
    auto [u, v] = base.edges()[e];
    int bu = bit_of[e].first, bv = bit_of[e].second;
    for (int i = 0; i < static_cast<int>(out.gadget_masks[u].size()); ++i) {
      bool in_s = out.gadget_masks[u][i] >> bu & 1;
      for (int j = 0; j < static_cast<int>(out.gadget_masks[v].size()); ++j) {
        bool in_t = out.gadget_masks[v][j] >> bv & 1;
        // edge iff uv lies outside the symmetric difference of S and T
        if (in_s == in_t)
          edges.emplace_back(out.gadget_offset[u] + i,
                             out.gadget_offset[v] + j);
      }
    }
  }
  out.graph = Graph(out.gadget_offset[n], edges);
  return out;
}

std::pair<CfiGraph, CfiGraph> cfi_pair(const Graph& base) {
  if (!base.is_connected()) throw Error("cfi_pair: base must be connected");
  return {cfi_build(base, {}), cfi_build(base, {0})};
}

VertexMap twist_isomorphism(const Graph& base, int u, int v,
                            const std::vector<int>& path) {
  if (path.empty() || path.front() != u || path.back() != v)
    throw Error("twist_isomorphism: path must run from u to v");
  std::vector<char> seen(base.vertex_count(), 0);
  std::vector<int> path_edges;
  for (std::size_t i = 0; i < path.size(); ++i) {
    int w = path[i];
    if (w < 0 || w >= base.vertex_count() || seen[w])
      throw Error("twist_isomorphism: not a simple path");
    seen[w] = 1;
    if (i + 1 < path.size()) {
      int e = base.edge_index(path[i], path[i + 1]);
      if (e < 0) throw Error("twist_isomorphism: path edge missing in base");
      path_edges.push_back(e);
    }
  }

  CfiGraph from = cfi_build(base, {u});
  CfiGraph to = cfi_build(base, {v});

  // toggle mask per base vertex: its incident edges that lie on the path
  std::vector<std::uint32_t> toggle(base.vertex_count(), 0);
  for (int e : path_edges) {
    auto [a, b] = base.edges()[e];
    for (int w : {a, b}) {
      const auto& inc = base.incident_edges(w);
      int bit = static_cast<int>(
          std::lower_bound(inc.begin(), inc.end(), e) - inc.begin());
      toggle[w] |= 1u << bit;
    }
  }

  VertexMap m;
  m.domain_size = from.graph.vertex_count();
  m.codomain_size = to.graph.vertex_count();
  m.image.resize(m.domain_size);
  for (int id = 0; id < m.domain_size; ++id) {
    CfiVertex x = from.vertex(id);
    int target = to.dense_id(x.base_vertex, x.mask ^ toggle[x.base_vertex]);
    if (target < 0)
      throw Error("twist_isomorphism: toggled vertex missing (parity broken)");
    m.image[id] = target;
  }
  if (!is_isomorphism_map(from.graph, to.graph, m))
    throw Error("twist_isomorphism: constructed map failed verification");
  return m;
}

bool cfi_parity_check(const Graph& base, const std::vector<int>& u_set,
                      const std::vector<int>& u_prime_set) {
  if (!base.is_connected())
    throw Error("cfi_parity_check: base must be connected");
  CfiGraph a = cfi_build(base, u_set);
  CfiGraph b = cfi_build(base, u_prime_set);
  return is_isomorphic(a.graph, b.graph).has_value();
}

}  // namespace homlab
