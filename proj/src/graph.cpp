#include "homlab/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "homlab/errors.hpp"

namespace homlab {

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n) {
  if (n < 0) throw Error("graph: negative vertex count");
  row_words_ = static_cast<std::size_t>(n) / 64 + 1;
  adj_.resize(n);
  incident_.resize(n);
  adj_bits_.assign(static_cast<std::size_t>(n) * row_words_, 0);

  std::vector<Edge> norm;
  norm.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error("graph: edge endpoint out of range");
    if (u == v) throw Error("graph: self-loop rejected");
    norm.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(norm.begin(), norm.end());
  if (std::adjacent_find(norm.begin(), norm.end()) != norm.end())
    throw Error("graph: duplicate edge rejected");
  edges_ = std::move(norm);

  for (int idx = 0; idx < static_cast<int>(edges_.size()); ++idx) {
    auto [u, v] = edges_[idx];
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    incident_[u].push_back(idx);
    incident_[v].push_back(idx);
    adj_bits_[static_cast<std::size_t>(u) * row_words_ +
              static_cast<std::size_t>(v) / 64] |= 1ull << (v % 64);
    adj_bits_[static_cast<std::size_t>(v) * row_words_ +
              static_cast<std::size_t>(u) / 64] |= 1ull << (u % 64);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  // incident_ is already ascending: edges_ is sorted and indices are
  // appended in increasing order.
}

int Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  Edge e{u, v};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return static_cast<int>(it - edges_.begin());
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(n_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj_[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == n_;
}

VertexMap VertexMap::identity(int n) {
  VertexMap m;
  m.domain_size = m.codomain_size = n;
  m.image.resize(n);
  std::iota(m.image.begin(), m.image.end(), 0);
  return m;
}

bool is_homomorphism(const Graph& f, const Graph& g, const VertexMap& m) {
  if (m.domain_size != f.vertex_count() ||
      m.codomain_size != g.vertex_count() ||
      static_cast<int>(m.image.size()) != f.vertex_count())
    return false;
  for (int x : m.image)
    if (x < 0 || x >= g.vertex_count()) return false;
  for (auto [u, v] : f.edges())
    if (!g.has_edge(m.image[u], m.image[v])) return false;
  return true;
}

bool is_isomorphism_map(const Graph& g, const Graph& h, const VertexMap& m) {
  if (g.vertex_count() != h.vertex_count() ||
      g.edge_count() != h.edge_count())
    return false;
  if (!is_homomorphism(g, h, m)) return false;
  std::vector<char> hit(h.vertex_count(), 0);
  for (int x : m.image) {
    if (hit[x]) return false;
    hit[x] = 1;
  }
  // Bijection mapping edges into edges with equal edge counts is onto the
  // edge set, so non-edges are preserved automatically.
  return true;
}

Partition Partition::discrete(int n) {
  Partition p;
  p.blocks.reserve(n);
  for (int v = 0; v < n; ++v) p.blocks.push_back({v});
  return p;
}

Partition Partition::from_block_ids(const std::vector<int>& block_of) {
  int n = static_cast<int>(block_of.size());
  std::vector<int> first_seen;  // block label -> order of first appearance
  std::vector<int> compact(n, -1);
  Partition p;
  for (int v = 0; v < n; ++v) {
    int lbl = block_of[v];
    int found = -1;
    for (std::size_t i = 0; i < first_seen.size(); ++i)
      if (first_seen[i] == lbl) {
        found = static_cast<int>(i);
        break;
      }
    if (found < 0) {
      found = static_cast<int>(first_seen.size());
      first_seen.push_back(lbl);
      p.blocks.emplace_back();
    }
    p.blocks[found].push_back(v);
  }
  return p;
}

int Partition::ground_size() const {
  int n = 0;
  for (const auto& b : blocks) n += static_cast<int>(b.size());
  return n;
}

std::vector<int> Partition::block_ids() const {
  std::vector<int> ids(ground_size(), -1);
  for (int bi = 0; bi < static_cast<int>(blocks.size()); ++bi)
    for (int v : blocks[bi]) ids[v] = bi;
  return ids;
}

bool Partition::valid_for(int n) const {
  std::vector<char> seen(n, 0);
  int total = 0;
  for (const auto& b : blocks) {
    if (b.empty()) return false;
    for (int v : b) {
      if (v < 0 || v >= n || seen[v]) return false;
      seen[v] = 1;
      ++total;
    }
  }
  return total == n;
}

QuotientResult quotient(const Graph& g, const Partition& p) {
  if (!p.valid_for(g.vertex_count()))
    throw Error("quotient: partition does not cover the vertex set");
  std::vector<int> block_of = p.block_ids();
  QuotientResult result;
  std::set<Graph::Edge> cross;
  for (auto [u, v] : g.edges()) {
    int bu = block_of[u], bv = block_of[v];
    if (bu == bv) {
      if (!result.loop_block) result.loop_block = bu;
      continue;
    }
    cross.insert({std::min(bu, bv), std::max(bu, bv)});
  }
  result.graph = Graph(static_cast<int>(p.blocks.size()),
                       {cross.begin(), cross.end()});
  return result;
}

ComponentSplit components(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = count;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v))
        if (comp[w] < 0) {
          comp[w] = count;
          stack.push_back(w);
        }
    }
    ++count;
  }
  ComponentSplit split;
  split.to_parent.resize(count);
  for (int v = 0; v < n; ++v) split.to_parent[comp[v]].push_back(v);
  for (int c = 0; c < count; ++c)
    split.parts.push_back(induced_subgraph(g, split.to_parent[c]));
  return split;
}

UnionResult disjoint_union(const std::vector<Graph>& gs) {
  UnionResult result;
  int total = 0;
  std::vector<Graph::Edge> edges;
  for (const auto& g : gs) {
    result.offsets.push_back(total);
    for (auto [u, v] : g.edges()) edges.emplace_back(u + total, v + total);
    total += g.vertex_count();
  }
  result.graph = Graph(total, edges);
  return result;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> local(g.vertex_count(), -1);
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
    if (local[vertices[i]] >= 0)
      throw Error("induced_subgraph: repeated vertex");
    local[vertices[i]] = i;
  }
  std::vector<Graph::Edge> edges;
  for (auto [u, v] : g.edges())
    if (local[u] >= 0 && local[v] >= 0) edges.emplace_back(local[u], local[v]);
  return Graph(static_cast<int>(vertices.size()), edges);
}

Graph subgraph(const Graph& g, const std::vector<int>& vertices,
               const std::vector<Graph::Edge>& edges) {
  std::vector<int> local(g.vertex_count(), -1);
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
    if (local[vertices[i]] >= 0) throw Error("subgraph: repeated vertex");
    local[vertices[i]] = i;
  }
  std::vector<Graph::Edge> sub_edges;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count() ||
        !g.has_edge(u, v) || local[u] < 0 || local[v] < 0)
      throw Error("subgraph: edge not present between kept vertices");
    sub_edges.emplace_back(local[u], local[v]);
  }
  return Graph(static_cast<int>(vertices.size()), sub_edges);
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.vertex_count())
    throw Error("relabel: permutation size mismatch");
  std::vector<Graph::Edge> edges;
  edges.reserve(g.edge_count());
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(g.vertex_count(), edges);
}

namespace {

bool embed_rec(const Graph& h, const Graph& g, std::vector<int>& img,
               std::vector<char>& used, const std::vector<int>& order,
               std::size_t depth) {
  if (depth == order.size()) return true;
  int a = order[depth];
  for (int x = 0; x < g.vertex_count(); ++x) {
    if (used[x]) continue;
    bool ok = true;
    for (int b : h.neighbors(a)) {
      if (img[b] >= 0 && !g.has_edge(img[b], x)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    img[a] = x;
    used[x] = 1;
    if (embed_rec(h, g, img, used, order, depth + 1)) return true;
    img[a] = -1;
    used[x] = 0;
  }
  return false;
}

}  // namespace

bool embeds_as_subgraph(const Graph& h, const Graph& g) {
  if (h.vertex_count() > g.vertex_count() || h.edge_count() > g.edge_count())
    return false;
  // assign high-degree vertices first
  std::vector<int> order(h.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return h.degree(a) > h.degree(b); });
  std::vector<int> img(h.vertex_count(), -1);
  std::vector<char> used(g.vertex_count(), 0);
  return embed_rec(h, g, img, used, order, 0);
}

namespace {

bool blocks_connected(const Graph& g, const Partition& p) {
  for (const auto& b : p.blocks) {
    if (b.size() == 1) continue;
    Graph sub = induced_subgraph(g, b);
    if (!sub.is_connected()) return false;
  }
  return true;
}

// Enumerates partitions as restricted growth strings.
template <typename Fn>
bool for_each_partition(int n, Fn&& fn) {
  std::vector<int> rgs(n, 0);
  std::vector<int> maxv(n, 0);
  if (n == 0) return fn(rgs);
  while (true) {
    if (!fn(rgs)) return false;
    int i = n - 1;
    while (i > 0 && rgs[i] == maxv[i - 1] + 1) --i;
    if (i == 0) return true;
    ++rgs[i];
    maxv[i] = std::max(maxv[i - 1], rgs[i]);
    for (int j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      maxv[j] = maxv[i];
    }
  }
}

}  // namespace

bool is_minor(const Graph& h, const Graph& g) {
  constexpr int kMaxHost = 10;
  if (g.vertex_count() > kMaxHost)
    throw SizeLimitError("is_minor: host graph larger than " +
                         std::to_string(kMaxHost) + " vertices");
  if (h.vertex_count() == 0) return true;
  if (h.vertex_count() > g.vertex_count()) return false;

  bool found = false;
  for_each_partition(g.vertex_count(), [&](const std::vector<int>& rgs) {
    Partition p = Partition::from_block_ids(rgs);
    if (static_cast<int>(p.blocks.size()) < h.vertex_count()) return true;
    if (!blocks_connected(g, p)) return true;
    QuotientResult q = quotient(g, p);  // internal edges are contractions
    if (embeds_as_subgraph(h, q.graph)) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace homlab
