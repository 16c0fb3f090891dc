#include "homlab/gen.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "homlab/errors.hpp"
#include "homlab/iso.hpp"

namespace homlab {

Graph complete_graph(int n) {
  std::vector<Graph::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw Error("cycle_graph: need at least 3 vertices");
  std::vector<Graph::Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph path_graph(int n) {
  std::vector<Graph::Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph star_graph(int leaves) {
  std::vector<Graph::Edge> edges;
  for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, edges);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Graph::Edge> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  return Graph(a + b, edges);
}

Graph petersen_graph() {
  std::vector<Graph::Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner star
    edges.emplace_back(i, 5 + i);                // spokes
  }
  return Graph(10, edges);
}

Graph empty_graph(int n) { return Graph(n); }

namespace {

// cheap isomorphism invariant for bucketing
std::string invariant_key(const Graph& g) {
  std::vector<int> degs;
  degs.reserve(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) degs.push_back(g.degree(v));
  std::sort(degs.begin(), degs.end());
  std::vector<int> tri(g.vertex_count(), 0);
  for (auto [u, v] : g.edges())
    for (int w : g.neighbors(u))
      if (w != v && g.has_edge(v, w)) {
        ++tri[u];
        ++tri[v];
      }
  std::sort(tri.begin(), tri.end());
  std::string key = std::to_string(g.vertex_count()) + ";" +
                    std::to_string(g.edge_count()) + ";";
  for (int d : degs) key += std::to_string(d) + ",";
  key += ";";
  for (int t : tri) key += std::to_string(t) + ",";
  return key;
}

}  // namespace

std::vector<Graph> dedup_isomorphic(const std::vector<Graph>& gs) {
  std::map<std::string, std::vector<std::size_t>> buckets;
  std::vector<Graph> out;
  std::vector<std::size_t> kept;
  for (const auto& g : gs) {
    std::string key = invariant_key(g);
    bool fresh = true;
    for (std::size_t idx : buckets[key])
      if (is_isomorphic(g, out[idx])) {
        fresh = false;
        break;
      }
    if (fresh) {
      buckets[key].push_back(out.size());
      out.push_back(g);
    }
  }
  return out;
}

std::vector<Graph> all_graphs(int n) {
  if (n < 0 || n > 7)
    throw SizeLimitError("all_graphs: guarded to n <= 7");
  std::vector<Graph::Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<Graph> raw;
  for (std::uint64_t mask = 0; mask < (1ull << pairs.size()); ++mask) {
    std::vector<Graph::Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) edges.push_back(pairs[i]);
    raw.emplace_back(n, edges);
  }
  return dedup_isomorphic(raw);
}

std::vector<Graph> all_connected_graphs(int n) {
  std::vector<Graph> out;
  for (const auto& g : all_graphs(n))
    if (g.is_connected()) out.push_back(g);
  return out;
}

std::vector<Graph> all_minors(const Graph& g) {
  if (g.vertex_count() > 6)
    throw SizeLimitError("all_minors: guarded to hosts with <= 6 vertices");
  std::vector<Graph> raw;
  int n = g.vertex_count();
  for (std::uint32_t wmask = 1; wmask < (1u << n); ++wmask) {
    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
      if (wmask >> v & 1) verts.push_back(v);
    Graph sub = induced_subgraph(g, verts);

    std::vector<std::vector<int>> blocks;
    auto rec = [&](auto&& self, int v) -> void {
      if (v == sub.vertex_count()) {
        for (const auto& b : blocks)
          if (b.size() > 1 && !induced_subgraph(sub, b).is_connected()) return;
        Partition p;
        p.blocks = blocks;
        Graph q = quotient(sub, p).graph;  // contractions drop internal edges
        for (std::uint32_t emask = 0; emask < (1u << q.edge_count());
             ++emask) {
          std::vector<Graph::Edge> edges;
          for (int e = 0; e < q.edge_count(); ++e)
            if (emask >> e & 1) edges.push_back(q.edges()[e]);
          raw.emplace_back(q.vertex_count(), edges);
        }
        return;
      }
      std::size_t existing = blocks.size();
      for (std::size_t bi = 0; bi < existing; ++bi) {
        blocks[bi].push_back(v);
        self(self, v + 1);
        blocks[bi].pop_back();
      }
      blocks.push_back({v});
      self(self, v + 1);
      blocks.pop_back();
    };
    rec(rec, 0);
  }
  return dedup_isomorphic(raw);
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Graph::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Graph g = random_graph(n, p, rng);
    if (g.is_connected()) return g;
  }
  throw Error("random_connected_graph: gave up, p too small");
}

}  // namespace homlab
