#include "homlab/iso.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace homlab {

namespace {

// One round of joint color refinement. New colors are interned through a
// shared dictionary so equal signatures get equal ids across both graphs.
// Returns the number of color classes after the round.
int refine_round(const Graph& g, const Graph& h, std::vector<int>& cg,
                 std::vector<int>& ch) {
  std::map<std::vector<int>, int> intern;
  auto relabel_one = [&](const Graph& graph, const std::vector<int>& old,
                         std::vector<int>& sigs_out,
                         std::vector<std::vector<int>>& keys) {
    int n = graph.vertex_count();
    sigs_out.resize(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> sig;
      sig.reserve(graph.degree(v) + 1);
      sig.push_back(old[v]);
      for (int w : graph.neighbors(v)) sig.push_back(old[w]);
      std::sort(sig.begin() + 1, sig.end());
      keys.push_back(std::move(sig));
      sigs_out[v] = static_cast<int>(keys.size()) - 1;
    }
  };
  std::vector<std::vector<int>> keys;
  std::vector<int> gi, hi;
  relabel_one(g, cg, gi, keys);
  relabel_one(h, ch, hi, keys);
  for (const auto& key : keys) intern.emplace(key, 0);
  int next = 0;
  for (auto& [key, id] : intern) id = next++;
  for (int v = 0; v < g.vertex_count(); ++v) cg[v] = intern.at(keys[gi[v]]);
  for (int v = 0; v < h.vertex_count(); ++v) ch[v] = intern.at(keys[hi[v]]);
  return next;
}

// Refines to a stable joint coloring. Returns false as soon as the color
// histograms of the two graphs disagree (certifying non-isomorphism).
bool refine_stable(const Graph& g, const Graph& h, std::vector<int>& cg,
                   std::vector<int>& ch) {
  int classes = 1;
  while (true) {
    int next = refine_round(g, h, cg, ch);
    std::map<int, int> histo_g, histo_h;
    for (int c : cg) ++histo_g[c];
    for (int c : ch) ++histo_h[c];
    if (histo_g != histo_h) return false;
    if (next == classes) return true;
    classes = next;
  }
}

struct IsoSearch {
  const Graph& g;
  const Graph& h;

  std::optional<VertexMap> run(std::vector<int> cg, std::vector<int> ch) {
    if (!refine_stable(g, h, cg, ch)) return std::nullopt;

    // pick the smallest color class with more than one vertex
    std::map<int, std::vector<int>> classes_g;
    for (int v = 0; v < g.vertex_count(); ++v) classes_g[cg[v]].push_back(v);
    int target_color = -1;
    std::size_t best_size = 0;
    for (const auto& [color, members] : classes_g) {
      if (members.size() > 1 &&
          (target_color < 0 || members.size() < best_size)) {
        target_color = color;
        best_size = members.size();
      }
    }

    if (target_color < 0) {
      // discrete coloring: colors define the candidate bijection
      std::map<int, int> where_h;
      for (int v = 0; v < h.vertex_count(); ++v) where_h[ch[v]] = v;
      VertexMap m;
      m.domain_size = g.vertex_count();
      m.codomain_size = h.vertex_count();
      m.image.resize(g.vertex_count());
      for (int v = 0; v < g.vertex_count(); ++v) m.image[v] = where_h.at(cg[v]);
      if (is_isomorphism_map(g, h, m)) return m;
      return std::nullopt;
    }

    int a = classes_g[target_color].front();
    int fresh = g.vertex_count() + h.vertex_count() + 1;
    for (int b = 0; b < h.vertex_count(); ++b) {
      if (ch[b] != target_color) continue;
      std::vector<int> cg2 = cg, ch2 = ch;
      cg2[a] = fresh;
      ch2[b] = fresh;
      if (auto m = run(std::move(cg2), std::move(ch2))) return m;
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<VertexMap> is_isomorphic(const Graph& g, const Graph& h) {
  if (g.vertex_count() != h.vertex_count() ||
      g.edge_count() != h.edge_count())
    return std::nullopt;
  if (g.vertex_count() == 0) {
    VertexMap m;
    return m;
  }
  std::vector<int> cg(g.vertex_count(), 0), ch(h.vertex_count(), 0);
  IsoSearch search{g, h};
  return search.run(std::move(cg), std::move(ch));
}

}  // namespace homlab
