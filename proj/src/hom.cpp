#include "homlab/hom.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "homlab/errors.hpp"

namespace homlab {

namespace {

constexpr double kMaxSearchSpace = 1e9;

void check_search_space(const Graph& f, const Graph& g) {
  if (f.vertex_count() == 0 || g.vertex_count() <= 1) return;
  double space = static_cast<double>(f.vertex_count()) *
                 std::log(static_cast<double>(g.vertex_count()));
  if (space > std::log(kMaxSearchSpace))
    throw SizeLimitError("hom: |V(g)|^|V(f)| beyond the 1e9 search guard");
}

// injective enumeration is bounded by the falling factorial, not n^k
void check_injective_space(const Graph& f, const Graph& g) {
  double space = 1;
  for (int i = 0; i < f.vertex_count(); ++i)
    space *= static_cast<double>(g.vertex_count() - i);
  if (space > kMaxSearchSpace)
    throw SizeLimitError("inj: embedding space beyond the 1e9 search guard");
}

// Pattern vertices ordered so each one (after the first of its component)
// has an already-placed neighbor; that neighbor's image prunes candidates.
std::vector<int> connected_order(const Graph& f) {
  int n = f.vertex_count();
  std::vector<int> order;
  std::vector<char> placed(n, 0);
  order.reserve(n);
  while (static_cast<int>(order.size()) < n) {
    int start = -1, best_deg = -1;
    for (int v = 0; v < n; ++v)
      if (!placed[v] && f.degree(v) > best_deg) {
        start = v;
        best_deg = f.degree(v);
      }
    placed[start] = 1;
    order.push_back(start);
    std::size_t frontier = order.size() - 1;
    while (frontier < order.size()) {
      for (int w : f.neighbors(order[frontier]))
        if (!placed[w]) {
          placed[w] = 1;
          order.push_back(w);
        }
      ++frontier;
    }
  }
  return order;
}

struct MapEnumerator {
  const Graph& f;
  const Graph& g;
  bool injective;
  Budget* budget;
  std::vector<int> order;
  std::vector<std::vector<int>> placed_neighbors;  // per order position
  std::vector<int> image;
  std::vector<char> used;

  MapEnumerator(const Graph& f_in, const Graph& g_in, bool inj, Budget* b)
      : f(f_in), g(g_in), injective(inj), budget(b), order(connected_order(f)),
        image(f.vertex_count(), -1), used(g.vertex_count(), 0) {
    placed_neighbors.resize(order.size());
    std::vector<int> pos(f.vertex_count());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < order.size(); ++i)
      for (int w : f.neighbors(order[i]))
        if (pos[w] < static_cast<int>(i)) placed_neighbors[i].push_back(w);
  }

  // visit(image) is called once per complete map
  template <typename Visit>
  void run(std::size_t depth, Visit&& visit) {
    if (depth == order.size()) {
      visit(image);
      return;
    }
    int a = order[depth];
    const bool anchored = !placed_neighbors[depth].empty();
    const std::vector<int>& candidates =
        anchored ? g.neighbors(image[placed_neighbors[depth].front()])
                 : all_of_g();
    for (int x : candidates) {
      if (budget) budget->charge_or_throw();
      if (injective && used[x]) continue;
      bool ok = true;
      for (int b : placed_neighbors[depth])
        if (!g.has_edge(image[b], x)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      image[a] = x;
      if (injective) used[x] = 1;
      run(depth + 1, visit);
      if (injective) used[x] = 0;
      image[a] = -1;
    }
  }

  const std::vector<int>& all_of_g() {
    if (all_.empty() && g.vertex_count() > 0) {
      all_.resize(g.vertex_count());
      std::iota(all_.begin(), all_.end(), 0);
    }
    return all_;
  }

  std::vector<int> all_;
};

}  // namespace

Count hom_count_bruteforce(const Graph& f, const Graph& g, Budget* budget) {
  if (f.vertex_count() == 0) return 1;
  if (g.vertex_count() == 0) return 0;
  check_search_space(f, g);
  Count total = 0;
  MapEnumerator e(f, g, /*injective=*/false, budget);
  e.run(0, [&](const std::vector<int>&) { ++total; });
  return total;
}

Count inj_count(const Graph& f, const Graph& g, Budget* budget) {
  if (f.vertex_count() == 0) return 1;
  if (f.vertex_count() > g.vertex_count()) return 0;
  check_injective_space(f, g);
  Count total = 0;
  MapEnumerator e(f, g, /*injective=*/true, budget);
  e.run(0, [&](const std::vector<int>&) { ++total; });
  return total;
}

Count sub_count_bruteforce(const Graph& f, const Graph& g, Budget* budget) {
  if (f.vertex_count() == 0) return 1;
  if (f.vertex_count() > g.vertex_count()) return 0;
  check_injective_space(f, g);
  // an image is (vertex set, edge set); distinct images = subgraphs
  std::set<std::pair<std::vector<int>, std::vector<Graph::Edge>>> images;
  MapEnumerator e(f, g, /*injective=*/true, budget);
  e.run(0, [&](const std::vector<int>& img) {
    std::vector<int> verts(img);
    std::sort(verts.begin(), verts.end());
    std::vector<Graph::Edge> edges;
    edges.reserve(f.edge_count());
    for (auto [u, v] : f.edges()) {
      int a = img[u], b = img[v];
      edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges.begin(), edges.end());
    images.emplace(std::move(verts), std::move(edges));
  });
  return Count(images.size());
}

Count aut_count(const Graph& g, Budget* budget) {
  return inj_count(g, g, budget);
}

namespace {

constexpr std::uint64_t kMaxTableEntries = 4'000'000;

enum class NodeKind { Leaf, Introduce, Forget, Join };

struct NiceNode {
  NodeKind kind;
  std::vector<int> bag;  // sorted
  int child = -1;
  int child2 = -1;
  int vertex = -1;  // introduced / forgotten
};

// Builds a nice decomposition (leaf / introduce / forget / join) from any
// valid decomposition, rooted at bag 0. Returns the index of the root
// node whose bag is empty.
class NiceBuilder {
 public:
  NiceBuilder(const TreeDecomposition& td) : td_(td) {
    adj_.resize(td.bags.size());
    for (auto [i, j] : td.tree) {
      adj_[i].push_back(j);
      adj_[j].push_back(i);
    }
  }

  std::vector<NiceNode> build() {
    int top = visit(0, -1);
    // forget the root bag down to the empty bag
    std::vector<int> bag = nodes_[top].bag;
    while (!bag.empty()) {
      int v = bag.back();
      bag.pop_back();
      top = add_node({NodeKind::Forget, bag, top, -1, v});
    }
    root_ = top;
    return std::move(nodes_);
  }

  int root() const { return root_; }

 private:
  int add_node(NiceNode n) {
    nodes_.push_back(std::move(n));
    return static_cast<int>(nodes_.size()) - 1;
  }

  // chain from a child-table over `from` to a table over `to`
  int chain(int node, std::vector<int> from, const std::vector<int>& to) {
    for (int v : std::vector<int>(from)) {
      if (!std::binary_search(to.begin(), to.end(), v)) {
        from.erase(std::find(from.begin(), from.end(), v));
        node = add_node({NodeKind::Forget, from, node, -1, v});
      }
    }
    for (int v : to) {
      if (!std::binary_search(from.begin(), from.end(), v)) {
        from.insert(std::upper_bound(from.begin(), from.end(), v), v);
        node = add_node({NodeKind::Introduce, from, node, -1, v});
      }
    }
    return node;
  }

  int leaf_chain(const std::vector<int>& bag) {
    int node = add_node({NodeKind::Leaf, {}, -1, -1, -1});
    return chain(node, {}, bag);
  }

  int visit(int bag_index, int parent) {
    std::vector<int> bag = td_.bags[bag_index];
    std::sort(bag.begin(), bag.end());
    std::vector<int> pieces;
    for (int next : adj_[bag_index]) {
      if (next == parent) continue;
      int sub = visit(next, bag_index);
      std::vector<int> child_bag = td_.bags[next];
      std::sort(child_bag.begin(), child_bag.end());
      pieces.push_back(chain(sub, child_bag, bag));
    }
    if (pieces.empty()) return leaf_chain(bag);
    int acc = pieces[0];
    for (std::size_t i = 1; i < pieces.size(); ++i)
      acc = add_node({NodeKind::Join, bag, acc, pieces[i], -1});
    return acc;
  }

  const TreeDecomposition& td_;
  std::vector<std::vector<int>> adj_;
  std::vector<NiceNode> nodes_;
  int root_ = -1;
};

std::uint64_t table_size(int n_g, std::size_t bag_size) {
  std::uint64_t s = 1;
  for (std::size_t i = 0; i < bag_size; ++i) {
    s *= static_cast<std::uint64_t>(n_g);
    if (s > kMaxTableEntries)
      throw SizeLimitError("hom_count_td: DP table beyond entry budget");
  }
  return s;
}

}  // namespace

Count hom_count_td(const Graph& f, const TreeDecomposition& td,
                   const Graph& g) {
  if (!validate_decomposition(f, td))
    throw Error("hom_count_td: decomposition does not validate for the pattern");
  if (f.vertex_count() == 0) return 1;
  if (g.vertex_count() == 0) return 0;
  int n_g = g.vertex_count();

  NiceBuilder builder(td);
  std::vector<NiceNode> nodes = builder.build();
  // nodes are created children-first, so increasing index is a valid
  // evaluation order; the last node has the empty bag
  std::vector<std::vector<Count>> tables(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const NiceNode& node = nodes[i];
    switch (node.kind) {
      case NodeKind::Leaf:
        tables[i] = {Count(1)};
        break;
      case NodeKind::Introduce: {
        const auto& child_table = tables[node.child];
        const std::vector<int>& bag = node.bag;
        std::size_t p = static_cast<std::size_t>(
            std::lower_bound(bag.begin(), bag.end(), node.vertex) -
            bag.begin());
        std::uint64_t lo_radix = 1;
        for (std::size_t j = 0; j < p; ++j) lo_radix *= n_g;
        std::vector<Count> table(table_size(n_g, bag.size()), Count(0));
        // edges from the introduced vertex to the rest of the bag
        std::vector<std::pair<std::size_t, int>> constraints;
        for (std::size_t j = 0; j < bag.size(); ++j)
          if (bag[j] != node.vertex && f.has_edge(bag[j], node.vertex))
            constraints.emplace_back(j, bag[j]);
        std::vector<int> assign(bag.size(), 0);
        for (std::uint64_t child_idx = 0; child_idx < child_table.size();
             ++child_idx) {
          if (child_table[child_idx] == 0) continue;
          std::uint64_t rest = child_idx;
          for (std::size_t j = 0; j < bag.size(); ++j) {
            if (j == p) continue;
            assign[j] = static_cast<int>(rest % n_g);
            rest /= n_g;
          }
          std::uint64_t lo = child_idx % lo_radix;
          std::uint64_t hi = child_idx / lo_radix;
          for (int x = 0; x < n_g; ++x) {
            bool ok = true;
            for (auto [j, u] : constraints) {
              (void)u;
              if (!g.has_edge(assign[j], x)) {
                ok = false;
                break;
              }
            }
            if (!ok) continue;
            std::uint64_t idx =
                lo + static_cast<std::uint64_t>(x) * lo_radix +
                hi * lo_radix * static_cast<std::uint64_t>(n_g);
            table[idx] += child_table[child_idx];
          }
        }
        tables[i] = std::move(table);
        break;
      }
      case NodeKind::Forget: {
        const auto& child_table = tables[node.child];
        const NiceNode& child_node = nodes[node.child];
        const std::vector<int>& child_bag = child_node.bag;
        std::size_t p = static_cast<std::size_t>(
            std::lower_bound(child_bag.begin(), child_bag.end(), node.vertex) -
            child_bag.begin());
        std::uint64_t lo_radix = 1;
        for (std::size_t j = 0; j < p; ++j) lo_radix *= n_g;
        std::vector<Count> table(table_size(n_g, node.bag.size()), Count(0));
        for (std::uint64_t child_idx = 0; child_idx < child_table.size();
             ++child_idx) {
          if (child_table[child_idx] == 0) continue;
          std::uint64_t lo = child_idx % lo_radix;
          std::uint64_t hi = child_idx / (lo_radix * n_g);
          table[lo + hi * lo_radix] += child_table[child_idx];
        }
        tables[i] = std::move(table);
        break;
      }
      case NodeKind::Join: {
        const auto& left = tables[node.child];
        const auto& right = tables[node.child2];
        std::vector<Count> table(left.size(), Count(0));
        for (std::uint64_t idx = 0; idx < left.size(); ++idx)
          if (left[idx] != 0 && right[idx] != 0)
            table[idx] = left[idx] * right[idx];
        tables[i] = std::move(table);
        break;
      }
    }
    // free child tables as soon as they are consumed
    if (node.child >= 0) tables[node.child].clear();
    if (node.child2 >= 0) tables[node.child2].clear();
  }
  return tables.back().at(0);
}

Count hom_count(const Graph& f, const Graph& g, Budget* budget) {
  if (f.vertex_count() > 0 && f.vertex_count() <= 12 &&
      g.vertex_count() > 1) {
    TreewidthResult tw = treewidth_exact(f);
    double entries = (tw.width + 1) * std::log(double(g.vertex_count()));
    if (entries <= std::log(double(kMaxTableEntries)))
      return hom_count_td(f, tw.decomposition, g);
  }
  return hom_count_bruteforce(f, g, budget);
}

}  // namespace homlab
