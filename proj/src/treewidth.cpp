#include "homlab/treewidth.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <string>

#include "homlab/errors.hpp"

namespace homlab {

namespace {

constexpr int kMaxTreewidthVertices = 15;
constexpr int kMaxGameVertices = 12;

// Q(T, v): vertices outside T+{v} adjacent to the component of v in
// G[T + {v}]. Exactly the neighborhood v would have when eliminated right
// after the set T.
int boundary_size(const Graph& g, std::uint32_t t_mask, int v) {
  std::uint32_t comp = 1u << v;
  std::uint32_t frontier = comp;
  std::uint32_t inside = t_mask | comp;
  while (frontier) {
    std::uint32_t next = 0;
    for (int w = 0; w < g.vertex_count(); ++w) {
      if (!(frontier >> w & 1)) continue;
      for (int x : g.neighbors(w))
        if ((inside >> x & 1) && !(comp >> x & 1)) next |= 1u << x;
    }
    comp |= next;
    frontier = next;
  }
  std::uint32_t outside_nb = 0;
  for (int w = 0; w < g.vertex_count(); ++w) {
    if (!(comp >> w & 1)) continue;
    for (int x : g.neighbors(w))
      if (!(inside >> x & 1)) outside_nb |= 1u << x;
  }
  return __builtin_popcount(outside_nb);
}

TreeDecomposition decomposition_from_order(const Graph& g,
                                           const std::vector<int>& order) {
  int n = g.vertex_count();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;

  // simulate elimination with fill-in, bitmask adjacency
  std::vector<std::uint32_t> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  TreeDecomposition td;
  td.bags.resize(n);
  std::uint32_t remaining = n == 32 ? ~0u : (1u << n) - 1;
  std::vector<std::uint32_t> bag_mask(n);
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    std::uint32_t nb = adj[v] & remaining & ~(1u << v);
    bag_mask[i] = nb | (1u << v);
    for (int a = 0; a < n; ++a)
      if (nb >> a & 1) adj[a] |= nb & ~(1u << a);
    remaining &= ~(1u << v);

    for (int w = 0; w < n; ++w)
      if (bag_mask[i] >> w & 1) td.bags[i].push_back(w);

    if (nb) {
      // attach below the next-eliminated neighbor
      int next_pos = n;
      for (int w = 0; w < n; ++w)
        if ((nb >> w & 1) && pos[w] < next_pos) next_pos = pos[w];
      // neighbors are eliminated later, so next_pos > i and the edge is
      // added once that bag exists
      td.tree.emplace_back(i, next_pos);
    } else if (i + 1 < n) {
      td.tree.emplace_back(i, i + 1);
    }
  }
  td.width = 0;
  for (const auto& bag : td.bags)
    td.width = std::max(td.width, static_cast<int>(bag.size()) - 1);
  return td;
}

}  // namespace

TreewidthResult treewidth_exact(const Graph& g) {
  int n = g.vertex_count();
  if (n > kMaxTreewidthVertices)
    throw SizeLimitError("treewidth_exact: guarded to n <= " +
                         std::to_string(kMaxTreewidthVertices));
  TreewidthResult result;
  if (n == 0) {
    result.width = -1;
    result.decomposition.bags = {{}};
    result.decomposition.width = -1;
    return result;
  }

  std::uint32_t full = (n == 32) ? ~0u : (1u << n) - 1;
  std::vector<int> dp(full + 1, std::numeric_limits<int>::max());
  std::vector<std::int8_t> choice(full + 1, -1);
  dp[0] = -1;
  // subsets in increasing order contain their sub-subsets earlier
  for (std::uint32_t s = 1; s <= full; ++s) {
    for (int v = 0; v < n; ++v) {
      if (!(s >> v & 1)) continue;
      std::uint32_t t = s & ~(1u << v);
      if (dp[t] == std::numeric_limits<int>::max()) continue;
      int w = std::max(dp[t], boundary_size(g, t, v));
      if (w < dp[s]) {
        dp[s] = w;
        choice[s] = static_cast<std::int8_t>(v);
      }
    }
  }
  result.width = dp[full];

  std::vector<int> order(n);
  std::uint32_t s = full;
  for (int i = n - 1; i >= 0; --i) {
    int v = choice[s];
    order[i] = v;
    s &= ~(1u << v);
  }
  result.decomposition = decomposition_from_order(g, order);
  return result;
}

bool validate_decomposition(const Graph& g, const TreeDecomposition& td) {
  int n = g.vertex_count();
  int b = static_cast<int>(td.bags.size());
  if (b == 0) return false;

  for (const auto& bag : td.bags)
    for (int v : bag)
      if (v < 0 || v >= n) return false;

  // tree shape
  if (static_cast<int>(td.tree.size()) != b - 1) return false;
  std::vector<std::vector<int>> tree_adj(b);
  for (auto [i, j] : td.tree) {
    if (i < 0 || j < 0 || i >= b || j >= b || i == j) return false;
    tree_adj[i].push_back(j);
    tree_adj[j].push_back(i);
  }
  {
    std::vector<char> seen(b, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : tree_adj[x])
        if (!seen[y]) {
          seen[y] = 1;
          ++reached;
          stack.push_back(y);
        }
    }
    if (reached != b) return false;  // disconnected or (with b-1 edges) cyclic
  }

  std::vector<std::vector<char>> in_bag(b, std::vector<char>(n, 0));
  for (int i = 0; i < b; ++i)
    for (int v : td.bags[i]) in_bag[i][v] = 1;

  // every vertex covered, and its bags form a connected subtree
  for (int v = 0; v < n; ++v) {
    int total = 0, start = -1;
    for (int i = 0; i < b; ++i)
      if (in_bag[i][v]) {
        ++total;
        start = i;
      }
    if (total == 0) return false;
    std::vector<char> seen(b, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : tree_adj[x])
        if (!seen[y] && in_bag[y][v]) {
          seen[y] = 1;
          ++reached;
          stack.push_back(y);
        }
    }
    if (reached != total) return false;
  }

  // every edge inside some bag
  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (int i = 0; i < b && !covered; ++i)
      covered = in_bag[i][u] && in_bag[i][v];
    if (!covered) return false;
  }

  int width = -1;
  for (const auto& bag : td.bags) {
    std::vector<int> sorted_bag = bag;
    std::sort(sorted_bag.begin(), sorted_bag.end());
    if (std::adjacent_find(sorted_bag.begin(), sorted_bag.end()) !=
        sorted_bag.end())
      return false;
    width = std::max(width, static_cast<int>(bag.size()) - 1);
  }
  return width == td.width;
}

namespace {

// Pursuit-game solver. Positions are (cop multiset, robber component of
// G minus the standing cops); cop-winning positions are the least fixpoint
// of the one-cop-relocation move rule.
class PursuitGame {
 public:
  PursuitGame(const Graph& g, int k) : g_(g), n_(g.vertex_count()), k_(k) {
    comp_id_.resize(std::size_t{1} << n_);
    comp_count_.assign(std::size_t{1} << n_, 0);
    for (std::uint32_t mask = 0; mask < (1u << n_); ++mask)
      compute_components(mask);
    enumerate_multisets({}, 0);
  }

  bool solve() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int m = 0; m < static_cast<int>(multisets_.size()); ++m)
        for (int c = 0; c < comp_count_[multiset_mask_[m]]; ++c)
          if (!win_[m][c] && has_winning_move(m, c)) {
            win_[m][c] = 1;
            changed = true;
          }
    }
    for (int m = 0; m < static_cast<int>(multisets_.size()); ++m) {
      std::uint32_t mask = multiset_mask_[m];
      bool all = true;
      for (int c = 0; c < comp_count_[mask]; ++c)
        if (!win_[m][c]) {
          all = false;
          break;
        }
      if (all) return true;  // covers comp_count == 0: nowhere to stand
    }
    return false;
  }

 private:
  void compute_components(std::uint32_t mask) {
    auto& ids = comp_id_[mask];
    ids.assign(n_, -1);
    int count = 0;
    for (int s = 0; s < n_; ++s) {
      if ((mask >> s & 1) || ids[s] >= 0) continue;
      ids[s] = count;
      std::vector<int> stack{s};
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g_.neighbors(v))
          if (!(mask >> w & 1) && ids[w] < 0) {
            ids[w] = count;
            stack.push_back(w);
          }
      }
      ++count;
    }
    comp_count_[mask] = count;
  }

  void enumerate_multisets(std::vector<std::int8_t> prefix, int min_vertex) {
    if (static_cast<int>(prefix.size()) == k_) {
      std::uint32_t mask = 0;
      for (int v : prefix) mask |= 1u << v;
      int id = static_cast<int>(multisets_.size());
      index_[prefix] = id;
      multisets_.push_back(prefix);
      multiset_mask_.push_back(mask);
      win_.emplace_back(comp_count_[mask], 0);
      return;
    }
    for (int v = min_vertex; v < n_; ++v) {
      prefix.push_back(static_cast<std::int8_t>(v));
      enumerate_multisets(prefix, v);
      prefix.pop_back();
    }
  }

  bool has_winning_move(int m, int c) const {
    const auto& ms = multisets_[m];
    std::uint32_t mask = multiset_mask_[m];
    int rep = -1;  // some vertex of the robber component
    for (int v = 0; v < n_ && rep < 0; ++v)
      if (!(mask >> v & 1) && comp_id_[mask][v] == c) rep = v;

    for (std::size_t i = 0; i < ms.size(); ++i) {
      if (i > 0 && ms[i] == ms[i - 1]) continue;  // same lifted vertex
      int x = ms[i];
      bool lone = std::count(ms.begin(), ms.end(), static_cast<std::int8_t>(x)) == 1;
      std::uint32_t t_mask = lone ? (mask & ~(1u << x)) : mask;
      int flee_comp = comp_id_[t_mask][rep];

      for (int v2 = 0; v2 < n_; ++v2) {
        std::vector<std::int8_t> next = ms;
        next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
        next.insert(std::upper_bound(next.begin(), next.end(),
                                     static_cast<std::int8_t>(v2)),
                    static_cast<std::int8_t>(v2));
        int m2 = index_.at(next);
        std::uint32_t mask2 = multiset_mask_[m2];

        bool escape = false, all_win = true;
        for (int w = 0; w < n_; ++w) {
          if ((t_mask >> w & 1) || comp_id_[t_mask][w] != flee_comp) continue;
          if (mask2 >> w & 1) continue;  // robber cannot stand on a cop
          escape = true;
          if (!win_[m2][comp_id_[mask2][w]]) {
            all_win = false;
            break;
          }
        }
        if (!escape || all_win) return true;
      }
    }
    return false;
  }

  const Graph& g_;
  int n_;
  int k_;
  std::vector<std::vector<std::int8_t>> comp_id_;  // per cop mask
  std::vector<int> comp_count_;
  std::vector<std::vector<std::int8_t>> multisets_;
  std::vector<std::uint32_t> multiset_mask_;
  std::map<std::vector<std::int8_t>, int> index_;
  std::vector<std::vector<char>> win_;
};

}  // namespace

bool cops_win(const Graph& g, int cop_count) {
  int n = g.vertex_count();
  if (n > kMaxGameVertices)
    throw SizeLimitError("cops_win: guarded to n <= " +
                         std::to_string(kMaxGameVertices));
  if (n == 0) return true;
  if (cop_count <= 0) return false;
  if (cop_count >= n) return true;  // occupy every vertex at the start
  PursuitGame game(g, cop_count);
  return game.solve();
}

int min_cops_to_win(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  for (int k = 1;; ++k)
    if (cops_win(g, k)) return k;
}

}  // namespace homlab
