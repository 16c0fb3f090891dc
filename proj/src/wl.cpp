#include "homlab/wl.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>

#include "homlab/errors.hpp"

namespace homlab {

namespace {

constexpr std::uint64_t kMaxTuples = 10'000'000;
constexpr std::uint64_t kMaxWork = 60'000'000;

std::uint64_t checked_tuple_count(const Graph& g, int k) {
  std::uint64_t t = 1;
  for (int i = 0; i < k; ++i) {
    t *= static_cast<std::uint64_t>(g.vertex_count());
    if (t > kMaxTuples) throw SizeLimitError("wl: n^k beyond tuple budget");
  }
  return t;
}

// Joint refinement over one or two graphs. Signatures are interned with
// their full content as the key; ids are only compacted after the round's
// dictionary is complete, so unequal signatures can never share an id.
class JointRefinement {
 public:
  JointRefinement(std::vector<const Graph*> graphs, int k)
      : graphs_(std::move(graphs)), k_(k) {
    if (k < 1) throw Error("wl: dimension must be at least 1");
    std::uint64_t work = 0;
    for (const Graph* g : graphs_) {
      std::uint64_t t = checked_tuple_count(*g, k);
      tuple_counts_.push_back(t);
      work += t * static_cast<std::uint64_t>(g->vertex_count()) *
              static_cast<std::uint64_t>(k);
    }
    if (k >= 2 && work > kMaxWork)
      throw SizeLimitError("wl: refinement work beyond budget");
    colors_.resize(graphs_.size());
    initialize();
    refine_to_stability();
  }

  const std::vector<int>& colors(std::size_t i) const { return colors_[i]; }
  int rounds() const { return rounds_; }
  int color_count() const { return color_count_; }
  const std::vector<int>& class_counts() const { return class_counts_; }

 private:
  using Key = std::vector<int>;

  void initialize() {
    std::map<Key, int> intern;
    std::vector<std::vector<Key>> keys(graphs_.size());
    for (std::size_t gi = 0; gi < graphs_.size(); ++gi) {
      const Graph& g = *graphs_[gi];
      int n = g.vertex_count();
      std::vector<int> tuple(k_, 0);
      for (std::uint64_t t = 0; t < tuple_counts_[gi]; ++t) {
        decode(t, n, tuple);
        Key key;
        key.reserve(k_ * (k_ - 1));
        for (int i = 0; i < k_; ++i)
          for (int j = i + 1; j < k_; ++j) {
            key.push_back(tuple[i] == tuple[j] ? 1 : 0);
            key.push_back(g.has_edge(tuple[i], tuple[j]) ? 1 : 0);
          }
        intern.emplace(key, 0);
        keys[gi].push_back(std::move(key));
      }
    }
    color_count_ = assign_ids(intern);
    for (std::size_t gi = 0; gi < graphs_.size(); ++gi) {
      colors_[gi].resize(tuple_counts_[gi]);
      for (std::uint64_t t = 0; t < tuple_counts_[gi]; ++t)
        colors_[gi][t] = intern.at(keys[gi][t]);
    }
    class_counts_.push_back(color_count_);
  }

  void refine_to_stability() {
    while (true) {
      std::map<Key, int> intern;
      std::vector<std::vector<std::map<Key, int>::iterator>> slots(
          graphs_.size());
      for (std::size_t gi = 0; gi < graphs_.size(); ++gi) {
        const Graph& g = *graphs_[gi];
        int n = g.vertex_count();
        std::vector<int> tuple(k_, 0);
        std::vector<std::uint64_t> strides(k_);
        std::uint64_t s = 1;
        for (int i = k_ - 1; i >= 0; --i) {
          strides[i] = s;
          s *= static_cast<std::uint64_t>(n);
        }
        slots[gi].reserve(tuple_counts_[gi]);
        for (std::uint64_t t = 0; t < tuple_counts_[gi]; ++t) {
          decode(t, n, tuple);
          Key key = signature(gi, g, t, tuple, strides);
          auto [it, inserted] = intern.try_emplace(std::move(key), 0);
          (void)inserted;
          slots[gi].push_back(it);
        }
      }
      int next_count = assign_ids(intern);
      if (next_count == color_count_) return;  // same partition: stable
      for (std::size_t gi = 0; gi < graphs_.size(); ++gi)
        for (std::uint64_t t = 0; t < tuple_counts_[gi]; ++t)
          colors_[gi][t] = slots[gi][t]->second;
      color_count_ = next_count;
      class_counts_.push_back(next_count);
      ++rounds_;
    }
  }

  Key signature(std::size_t gi, const Graph& g, std::uint64_t t,
                const std::vector<int>& tuple,
                const std::vector<std::uint64_t>& strides) const {
    const std::vector<int>& col = colors_[gi];
    int n = g.vertex_count();
    Key key;
    if (k_ == 1) {
      // dimension one aggregates over neighbors only
      key.reserve(1 + g.degree(tuple[0]));
      key.push_back(col[t]);
      for (int w : g.neighbors(tuple[0])) key.push_back(col[w]);
      std::sort(key.begin() + 1, key.end());
      return key;
    }
    key.reserve(1 + static_cast<std::size_t>(n) * k_);
    key.push_back(col[t]);
    std::vector<std::vector<int>> rows;
    rows.reserve(n);
    for (int w = 0; w < n; ++w) {
      std::vector<int> row(k_);
      for (int i = 0; i < k_; ++i) {
        std::uint64_t swapped =
            t - static_cast<std::uint64_t>(tuple[i]) * strides[i] +
            static_cast<std::uint64_t>(w) * strides[i];
        row[i] = col[swapped];
      }
      rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end());
    for (const auto& row : rows) key.insert(key.end(), row.begin(), row.end());
    return key;
  }

  static int assign_ids(std::map<Key, int>& intern) {
    int next = 0;
    for (auto& [key, id] : intern) id = next++;
    return next;
  }

  void decode(std::uint64_t t, int n, std::vector<int>& tuple) const {
    for (int i = k_ - 1; i >= 0; --i) {
      tuple[i] = static_cast<int>(t % static_cast<std::uint64_t>(n));
      t /= static_cast<std::uint64_t>(n);
    }
  }

  std::vector<const Graph*> graphs_;
  int k_;
  std::vector<std::uint64_t> tuple_counts_;
  std::vector<std::vector<int>> colors_;
  int color_count_ = 0;
  int rounds_ = 0;
  std::vector<int> class_counts_;
};

}  // namespace

Coloring wl_stable_coloring(const Graph& g, int k) {
  JointRefinement joint({&g}, k);
  Coloring c;
  c.k = k;
  c.rounds = joint.rounds();
  c.colors = joint.colors(0);
  c.color_count = joint.color_count();
  c.class_counts = joint.class_counts();
  return c;
}

WlComparison wl_compare(const Graph& g, const Graph& h, int k) {
  JointRefinement joint({&g, &h}, k);
  WlComparison cmp;
  cmp.rounds = joint.rounds();
  cmp.joint_color_count = joint.color_count();
  std::map<int, std::int64_t> histo_g, histo_h;
  for (int c : joint.colors(0)) ++histo_g[c];
  for (int c : joint.colors(1)) ++histo_h[c];
  cmp.colors_in_g = histo_g.size();
  cmp.colors_in_h = histo_h.size();
  cmp.distinguished = histo_g != histo_h;
  return cmp;
}

bool wl_distinguishes(const Graph& g, const Graph& h, int k) {
  return wl_compare(g, h, k).distinguished;
}

}  // namespace homlab
