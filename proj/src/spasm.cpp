#include "homlab/spasm.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "homlab/errors.hpp"
#include "homlab/gen.hpp"
#include "homlab/graph6.hpp"
#include "homlab/hom.hpp"
#include "homlab/iso.hpp"
#include "homlab/treewidth.hpp"

namespace homlab {

namespace {

constexpr int kMaxSpasmVertices = 9;

Count block_weight(std::size_t size) {
  // (-1)^(|B|-1) * (|B|-1)!
  Count w = 1;
  for (std::size_t i = 1; i < size; ++i) w *= static_cast<int>(i);
  return (size % 2 == 0) ? -w : w;
}

// Enumerates partitions of V(f) into independent blocks by assigning
// vertices in order; a vertex may join a block only if it has no edge
// into it, which prunes the Bell-number tree early.
template <typename Fn>
void independent_partitions(const Graph& f, std::vector<std::vector<int>>& blocks,
                            int v, Fn&& fn) {
  if (v == f.vertex_count()) {
    fn(blocks);
    return;
  }
  // index-based: recursion below appends and removes blocks, which can
  // reallocate the vector
  std::size_t existing = blocks.size();
  for (std::size_t bi = 0; bi < existing; ++bi) {
    bool independent = true;
    for (int w : blocks[bi])
      if (f.has_edge(v, w)) {
        independent = false;
        break;
      }
    if (!independent) continue;
    blocks[bi].push_back(v);
    independent_partitions(f, blocks, v + 1, fn);
    blocks[bi].pop_back();
  }
  blocks.push_back({v});
  independent_partitions(f, blocks, v + 1, fn);
  blocks.pop_back();
}

}  // namespace

Spasm spasm(const Graph& f) {
  if (f.vertex_count() > kMaxSpasmVertices)
    throw SizeLimitError("spasm: guarded to patterns with <= " +
                         std::to_string(kMaxSpasmVertices) + " vertices");
  Spasm result;
  result.source = f;

  std::vector<std::vector<int>> blocks;
  independent_partitions(f, blocks, 0, [&](const std::vector<std::vector<int>>& bs) {
    Partition p;
    p.blocks = bs;
    QuotientResult q = quotient(f, p);
    // blocks are independent, so the quotient is loop-free by construction
    Count weight = 1;
    for (const auto& b : bs) weight *= block_weight(b.size());

    for (auto& member : result.members) {
      if (member.graph.vertex_count() != q.graph.vertex_count() ||
          member.graph.edge_count() != q.graph.edge_count())
        continue;
      if (is_isomorphic(member.graph, q.graph)) {
        member.partition_count += 1;
        member.signed_weight += weight;
        return;
      }
    }
    SpasmMember member;
    member.graph = q.graph;
    member.partition_count = 1;
    member.signed_weight = weight;
    member.witness = p;
    result.members.push_back(std::move(member));
  });

  for (auto& member : result.members)
    member.treewidth = treewidth_exact(member.graph).width;

  std::sort(result.members.begin(), result.members.end(),
            [](const SpasmMember& a, const SpasmMember& b) {
              if (a.graph.vertex_count() != b.graph.vertex_count())
                return a.graph.vertex_count() > b.graph.vertex_count();
              if (a.graph.edge_count() != b.graph.edge_count())
                return a.graph.edge_count() > b.graph.edge_count();
              return emit_graph6(a.graph) < emit_graph6(b.graph);
            });
  return result;
}

int htw(const Graph& f) {
  int width = -1;
  for (const auto& member : spasm(f).members)
    width = std::max(width, member.treewidth);
  return width;
}

HomBasis sub_basis(const Graph& f) {
  Spasm sp = spasm(f);
  Count aut = aut_count(f);

  HomBasis basis;
  basis.pattern = f;
  for (const auto& member : sp.members) {
    if (member.signed_weight == 0)
      throw Error(
          "sub_basis: zero coefficient computed; contradicts basis "
          "uniqueness, so this is a bug");
    basis.terms.push_back(
        {member.graph, Rational(member.signed_weight, aut)});
  }

  // the pattern itself comes only from the discrete partition
  if (basis.terms.front().graph.vertex_count() != f.vertex_count() ||
      basis.terms.front().coefficient != Rational(1, aut))
    throw Error("sub_basis: leading coefficient is not 1/aut(pattern)");

  // self-check against brute subgraph counts on fixed random targets
  std::mt19937_64 rng(0x5eedba5e);
  for (int trial = 0; trial < 4; ++trial) {
    Graph target = random_graph(5 + trial % 2, 0.5, rng);
    Rational acc = 0;
    for (const auto& term : basis.terms)
      acc += term.coefficient * Rational(hom_count_bruteforce(term.graph, target));
    if (acc != Rational(sub_count_bruteforce(f, target)))
      throw Error("sub_basis: expansion disagrees with brute subgraph count");
  }
  return basis;
}

}  // namespace homlab
