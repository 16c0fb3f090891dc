#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "homlab/cfi.hpp"
#include "homlab/errors.hpp"
#include "homlab/gen.hpp"
#include "homlab/iso.hpp"
#include "test_util.hpp"

using namespace homlab;

namespace {

// every emitted edge must join adjacent gadgets and agree on the shared
// base edge; builder self-audit
void audit_edge_rule(const CfiGraph& cfi) {
  for (auto [x, y] : cfi.graph.edges()) {
    CfiVertex a = cfi.vertex(x);
    CfiVertex b = cfi.vertex(y);
    int e = cfi.base.edge_index(a.base_vertex, b.base_vertex);
    REQUIRE(e >= 0);
    const auto& inc_a = cfi.base.incident_edges(a.base_vertex);
    const auto& inc_b = cfi.base.incident_edges(b.base_vertex);
    int bit_a = static_cast<int>(
        std::lower_bound(inc_a.begin(), inc_a.end(), e) - inc_a.begin());
    int bit_b = static_cast<int>(
        std::lower_bound(inc_b.begin(), inc_b.end(), e) - inc_b.begin());
    CHECK((a.mask >> bit_a & 1) == (b.mask >> bit_b & 1));
  }
}

}  // namespace

TEST_CASE("triangle instances") {
  CfiGraph untwisted = cfi_build(complete_graph(3), {});
  CHECK(untwisted.graph.vertex_count() == 6);
  CHECK(untwisted.graph.edge_count() == 6);
  Graph two_k3 = disjoint_union({complete_graph(3), complete_graph(3)}).graph;
  CHECK(is_isomorphic(untwisted.graph, two_k3).has_value());

  CfiGraph twisted = cfi_build(complete_graph(3), {0});
  CHECK(is_isomorphic(twisted.graph, cycle_graph(6)).has_value());
}

TEST_CASE("K4 instance is the 16-vertex 6-regular pair") {
  CfiGraph untwisted = cfi_build(complete_graph(4), {});
  CHECK(untwisted.graph.vertex_count() == 16);
  CHECK(untwisted.graph.edge_count() == 48);
  for (int v = 0; v < 16; ++v) CHECK(untwisted.graph.degree(v) == 6);
  auto [a, b] = cfi_pair(complete_graph(4));
  CHECK_FALSE(is_isomorphic(a.graph, b.graph).has_value());
}

TEST_CASE("single edge base") {
  auto [untwisted, twisted] = cfi_pair(complete_graph(2));
  CHECK(is_isomorphic(untwisted.graph, complete_graph(2)).has_value());
  CHECK(twisted.graph.vertex_count() == 2);
  CHECK(twisted.graph.edge_count() == 0);
}

TEST_CASE("gadget sizes and dense labeling") {
  std::vector<Graph> bases = {complete_graph(3), complete_graph(4),
                              path_graph(4),     star_graph(3),
                              cycle_graph(5),    complete_bipartite(2, 3)};
  for (const Graph& base : bases) {
    for (const std::vector<int>& twist :
         {std::vector<int>{}, std::vector<int>{0}}) {
      CfiGraph cfi = cfi_build(base, twist);
      int expected_total = 0;
      for (int v = 0; v < base.vertex_count(); ++v) {
        CHECK(cfi.gadget_size(v) == 1 << (base.degree(v) - 1));
        expected_total += 1 << (base.degree(v) - 1);
      }
      CHECK(cfi.graph.vertex_count() == expected_total);
      audit_edge_rule(cfi);
      // vertex <-> dense id round trip
      for (int id = 0; id < cfi.graph.vertex_count(); ++id) {
        CfiVertex x = cfi.vertex(id);
        CHECK(cfi.dense_id(x.base_vertex, x.mask) == id);
      }
    }
  }
}

TEST_CASE("per-edge partner counts") {
  // for deg(u) >= 2 every (v,S) has 2^(deg(u)-2) partners in gadget u per
  // base edge uv; for deg(u) = 1 it has one partner when the edge
  // membership in S matches the forced singleton gadget, none otherwise
  std::vector<Graph> bases = {complete_graph(2), path_graph(3), path_graph(4),
                              star_graph(3),     complete_graph(4),
                              cycle_graph(4)};
  for (const Graph& base : bases) {
    for (const std::vector<int>& twist :
         {std::vector<int>{}, std::vector<int>{0}, std::vector<int>{0, 1}}) {
      CfiGraph cfi = cfi_build(base, twist);
      std::vector<char> twisted(base.vertex_count(), 0);
      for (int t : cfi.twist) twisted[t] = 1;
      for (int id = 0; id < cfi.graph.vertex_count(); ++id) {
        CfiVertex x = cfi.vertex(id);
        int v = x.base_vertex;
        const auto& inc_v = cfi.base.incident_edges(v);
        for (int e : inc_v) {
          auto [p, q] = base.edges()[e];
          int u = p == v ? q : p;
          int partners = 0;
          for (int w : cfi.graph.neighbors(id))
            if (cfi.vertex(w).base_vertex == u) ++partners;
          int bit_v = static_cast<int>(
              std::lower_bound(inc_v.begin(), inc_v.end(), e) - inc_v.begin());
          bool edge_in_s = x.mask >> bit_v & 1;
          if (base.degree(u) >= 2) {
            CHECK(partners == 1 << (base.degree(u) - 2));
          } else {
            CHECK(partners == (edge_in_s == (twisted[u] == 1) ? 1 : 0));
          }
        }
      }
    }
  }
}

TEST_CASE("parity rule, exhaustive over small bases") {
  for (int n = 2; n <= 4; ++n) {
    for (const Graph& base : all_connected_graphs(n)) {
      for (std::uint32_t i = 0; i < (1u << n); ++i) {
        for (std::uint32_t j = i; j < (1u << n); ++j) {
          std::vector<int> u, u2;
          for (int v = 0; v < n; ++v) {
            if (i >> v & 1) u.push_back(v);
            if (j >> v & 1) u2.push_back(v);
          }
          bool expect = (u.size() + u2.size()) % 2 == 0;
          CHECK(cfi_parity_check(base, u, u2) == expect);
        }
      }
    }
  }
}

TEST_CASE("twist along a path") {
  // identity when the path is a single vertex
  VertexMap trivial = twist_isomorphism(complete_graph(3), 0, 0, {0});
  for (int i = 0; i < trivial.domain_size; ++i) CHECK(trivial(i) == i);

  // adjacent twist on C4 toggles exactly the shared edge bit
  Graph c4 = cycle_graph(4);
  VertexMap step = twist_isomorphism(c4, 0, 1, {0, 1});
  CfiGraph from = cfi_build(c4, {0});
  CfiGraph to = cfi_build(c4, {1});
  int e01 = c4.edge_index(0, 1);
  for (int id = 0; id < from.graph.vertex_count(); ++id) {
    CfiVertex x = from.vertex(id);
    CfiVertex y = to.vertex(step(id));
    CHECK(y.base_vertex == x.base_vertex);
    if (x.base_vertex == 0 || x.base_vertex == 1) {
      const auto& inc = c4.incident_edges(x.base_vertex);
      int bit = static_cast<int>(
          std::lower_bound(inc.begin(), inc.end(), e01) - inc.begin());
      CHECK((x.mask ^ y.mask) == (1u << bit));
    } else {
      CHECK(x.mask == y.mask);
    }
  }

  // composing with the reverse path gives the identity
  std::mt19937_64 rng(89);
  for (const Graph& base : {complete_graph(4), cycle_graph(5)}) {
    (void)rng;
    VertexMap fwd = twist_isomorphism(base, 0, 2, {0, 1, 2});
    VertexMap back = twist_isomorphism(base, 2, 0, {2, 1, 0});
    for (int id = 0; id < fwd.domain_size; ++id) CHECK(back(fwd(id)) == id);
  }
}

TEST_CASE("twist path validation") {
  Graph c4 = cycle_graph(4);
  CHECK_THROWS_AS(twist_isomorphism(c4, 0, 2, {0, 2}), Error);      // no edge
  CHECK_THROWS_AS(twist_isomorphism(c4, 0, 2, {0, 1}), Error);      // endpoint
  CHECK_THROWS_AS(twist_isomorphism(c4, 0, 0, {0, 1, 0}), Error);   // repeat
  CHECK_THROWS_AS(twist_isomorphism(c4, 0, 1, {}), Error);          // empty
}

TEST_CASE("construction guards") {
  CHECK_THROWS_AS(cfi_build(Graph(3), {}), Error);  // isolated vertices
  Graph with_isolated(3, {{0, 1}});
  CHECK_THROWS_AS(cfi_build(with_isolated, {}), Error);
  CHECK_THROWS_AS(cfi_build(complete_graph(3), {5}), Error);
  Graph disconnected = disjoint_union({complete_graph(3), complete_graph(3)}).graph;
  CHECK_THROWS_AS(cfi_pair(disconnected), Error);
  CHECK_THROWS_AS(cfi_build(star_graph(21), {}), SizeLimitError);
}
