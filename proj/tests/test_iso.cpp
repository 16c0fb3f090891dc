#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "homlab/cfi.hpp"
#include "homlab/gen.hpp"
#include "homlab/graph.hpp"
#include "homlab/iso.hpp"
#include "test_util.hpp"

using namespace homlab;
using homlab::testing::brute_force_isomorphic;
using homlab::testing::random_permutation;

TEST_CASE("isomorphism basics") {
  CHECK(is_isomorphic(complete_graph(3), cycle_graph(3)).has_value());
  Graph two_k3 = disjoint_union({complete_graph(3), complete_graph(3)}).graph;
  CHECK_FALSE(is_isomorphic(cycle_graph(6), two_k3).has_value());
  CHECK(is_isomorphic(Graph(0), Graph(0)).has_value());
  CHECK_FALSE(is_isomorphic(Graph(1), Graph(2)).has_value());
}

TEST_CASE("witness maps always validate") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + static_cast<int>(rng() % 9);
    Graph g = random_graph(n, 0.45, rng);
    Graph h = relabel(g, random_permutation(n, rng));
    auto m = is_isomorphic(g, h);
    REQUIRE(m.has_value());
    CHECK(is_isomorphism_map(g, h, *m));
  }
}

TEST_CASE("agrees with brute-force permutation search, all pairs n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<Graph> catalog = all_graphs(n);
    for (std::size_t i = 0; i < catalog.size(); ++i) {
      for (std::size_t j = i; j < catalog.size(); ++j) {
        bool fast = is_isomorphic(catalog[i], catalog[j]).has_value();
        bool slow = brute_force_isomorphic(catalog[i], catalog[j]).has_value();
        CHECK(fast == slow);
      }
    }
  }
}

TEST_CASE("equivalence relation properties") {
  std::mt19937_64 rng(5);
  std::vector<Graph> corpus;
  for (int n = 1; n <= 7; ++n)
    for (int t = 0; t < 4; ++t) corpus.push_back(random_graph(n, 0.5, rng));
  // reflexive
  for (const Graph& g : corpus) CHECK(is_isomorphic(g, g).has_value());
  // symmetric + transitive through relabel chains
  for (const Graph& g : corpus) {
    int n = g.vertex_count();
    Graph h = relabel(g, random_permutation(n, rng));
    Graph f = relabel(h, random_permutation(n, rng));
    CHECK(is_isomorphic(g, h).has_value());
    CHECK(is_isomorphic(h, g).has_value());
    CHECK(is_isomorphic(g, f).has_value());
  }
}

TEST_CASE("CFI parity instance via plain isomorphism search") {
  CfiGraph untwisted = cfi_build(complete_graph(3), {});
  CfiGraph twisted = cfi_build(complete_graph(3), {0});
  CHECK_FALSE(is_isomorphic(untwisted.graph, twisted.graph).has_value());
}

TEST_CASE("nonisomorphic same-degree-sequence pair") {
  // C6 vs 2*K3 is caught; also the 4-regular 40-vertex CFI twins over K5
  CfiGraph a = cfi_build(complete_graph(5), {});
  CfiGraph b = cfi_build(complete_graph(5), {0});
  CHECK(a.graph.vertex_count() == 40);
  CHECK_FALSE(is_isomorphic(a.graph, b.graph).has_value());
  CfiGraph c = cfi_build(complete_graph(5), {0, 1});
  CHECK(is_isomorphic(a.graph, c.graph).has_value());
}
