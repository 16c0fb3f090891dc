#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "homlab/errors.hpp"
#include "homlab/gen.hpp"
#include "homlab/graph.hpp"
#include "homlab/graph6.hpp"
#include "homlab/io.hpp"
#include "homlab/iso.hpp"
#include "test_util.hpp"

using namespace homlab;

TEST_CASE("graph basics") {
  Graph g(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 4);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK_FALSE(g.has_edge(1, 1));
  CHECK(g.degree(0) == 2);
  // canonical lexicographic edge order
  CHECK(g.edges() == std::vector<Graph::Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
  CHECK(g.edge_index(3, 0) == 1);
  CHECK(g.edge_index(0, 2) == -1);
  CHECK(g.incident_edges(0) == std::vector<int>{0, 1});
  CHECK(g.neighbors(0) == std::vector<int>{1, 3});
  CHECK(g.is_connected());
  CHECK_FALSE(Graph(2).is_connected());
}

TEST_CASE("graph rejects malformed input") {
  CHECK_THROWS_AS(Graph(2, {{0, 0}}), Error);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), Error);
  CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), Error);
  CHECK_THROWS_AS(Graph(-1, {}), Error);
}

TEST_CASE("graph6 frozen codes") {
  CHECK(emit_graph6(Graph(1)) == "@");
  CHECK(parse_graph6("@") == Graph(1));
  CHECK(emit_graph6(complete_graph(2)) == "A_");
  CHECK(parse_graph6("A_") == complete_graph(2));
  CHECK(emit_graph6(complete_graph(4)) == "C~");
  CHECK(parse_graph6("C~") == complete_graph(4));
  // C4 packs upper-triangle bits 101101 -> 45+63 = 'l'
  CHECK(emit_graph6(cycle_graph(4)) == "Cl");
  CHECK(parse_graph6("Cl") == cycle_graph(4));
  CHECK(parse_graph6("Cl\n") == cycle_graph(4));
}

TEST_CASE("graph6 round trip on random graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = static_cast<int>(rng() % 11);
    Graph g = random_graph(n, 0.4, rng);
    CHECK(parse_graph6(emit_graph6(g)) == g);
  }
}

TEST_CASE("graph6 parse errors name the byte offset") {
  CHECK_THROWS_WITH_AS(parse_graph6(""), doctest::Contains("byte 0"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_graph6("~~~"), doctest::Contains("byte 0"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_graph6("C"), doctest::Contains("truncated"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_graph6("C~~"), doctest::Contains("byte 2"),
                       ParseError);
  CHECK_THROWS_AS(parse_graph6(std::string("C") + char(20)), ParseError);
  // n=2 with a set padding bit (byte value 16+63 = 'O': bit 1 is padding)
  CHECK_THROWS_WITH_AS(parse_graph6("AO"), doctest::Contains("padding"),
                       ParseError);
  CHECK_THROWS_AS(emit_graph6(Graph(63)), SizeLimitError);
}

TEST_CASE("quotient") {
  Graph c4 = cycle_graph(4);
  Partition p;
  p.blocks = {{0, 2}, {1}, {3}};
  QuotientResult q = quotient(c4, p);
  CHECK(q.loop_free());
  CHECK(is_isomorphic(q.graph, path_graph(3)).has_value());

  QuotientResult identity = quotient(c4, Partition::discrete(4));
  CHECK(identity.loop_free());
  CHECK(identity.graph == c4);

  Partition merged;
  merged.blocks = {{0, 1}};
  QuotientResult loop = quotient(complete_graph(2), merged);
  CHECK_FALSE(loop.loop_free());
  CHECK(loop.loop_block == 0);
  CHECK(loop.graph.vertex_count() == 1);

  Partition bad;
  bad.blocks = {{0}};
  CHECK_THROWS_AS(quotient(c4, bad), Error);
}

TEST_CASE("components and disjoint union") {
  Graph k3 = complete_graph(3);
  UnionResult two = disjoint_union({k3, k3});
  CHECK(two.graph.vertex_count() == 6);
  CHECK(two.graph.edge_count() == 6);
  CHECK(two.offsets == std::vector<int>{0, 3});

  ComponentSplit split = components(two.graph);
  REQUIRE(split.parts.size() == 2);
  CHECK(is_isomorphic(split.parts[0], k3).has_value());
  CHECK(is_isomorphic(split.parts[1], k3).has_value());
  CHECK(split.to_parent[1] == std::vector<int>{3, 4, 5});

  CHECK(components(cycle_graph(6)).parts.size() == 1);
}

TEST_CASE("minor testing") {
  CHECK(is_minor(complete_graph(3), cycle_graph(4)));
  CHECK_FALSE(is_minor(complete_graph(4), cycle_graph(4)));
  CHECK(is_minor(complete_graph(4), complete_graph(5)));
  CHECK(is_minor(cycle_graph(4), cycle_graph(5)));
  CHECK(is_minor(Graph(0), complete_graph(2)));
  CHECK_THROWS_AS(is_minor(complete_graph(3), Graph(11)), SizeLimitError);
}

TEST_CASE("minor monotonicity") {
  // h' minor of h and h minor of g imply h' minor of g
  std::vector<Graph> chain = {complete_graph(2), path_graph(3),
                              cycle_graph(4), complete_graph(4)};
  Graph host = complete_graph(5);
  for (const Graph& h : chain) CHECK(is_minor(h, host));
  CHECK(is_minor(complete_graph(3), cycle_graph(5)));
  for (const Graph& h : {path_graph(3), complete_graph(2), Graph(1)})
    CHECK(is_minor(h, cycle_graph(5)));
}

TEST_CASE("subgraph embedding") {
  CHECK(embeds_as_subgraph(path_graph(3), cycle_graph(4)));
  CHECK_FALSE(embeds_as_subgraph(complete_graph(3), cycle_graph(4)));
  CHECK(embeds_as_subgraph(Graph(0), Graph(0)));
  CHECK(embeds_as_subgraph(empty_graph(2), complete_graph(2)));
}

TEST_CASE("vertex maps") {
  Graph k3 = complete_graph(3);
  VertexMap id = VertexMap::identity(3);
  CHECK(is_homomorphism(k3, k3, id));
  CHECK(is_isomorphism_map(k3, k3, id));

  VertexMap wrap;  // C6 -> K3 double wrap
  wrap.domain_size = 6;
  wrap.codomain_size = 3;
  wrap.image = {0, 1, 2, 0, 1, 2};
  CHECK(is_homomorphism(cycle_graph(6), k3, wrap));
  CHECK_FALSE(is_isomorphism_map(cycle_graph(6), k3, wrap));

  VertexMap bad;
  bad.domain_size = 3;
  bad.codomain_size = 3;
  bad.image = {0, 0, 1};
  CHECK_FALSE(is_homomorphism(k3, k3, bad));
}

TEST_CASE("induced subgraph and relabel") {
  Graph c5 = cycle_graph(5);
  Graph sub = induced_subgraph(c5, {0, 1, 2});
  CHECK(sub.edge_count() == 2);
  Graph piece = subgraph(c5, {0, 1, 2}, {{0, 1}});
  CHECK(piece.edge_count() == 1);
  CHECK_THROWS_AS(subgraph(c5, {0, 1, 2}, {{0, 2}}), Error);

  std::mt19937_64 rng(11);
  Graph g = random_graph(7, 0.5, rng);
  auto perm = homlab::testing::random_permutation(7, rng);
  Graph h = relabel(g, perm);
  CHECK(h.edge_count() == g.edge_count());
  for (auto [u, v] : g.edges()) CHECK(h.has_edge(perm[u], perm[v]));
}

TEST_CASE("json graph form") {
  Graph g = cycle_graph(5);
  CHECK(graph_from_json(graph_to_json(g)) == g);
  CHECK_THROWS_AS(graph_from_json(nlohmann::json{{"n", 2}}), ParseError);
  CHECK_THROWS_AS(
      graph_from_json(nlohmann::json{{"n", 1}, {"edges", {{0, 0}}}}),
      ParseError);
}

TEST_CASE("named graph resolution") {
  CHECK(resolve_graph_arg("K4") == complete_graph(4));
  CHECK(resolve_graph_arg("C6") == cycle_graph(6));
  CHECK(resolve_graph_arg("P3") == path_graph(3));
  CHECK(resolve_graph_arg("K3,3") == complete_bipartite(3, 3));
  CHECK(resolve_graph_arg("petersen") == petersen_graph());
  CHECK_THROWS(resolve_graph_arg("no-such-file.g6"));
}

TEST_CASE("graph catalog sizes") {
  CHECK(all_graphs(1).size() == 1);
  CHECK(all_graphs(2).size() == 2);
  CHECK(all_graphs(3).size() == 4);
  CHECK(all_graphs(4).size() == 11);
  CHECK(all_graphs(5).size() == 34);
  CHECK(all_connected_graphs(4).size() == 6);
  CHECK(all_connected_graphs(5).size() == 21);
  CHECK(all_connected_graphs(6).size() == 112);
  CHECK_THROWS_AS(all_graphs(8), SizeLimitError);
}
