#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "homlab/errors.hpp"
#include "homlab/gen.hpp"
#include "homlab/hom.hpp"
#include "homlab/iso.hpp"
#include "homlab/spasm.hpp"
#include "test_util.hpp"

using namespace homlab;

namespace {

bool spasm_contains(const Spasm& sp, const Graph& g) {
  for (const auto& m : sp.members)
    if (is_isomorphic(m.graph, g).has_value()) return true;
  return false;
}

}  // namespace

TEST_CASE("spasm of small patterns") {
  Spasm k4 = spasm(complete_graph(4));
  CHECK(k4.members.size() == 1);  // no independent pair to merge
  CHECK(is_isomorphic(k4.members[0].graph, complete_graph(4)).has_value());

  Spasm p3 = spasm(path_graph(3));
  CHECK(p3.members.size() == 2);
  CHECK(spasm_contains(p3, path_graph(3)));
  CHECK(spasm_contains(p3, complete_graph(2)));

  Spasm c4 = spasm(cycle_graph(4));
  CHECK(c4.members.size() == 3);
  CHECK(spasm_contains(c4, cycle_graph(4)));
  CHECK(spasm_contains(c4, path_graph(3)));
  CHECK(spasm_contains(c4, complete_graph(2)));

  CHECK_THROWS_AS(spasm(Graph(10)), SizeLimitError);
}

TEST_CASE("every member is realized by its witness partition") {
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& f : all_graphs(n)) {
      Spasm sp = spasm(f);
      // the source pattern itself is a member, listed first
      CHECK(sp.members.front().graph.vertex_count() == f.vertex_count());
      CHECK(is_isomorphic(sp.members.front().graph, f).has_value());
      for (const auto& member : sp.members) {
        const Partition& p = member.witness;
        REQUIRE(p.valid_for(f.vertex_count()));
        VertexMap quotient_map;
        quotient_map.domain_size = f.vertex_count();
        quotient_map.codomain_size = member.graph.vertex_count();
        quotient_map.image = p.block_ids();
        // surjective homomorphism whose edge image is exactly the member
        CHECK(is_homomorphism(f, member.graph, quotient_map));
        std::vector<char> hit(member.graph.vertex_count(), 0);
        for (int x : quotient_map.image) hit[x] = 1;
        CHECK(std::all_of(hit.begin(), hit.end(), [](char c) { return c; }));
        std::set<Graph::Edge> image_edges;
        for (auto [u, v] : f.edges()) {
          int a = quotient_map(u), b = quotient_map(v);
          image_edges.emplace(std::min(a, b), std::max(a, b));
        }
        std::set<Graph::Edge> member_edges(member.graph.edges().begin(),
                                           member.graph.edges().end());
        CHECK(image_edges == member_edges);
      }
    }
  }
}

TEST_CASE("hereditary treewidth of cycles and cliques") {
  CHECK(htw(complete_graph(4)) == 3);
  CHECK(htw(cycle_graph(3)) == 2);
  CHECK(htw(cycle_graph(4)) == 2);
  CHECK(htw(cycle_graph(5)) == 2);
  CHECK(htw(cycle_graph(6)) == 2);
}

TEST_CASE("seven-cycle images all stay width two; eight-cycle reaches three") {
  // a homomorphic image of C7 is a connected multigraph support with seven
  // edges counted with multiplicity and every multidegree even; any image
  // of treewidth 3 would need four vertices of multidegree >= 4, total
  // >= 16 > 14, so width 2 is the true maximum
  Spasm sp = spasm(cycle_graph(7));
  CHECK(sp.members.size() == 12);
  for (const auto& m : sp.members) CHECK(m.treewidth <= 2);
  CHECK(htw(cycle_graph(7)) == 2);

  // one dimension up the flip happens: K4 is an image of C8
  Spasm sp8 = spasm(cycle_graph(8));
  CHECK(spasm_contains(sp8, complete_graph(4)));
  CHECK(htw(cycle_graph(8)) == 3);
}

TEST_CASE("htw dominates treewidth") {
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 15; ++trial) {
    Graph f = random_graph(1 + static_cast<int>(rng() % 6), 0.5, rng);
    CHECK(htw(f) >= treewidth_exact(f).width);
  }
}

TEST_CASE("basis coefficients of cliques and the path") {
  HomBasis k3 = sub_basis(complete_graph(3));
  REQUIRE(k3.terms.size() == 1);
  CHECK(k3.terms[0].coefficient == Rational(1, 6));

  HomBasis k4 = sub_basis(complete_graph(4));
  REQUIRE(k4.terms.size() == 1);
  CHECK(k4.terms[0].coefficient == Rational(1, 24));

  HomBasis p3 = sub_basis(path_graph(3));
  REQUIRE(p3.terms.size() == 2);
  CHECK(p3.terms[0].coefficient == Rational(1, 2));   // the path itself
  CHECK(p3.terms[1].coefficient == Rational(-1, 2));  // the edge
  // spot check on K3: (12 - 6) / 2 = 3 subgraphs
  Rational acc = 0;
  for (const auto& term : p3.terms)
    acc += term.coefficient *
           Rational(hom_count_bruteforce(term.graph, complete_graph(3)));
  CHECK(acc == 3);
}

TEST_CASE("leading coefficient is always 1/aut and none vanish") {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& f : all_graphs(n)) {
      HomBasis basis = sub_basis(f);
      CHECK(basis.terms.front().coefficient == Rational(1, aut_count(f)));
      for (const auto& term : basis.terms)
        CHECK(term.coefficient != 0);
    }
  }
}

TEST_CASE("basis identity on random targets") {
  std::mt19937_64 rng(101);
  std::vector<Graph> patterns = {path_graph(4), cycle_graph(5), star_graph(3),
                                 complete_graph(4), cycle_graph(4)};
  for (const Graph& f : patterns) {
    HomBasis basis = sub_basis(f);
    for (int trial = 0; trial < 8; ++trial) {
      Graph g = random_graph(1 + static_cast<int>(rng() % 6), 0.5, rng);
      Rational acc = 0;
      for (const auto& term : basis.terms)
        acc += term.coefficient *
               Rational(hom_count_bruteforce(term.graph, g));
      CHECK(acc == Rational(sub_count_bruteforce(f, g)));
    }
  }
}
