#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "homlab/audit.hpp"
#include "homlab/cfi.hpp"
#include "homlab/errors.hpp"
#include "homlab/gen.hpp"
#include "homlab/graph6.hpp"
#include "homlab/iso.hpp"
#include "homlab/wl.hpp"
#include "test_util.hpp"

using namespace homlab;

TEST_CASE("triangle audit at dimension one") {
  AuditReport r = audit(complete_graph(3), 1);
  CHECK(r.htw == 2);
  CHECK(r.verdict == AuditVerdict::NotInvariant);
  REQUIRE(r.witness.has_value());
  Graph two_k3 = disjoint_union({complete_graph(3), complete_graph(3)}).graph;
  CHECK(is_isomorphic(r.witness->g, two_k3).has_value());
  CHECK(is_isomorphic(r.witness->h, cycle_graph(6)).has_value());
  CHECK(r.witness->sub_g == 2);
  CHECK(r.witness->sub_h == 0);
  CHECK_FALSE(wl_distinguishes(r.witness->g, r.witness->h, 1));
  CHECK(wl_distinguishes(r.witness->g, r.witness->h, 2));
}

TEST_CASE("invariant verdicts come straight from hereditary treewidth") {
  CHECK(audit(cycle_graph(6), 2).verdict == AuditVerdict::Invariant);
  CHECK(audit(complete_graph(3), 2).verdict == AuditVerdict::Invariant);
  CHECK(audit(cycle_graph(4), 2).verdict == AuditVerdict::Invariant);
  CHECK(audit(path_graph(3), 1).verdict == AuditVerdict::Invariant);
  // the seven-cycle's images never exceed width two, so at dimension two
  // its count is preserved
  AuditReport c7 = audit(cycle_graph(7), 2);
  CHECK(c7.htw == 2);
  CHECK(c7.verdict == AuditVerdict::Invariant);
}

TEST_CASE("longer paths lose invariance at dimension one") {
  // merging the two ends of a four-vertex stretch closes a triangle, so
  // the five-vertex path has an image of width two
  AuditReport r = audit(path_graph(5), 1);
  CHECK(r.htw == 2);
  CHECK(r.verdict == AuditVerdict::NotInvariant);
  REQUIRE(r.witness.has_value());
  CHECK(verify_witness(path_graph(5), 1, r.witness->g, r.witness->h));
}

TEST_CASE("K4 audit at dimension two") {
  AuditReport r = audit(complete_graph(4), 2);
  CHECK(r.htw == 3);
  CHECK(r.verdict == AuditVerdict::NotInvariant);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->g.vertex_count() == 16);
  CHECK(r.witness->h.vertex_count() == 16);
  CHECK(r.witness->sub_g == 8);
  CHECK(r.witness->sub_h == 0);
  CHECK(r.witness->wl_not_distinguished ==
        std::vector<bool>{true, true});
}

TEST_CASE("star patterns stay invariant at dimension one") {
  // every image of a star is a star or smaller; width never exceeds one
  AuditReport r = audit(star_graph(4), 1);
  CHECK(r.htw == 1);
  CHECK(r.verdict == AuditVerdict::Invariant);
}

TEST_CASE("five-cycle flips between dimensions one and two") {
  AuditReport low = audit(cycle_graph(5), 1);
  CHECK(low.htw == 2);
  CHECK(low.verdict == AuditVerdict::NotInvariant);
  REQUIRE(low.witness.has_value());
  CHECK(verify_witness(cycle_graph(5), 1, low.witness->g, low.witness->h));

  CHECK(audit(cycle_graph(5), 2).verdict == AuditVerdict::Invariant);
}

TEST_CASE("witness verification accepts and rejects correctly") {
  Graph two_k3 = disjoint_union({complete_graph(3), complete_graph(3)}).graph;
  Graph c6 = cycle_graph(6);
  CHECK(verify_witness(complete_graph(3), 1, two_k3, c6));
  // dimension two tells the pair apart, so it no longer certifies
  CHECK_FALSE(verify_witness(complete_graph(3), 2, two_k3, c6));
  // equal counts certify nothing
  CHECK_FALSE(verify_witness(complete_graph(3), 1, complete_graph(3),
                             complete_graph(3)));
}

TEST_CASE("reports are deterministic") {
  AuditReport a = audit(complete_graph(4), 2);
  AuditReport b = audit(complete_graph(4), 2);
  REQUIRE(a.witness.has_value());
  REQUIRE(b.witness.has_value());
  CHECK(emit_graph6(a.witness->g) == emit_graph6(b.witness->g));
  CHECK(emit_graph6(a.witness->h) == emit_graph6(b.witness->h));
  CHECK(a.witness->sub_g == b.witness->sub_g);
  CHECK(a.htw == b.htw);
}

TEST_CASE("budget exhaustion reports inconclusive, never a fake verdict") {
  Budget tiny(1);
  AuditReport r = audit(complete_graph(4), 2, &tiny);
  // with one unit of work the search cannot finish; the verdict must not
  // claim either direction
  if (r.verdict != AuditVerdict::NotInvariant) {
    CHECK(r.verdict == AuditVerdict::Inconclusive);
    CHECK(!r.witness.has_value());
  }
}

TEST_CASE("sub counts via the basis match brute force on CFI targets") {
  auto [untwisted, twisted] = cfi_pair(complete_graph(3));
  HomBasis basis = sub_basis(complete_graph(3));
  CHECK(sub_count_via_basis(basis, untwisted.graph) == 2);
  CHECK(sub_count_via_basis(basis, twisted.graph) == 0);
}
