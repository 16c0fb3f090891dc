#include "homlab/oddo.hpp"

#include <algorithm>
#include <map>

#include "homlab/cfi.hpp"
#include "homlab/errors.hpp"
#include "homlab/gen.hpp"
#include "homlab/hom.hpp"
#include "homlab/iso.hpp"

namespace homlab {

OddnessProfile oddness_profile(const Graph& f, const Graph& g,
                               const VertexMap& phi) {
  if (!is_homomorphism(f, g, phi))
    throw Error("oddness_profile: phi is not a homomorphism");
  OddnessProfile profile;
  profile.vertex_class.resize(f.vertex_count(), Oddness::Odd);
  profile.odd_per_fiber.assign(g.vertex_count(), 0);

  for (int a = 0; a < f.vertex_count(); ++a) {
    bool all_odd = true, all_even = true;
    for (int v : g.neighbors(phi(a))) {
      int fiber_hits = 0;
      for (int b : f.neighbors(a))
        if (phi(b) == v) ++fiber_hits;
      if (fiber_hits % 2 == 0) all_odd = false;
      if (fiber_hits % 2 == 1) all_even = false;
    }
    // no constraints (isolated image) leaves both flags true: count as odd
    profile.vertex_class[a] = all_odd     ? Oddness::Odd
                              : all_even  ? Oddness::Even
                                          : Oddness::Neither;
    if (profile.vertex_class[a] == Oddness::Odd) ++profile.odd_per_fiber[phi(a)];
  }

  profile.parity_pure =
      std::none_of(profile.vertex_class.begin(), profile.vertex_class.end(),
                   [](Oddness o) { return o == Oddness::Neither; });
  profile.fibers_odd =
      std::all_of(profile.odd_per_fiber.begin(), profile.odd_per_fiber.end(),
                  [](int c) { return c % 2 == 1; });
  profile.is_oddomorphism = profile.parity_pure && profile.fibers_odd;
  return profile;
}

namespace {

// Checks whether phi restricted to the subgraph (verts, edge mask over
// edge_pool) is an oddomorphism onto g. Same classification rule as
// oddness_profile, evaluated on the restricted neighborhoods.
bool restricted_oddomorphism(const Graph& f, const Graph& g,
                             const std::vector<int>& image,
                             const std::vector<int>& verts,
                             const std::vector<Graph::Edge>& edge_pool,
                             std::uint32_t edge_mask) {
  std::vector<int> odd_per_fiber(g.vertex_count(), 0);
  std::vector<std::vector<int>> nbrs(f.vertex_count());
  for (std::size_t i = 0; i < edge_pool.size(); ++i) {
    if (!(edge_mask >> i & 1)) continue;
    auto [u, v] = edge_pool[i];
    nbrs[u].push_back(v);
    nbrs[v].push_back(u);
  }
  for (int a : verts) {
    bool all_odd = true, all_even = true;
    for (int v : g.neighbors(image[a])) {
      int fiber_hits = 0;
      for (int b : nbrs[a])
        if (image[b] == v) ++fiber_hits;
      if (fiber_hits % 2 == 0) all_odd = false;
      if (fiber_hits % 2 == 1) all_even = false;
    }
    if (!all_odd && !all_even) return false;
    if (all_odd) ++odd_per_fiber[image[a]];
  }
  for (int c : odd_per_fiber)
    if (c % 2 == 0) return false;
  return true;
}

// Enumerates all homomorphisms f -> g in deterministic order.
template <typename Fn>
bool for_each_homomorphism(const Graph& f, const Graph& g, Budget* budget,
                           Fn&& fn) {
  std::vector<int> image(f.vertex_count(), -1);
  // assign vertices 0..n-1 in order; plain candidate loop keeps the
  // enumeration order independent of any pruning heuristic
  auto rec = [&](auto&& self, int a) -> bool {
    if (a == f.vertex_count()) return fn(image);
    for (int x = 0; x < g.vertex_count(); ++x) {
      if (budget && !budget->charge()) return false;
      bool ok = true;
      for (int b : f.neighbors(a)) {
        if (b < a && !g.has_edge(image[b], x)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image[a] = x;
      if (!self(self, a + 1)) return false;
      image[a] = -1;
    }
    return true;
  };
  return rec(rec, 0);
}

}  // namespace

OddoSearchResult find_weak_oddomorphism(const Graph& f, const Graph& g,
                                        Budget* budget) {
  OddoSearchResult result;
  Budget local;  // tracks explored nodes even without a caller budget
  Budget* work = budget ? budget : &local;

  bool complete = for_each_homomorphism(f, g, work, [&](const std::vector<int>& image) {
    // subgraph vertex sets, full set first
    int n = f.vertex_count();
    for (std::uint32_t vmask = (n == 32) ? ~0u : (1u << n) - 1;; --vmask) {
      std::vector<int> verts;
      for (int v = 0; v < n; ++v)
        if (vmask >> v & 1) verts.push_back(v);

      // every g-fiber needs an odd (hence nonzero) number of odd
      // vertices, so the restricted image must cover V(g)
      std::vector<char> covered(g.vertex_count(), 0);
      int cover = 0;
      for (int v : verts)
        if (!covered[image[v]]) {
          covered[image[v]] = 1;
          ++cover;
        }
      if (cover == g.vertex_count()) {
        std::vector<Graph::Edge> pool;
        for (auto [u, v] : f.edges())
          if ((vmask >> u & 1) && (vmask >> v & 1)) pool.emplace_back(u, v);

        for (std::uint32_t emask = (pool.size() >= 32)
                                       ? ~0u
                                       : (1u << pool.size()) - 1;
             ; --emask) {
          if (!work->charge()) return false;
          if (restricted_oddomorphism(f, g, image, verts, pool, emask)) {
            WeakOddomorphism witness;
            witness.vertices = verts;
            for (std::size_t i = 0; i < pool.size(); ++i)
              if (emask >> i & 1) witness.edges.push_back(pool[i]);
            witness.phi.domain_size = f.vertex_count();
            witness.phi.codomain_size = g.vertex_count();
            witness.phi.image = image;
            result.witness = std::move(witness);
            return false;  // stop enumeration
          }
          if (emask == 0) break;
        }
      }
      if (vmask == 0) break;
    }
    return true;
  });

  result.explored = work->used();
  if (result.witness)
    result.status = SearchStatus::Found;
  else if (complete)
    result.status = SearchStatus::ExhaustedNone;
  else
    result.status = SearchStatus::BudgetExhausted;
  return result;
}

CfiGapReport verify_cfi_hom_gap(const Graph& f, const Graph& g,
                                Budget* budget) {
  CfiGapReport report;
  auto [untwisted, twisted] = cfi_pair(g);
  report.hom_untwisted = hom_count_bruteforce(f, untwisted.graph, budget);
  report.hom_twisted = hom_count_bruteforce(f, twisted.graph, budget);
  report.inequality_holds = report.hom_untwisted >= report.hom_twisted;
  report.strict = report.hom_untwisted > report.hom_twisted;
  report.search = find_weak_oddomorphism(f, g, budget);
  report.biconditional_checked =
      report.search.status != SearchStatus::BudgetExhausted;
  report.biconditional_holds =
      report.biconditional_checked &&
      report.strict == (report.search.status == SearchStatus::Found);
  return report;
}

MinorOddoReport check_minor_oddomorphism(const Graph& f, const Graph& g,
                                         const Graph& g_prime,
                                         Budget* budget) {
  MinorOddoReport report;
  OddoSearchResult weak = find_weak_oddomorphism(f, g, budget);
  if (weak.status == SearchStatus::BudgetExhausted) {
    report.status = SearchStatus::BudgetExhausted;
    report.explored = weak.explored;
    return report;
  }
  report.weak_oddo_verified = weak.status == SearchStatus::Found;
  if (!report.weak_oddo_verified)
    throw Error("check_minor_oddomorphism: no weak oddomorphism f -> g");
  if (!is_minor(g_prime, g))
    throw Error("check_minor_oddomorphism: g' is not a minor of g");

  Budget local;
  Budget* work = budget ? budget : &local;
  for (const Graph& candidate : all_minors(f)) {
    bool found = false;
    bool complete = for_each_homomorphism(
        candidate, g_prime, work, [&](const std::vector<int>& image) {
          VertexMap phi;
          phi.domain_size = candidate.vertex_count();
          phi.codomain_size = g_prime.vertex_count();
          phi.image = image;
          if (oddness_profile(candidate, g_prime, phi).is_oddomorphism) {
            found = true;
            report.minor = candidate;
            report.map = std::move(phi);
            return false;
          }
          return true;
        });
    if (found) {
      report.status = SearchStatus::Found;
      report.explored = work->used();
      return report;
    }
    if (!complete) {
      report.status = SearchStatus::BudgetExhausted;
      report.explored = work->used();
      return report;
    }
  }
  report.status = SearchStatus::ExhaustedNone;
  report.explored = work->used();
  return report;
}

}  // namespace homlab
