#include "homlab/audit.hpp"

#include <algorithm>
#include <chrono>

#include "homlab/cfi.hpp"
#include "homlab/errors.hpp"
#include "homlab/gen.hpp"
#include "homlab/graph6.hpp"
#include "homlab/hom.hpp"
#include "homlab/treewidth.hpp"
#include "homlab/wl.hpp"

namespace homlab {

std::string to_string(AuditVerdict v) {
  switch (v) {
    case AuditVerdict::Invariant: return "invariant";
    case AuditVerdict::NotInvariant: return "not-invariant";
    case AuditVerdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

Count sub_count_via_basis(const HomBasis& basis, const Graph& target) {
  Rational acc = 0;
  for (const auto& term : basis.terms)
    acc += term.coefficient * Rational(hom_count(term.graph, target));
  if (denominator(acc) != 1)
    throw Error("sub_count_via_basis: expansion did not sum to an integer");
  return numerator(acc);
}

namespace {

// Repeatedly deletes vertices, then edges, while the graph stays
// connected with treewidth >= floor. Smaller bases mean smaller CFI pairs.
Graph trim_base(Graph g, int floor) {
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (int v = 0; v < g.vertex_count(); ++v) {
      std::vector<int> keep;
      for (int w = 0; w < g.vertex_count(); ++w)
        if (w != v) keep.push_back(w);
      Graph candidate = induced_subgraph(g, keep);
      if (candidate.vertex_count() > 0 && candidate.is_connected() &&
          treewidth_exact(candidate).width >= floor) {
        g = candidate;
        shrunk = true;
        break;
      }
    }
  }
  for (bool removed = true; removed;) {
    removed = false;
    for (int e = 0; e < g.edge_count(); ++e) {
      std::vector<Graph::Edge> edges;
      for (int i = 0; i < g.edge_count(); ++i)
        if (i != e) edges.push_back(g.edges()[i]);
      Graph candidate(g.vertex_count(), edges);
      if (candidate.is_connected() &&
          treewidth_exact(candidate).width >= floor) {
        g = candidate;
        removed = true;
        break;
      }
    }
  }
  return g;
}

std::vector<Graph> candidate_bases(const Spasm& sp, int k) {
  std::vector<Graph> raw;
  for (const auto& member : sp.members) {
    if (member.treewidth < k + 1) continue;
    for (const auto& part : components(member.graph).parts) {
      if (part.vertex_count() == 0) continue;
      if (treewidth_exact(part).width < k + 1) continue;
      raw.push_back(part);
      raw.push_back(trim_base(part, k + 1));
    }
  }
  std::vector<Graph> bases = dedup_isomorphic(raw);
  std::sort(bases.begin(), bases.end(), [](const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count())
      return a.vertex_count() < b.vertex_count();
    if (a.edge_count() != b.edge_count())
      return a.edge_count() < b.edge_count();
    return emit_graph6(a) < emit_graph6(b);
  });
  return bases;
}

}  // namespace

std::optional<WitnessPair> witness_search(const Graph& pattern, int k,
                                          Budget* budget) {
  Spasm sp = spasm(pattern);
  HomBasis basis = sub_basis(pattern);

  for (const Graph& base : candidate_bases(sp, k)) {
    auto [untwisted, twisted] = cfi_pair(base);

    // guaranteed for bases of treewidth >= k+1, but re-checked, never assumed
    std::vector<bool> not_distinguished;
    for (int dim = 1; dim <= k; ++dim) {
      if (wl_distinguishes(untwisted.graph, twisted.graph, dim))
        throw Error(
            "witness_search: CFI pair over a base of treewidth >= k+1 was "
            "distinguished at dimension " + std::to_string(dim) +
            "; this falsifies the expected indistinguishability and means a "
            "bug");
      not_distinguished.push_back(true);
      if (budget) budget->charge_or_throw();
    }

    Count sub_g = sub_count_via_basis(basis, untwisted.graph);
    Count sub_h = sub_count_via_basis(basis, twisted.graph);
    if (sub_g == sub_h) continue;  // counts tie; try the next base

    WitnessPair witness;
    witness.g = untwisted.graph;
    witness.h = twisted.graph;
    witness.base = base;
    witness.twist = twisted.twist;
    witness.k = k;
    witness.sub_g = sub_g;
    witness.sub_h = sub_h;
    witness.wl_not_distinguished = not_distinguished;
    return witness;
  }
  return std::nullopt;
}

bool verify_witness(const Graph& pattern, int k, const Graph& g,
                    const Graph& h) {
  if (wl_distinguishes(g, h, k)) return false;
  HomBasis basis = sub_basis(pattern);
  return sub_count_via_basis(basis, g) != sub_count_via_basis(basis, h);
}

AuditReport audit(const Graph& pattern, int k, Budget* budget) {
  auto started = std::chrono::steady_clock::now();
  AuditReport report;
  report.pattern = pattern;
  report.k = k;

  Spasm sp = spasm(pattern);
  report.spasm_members = sp.members;
  report.htw = -1;
  for (const auto& member : sp.members)
    report.htw = std::max(report.htw, member.treewidth);

  if (report.htw <= k) {
    report.verdict = AuditVerdict::Invariant;
    report.note = "hereditary treewidth <= k: every count in the expansion "
                  "is preserved at this dimension";
  } else {
    std::optional<WitnessPair> witness;
    bool budget_hit = false;
    try {
      witness = witness_search(pattern, k, budget);
    } catch (const BudgetError&) {
      budget_hit = true;
    }
    if (witness) {
      if (!verify_witness(pattern, k, witness->g, witness->h))
        throw Error("audit: witness failed re-verification from scratch");
      report.verdict = AuditVerdict::NotInvariant;
      report.witness = std::move(witness);
    } else {
      report.verdict = AuditVerdict::Inconclusive;
      report.note = budget_hit
                        ? "budget exhausted before the CFI search finished"
                        : "a distinguishing pair exists (hereditary "
                          "treewidth exceeds k) but the CFI search over "
                          "spasm bases did not produce one";
    }
  }
  if (budget) report.budget_used = budget->used();
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();
  return report;
}

}  // namespace homlab
