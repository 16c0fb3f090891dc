#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homlab/budget.hpp"
#include "homlab/counts.hpp"
#include "homlab/graph.hpp"
#include "homlab/spasm.hpp"

namespace homlab {

// A verified falsification certificate: a pair the k-dimensional
// refinement cannot tell apart on which the subgraph count differs.
struct WitnessPair {
  Graph g;
  Graph h;
  Graph base;              // CFI base the pair was built from
  std::vector<int> twist;  // twist set of h
  int k = 0;
  Count sub_g = 0;
  Count sub_h = 0;
  std::vector<bool> wl_not_distinguished;  // dimensions 1..k, all true
};

enum class AuditVerdict { Invariant, NotInvariant, Inconclusive };

std::string to_string(AuditVerdict v);

struct AuditReport {
  Graph pattern;
  int k = 0;
  std::vector<SpasmMember> spasm_members;
  int htw = -1;
  AuditVerdict verdict = AuditVerdict::Inconclusive;
  std::optional<WitnessPair> witness;
  std::string note;
  std::uint64_t budget_used = 0;
  double seconds = 0;
};

// Is sub(pattern, .) invariant under k-dimensional refinement? Hereditary
// treewidth <= k settles "invariant"; otherwise a CFI witness pair over
// high-treewidth spasm members is searched for, and "not-invariant" is
// only reported with a verified witness attached. A fruitless search is
// an honest "inconclusive".
AuditReport audit(const Graph& pattern, int k, Budget* budget = nullptr);

// The witness search on its own: candidate CFI bases are the connected
// high-treewidth spasm members (and trimmed connected subgraphs of them),
// smallest first.
std::optional<WitnessPair> witness_search(const Graph& pattern, int k,
                                          Budget* budget = nullptr);

// Re-checks a claimed witness from scratch: the pair must be
// k-indistinguishable and the exact subgraph counts must differ.
bool verify_witness(const Graph& pattern, int k, const Graph& g,
                    const Graph& h);

// Exact sub(pattern, target) through the basis expansion; scales to
// targets where direct enumeration is hopeless.
Count sub_count_via_basis(const HomBasis& basis, const Graph& target);

}  // namespace homlab
