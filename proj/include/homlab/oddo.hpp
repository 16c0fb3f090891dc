#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "homlab/budget.hpp"
#include "homlab/counts.hpp"
#include "homlab/graph.hpp"

namespace homlab {

enum class Oddness : unsigned char { Odd, Even, Neither };

// Per-vertex parity classification of a homomorphism phi: f -> g. A
// vertex a is odd (even) when every fiber intersection |N_f(a) n
// phi^-1(v)|, v ranging over the g-neighbors of phi(a), is odd (even).
// A vertex with no such constraints counts as odd: that keeps the
// identity on a single vertex an oddomorphism.
struct OddnessProfile {
  std::vector<Oddness> vertex_class;  // indexed by V(f)
  std::vector<int> odd_per_fiber;     // indexed by V(g)
  bool parity_pure = false;           // no vertex classified Neither
  bool fibers_odd = false;            // every fiber holds oddly many odd vertices
  bool is_oddomorphism = false;       // both conditions
};

OddnessProfile oddness_profile(const Graph& f, const Graph& g,
                               const VertexMap& phi);

enum class SearchStatus { Found, ExhaustedNone, BudgetExhausted };

struct WeakOddomorphism {
  std::vector<int> vertices;        // vertex set of the subgraph F'
  std::vector<Graph::Edge> edges;   // edge set of F' (edges of f)
  VertexMap phi;                    // full homomorphism f -> g
};

struct OddoSearchResult {
  SearchStatus status = SearchStatus::ExhaustedNone;
  std::optional<WeakOddomorphism> witness;
  std::uint64_t explored = 0;
};

// Searches for a weak oddomorphism f -> g: a homomorphism some subgraph
// restriction of which is an oddomorphism. Exact when it completes; a
// budget cut yields an explicit BudgetExhausted status, never a silent no.
OddoSearchResult find_weak_oddomorphism(const Graph& f, const Graph& g,
                                        Budget* budget = nullptr);

// Report for the CFI counting gap: hom(f, CFI(g)) vs hom(f, CFI~(g)),
// which should be >= always and > exactly when a weak oddomorphism
// f -> g exists.
struct CfiGapReport {
  Count hom_untwisted = 0;
  Count hom_twisted = 0;
  bool inequality_holds = false;
  bool strict = false;
  OddoSearchResult search;
  bool biconditional_checked = false;  // search ran to completion
  bool biconditional_holds = false;
};

CfiGapReport verify_cfi_hom_gap(const Graph& f, const Graph& g,
                                Budget* budget = nullptr);

// Given a weak oddomorphism f -> g and a minor g' of g, some minor f' of
// f admits an oddomorphism onto g'; this searches for one exhaustively.
struct MinorOddoReport {
  bool weak_oddo_verified = false;
  SearchStatus status = SearchStatus::ExhaustedNone;
  std::optional<Graph> minor;       // F'
  std::optional<VertexMap> map;     // oddomorphism F' -> g'
  std::uint64_t explored = 0;
};

MinorOddoReport check_minor_oddomorphism(const Graph& f, const Graph& g,
                                         const Graph& g_prime,
                                         Budget* budget = nullptr);

}  // namespace homlab
