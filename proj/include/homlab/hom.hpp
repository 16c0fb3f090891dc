#pragma once

#include "homlab/budget.hpp"
#include "homlab/counts.hpp"
#include "homlab/graph.hpp"
#include "homlab/treewidth.hpp"

namespace homlab {

// Number of edge-preserving maps V(f) -> V(g), by pruned backtracking.
// Guarded to |V(g)|^|V(f)| <= ~1e9; an optional budget (in explored search
// nodes) turns long runs into a BudgetError instead.
Count hom_count_bruteforce(const Graph& f, const Graph& g,
                           Budget* budget = nullptr);

// Same quantity via dynamic programming over a tree decomposition of f,
// polynomial in |V(g)|^(width+1). The decomposition must validate for f.
Count hom_count_td(const Graph& f, const TreeDecomposition& td,
                   const Graph& g);

// Picks the decomposition route when the pattern is small enough to
// decompose and the tables fit, brute force otherwise.
Count hom_count(const Graph& f, const Graph& g, Budget* budget = nullptr);

// Injective homomorphisms.
Count inj_count(const Graph& f, const Graph& g, Budget* budget = nullptr);

// Subgraphs of g isomorphic to f, counted by enumerating embeddings and
// deduplicating their images (so inj = aut * sub stays a real check).
Count sub_count_bruteforce(const Graph& f, const Graph& g,
                           Budget* budget = nullptr);

// Automorphisms: injective homomorphisms of a graph into itself are
// exactly its automorphisms.
Count aut_count(const Graph& g, Budget* budget = nullptr);

}  // namespace homlab
