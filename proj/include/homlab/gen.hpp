#pragma once

#include <random>
#include <vector>

#include "homlab/graph.hpp"

namespace homlab {

// Standard small graphs used throughout the corpus and tests.
Graph complete_graph(int n);
Graph cycle_graph(int n);   // n >= 3
Graph path_graph(int n);    // n vertices, n-1 edges
Graph star_graph(int leaves);
Graph complete_bipartite(int a, int b);
Graph petersen_graph();
Graph empty_graph(int n);

// All graphs on exactly n vertices up to isomorphism (n <= 7 guard).
std::vector<Graph> all_graphs(int n);
std::vector<Graph> all_connected_graphs(int n);

// Deduplicates a list of graphs up to isomorphism, preserving the first
// representative of each class in input order.
std::vector<Graph> dedup_isomorphic(const std::vector<Graph>& gs);

// All minors of g up to isomorphism: induced subgraph, contraction by a
// partition into connected blocks, then any edge subset. Exponential;
// meant for hosts with <= 6 vertices.
std::vector<Graph> all_minors(const Graph& g);

Graph random_graph(int n, double p, std::mt19937_64& rng);
Graph random_connected_graph(int n, double p, std::mt19937_64& rng);

}  // namespace homlab
