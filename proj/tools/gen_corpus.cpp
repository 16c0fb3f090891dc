// Regenerates the bundled graph corpus deterministically. Output files:
//   connected_n1_6.g6         all connected graphs on 1..6 vertices
//   connected_sample_n7_8.g6  a fixed pseudorandom connected sample
//   patterns_n1_5.g6          all graphs on 1..5 vertices

#include <fstream>
#include <iostream>
#include <random>

#include "homlab/gen.hpp"
#include "homlab/graph6.hpp"

using namespace homlab;

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "corpus";

  {
    std::ofstream out(dir + "/connected_n1_6.g6");
    for (int n = 1; n <= 6; ++n)
      for (const Graph& g : all_connected_graphs(n))
        out << emit_graph6(g) << "\n";
  }
  {
    std::mt19937_64 rng(0xc0c0a5);
    std::vector<Graph> sample;
    while (sample.size() < 20)
      sample.push_back(random_connected_graph(7, 0.35, rng));
    while (sample.size() < 35)
      sample.push_back(random_connected_graph(8, 0.30, rng));
    std::ofstream out(dir + "/connected_sample_n7_8.g6");
    for (const Graph& g : dedup_isomorphic(sample))
      out << emit_graph6(g) << "\n";
  }
  {
    std::ofstream out(dir + "/patterns_n1_5.g6");
    for (int n = 1; n <= 5; ++n)
      for (const Graph& g : all_graphs(n)) out << emit_graph6(g) << "\n";
  }
  std::cout << "corpus written to " << dir << "\n";
  return 0;
}
