#pragma once

#include <string>

#include <json.hpp>

#include "homlab/graph.hpp"

namespace homlab {

// JSON graph form: {"n": int, "edges": [[u,v], ...]}
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// Loads a graph from a file holding either a single graph6 line or the
// JSON form (sniffed from the first non-space byte).
Graph load_graph_file(const std::string& path);

// Resolves builtin names (K4, C7, P3, S5, K3,3, petersen) or falls back
// to loading the argument as a file path.
Graph resolve_graph_arg(const std::string& arg);

}  // namespace homlab
