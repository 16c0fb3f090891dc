#include "homlab/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "homlab/errors.hpp"
#include "homlab/gen.hpp"
#include "homlab/graph6.hpp"

namespace homlab {

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.vertex_count();
  j["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
  return j;
}

Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw ParseError("json graph: expected {\"n\":..,\"edges\":[..]}");
  int n = j.at("n").get<int>();
  std::vector<Graph::Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw ParseError("json graph: edge must be a pair");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  try {
    return Graph(n, edges);
  } catch (const Error& err) {
    throw ParseError(std::string("json graph: ") + err.what());
  }
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  std::size_t start = 0;
  while (start < text.size() && std::isspace(static_cast<unsigned char>(text[start])))
    ++start;
  if (start == text.size()) throw ParseError(path + ": empty file");
  if (text[start] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(path + ": " + e.what());
    }
    return graph_from_json(j);
  }
  std::size_t end = text.find('\n', start);
  std::string line = text.substr(start, end == std::string::npos
                                            ? std::string::npos
                                            : end - start);
  return parse_graph6(line);
}

namespace {

bool parse_int_suffix(const std::string& s, std::size_t from, int& out) {
  if (from >= s.size()) return false;
  for (std::size_t i = from; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  out = std::stoi(s.substr(from));
  return true;
}

}  // namespace

Graph resolve_graph_arg(const std::string& arg) {
  if (arg == "petersen" || arg == "Petersen") return petersen_graph();
  if (arg.size() >= 2 && (arg[0] == 'K' || arg[0] == 'C' || arg[0] == 'P' ||
                          arg[0] == 'S' || arg[0] == 'E')) {
    auto comma = arg.find(',');
    int a = 0, b = 0;
    if (arg[0] == 'K' && comma != std::string::npos) {
      if (parse_int_suffix(arg.substr(0, comma), 1, a) &&
          parse_int_suffix(arg, comma + 1, b))
        return complete_bipartite(a, b);
    } else if (parse_int_suffix(arg, 1, a)) {
      switch (arg[0]) {
        case 'K': return complete_graph(a);
        case 'C': return cycle_graph(a);
        case 'P': return path_graph(a);
        case 'S': return star_graph(a);
        case 'E': return empty_graph(a);
      }
    }
  }
  return load_graph_file(arg);
}

}  // namespace homlab
