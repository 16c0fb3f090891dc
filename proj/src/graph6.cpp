#include "homlab/graph6.hpp"

#include <string>

#include "homlab/errors.hpp"

namespace homlab {

namespace {

[[noreturn]] void fail(std::size_t offset, const std::string& what) {
  throw ParseError("graph6: byte " + std::to_string(offset) + ": " + what);
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
    line.remove_suffix(1);
  if (line.empty()) fail(0, "empty input");
  unsigned char header = static_cast<unsigned char>(line[0]);
  if (header == static_cast<unsigned char>('~'))
    fail(0, "multi-byte size form not supported (n > 62)");
  if (header < 63 || header > 126) fail(0, "header outside printable range");
  int n = header - 63;

  std::size_t bits_needed = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::size_t body_len = (bits_needed + 5) / 6;
  if (line.size() < 1 + body_len) fail(line.size(), "truncated bit body");
  if (line.size() > 1 + body_len)
    fail(1 + body_len, "trailing bytes after bit body");

  std::vector<Graph::Edge> edges;
  std::size_t bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      std::size_t byte_pos = 1 + bit / 6;
      unsigned char c = static_cast<unsigned char>(line[byte_pos]);
      if (c < 63 || c > 126) fail(byte_pos, "body byte outside valid range");
      int value = c - 63;
      if ((value >> (5 - bit % 6)) & 1) edges.emplace_back(u, v);
    }
  }
  // padding bits must be zero for the code to round-trip
  for (; bit < body_len * 6; ++bit) {
    std::size_t byte_pos = 1 + bit / 6;
    unsigned char c = static_cast<unsigned char>(line[byte_pos]);
    if (c < 63 || c > 126) fail(byte_pos, "body byte outside valid range");
    if (((c - 63) >> (5 - bit % 6)) & 1) fail(byte_pos, "nonzero padding bit");
  }
  return Graph(n, edges);
}

std::string emit_graph6(const Graph& g) {
  int n = g.vertex_count();
  if (n > 62)
    throw SizeLimitError(
        "graph6: only the single-byte size form (n <= 62) is supported");
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::string body((bits + 5) / 6, 0);
  std::size_t bit = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++bit)
      if (g.has_edge(u, v)) body[bit / 6] |= static_cast<char>(1 << (5 - bit % 6));
  for (char& c : body) c = static_cast<char>(c + 63);
  return out + body;
}

}  // namespace homlab
