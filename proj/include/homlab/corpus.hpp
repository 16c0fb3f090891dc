#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "homlab/budget.hpp"
#include "homlab/graph.hpp"

namespace homlab {

// Location of the bundled graph corpus; the HOMLAB_CORPUS environment
// variable overrides the compiled-in default.
std::string corpus_directory();

std::vector<Graph> load_graph6_lines(const std::string& path);

struct CheckResult {
  std::string name;
  std::string module;
  int criterion = 0;  // 1-based position in the acceptance suite
  enum class Status { Pass, Fail, Inconclusive } status = Status::Fail;
  std::string detail;
  double seconds = 0;
};

struct CorpusConfig {
  std::string corpus_dir;             // empty: resolve via environment/default
  std::vector<std::string> modules;   // empty: run everything
  std::vector<int> criteria;          // empty: run everything
  std::uint64_t budget = Budget::kUnlimited;
};

// Runs the verification suites over the bundled corpus and reports one
// result per check. Failures never throw; they come back as Fail results.
std::vector<CheckResult> corpus_run(const CorpusConfig& config);

// Names and modules of all registered checks, in criterion order.
std::vector<CheckResult> corpus_checks();

}  // namespace homlab
