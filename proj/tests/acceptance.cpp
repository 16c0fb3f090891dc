// Acceptance suite: runs the numbered verification criteria over the
// bundled corpus and prints one pass/fail line per criterion. Exits
// nonzero when any selected criterion does not pass.

#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include <json.hpp>

#include "homlab/corpus.hpp"

int main(int argc, char** argv) {
  homlab::CorpusConfig config;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      config.criteria.push_back(std::atoi(argv[++i]));
    } else if (std::strcmp(argv[i], "--corpus") == 0 && i + 1 < argc) {
      config.corpus_dir = argv[++i];
    } else {
      std::fprintf(stderr,
                   "usage: %s [--criterion N]... [--corpus DIR]\n", argv[0]);
      return 2;
    }
  }

  std::vector<homlab::CheckResult> results = homlab::corpus_run(config);
  bool all_pass = true;
  for (const auto& r : results) {
    const char* status =
        r.status == homlab::CheckResult::Status::Pass ? "PASS"
        : r.status == homlab::CheckResult::Status::Fail ? "FAIL"
                                                        : "INCONCLUSIVE";
    std::printf("%s criterion %d: %s [%s] (%.2fs)\n", status, r.criterion,
                r.name.c_str(), r.module.c_str(), r.seconds);
    nlohmann::json detail = nlohmann::json::parse(r.detail);
    if (r.status != homlab::CheckResult::Status::Pass) {
      all_pass = false;
      for (const auto& failure : detail["failures"])
        std::printf("    %s\n", failure.get<std::string>().c_str());
    }
    if (!detail["facts"].empty())
      std::printf("    facts: %s\n", detail["facts"].dump().c_str());
  }
  return all_pass ? 0 : 1;
}
