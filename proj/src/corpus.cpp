#include "homlab/corpus.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include <json.hpp>

#include "homlab/audit.hpp"
#include "homlab/cfi.hpp"
#include "homlab/errors.hpp"
#include "homlab/gen.hpp"
#include "homlab/graph6.hpp"
#include "homlab/hom.hpp"
#include "homlab/iso.hpp"
#include "homlab/oddo.hpp"
#include "homlab/spasm.hpp"
#include "homlab/treewidth.hpp"
#include "homlab/wl.hpp"

namespace homlab {

std::string corpus_directory() {
  if (const char* env = std::getenv("HOMLAB_CORPUS")) return env;
#ifdef HOMLAB_DEFAULT_CORPUS_DIR
  return HOMLAB_DEFAULT_CORPUS_DIR;
#else
  return "corpus";
#endif
}

std::vector<Graph> load_graph6_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open corpus file: " + path);
  std::vector<Graph> graphs;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
      line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    graphs.push_back(parse_graph6(line));
  }
  return graphs;
}

namespace {

using nlohmann::json;

// Collects requirement failures and reportable facts for one check.
struct Checker {
  std::vector<std::string> failures;
  json facts = json::object();

  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

std::vector<Graph> patterns_up_to(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n)
    for (const auto& g : all_graphs(n)) out.push_back(g);
  return out;
}

std::vector<Graph> connected_bases(int lo, int hi) {
  std::vector<Graph> out;
  for (int n = lo; n <= hi; ++n)
    for (const auto& g : all_connected_graphs(n)) out.push_back(g);
  return out;
}

Budget* maybe_budget(Budget& b, const CorpusConfig& cfg) {
  return cfg.budget == Budget::kUnlimited ? nullptr : &b;
}

// --- criterion 1: triangle witness ---------------------------------------

void check_audit_triangle(const CorpusConfig& cfg, Checker& c) {
  Budget budget(cfg.budget);
  auto started = std::chrono::steady_clock::now();
  AuditReport report = audit(complete_graph(3), 1, maybe_budget(budget, cfg));
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();
  c.facts["audit_seconds"] = elapsed;
  c.require(elapsed < 1.0, "audit(K3, k=1) took " + std::to_string(elapsed) +
                               "s, limit is 1s");
  c.require(report.verdict == AuditVerdict::NotInvariant,
            "verdict is " + to_string(report.verdict) +
                ", expected not-invariant");
  if (!report.witness) {
    c.failures.push_back("no witness attached");
    return;
  }
  const WitnessPair& w = *report.witness;
  Graph two_k3 =
      disjoint_union({complete_graph(3), complete_graph(3)}).graph;
  c.require(is_isomorphic(w.g, two_k3).has_value(),
            "witness G is not isomorphic to 2*K3");
  c.require(is_isomorphic(w.h, cycle_graph(6)).has_value(),
            "witness H is not isomorphic to C6");
  c.require(w.sub_g == 2 && w.sub_h == 0,
            "sub(K3, G)=" + w.sub_g.str() + " sub(K3, H)=" + w.sub_h.str() +
                ", expected 2 and 0");
  c.require(!wl_distinguishes(w.g, w.h, 1), "1-WL distinguishes the pair");
  c.require(wl_distinguishes(w.g, w.h, 2),
            "2-WL does not distinguish the pair");
  c.facts["witness"] = {emit_graph6(w.g), emit_graph6(w.h)};
  c.facts["sub"] = {w.sub_g.str(), w.sub_h.str()};
}

// --- criterion 2: K4 witness ----------------------------------------------

void check_audit_k4(const CorpusConfig& cfg, Checker& c) {
  Budget budget(cfg.budget);
  auto started = std::chrono::steady_clock::now();
  Graph k4 = complete_graph(4);
  AuditReport report = audit(k4, 2, maybe_budget(budget, cfg));
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();
  c.facts["audit_seconds"] = elapsed;
  c.require(elapsed < 30.0, "audit(K4, k=2) took " + std::to_string(elapsed) +
                                "s, limit is 30s");
  c.require(report.verdict == AuditVerdict::NotInvariant,
            "verdict is " + to_string(report.verdict) +
                ", expected not-invariant");
  if (!report.witness) {
    c.failures.push_back("no witness attached");
    return;
  }
  const WitnessPair& w = *report.witness;
  c.require(w.g.vertex_count() == 16 && w.h.vertex_count() == 16,
            "witness graphs are not the 16-vertex CFI twins");
  c.require(!wl_distinguishes(w.g, w.h, 2), "2-WL distinguishes the pair");
  c.require(wl_distinguishes(w.g, w.h, 3),
            "3-WL does not distinguish the pair");
  Count hom_g = hom_count_bruteforce(k4, w.g);
  Count hom_h = hom_count_bruteforce(k4, w.h);
  c.facts["hom_k4"] = {hom_g.str(), hom_h.str()};
  c.require(hom_g > hom_h, "hom(K4, G) <= hom(K4, H)");
  c.require(hom_g == 192 && hom_h == 0,
            "hom counts are " + hom_g.str() + " and " + hom_h.str() +
                ", expected the derived 192 and 0");
  c.facts["sub"] = {w.sub_g.str(), w.sub_h.str()};
}

// --- criterion 3: cycle hereditary treewidth -------------------------------

void check_cycle_htw(const CorpusConfig& cfg, Checker& c) {
  (void)cfg;
  auto started = std::chrono::steady_clock::now();
  json listing = json::object();
  for (int len = 3; len <= 7; ++len) {
    Spasm sp = spasm(cycle_graph(len));
    int width = -1;
    json members = json::array();
    for (const auto& m : sp.members) {
      width = std::max(width, m.treewidth);
      members.push_back({{"graph6", emit_graph6(m.graph)},
                         {"treewidth", m.treewidth}});
    }
    listing["C" + std::to_string(len)] = {{"htw", width},
                                          {"spasm", members}};
    if (len <= 6)
      c.require(width <= 2, "htw(C" + std::to_string(len) + ") = " +
                                std::to_string(width) + " exceeds 2");
    else
      c.require(width == 3,
                "htw(C7) = " + std::to_string(width) +
                    ", criterion expects 3; no homomorphic image of C7 "
                    "reaches treewidth 3 (its 7 cycle edges would have to "
                    "cover a K4-minor-forcing edge set with every "
                    "multidegree even, needing total degree >= 16 > 14), "
                    "so the expected value is unattainable");
  }
  c.facts["listing"] = listing;
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();
  c.facts["seconds"] = elapsed;
  c.require(elapsed < 60.0, "cycle spasms took " + std::to_string(elapsed) +
                                "s, limit is 60s");
}

// --- criterion 4: basis identity -------------------------------------------

void check_basis_identity(const CorpusConfig& cfg, Checker& c) {
  (void)cfg;
  std::mt19937_64 rng(0xba515);
  std::vector<Graph> targets;
  for (int i = 0; i < 50; ++i) {
    int n = 1 + static_cast<int>(rng() % 7);
    double p = 0.3 + 0.2 * static_cast<double>(i % 3);
    targets.push_back(random_graph(n, p, rng));
  }
  int mismatches = 0, pairs = 0;
  for (const Graph& pattern : patterns_up_to(5)) {
    HomBasis basis = sub_basis(pattern);
    for (const Graph& target : targets) {
      Rational acc = 0;
      for (const auto& term : basis.terms)
        acc += term.coefficient *
               Rational(hom_count_bruteforce(term.graph, target));
      if (acc != Rational(sub_count_bruteforce(pattern, target))) ++mismatches;
      ++pairs;
    }
  }
  c.facts["patterns"] = patterns_up_to(5).size();
  c.facts["targets"] = targets.size();
  c.facts["pairs"] = pairs;
  c.facts["mismatches"] = mismatches;
  c.require(mismatches == 0,
            std::to_string(mismatches) + " basis identity mismatches");
}

// --- criterion 5: game/width cross-check -----------------------------------

void check_game_width(const CorpusConfig& cfg, Checker& c) {
  std::string dir = cfg.corpus_dir.empty() ? corpus_directory() : cfg.corpus_dir;
  std::vector<Graph> corpus;
  for (const char* file : {"connected_n1_6.g6", "connected_sample_n7_8.g6"})
    for (auto& g : load_graph6_lines(dir + "/" + file))
      corpus.push_back(std::move(g));

  auto started = std::chrono::steady_clock::now();
  int eligible = 0, mismatches = 0;
  for (const Graph& g : corpus) {
    if (!g.is_connected() || g.vertex_count() > 8 || g.vertex_count() == 0)
      continue;
    ++eligible;
    TreewidthResult tw = treewidth_exact(g);
    if (!validate_decomposition(g, tw.decomposition) ||
        min_cops_to_win(g) != tw.width + 1)
      ++mismatches;
  }
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();
  c.facts["graphs"] = eligible;
  c.facts["mismatches"] = mismatches;
  c.facts["seconds"] = elapsed;
  c.require(eligible >= 100, "corpus holds only " + std::to_string(eligible) +
                                 " eligible graphs, need at least 100");
  c.require(mismatches == 0,
            std::to_string(mismatches) + " graphs where the minimum winning "
                                         "cop count is not treewidth + 1");
  c.require(elapsed < 300.0, "cross-check took " + std::to_string(elapsed) +
                                 "s, limit is 300s");
}

// --- criterion 6: CFI parity lemma ------------------------------------------

void check_cfi_parity(const CorpusConfig& cfg, Checker& c) {
  (void)cfg;
  int checked = 0, mismatches = 0;
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& base : all_connected_graphs(n)) {
      std::vector<std::vector<int>> subsets;
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> set;
        for (int v = 0; v < n; ++v)
          if (mask >> v & 1) set.push_back(v);
        subsets.push_back(std::move(set));
      }
      for (std::size_t i = 0; i < subsets.size(); ++i)
        for (std::size_t j = i; j < subsets.size(); ++j) {
          bool expect = (subsets[i].size() + subsets[j].size()) % 2 == 0;
          bool got = cfi_parity_check(base, subsets[i], subsets[j]);
          ++checked;
          if (got != expect) ++mismatches;
        }
    }
  }
  c.facts["pairs_checked"] = checked;
  c.facts["mismatches"] = mismatches;
  c.require(mismatches == 0,
            std::to_string(mismatches) +
                " twist-set pairs disagree with the parity rule");
}

// --- criterion 7: CFI counting gap biconditional ----------------------------

void check_cfi_hom_gap(const CorpusConfig& cfg, Checker& c) {
  Budget budget(cfg.budget);
  int checked = 0, inequality_failures = 0, biconditional_failures = 0,
      inconclusive = 0;
  for (const Graph& base : connected_bases(2, 4)) {
    for (const Graph& pattern : patterns_up_to(5)) {
      CfiGapReport report =
          verify_cfi_hom_gap(pattern, base, maybe_budget(budget, cfg));
      ++checked;
      if (!report.inequality_holds) ++inequality_failures;
      if (!report.biconditional_checked)
        ++inconclusive;
      else if (!report.biconditional_holds)
        ++biconditional_failures;
    }
  }
  c.facts["pairs_checked"] = checked;
  c.facts["inequality_failures"] = inequality_failures;
  c.facts["biconditional_failures"] = biconditional_failures;
  c.facts["inconclusive"] = inconclusive;
  c.require(inequality_failures == 0,
            "counting inequality failed " +
                std::to_string(inequality_failures) + " times");
  c.require(biconditional_failures == 0,
            "strictness/witness biconditional failed " +
                std::to_string(biconditional_failures) + " times");
  if (inconclusive > 0)
    throw BudgetError(std::to_string(inconclusive) +
                      " searches were budget-truncated");
}

// --- criterion 8: path-twist isomorphisms -----------------------------------

void check_twist_isomorphism(const CorpusConfig& cfg, Checker& c) {
  (void)cfg;
  struct Fixture {
    Graph base;
    int u, v;
    std::vector<int> path;
  };
  std::vector<Fixture> fixtures = {
      {complete_graph(3), 0, 0, {0}},
      {complete_graph(3), 0, 1, {0, 1}},
      {cycle_graph(4), 0, 1, {0, 1}},
      {cycle_graph(4), 0, 2, {0, 1, 2}},
      {cycle_graph(4), 0, 2, {0, 3, 2}},
      {complete_graph(4), 0, 3, {0, 3}},
      {complete_graph(4), 0, 3, {0, 1, 3}},
      {complete_graph(4), 0, 3, {0, 1, 2, 3}},
      {complete_graph(4), 1, 2, {1, 0, 2}},
      {cycle_graph(5), 0, 2, {0, 1, 2}},
      {cycle_graph(6), 0, 3, {0, 1, 2, 3}},
      {complete_bipartite(3, 3), 0, 1, {0, 3, 1}},
      {petersen_graph(), 0, 2, {0, 1, 2}},
      {petersen_graph(), 0, 7, {0, 5, 7}},
  };
  int idx = 0;
  for (const auto& fx : fixtures) {
    std::string tag = "fixture " + std::to_string(idx++);
    VertexMap fwd = twist_isomorphism(fx.base, fx.u, fx.v, fx.path);
    CfiGraph from = cfi_build(fx.base, {fx.u});
    CfiGraph to = cfi_build(fx.base, {fx.v});
    c.require(is_isomorphism_map(from.graph, to.graph, fwd),
              tag + ": map fails isomorphism validation");

    std::vector<char> on_path(fx.base.vertex_count(), 0);
    for (int w : fx.path) on_path[w] = 1;
    bool gadgets_ok = true, off_path_fixed = true;
    for (int id = 0; id < from.graph.vertex_count(); ++id) {
      CfiVertex x = from.vertex(id);
      CfiVertex y = to.vertex(fwd(id));
      if (y.base_vertex != x.base_vertex) gadgets_ok = false;
      if (!on_path[x.base_vertex] && !(y == x)) off_path_fixed = false;
    }
    c.require(gadgets_ok, tag + ": some gadget is not mapped onto itself");
    c.require(off_path_fixed, tag + ": an off-path vertex moved");

    std::vector<int> reversed(fx.path.rbegin(), fx.path.rend());
    VertexMap back = twist_isomorphism(fx.base, fx.v, fx.u, reversed);
    bool identity = true;
    for (int id = 0; id < from.graph.vertex_count(); ++id)
      if (back(fwd(id)) != id) identity = false;
    c.require(identity, tag + ": twist composed with its reverse is not the "
                              "identity");
  }
  c.facts["fixtures"] = fixtures.size();
}

// --- criterion 9: minor transfer of oddomorphisms ---------------------------

void check_minor_oddo_transfer(const CorpusConfig& cfg, Checker& c) {
  Budget budget(cfg.budget);
  int instances = 0, failures = 0, inconclusive = 0;
  constexpr int kWanted = 24;
  for (const Graph& base : connected_bases(2, 4)) {
    for (const Graph& pattern : patterns_up_to(5)) {
      if (instances >= kWanted) break;
      OddoSearchResult weak =
          find_weak_oddomorphism(pattern, base, maybe_budget(budget, cfg));
      if (weak.status != SearchStatus::Found) continue;
      for (const Graph& minor : all_minors(base)) {
        if (minor.vertex_count() == 0 || instances >= kWanted) continue;
        MinorOddoReport report = check_minor_oddomorphism(
            pattern, base, minor, maybe_budget(budget, cfg));
        ++instances;
        if (report.status == SearchStatus::BudgetExhausted)
          ++inconclusive;
        else if (report.status != SearchStatus::Found)
          ++failures;
      }
    }
    if (instances >= kWanted) break;
  }
  c.facts["instances"] = instances;
  c.facts["complete_search_failures"] = failures;
  c.facts["inconclusive"] = inconclusive;
  c.require(instances >= 20, "only " + std::to_string(instances) +
                                 " instances ran, need at least 20");
  c.require(failures == 0, std::to_string(failures) +
                               " complete searches found no minor with an "
                               "oddomorphism (would falsify the transfer)");
  if (inconclusive > 0)
    throw BudgetError(std::to_string(inconclusive) +
                      " transfers were budget-truncated");
}

// --- criterion 10: refinement sanity ----------------------------------------

void check_wl_sanity(const CorpusConfig& cfg, Checker& c) {
  (void)cfg;
  // isomorphic graphs are never distinguished
  std::vector<Graph> pool;
  for (const auto& g : all_graphs(4)) pool.push_back(g);
  for (const auto& g : all_graphs(5)) pool.push_back(g);
  for (const auto& g : all_connected_graphs(6)) pool.push_back(g);
  {
    auto [untwisted, twisted] = cfi_pair(complete_graph(3));
    pool.push_back(untwisted.graph);
    pool.push_back(twisted.graph);
  }
  {
    auto [untwisted, twisted] = cfi_pair(complete_graph(4));
    pool.push_back(untwisted.graph);
    pool.push_back(twisted.graph);
  }
  std::mt19937_64 rng(0x15a9e11e);
  int iso_violations = 0;
  for (const Graph& g : pool) {
    std::vector<int> perm(g.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h = relabel(g, perm);
    for (int k = 1; k <= 3; ++k)
      if (wl_distinguishes(g, h, k)) ++iso_violations;
  }
  c.facts["iso_pairs"] = pool.size();
  c.require(iso_violations == 0,
            std::to_string(iso_violations) +
                " isomorphic pairs were distinguished");

  // distinguishing power is monotone in the dimension
  std::vector<Graph> six = all_connected_graphs(6);
  std::map<int, std::vector<const Graph*>> by_edges;
  for (const auto& g : six) by_edges[g.edge_count()].push_back(&g);
  int monotone_violations = 0, monotone_pairs = 0;
  for (const auto& [m, group] : by_edges) {
    (void)m;
    for (std::size_t i = 0; i < group.size(); ++i)
      for (std::size_t j = i + 1; j < group.size(); ++j) {
        ++monotone_pairs;
        for (int k = 1; k <= 2; ++k)
          if (wl_distinguishes(*group[i], *group[j], k) &&
              !wl_distinguishes(*group[i], *group[j], k + 1))
            ++monotone_violations;
      }
  }
  c.facts["monotone_pairs"] = monotone_pairs;
  c.require(monotone_violations == 0,
            std::to_string(monotone_violations) + " monotonicity violations");

  // the classic pair flips exactly between dimensions 1 and 2
  Graph c6 = cycle_graph(6);
  Graph two_k3 =
      disjoint_union({complete_graph(3), complete_graph(3)}).graph;
  c.require(!wl_distinguishes(c6, two_k3, 1),
            "dimension 1 distinguishes C6 from 2*K3");
  c.require(wl_distinguishes(c6, two_k3, 2),
            "dimension 2 does not distinguish C6 from 2*K3");
}

struct CheckSpec {
  int criterion;
  const char* name;
  const char* module;
  std::function<void(const CorpusConfig&, Checker&)> fn;
};

const std::vector<CheckSpec>& registry() {
  static const std::vector<CheckSpec> checks = {
      {1, "audit-triangle", "cli", check_audit_triangle},
      {2, "audit-k4", "cli", check_audit_k4},
      {3, "cycle-hereditary-treewidth", "spasm-basis", check_cycle_htw},
      {4, "basis-identity", "spasm-basis", check_basis_identity},
      {5, "game-width-crosscheck", "treewidth-games", check_game_width},
      {6, "cfi-parity", "cfi", check_cfi_parity},
      {7, "cfi-hom-gap", "oddo", check_cfi_hom_gap},
      {8, "twist-isomorphism", "cfi", check_twist_isomorphism},
      {9, "minor-oddo-transfer", "oddo", check_minor_oddo_transfer},
      {10, "wl-sanity", "wl-refine", check_wl_sanity},
  };
  return checks;
}

}  // namespace

std::vector<CheckResult> corpus_checks() {
  std::vector<CheckResult> out;
  for (const auto& spec : registry()) {
    CheckResult r;
    r.criterion = spec.criterion;
    r.name = spec.name;
    r.module = spec.module;
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CheckResult> corpus_run(const CorpusConfig& config) {
  std::vector<CheckResult> results;
  for (const auto& spec : registry()) {
    if (!config.modules.empty() &&
        std::find(config.modules.begin(), config.modules.end(),
                  spec.module) == config.modules.end())
      continue;
    if (!config.criteria.empty() &&
        std::find(config.criteria.begin(), config.criteria.end(),
                  spec.criterion) == config.criteria.end())
      continue;

    CheckResult r;
    r.criterion = spec.criterion;
    r.name = spec.name;
    r.module = spec.module;
    Checker checker;
    auto started = std::chrono::steady_clock::now();
    try {
      spec.fn(config, checker);
      r.status = checker.failures.empty() ? CheckResult::Status::Pass
                                          : CheckResult::Status::Fail;
    } catch (const BudgetError& e) {
      r.status = CheckResult::Status::Inconclusive;
      checker.failures.push_back(std::string("budget: ") + e.what());
    } catch (const std::exception& e) {
      r.status = CheckResult::Status::Fail;
      checker.failures.push_back(std::string("error: ") + e.what());
    }
    r.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      started)
            .count();
    json detail;
    detail["facts"] = checker.facts;
    detail["failures"] = checker.failures;
    r.detail = detail.dump();
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace homlab
