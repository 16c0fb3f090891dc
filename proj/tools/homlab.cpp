#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "homlab/audit.hpp"
#include "homlab/budget.hpp"
#include "homlab/cfi.hpp"
#include "homlab/corpus.hpp"
#include "homlab/errors.hpp"
#include "homlab/graph6.hpp"
#include "homlab/hom.hpp"
#include "homlab/io.hpp"
#include "homlab/oddo.hpp"
#include "homlab/spasm.hpp"
#include "homlab/treewidth.hpp"
#include "homlab/wl.hpp"

namespace {

using homlab::Budget;
using homlab::Graph;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

struct Output {
  std::string path;  // empty: stdout
  bool pretty = false;

  void emit(const json& j) const {
    std::string text = pretty ? j.dump(2) : j.dump();
    if (path.empty()) {
      std::cout << text << "\n";
    } else {
      std::ofstream out(path, std::ios::app);
      out << text << "\n";
    }
  }
};

json graph_json(const Graph& g, const std::string& format) {
  if (format == "json") return homlab::graph_to_json(g);
  return emit_graph6(g);
}

json decomposition_json(const homlab::TreeDecomposition& td) {
  json j;
  j["bags"] = td.bags;
  j["tree"] = json::array();
  for (auto [a, b] : td.tree) j["tree"].push_back({a, b});
  j["width"] = td.width;
  return j;
}

json witness_json(const homlab::WitnessPair& w, const std::string& format) {
  json j;
  j["g"] = graph_json(w.g, format);
  j["h"] = graph_json(w.h, format);
  j["base"] = graph_json(w.base, format);
  j["twist"] = w.twist;
  j["k"] = w.k;
  j["sub_g"] = w.sub_g.str();
  j["sub_h"] = w.sub_h.str();
  j["wl_not_distinguished"] = w.wl_not_distinguished;
  return j;
}

std::string rational_str(const homlab::Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

const char* status_str(homlab::SearchStatus s) {
  switch (s) {
    case homlab::SearchStatus::Found: return "found";
    case homlab::SearchStatus::ExhaustedNone: return "none";
    case homlab::SearchStatus::BudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"homlab: CFI constructions, Weisfeiler-Leman refinement, "
               "exact homomorphism/subgraph counting, and audits of which "
               "subgraph counts survive k-dimensional refinement"};
  app.require_subcommand(1);

  std::string format = "graph6";
  std::uint64_t budget_limit = Budget::kUnlimited;
  Output output;
  app.add_option("--format", format, "graph output form")
      ->check(CLI::IsMember({"graph6", "json"}));
  app.add_option("--budget", budget_limit,
                 "work budget in explored states / counted maps");
  app.add_option("--out", output.path, "append output lines to this file");
  app.add_flag("--pretty", output.pretty, "indent JSON for humans");

  std::string pattern_arg, g_arg, h_arg, target_arg, base_arg, f_arg;
  int k = 1;

  auto* cmd_audit = app.add_subcommand(
      "audit", "is sub(pattern, .) invariant at dimension k?");
  cmd_audit->add_option("pattern", pattern_arg)->required();
  cmd_audit->add_option("--k", k)->required();

  auto* cmd_witness =
      app.add_subcommand("witness", "search for a witness pair only");
  cmd_witness->add_option("pattern", pattern_arg)->required();
  cmd_witness->add_option("--k", k)->required();

  auto* cmd_verify =
      app.add_subcommand("verify", "re-check a claimed witness pair");
  cmd_verify->set_help_flag("--help");
  cmd_verify->add_option("pattern", pattern_arg)->required();
  cmd_verify->add_option("--k", k)->required();
  cmd_verify->add_option("--g", g_arg)->required();
  cmd_verify->add_option("--h", h_arg)->required();

  auto* cmd_wl = app.add_subcommand("wl", "joint k-WL comparison");
  cmd_wl->set_help_flag("--help");
  cmd_wl->add_option("--k", k)->required();
  cmd_wl->add_option("--g", g_arg)->required();
  cmd_wl->add_option("--h", h_arg)->required();

  std::string hom_mode = "auto";
  auto* cmd_hom = app.add_subcommand("hom", "exact homomorphism count");
  cmd_hom->add_option("--pattern", pattern_arg)->required();
  cmd_hom->add_option("--target", target_arg)->required();
  cmd_hom->add_option("--mode", hom_mode)
      ->check(CLI::IsMember({"auto", "brute", "td"}));

  std::string sub_mode = "brute";
  auto* cmd_sub = app.add_subcommand("sub", "exact subgraph count");
  cmd_sub->add_option("--pattern", pattern_arg)->required();
  cmd_sub->add_option("--target", target_arg)->required();
  cmd_sub->add_option("--mode", sub_mode)
      ->check(CLI::IsMember({"brute", "basis"}));

  std::vector<int> twist;
  auto* cmd_cfi = app.add_subcommand("cfi", "build a CFI graph");
  cmd_cfi->add_option("--base", base_arg)->required();
  cmd_cfi->add_option("--twist", twist, "twist vertices");

  auto* cmd_spasm =
      app.add_subcommand("spasm", "homomorphic images with treewidths");
  cmd_spasm->add_option("--pattern", pattern_arg)->required();

  auto* cmd_basis =
      app.add_subcommand("basis", "subgraph-count expansion coefficients");
  cmd_basis->add_option("--pattern", pattern_arg)->required();

  auto* cmd_tw = app.add_subcommand("tw", "exact treewidth with witness");
  cmd_tw->add_option("--g", g_arg)->required();

  auto* cmd_oddo =
      app.add_subcommand("oddo", "search for a weak oddomorphism");
  cmd_oddo->add_option("--f", f_arg)->required();
  cmd_oddo->add_option("--g", g_arg)->required();

  std::vector<std::string> modules;
  std::vector<int> criteria;
  auto* cmd_corpus =
      app.add_subcommand("corpus", "run the verification suites");
  cmd_corpus->add_option("--module", modules, "restrict to these modules");
  cmd_corpus->add_option("--criterion", criteria,
                         "restrict to these criterion numbers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Budget budget(budget_limit);
  Budget* budget_ptr =
      budget_limit == Budget::kUnlimited ? nullptr : &budget;

  try {
    if (cmd_audit->parsed()) {
      homlab::AuditReport r =
          homlab::audit(homlab::resolve_graph_arg(pattern_arg), k, budget_ptr);
      json j;
      j["pattern"] = graph_json(r.pattern, format);
      j["k"] = r.k;
      j["htw"] = r.htw;
      j["spasm"] = json::array();
      for (const auto& m : r.spasm_members)
        j["spasm"].push_back({{"graph", graph_json(m.graph, format)},
                              {"treewidth", m.treewidth}});
      j["verdict"] = to_string(r.verdict);
      if (r.witness) j["witness"] = witness_json(*r.witness, format);
      if (!r.note.empty()) j["note"] = r.note;
      j["seconds"] = r.seconds;
      output.emit(j);
      return r.verdict == homlab::AuditVerdict::Inconclusive && budget_ptr &&
                     budget_ptr->exhausted()
                 ? kExitInconclusive
                 : kExitOk;
    }

    if (cmd_witness->parsed()) {
      auto w = homlab::witness_search(homlab::resolve_graph_arg(pattern_arg),
                                      k, budget_ptr);
      json j;
      j["found"] = w.has_value();
      if (w) j["witness"] = witness_json(*w, format);
      output.emit(j);
      return kExitOk;
    }

    if (cmd_verify->parsed()) {
      bool ok = homlab::verify_witness(homlab::resolve_graph_arg(pattern_arg),
                                       k, homlab::resolve_graph_arg(g_arg),
                                       homlab::resolve_graph_arg(h_arg));
      output.emit(json{{"verified", ok}});
      return ok ? kExitOk : kExitCheckFailure;
    }

    if (cmd_wl->parsed()) {
      homlab::WlComparison cmp =
          homlab::wl_compare(homlab::resolve_graph_arg(g_arg),
                             homlab::resolve_graph_arg(h_arg), k);
      output.emit(json{{"distinguished", cmp.distinguished},
                       {"rounds", cmp.rounds},
                       {"colors_in_g", cmp.colors_in_g},
                       {"colors_in_h", cmp.colors_in_h}});
      return kExitOk;
    }

    if (cmd_hom->parsed()) {
      Graph f = homlab::resolve_graph_arg(pattern_arg);
      Graph g = homlab::resolve_graph_arg(target_arg);
      homlab::Count count;
      if (hom_mode == "brute")
        count = homlab::hom_count_bruteforce(f, g, budget_ptr);
      else if (hom_mode == "td")
        count = homlab::hom_count_td(
            f, homlab::treewidth_exact(f).decomposition, g);
      else
        count = homlab::hom_count(f, g, budget_ptr);
      output.emit(json{{"count", count.str()}});
      return kExitOk;
    }

    if (cmd_sub->parsed()) {
      Graph f = homlab::resolve_graph_arg(pattern_arg);
      Graph g = homlab::resolve_graph_arg(target_arg);
      homlab::Count count =
          sub_mode == "basis"
              ? homlab::sub_count_via_basis(homlab::sub_basis(f), g)
              : homlab::sub_count_bruteforce(f, g, budget_ptr);
      output.emit(json{{"count", count.str()}});
      return kExitOk;
    }

    if (cmd_cfi->parsed()) {
      homlab::CfiGraph cfi =
          homlab::cfi_build(homlab::resolve_graph_arg(base_arg), twist);
      json j;
      j["graph"] = graph_json(cfi.graph, format);
      j["n"] = cfi.graph.vertex_count();
      j["twist"] = cfi.twist;
      j["gadgets"] = json::array();
      for (int v = 0; v < cfi.base.vertex_count(); ++v) {
        json gadget;
        gadget["base_vertex"] = v;
        gadget["members"] = json::array();
        for (std::uint32_t mask : cfi.gadget_masks[v])
          gadget["members"].push_back(
              {{"mask", mask}, {"id", cfi.dense_id(v, mask)}});
        j["gadgets"].push_back(std::move(gadget));
      }
      output.emit(j);
      return kExitOk;
    }

    if (cmd_spasm->parsed()) {
      homlab::Spasm sp =
          homlab::spasm(homlab::resolve_graph_arg(pattern_arg));
      json j = json::array();
      for (const auto& m : sp.members)
        j.push_back({{"graph", graph_json(m.graph, format)},
                     {"treewidth", m.treewidth}});
      output.emit(j);
      return kExitOk;
    }

    if (cmd_basis->parsed()) {
      homlab::HomBasis basis =
          homlab::sub_basis(homlab::resolve_graph_arg(pattern_arg));
      json j = json::array();
      for (const auto& term : basis.terms)
        j.push_back({graph_json(term.graph, format),
                     rational_str(term.coefficient)});
      output.emit(j);
      return kExitOk;
    }

    if (cmd_tw->parsed()) {
      homlab::TreewidthResult tw =
          homlab::treewidth_exact(homlab::resolve_graph_arg(g_arg));
      output.emit(json{{"width", tw.width},
                       {"decomposition",
                        decomposition_json(tw.decomposition)}});
      return kExitOk;
    }

    if (cmd_oddo->parsed()) {
      Graph f = homlab::resolve_graph_arg(f_arg);
      Graph g = homlab::resolve_graph_arg(g_arg);
      homlab::OddoSearchResult r =
          homlab::find_weak_oddomorphism(f, g, budget_ptr);
      json j;
      j["status"] = status_str(r.status);
      j["explored"] = r.explored;
      if (r.witness) {
        json w;
        w["vertices"] = r.witness->vertices;
        w["edges"] = json::array();
        for (auto [a, b] : r.witness->edges) w["edges"].push_back({a, b});
        w["phi"] = r.witness->phi.image;
        json profile;
        // restriction profile in explicit form
        Graph sub = homlab::subgraph(f, r.witness->vertices, r.witness->edges);
        homlab::VertexMap restricted;
        restricted.domain_size = sub.vertex_count();
        restricted.codomain_size = g.vertex_count();
        for (int v : r.witness->vertices)
          restricted.image.push_back(r.witness->phi(v));
        homlab::OddnessProfile p = homlab::oddness_profile(sub, g, restricted);
        profile["odd_per_fiber"] = p.odd_per_fiber;
        profile["is_oddomorphism"] = p.is_oddomorphism;
        w["profile"] = profile;
        j["witness"] = std::move(w);
      }
      output.emit(j);
      return r.status == homlab::SearchStatus::BudgetExhausted
                 ? kExitInconclusive
                 : kExitOk;
    }

    if (cmd_corpus->parsed()) {
      homlab::CorpusConfig config;
      config.modules = modules;
      config.criteria = criteria;
      config.budget = budget_limit;
      std::vector<homlab::CheckResult> results = homlab::corpus_run(config);
      bool any_fail = false, any_inconclusive = false;
      for (const auto& r : results) {
        json j;
        j["criterion"] = r.criterion;
        j["name"] = r.name;
        j["module"] = r.module;
        j["status"] = r.status == homlab::CheckResult::Status::Pass ? "pass"
                      : r.status == homlab::CheckResult::Status::Fail
                          ? "fail"
                          : "inconclusive";
        j["seconds"] = r.seconds;
        j["detail"] = json::parse(r.detail);
        output.emit(j);
        any_fail |= r.status == homlab::CheckResult::Status::Fail;
        any_inconclusive |=
            r.status == homlab::CheckResult::Status::Inconclusive;
      }
      if (any_fail) return kExitCheckFailure;
      if (any_inconclusive) return kExitInconclusive;
      return kExitOk;
    }
  } catch (const homlab::BudgetError& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const homlab::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
  return kExitUsage;
}
