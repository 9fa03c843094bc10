// Copyright 2026 The partex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cli/report.hpp"
#include "partex/analysis.hpp"
#include "partex/base_sunflower.hpp"
#include "partex/cli.hpp"
#include "partex/constructions.hpp"
#include "partex/error.hpp"
#include "partex/family_io.hpp"
#include "partex/search.hpp"
#include "partex/shifting.hpp"
#include "partex/verify.hpp"

namespace partex::cli {
namespace {

struct Common {
  bool json = false;
  std::uint64_t seed = 1;
};

struct SpecArgs {
  int r = 0;
  int n = 0;
  std::vector<int> sizes;

  PartSpec build() const {
    if (!sizes.empty()) {
      if (r != 0 && r != static_cast<int>(sizes.size())) {
        throw InvalidArgument("--r " + std::to_string(r) + " disagrees with --sizes of length " +
                              std::to_string(sizes.size()));
      }
      return PartSpec(sizes);
    }
    if (r == 0 || n == 0) throw InvalidArgument("give either --sizes or both --r and --n");
    return PartSpec::uniform(r, n);
  }
};

void add_spec_options(CLI::App* cmd, SpecArgs& a) {
  cmd->add_option("--r", a.r, "number of parts");
  cmd->add_option("--n", a.n, "common part size");
  cmd->add_option("--sizes", a.sizes, "part sizes, comma separated")->delimiter(',');
}

std::string edges_text(const std::vector<Edge>& edges) {
  std::string s;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) s += " ";
    s += edges[i].to_string();
  }
  return s;
}

std::string vertices_text(const std::vector<Vertex>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += " ";
    s += vs[i].to_string();
  }
  return s;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidArgument("cannot write '" + path + "'");
  f << text;
}

// ---- construct ----

struct ConstructArgs {
  std::string name;
  SpecArgs spec;
  int s = 0;
  int t = 0;
  std::string out;
};

int cmd_construct(const ConstructArgs& a, Report& rep, std::ostream& out, std::ostream& err, const Common& c) {
  const PartSpec spec = a.spec.build();
  int param = 0;
  if (a.name == "E") {
    if (a.s == 0) throw InvalidArgument("E needs --s");
    param = a.s;
  } else if (a.name == "W_rt" || a.name == "K_rt") {
    if (a.t == 0) throw InvalidArgument(a.name + " needs --t");
    param = a.t;
  }
  const Family f = construct_by_name(a.name, spec, param);
  const std::string text = format_family(f);
  rep.parameters["name"] = a.name;
  rep.parameters["sizes"] = std::vector<int>(spec.sizes().begin(), spec.sizes().end());
  if (a.name == "E") rep.parameters["s"] = param;
  if (a.name == "W_rt" || a.name == "K_rt") rep.parameters["t"] = param;
  rep.results["size"] = f.size();
  rep.text.push_back("construction " + a.name + " " + spec.to_string() + (param ? " param=" + std::to_string(param) : ""));
  rep.text.push_back("size " + std::to_string(f.size()));
  if (spec.is_uniform()) {
    const FormulaValue fv = construction_formula(a.name, spec, param);
    rep.results["formula"] = fv.name;
    rep.results["formula_value"] = fv.value.str();
    rep.results["formula_equal"] = fv.value == BigInt(static_cast<long>(f.size()));
    rep.text.push_back("formula " + fv.name + " = " + fv.value.str() +
                       (fv.value == BigInt(static_cast<long>(f.size())) ? " (equal)" : " (differs)"));
  }
  if (a.out.empty()) {
    // Family text on stdout, summary on stderr.
    out << text;
    rep.emit(err, false);
    return kExitOk;
  }
  write_text_file(a.out, text);
  rep.results["out"] = a.out;
  rep.text.push_back("wrote " + a.out);
  rep.emit(out, c.json);
  return kExitOk;
}

// ---- analyze ----

struct AnalyzeArgs {
  std::string path;
  int s = 0;
  int t = 0;
};

int cmd_analyze(const AnalyzeArgs& a, Report& rep, std::ostream& out, const Common& c) {
  const Family f = load_family(a.path);
  const AnalysisReport ar = analyze(f);
  rep.parameters["path"] = a.path;
  rep.parameters["sizes"] = std::vector<int>(f.spec().sizes().begin(), f.spec().sizes().end());
  rep.results["edges"] = f.size();
  rep.results["nu"] = ar.nu;
  rep.results["tau"] = ar.tau;
  rep.results["min_pairwise_intersection"] = ar.min_pairwise_intersection;
  rep.results["fixed_coordinates"] = ar.fixed_coords ? Json(ar.fixed_coords->parts()) : Json(nullptr);
  std::vector<std::string> mw;
  for (const Edge& e : ar.nu_witness.edges) mw.push_back(e.to_string());
  std::vector<std::string> tw;
  for (const Vertex& v : ar.tau_witness.vertices) tw.push_back(v.to_string());
  rep.results["matching_witness"] = mw;
  rep.results["transversal_witness"] = tw;
  rep.text.push_back("family " + f.spec().to_string() + " with " + std::to_string(f.size()) + " edges");
  rep.text.push_back("nu=" + std::to_string(ar.nu) + " tau=" + std::to_string(ar.tau));
  rep.text.push_back("min pairwise intersection " + std::to_string(ar.min_pairwise_intersection));
  rep.text.push_back("fixed coordinates " + (ar.fixed_coords ? ar.fixed_coords->to_string() : std::string("undefined")));
  rep.text.push_back("maximum matching " + edges_text(ar.nu_witness.edges));
  rep.text.push_back("minimum transversal " + vertices_text(ar.tau_witness.vertices));
  if (a.s > 0) {
    const bool nt = is_nontrivial_matching_family(f, a.s);
    rep.parameters["s"] = a.s;
    rep.results["nontrivial_matching"] = nt;
    rep.text.push_back("non-trivial for s=" + std::to_string(a.s) + " (nu <= s < tau): " + yes_no(nt));
  }
  if (a.t > 0) {
    const bool inter = is_t_intersecting(f, a.t);
    const bool nt = a.t < f.spec().r() && is_nontrivial_intersecting_family(f, a.t);
    rep.parameters["t"] = a.t;
    rep.results["t_intersecting"] = inter;
    rep.results["nontrivial_intersecting"] = nt;
    rep.text.push_back(std::to_string(a.t) + "-intersecting: " + yes_no(inter) + ", non-trivial: " + yes_no(nt));
  }
  rep.emit(out, c.json);
  return kExitOk;
}

// ---- shift ----

struct ShiftArgs {
  std::string path;
  int t = 1;
  int part = 0;
  int symbol = 0;
  std::string out;
};

int cmd_shift(const ShiftArgs& a, Report& rep, std::ostream& out, const Common& c) {
  const Family f = load_family(a.path);
  rep.parameters["path"] = a.path;
  rep.parameters["t"] = a.t;
  int code = kExitOk;
  Family result = f;
  if (a.part != 0 || a.symbol != 0) {
    const ShiftOutcome so = apply_shift(f, a.part, a.symbol);
    rep.parameters["part"] = a.part;
    rep.parameters["symbol"] = a.symbol;
    rep.results["moved"] = so.moved_count;
    rep.results["blocked"] = so.blocked_count;
    rep.results["size"] = so.family.size();
    rep.text.push_back("shift part " + std::to_string(a.part) + " symbol " + std::to_string(a.symbol) + " -> 1: moved " +
                       std::to_string(so.moved_count) + ", blocked " + std::to_string(so.blocked_count));
    result = so.family;
  } else {
    const ClosureResult cr = shift_closure_preserving_nontriviality(f, a.t);
    const StructureReport sr = verify_structure_lemmas(cr.family, a.t);
    rep.results["steps"] = cr.steps;
    rep.results["size"] = cr.family.size();
    rep.results["shifted_parts"] = cr.report.shifted_parts;
    Json res = Json::object();
    for (const auto& [part, x] : cr.report.resistant_parts) res[std::to_string(part)] = x;
    rep.results["resistant_parts"] = res;
    rep.results["coordinatewise_shifted"] = sr.coordinatewise_shifted;
    Json checks = Json::array();
    rep.text.push_back("closure: " + std::to_string(cr.steps) + " shifts, size " + std::to_string(cr.family.size()));
    std::string parts;
    for (int p : cr.report.shifted_parts) parts += " " + std::to_string(p);
    rep.text.push_back("shifted parts:" + (parts.empty() ? std::string(" none") : parts));
    for (const auto& [part, x] : cr.report.resistant_parts)
      rep.text.push_back("resistant part " + std::to_string(part) + " via symbol " + std::to_string(x));
    for (const auto* list : {&sr.structural, &sr.bounds}) {
      for (const auto& chk : *list) {
        checks.push_back(Json{{"name", chk.name}, {"passed", chk.passed}, {"detail", chk.detail}});
        rep.text.push_back(std::string(chk.passed ? "PASS " : "FAIL ") + chk.name + (chk.detail.empty() ? "" : " [" + chk.detail + "]"));
      }
    }
    rep.results["checks"] = checks;
    if (!sr.all_passed()) code = kExitContradiction;
    result = cr.family;
  }
  if (!a.out.empty()) {
    write_text_file(a.out, format_family(result));
    rep.results["out"] = a.out;
    rep.text.push_back("wrote " + a.out);
  } else {
    rep.results["family"] = format_family(result);
    std::istringstream lines(format_family(result));
    for (std::string line; std::getline(lines, line);) rep.text.push_back(line);
  }
  rep.emit(out, c.json);
  return code;
}

// ---- base ----

struct BaseArgs {
  std::string path;
  int s = 1;
  std::string log;
};

int cmd_base(const BaseArgs& a, Report& rep, std::ostream& out, const Common& c) {
  const Family f = load_family(a.path);
  const PartiteBaseReport br = base_of_partite_family(f, a.s);
  rep.parameters["path"] = a.path;
  rep.parameters["s"] = a.s;
  std::vector<std::string> sets;
  for (const auto& set : br.base.sets) {
    std::string s = "{";
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (i) s += ",";
      s += tagged_vertex(set[i]).to_string();
    }
    sets.push_back(s + "}");
  }
  rep.results["base"] = sets;
  rep.results["base_size"] = br.base.sets.size();
  rep.results["size_distribution"] = br.base.size_distribution();
  rep.results["nu_family"] = br.nu_family;
  rep.results["nu_base"] = br.nu_base;
  rep.results["tau_base"] = br.tau_base;
  rep.results["sunflower_with_rs_plus_1_petals"] = br.has_large_sunflower;
  rep.results["size_bound"] = br.size_bound.str();
  rep.results["lemma_holds"] = br.lemma_holds();
  rep.results["shrink_steps"] = br.base.provenance.size();
  rep.text.push_back("base of " + std::to_string(f.size()) + " edges: " + std::to_string(br.base.sets.size()) + " sets");
  for (const auto& s : sets) rep.text.push_back("  " + s);
  rep.text.push_back("nu(F)=" + std::to_string(br.nu_family) + " nu(B)=" + std::to_string(br.nu_base) +
                     " tau(B)=" + std::to_string(br.tau_base));
  rep.text.push_back("sunflower with rs+1 petals: " + yes_no(br.has_large_sunflower));
  rep.text.push_back("|B| <= " + br.size_bound.str() + ": " + yes_no(BigInt(static_cast<long>(br.base.sets.size())) <= br.size_bound));
  rep.text.push_back(std::string("base properties: ") + (br.lemma_holds() ? "PASS" : "FAIL"));
  if (!a.log.empty()) {
    write_text_file(a.log, br.base.provenance_json_lines());
    rep.results["log"] = a.log;
  }
  rep.emit(out, c.json);
  return br.lemma_holds() ? kExitOk : kExitContradiction;
}

// ---- search ----

struct SearchArgs {
  std::string mode;
  SpecArgs spec;
  int s = 0;
  int t = 0;
  bool no_symmetry = false;
  int threads = 1;
  std::uint64_t node_limit = 0;
  bool seed_construction = false;
  std::string out;
};

int cmd_search(const SearchArgs& a, Report& rep, std::ostream& out, const Common& c) {
  const PartSpec spec = a.spec.build();
  SearchProblem p = a.mode == "matching" ? SearchProblem::matching(spec, a.s) : SearchProblem::intersecting(spec, a.t);
  if (a.mode != "matching" && a.mode != "intersecting") throw InvalidArgument("--mode must be matching or intersecting");
  SearchOptions opt;
  opt.symmetry = !a.no_symmetry;
  opt.threads = a.threads;
  opt.seed_with_construction = a.seed_construction;
  if (a.node_limit) opt.node_limit = a.node_limit;
  const SearchResult sr = solve(p, opt);
  rep.parameters["mode"] = a.mode;
  rep.parameters["sizes"] = std::vector<int>(spec.sizes().begin(), spec.sizes().end());
  rep.parameters[a.mode == "matching" ? "s" : "t"] = p.param;
  rep.parameters["symmetry"] = opt.symmetry;
  rep.parameters["node_limit"] = opt.node_limit;
  rep.results["optimum"] = sr.optimum;
  rep.results["exhaustive"] = sr.exhaustive;
  std::string verdict = "NO_FORMULA";
  if (sr.matched_formula) {
    if (!sr.exhaustive) verdict = to_string(Verdict::kInconclusive);
    else if (sr.matched_formula->equal) verdict = to_string(Verdict::kEqual);
    else verdict = to_string(BigInt(sr.optimum) < sr.matched_formula->value ? Verdict::kSearchBelowFormula
                                                                            : Verdict::kSearchAboveFormula);
    rep.results["formula"] = sr.matched_formula->name;
    rep.results["formula_value"] = sr.matched_formula->value.str();
  }
  rep.results["verdict"] = verdict;
  // Thread interleaving changes the node count, so it stays out of the
  // deterministic body unless the run was single-threaded.
  if (opt.threads == 1) rep.results["nodes"] = sr.nodes_explored;
  rep.results["witness_canonical_exact"] = sr.witness_canonical_exact;
  rep.text.push_back("search " + p.to_string());
  rep.text.push_back("optimum " + std::to_string(sr.optimum) + (sr.exhaustive ? " (proven)" : " (budget exhausted, lower bound)"));
  if (sr.matched_formula) rep.text.push_back("formula " + sr.matched_formula->name + " = " + sr.matched_formula->value.str() + ": " + verdict);
  if (opt.threads == 1) rep.text.push_back("nodes " + std::to_string(sr.nodes_explored));
  const std::string text = format_family(sr.witness);
  if (!a.out.empty()) {
    write_text_file(a.out, text);
    rep.results["out"] = a.out;
    rep.text.push_back("wrote " + a.out);
  } else {
    rep.results["witness"] = text;
    rep.text.push_back("witness:");
    std::istringstream lines(text);
    for (std::string line; std::getline(lines, line);) rep.text.push_back(line);
  }
  rep.emit(out, c.json);
  return kExitOk;
}

// ---- verify-theorems ----

struct VerifyArgs {
  std::string suite = "all-n";
  std::uint64_t max_vectors = 100;
  int max_n = 4;
  int max_r = 6;
  int threads = 1;
  std::uint64_t node_limit = 0;
};

int cmd_verify(const VerifyArgs& a, Report& rep, std::ostream& out, std::ostream& err, const Common& c) {
  SuiteOptions opt;
  opt.max_vectors = a.max_vectors;
  opt.max_n = a.max_n;
  opt.max_r = a.max_r;
  opt.search.threads = a.threads;
  if (a.node_limit) opt.search.node_limit = a.node_limit;
  const auto rows = run_suite(a.suite, opt);
  rep.parameters["suite"] = a.suite;
  rep.parameters["max_vectors"] = a.max_vectors;
  rep.parameters["max_n"] = a.max_n;
  rep.parameters["max_r"] = a.max_r;
  Json jrows = Json::array();
  std::vector<std::vector<std::string>> table;
  int contradictions = 0;
  int warnings = 0;
  for (const auto& r : rows) {
    Json j{{"suite", r.suite}, {"id", r.id},           {"params", r.params},
           {"status", r.status}, {"expected", r.expected}, {"observed", r.observed},
           {"contradiction", r.contradiction}, {"note", r.note}};
    if (a.threads == 1) j["nodes"] = r.nodes;
    jrows.push_back(j);
    table.push_back({r.suite, r.id, r.params, r.status, r.expected, r.observed, r.note});
    contradictions += r.contradiction;
    warnings += r.warning;
  }
  rep.results["rows"] = jrows;
  rep.results["contradictions"] = contradictions;
  rep.results["warnings"] = warnings;
  rep.text = format_table({"suite", "id", "params", "status", "expected", "observed", "note"}, table);
  rep.text.push_back(std::to_string(rows.size()) + " rows, " + std::to_string(contradictions) + " contradictions, " +
                     std::to_string(warnings) + " warnings");
  rep.emit(out, c.json);
  if (warnings) err << "warning: " << warnings << " row(s) need attention (inconclusive or failed claims)\n";
  return contradictions ? kExitContradiction : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto started = std::chrono::steady_clock::now();
  CLI::App app{"Exact tools for non-trivial intersecting and matching families in r-partite r-graphs", "partex"};
  app.require_subcommand(1);
  Common common;
  app.add_flag("--json", common.json, "emit a JSON report");
  app.add_option("--seed", common.seed, "seed echoed in the report (default 1)");
  app.set_version_flag("--version", kVersion);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "build a named construction");
  construct->add_option("--name", ca.name, "W_r, E, W_rt or K_rt")->required()->check(CLI::IsMember({"W_r", "E", "W_rt", "K_rt"}));
  add_spec_options(construct, ca.spec);
  construct->add_option("--s", ca.s, "matching parameter for E");
  construct->add_option("--t", ca.t, "intersection parameter for W_rt and K_rt");
  construct->add_option("--out", ca.out, "output family file");

  AnalyzeArgs aa;
  auto* analyze_cmd = app.add_subcommand("analyze", "report nu, tau and intersection data of a family file");
  analyze_cmd->add_option("path", aa.path, "family file")->required();
  analyze_cmd->add_option("--s", aa.s, "also test nu <= s < tau");
  analyze_cmd->add_option("--t", aa.t, "also test non-trivial t-intersection");

  ShiftArgs sa;
  auto* shift = app.add_subcommand("shift", "apply one shift, or the non-triviality preserving closure");
  shift->add_option("path", sa.path, "family file")->required();
  shift->add_option("--t", sa.t, "intersection parameter for the closure");
  shift->add_option("--part", sa.part, "single shift: part");
  shift->add_option("--symbol", sa.symbol, "single shift: symbol moved to 1");
  shift->add_option("--out", sa.out, "output family file");

  BaseArgs ba;
  auto* base = app.add_subcommand("base", "compute a base of a non-trivial family and check its properties");
  base->add_option("path", ba.path, "family file")->required();
  base->add_option("--s", ba.s, "matching parameter (nu <= s < tau)");
  base->add_option("--log", ba.log, "write the shrink log as JSON lines");

  SearchArgs qa;
  auto* search = app.add_subcommand("search", "exact maximum of a non-trivial family");
  search->add_option("--mode", qa.mode, "matching or intersecting")->required()->check(CLI::IsMember({"matching", "intersecting"}));
  add_spec_options(search, qa.spec);
  search->add_option("--s", qa.s, "matching parameter");
  search->add_option("--t", qa.t, "intersection parameter");
  search->add_flag("--no-symmetry", qa.no_symmetry, "disable symmetry breaking");
  search->add_option("--threads", qa.threads, "worker threads (default 1)")->check(CLI::Range(1, 256));
  search->add_option("--node-limit", qa.node_limit, "node budget (default PARTEX_NODE_LIMIT or 1e8)");
  search->add_flag("--seed-construction", qa.seed_construction, "start from the known construction");
  search->add_option("--out", qa.out, "write the witness family here");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify-theorems", "compare exact values with the closed forms");
  verify->add_option("--suite", va.suite, "all-n, large-n, formulas, uniform or all")->check(CLI::IsMember(suite_names()));
  verify->add_option("--max-vectors", va.max_vectors, "largest search space per point");
  verify->add_option("--max-n", va.max_n, "largest part size");
  verify->add_option("--max-r", va.max_r, "largest number of parts");
  verify->add_option("--threads", va.threads, "worker threads (default 1)")->check(CLI::Range(1, 256));
  verify->add_option("--node-limit", va.node_limit, "node budget per point");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Report rep;
  rep.started = started;
  rep.argv = args;
  rep.seed = common.seed;
  auto finish = [&](auto&& body) -> int {
    try {
      return body();
    } catch (const ParseError& e) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    } catch (const InvalidArgument& e) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    } catch (const PreconditionViolated& e) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    } catch (const BudgetExceeded& e) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    } catch (const Error& e) {
      err << "internal error: " << e.what() << "\n";
      return kExitContradiction;
    }
  };

  if (*construct) {
    rep.command = "construct";
    return finish([&] { return cmd_construct(ca, rep, out, err, common); });
  }
  if (*analyze_cmd) {
    rep.command = "analyze";
    return finish([&] { return cmd_analyze(aa, rep, out, common); });
  }
  if (*shift) {
    rep.command = "shift";
    return finish([&] { return cmd_shift(sa, rep, out, common); });
  }
  if (*base) {
    rep.command = "base";
    return finish([&] { return cmd_base(ba, rep, out, common); });
  }
  if (*search) {
    rep.command = "search";
    return finish([&] { return cmd_search(qa, rep, out, common); });
  }
  rep.command = "verify-theorems";
  return finish([&] { return cmd_verify(va, rep, out, err, common); });
}

}  // namespace partex::cli
