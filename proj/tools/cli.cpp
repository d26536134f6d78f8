#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "semiflat/catalog.hpp"
#include "semiflat/flatness.hpp"
#include "semiflat/hom.hpp"
#include "semiflat/homology.hpp"
#include "semiflat/limits.hpp"
#include "semiflat/quotient.hpp"
#include "semiflat/report.hpp"
#include "semiflat/search.hpp"
#include "semiflat/suite.hpp"
#include "semiflat/tensor.hpp"
#include "semiflat/workspace.hpp"

namespace semiflat::cli {

namespace {

const std::vector<std::string> kSubcommands = {"validate", "tensor", "ttensor", "reflect", "hom",     "exact",
                                               "flat",     "inj",    "limits",  "search",  "catalog", "suite"};

struct Options {
  std::string workspace;
  bool pretty = false;
  std::optional<std::size_t> max_size;
  std::optional<double> budget;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> universe, against;
  std::vector<std::string> names;
  std::string out_path;
  bool dense = false;
  bool no_zero_relations = false;
};

struct Context {
  Options opt;
  Workspace ws;
  std::ostream& out;

  std::size_t max_size() const { return opt.max_size.value_or(ws.config.max_size); }
  double budget() const { return opt.budget.value_or(ws.config.budget); }
  std::uint64_t seed() const { return opt.seed.value_or(ws.config.seed); }

  void emit(const Json& report) const {
    if (opt.pretty)
      out << pretty(report);
    else
      out << report.dump(2) << "\n";
  }

  void need(std::size_t n, const std::string& usage) const {
    if (opt.names.size() != n) throw UnknownObject("usage: " + usage);
  }

  // Workspace modules first, then catalog modules not shadowed by name.
  std::vector<ModulePtr> all_modules() const {
    std::vector<ModulePtr> out = ws.semimodules;
    std::set<std::string> seen;
    for (const auto& m : out) seen.insert(m->name());
    for (const auto& m : default_catalog().modules)
      if (seen.insert(m->name()).second) out.push_back(m);
    return out;
  }

  std::vector<ModulePtr> named(const std::vector<std::string>& names) const {
    std::vector<ModulePtr> out;
    for (const auto& n : names) out.push_back(ws.module(n));
    return out;
  }

  std::pair<std::vector<ModulePtr>, std::string> universe() const {
    if (!opt.universe.empty()) return {named(opt.universe), "given"};
    if (!ws.config.universe.empty()) return {named(ws.config.universe), "workspace"};
    return {all_modules(), "catalog"};
  }
};

// F viewed over the ring of M. Restricts along the first semiring map
// (in enumeration order) when the rings differ; nullopt when there is none.
std::optional<std::pair<ModulePtr, Json>> over_ring_of(const ModulePtr& f, const ModulePtr& m) {
  const Semiring* rf = f->ring();
  const Semiring* rm = m->ring();
  if (!rf || !rm || rf->name() == rm->name()) return std::make_pair(f, Json());
  auto phis = semiring_morphisms(*rm, *rf);
  if (phis.empty()) return std::nullopt;
  Json via = {{"from", rm->name()}, {"to", rf->name()}, {"map", phis.front()}, {"choices", phis.size()}};
  return std::make_pair(restrict_scalars(f, m->ring_ptr(), phis.front()), via);
}

int cmd_validate(Context& c) {
  std::string path = c.opt.names.empty() ? c.opt.workspace : c.opt.names.front();
  Json doc;
  if (path.empty()) {
    doc = workspace_to_json(catalog_workspace());
  } else {
    std::ifstream in(path);
    if (!in) throw UnknownObject("cannot open workspace " + path);
    try {
      doc = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw SchemaError("/", std::string("not valid JSON: ") + e.what());
    }
  }
  auto issues = check_workspace(doc);
  Json list = Json::array();
  bool schema = false;
  for (const auto& i : issues) {
    schema = schema || i.kind == "SchemaError";
    list.push_back({{"pointer", i.pointer}, {"kind", i.kind}, {"message", i.message}});
  }
  c.emit({{"workspace", path.empty() ? "catalog" : path}, {"valid", issues.empty()}, {"issues", list}});
  if (schema) return kError;
  return issues.empty() ? kOk : kFalse;
}

int cmd_tensor(Context& c) {
  c.need(2, "tensor M N");
  TensorOptions t;
  t.dense = c.opt.dense;
  t.zero_relations = !c.opt.no_zero_relations;
  c.emit(tensor_report(tensor_product(c.ws.module(c.opt.names[0]), c.ws.module(c.opt.names[1]), t)));
  return kOk;
}

int cmd_ttensor(Context& c) {
  c.need(2, "ttensor M N");
  c.emit(takahashi_report(takahashi_tensor(c.ws.module(c.opt.names[0]), c.ws.module(c.opt.names[1]))));
  return kOk;
}

int cmd_reflect(Context& c) {
  c.need(1, "reflect M");
  c.emit(reflection_report(cancellative_reflection(c.ws.module(c.opt.names[0]))));
  return kOk;
}

int cmd_hom(Context& c) {
  c.need(2, "hom M N");
  c.emit(hom_report(hom_monoid(c.ws.module(c.opt.names[0]), c.ws.module(c.opt.names[1]))));
  return kOk;
}

// A diagram name (its arrows in order) or a list of morphism names.
int cmd_exact(Context& c) {
  if (c.opt.names.empty()) throw UnknownObject("usage: exact DIAGRAM | exact f g ...");
  std::vector<std::string> arrows = c.opt.names;
  std::string name;
  if (arrows.size() == 1) {
    name = arrows.front();
    arrows = c.ws.diagram(name).arrows;
  }
  std::vector<Morphism> maps;
  for (const auto& a : arrows) maps.push_back(c.ws.morphism(a));
  if (maps.size() < 2) throw NotComposable("a sequence needs at least two maps");
  ExactnessReport r = classify_sequence(maps);
  Json j = exactness_report(r, maps);
  j["arrows"] = arrows;
  if (!name.empty()) j["diagram"] = name;
  c.emit(j);
  return r.exact() ? kOk : kFalse;
}

int cmd_flat(Context& c) {
  c.need(1, "flat F [--against M...] [--universe M...]");
  ModulePtr f = c.ws.module(c.opt.names[0]);
  Json verdicts = Json::array(), skipped = Json::array();
  bool holds = true;
  Json witness;
  std::string universe_name = "against";
  std::vector<ModulePtr> targets;
  if (!c.opt.against.empty()) {
    targets = c.named(c.opt.against);
  } else {
    auto [u, n] = c.universe();
    universe_name = n;
    for (const auto& m : u)
      if (m->ring() && f->ring() && m->ring()->name() == f->ring()->name()) targets.push_back(m);
  }
  for (const auto& m : targets) {
    auto sub = over_ring_of(f, m);
    if (!sub) throw SideMismatch("no semiring map " + m->ring()->name() + " -> " + f->ring()->name());
    FlatnessVerdict v;
    try {
      v = flatness_verdict(sub->first, m);
    } catch (const BoxBoundExceeded&) {
      skipped.push_back(m->name());
      continue;
    } catch (const SizeBoundExceeded&) {
      skipped.push_back(m->name());
      continue;
    }
    Json j = flatness_report(v);
    if (!sub->second.is_null()) j["restricted_via"] = sub->second;
    if (holds && !v.uniformly_m_flat)
      witness = {{"against", m->name()}, {"U", v.uniform_witness}, {"detail", v.witness_detail}};
    holds = holds && v.uniformly_m_flat;
    verdicts.push_back(j);
  }
  c.emit({{"subject", f->name()},
          {"universe", universe_name},
          {"uniformly_flat", holds},
          {"witness", witness},
          {"verdicts", verdicts},
          {"skipped", skipped}});
  return holds ? kOk : kFalse;
}

int cmd_inj(Context& c) {
  c.need(1, "inj Q [--against M...] [--universe M...]");
  ModulePtr q = c.ws.module(c.opt.names[0]);
  std::vector<ModulePtr> family;
  if (!c.opt.against.empty()) {
    family = c.named(c.opt.against);
  } else {
    for (const auto& m : c.universe().first)
      if (m->ring() && q->ring() && m->ring()->name() == q->ring()->name() && m->size() <= c.max_size())
        family.push_back(m);
  }
  InjectivityReport r = uniformly_injective_rel(q, family);
  c.emit(injectivity_report(r, q, family));
  return r.holds ? kOk : kFalse;
}

int cmd_limits(Context& c) {
  c.need(1, "limits SYSTEM");
  const NamedSystem& s = c.ws.system(c.opt.names[0]);
  Json j;
  if (s.kind == "inverse") {
    InverseSystem sys = c.ws.inverse(s);
    j = inverse_limit_report(sys, inverse_limit(sys));
  } else {
    DirectedSystem sys = c.ws.directed(s);
    j = colimit_report(sys, directed_colimit(sys));
  }
  j["name"] = s.name;
  c.emit(j);
  return kOk;
}

int cmd_search(Context& c) {
  SearchConfig cfg;
  if (c.opt.names.empty())
    cfg.semirings = default_catalog().semirings;
  else
    for (const auto& n : c.opt.names) cfg.semirings.push_back(c.ws.semiring(n));
  cfg.max_size = c.max_size();
  cfg.budget_seconds = c.budget();
  SearchReport r = search_counterexamples(cfg);
  std::string path = c.opt.out_path;
  if (path.empty() && !c.opt.workspace.empty()) {
    std::filesystem::path w(c.opt.workspace);
    path = (w.parent_path() / (w.stem().string() + ".search.jsonl")).string();
  }
  Json j = search_summary(r);
  if (!path.empty()) {
    std::ofstream o(path);
    if (!o) throw UnknownObject("cannot write " + path);
    o << search_jsonl(r);
    j["jsonl"] = path;
  }
  Json rings = Json::array();
  for (const auto& s : cfg.semirings) rings.push_back(s->name());
  j["semirings"] = rings;
  j["max_size"] = cfg.max_size;
  c.emit(j);
  if (!r.complete) return kError;
  return r.violations.empty() ? kOk : kFalse;
}

int cmd_catalog(Context& c) {
  c.out << emit_workspace(c.ws);
  return kOk;
}

// Runs one command line in-process and keeps its report.
struct Invocation {
  int code = 0;
  std::string out;
  Json report;
};

Invocation invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Invocation inv;
  inv.code = run(args, out, err);
  inv.out = out.str();
  try {
    inv.report = Json::parse(inv.out);
  } catch (const Json::parse_error&) {
  }
  return inv;
}

SuiteRow exit_code_row() {
  SuiteRow row;
  row.id = 12;
  row.tag = "cli";
  row.title = "exit codes follow the verdicts; reports are deterministic";
  row.passed = true;
  auto expect = [&](bool ok, const std::string& what) {
    ++row.instances;
    ++row.applicable;
    if (!ok) {
      row.passed = false;
      if (row.failures.size() < 5) row.failures.push_back(what);
    }
  };
  auto flag = [](const Json& j, const char* k) { return j.contains(k) && j[k].is_boolean() && j[k].get<bool>(); };

  Invocation t = invoke({"tensor", "BOOL", "BOOL"});
  expect(t.code == kOk && t.report.value("classes", 0) == 2, "tensor BOOL BOOL");
  expect(invoke({"tensor", "BOOL", "BOOL"}).out == t.out, "tensor report differs between runs");

  Invocation e = invoke({"exact", "seq1"});
  expect(e.code == kFalse && flag(e.report, "semi") && flag(e.report, "quasi") && !flag(e.report, "proper") &&
             !flag(e.report, "exact"),
         "exact seq1");
  Invocation e2 = invoke({"exact", "seq2"});
  expect(e2.code == (flag(e2.report, "exact") ? kOk : kFalse), "exact seq2 exit code against its verdict");

  Invocation f = invoke({"flat", "ZMOD2", "--against", "ZMOD4"});
  expect(f.code == kFalse && !flag(f.report, "uniformly_flat") && f.report.contains("witness") &&
             f.report["witness"].value("U", "") == "{0,2}",
         "flat ZMOD2 --against ZMOD4");
  Invocation g = invoke({"flat", "ZMOD4", "--against", "ZMOD4"});
  expect(g.code == kOk && flag(g.report, "uniformly_flat"), "flat ZMOD4 --against ZMOD4");
  expect(invoke({"flat", "ZMOD2", "--against", "ZMOD4"}).out == f.out, "flat report differs between runs");

  Invocation v = invoke({"validate"});
  expect(v.code == kOk && flag(v.report, "valid"), "validate on the catalog");
  expect(invoke({"catalog"}).code == kOk, "catalog");
  expect(invoke({"frobnicate"}).code == kError, "unknown subcommand");
  expect(invoke({"tensor", "BOOL", "NO_SUCH_MODULE"}).code == kError, "unknown object");
  expect(invoke({"exact", "NO_SUCH_DIAGRAM"}).code == kError, "unknown diagram");

  // Schema error and axiom error documents.
  auto tmp = std::filesystem::temp_directory_path();
  auto write = [&](const std::string& name, const Json& doc) {
    auto p = (tmp / name).string();
    std::ofstream(p) << doc.dump();
    return p;
  };
  Json doc = workspace_to_json(catalog_workspace());
  Json bad_schema = doc;
  bad_schema["semirings"][0]["add"] = Json::array({Json::array({"0"})});
  Json bad_axiom = doc;
  auto& mul = bad_axiom["semirings"][0]["mul"];
  mul[0][1] = mul[1][1];
  std::string p1 = write("semiflat-schema-check.json", bad_schema);
  std::string p2 = write("semiflat-axiom-check.json", bad_axiom);
  expect(invoke({"validate", p1}).code == kError, "validate with a non-square table");
  expect(invoke({"validate", p2}).code == kFalse, "validate with a broken axiom");
  std::filesystem::remove(p1);
  std::filesystem::remove(p2);
  return row;
}

int cmd_suite(Context& c) {
  SuiteOptions so;
  so.seed = c.seed();
  SuiteReport r = run_suite(so);
  // The numbered rows stay in order; row 12 goes after row 11.
  auto at = std::find_if(r.rows.begin(), r.rows.end(), [](const SuiteRow& x) { return x.id == 0; });
  r.rows.insert(at, exit_code_row());
  Json j = suite_report(r);
  j["seed"] = so.seed;
  if (c.opt.pretty) {
    for (const auto& row : r.rows) {
      std::string id = row.id > 0 ? std::to_string(row.id) : "-";
      c.out << (row.passed ? "PASS " : "FAIL ") << id << (id.size() < 2 ? "  " : " ") << row.tag << ": "
            << row.title << " (" << row.applicable << "/" << row.instances << ")\n";
      for (const auto& s : row.failures) c.out << "       ! " << s << "\n";
    }
  } else {
    c.out << j.dump(2) << "\n";
  }
  return r.criteria_passed() ? kOk : kFalse;
}

const std::map<std::string, std::function<int(Context&)>>& handlers() {
  static const std::map<std::string, std::function<int(Context&)>> h = {
      {"validate", cmd_validate}, {"tensor", cmd_tensor}, {"ttensor", cmd_ttensor}, {"reflect", cmd_reflect},
      {"hom", cmd_hom},           {"exact", cmd_exact},   {"flat", cmd_flat},       {"inj", cmd_inj},
      {"limits", cmd_limits},     {"search", cmd_search}, {"catalog", cmd_catalog}, {"suite", cmd_suite}};
  return h;
}

void error_report(std::ostream& out, std::ostream& err, const std::string& kind, const std::string& message,
                  const std::string& pointer = "") {
  Json e = {{"kind", kind}, {"message", message}};
  if (!pointer.empty()) e["pointer"] = pointer;
  out << Json{{"error", e}}.dump(2) << "\n";
  err << "semiflat: " << message << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Finite semirings and semimodules: tensors, exactness, flatness, limits", "semiflat"};
  app.require_subcommand(1);
  app.add_option("--workspace", opt.workspace, "workspace document (default: built-in catalog)");
  app.add_flag("--pretty", opt.pretty, "plain-text report instead of JSON");
  app.add_option("--max-size", opt.max_size, "largest module enumerated by search and inj");
  app.add_option("--budget", opt.budget, "search time budget in seconds");
  app.add_option("--seed", opt.seed, "seed for randomized suite rows");
  app.add_option("--universe", opt.universe, "modules quantified over by flat and inj");
  app.fallthrough();

  std::map<std::string, CLI::App*> subs;
  for (const auto& name : kSubcommands) {
    CLI::App* s = app.add_subcommand(name);
    s->add_option("names", opt.names, "objects");
    subs[name] = s;
  }
  subs["validate"]->description("check a workspace document; 1 for axiom failures, 2 for schema errors");
  subs["tensor"]->description("tensor product of two modules with its presentation");
  subs["tensor"]->add_flag("--dense", opt.dense, "every nonzero element is a generator");
  subs["tensor"]->add_flag("--no-zero-relations", opt.no_zero_relations, "drop the zero-pair relations");
  subs["ttensor"]->description("cancellative reflection of the tensor product");
  subs["reflect"]->description("cancellative reflection of a module");
  subs["hom"]->description("the hom monoid of two modules");
  subs["exact"]->description("exactness grades of a sequence (diagram name or morphism names)");
  subs["flat"]->description("uniform flatness against modules or a universe");
  subs["flat"]->add_option("--against", opt.against, "modules to test against");
  subs["inj"]->description("uniform injectivity relative to modules or a universe");
  subs["inj"]->add_option("--against", opt.against, "family of modules");
  subs["limits"]->description("colimit or limit of a named system");
  subs["search"]->description("classify all small modules over the given semirings");
  subs["search"]->add_option("--out", opt.out_path, "JSON-lines output");
  subs["catalog"]->description("emit the workspace in canonical form");
  subs["suite"]->description("run the property suite");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    bool any = std::any_of(subs.begin(), subs.end(), [](const auto& s) { return s.second->parsed(); });
    if (!any) {
      std::string line;
      for (const auto& a : args) line += (line.empty() ? "" : " ") + a;
      error_report(out, err, "UnknownSubcommand", "no known subcommand in '" + line + "'");
    }
    else
      error_report(out, err, "UsageError", e.what());
    return kError;
  }

  try {
    Context c{opt, opt.workspace.empty() ? catalog_workspace() : load_workspace(opt.workspace), out};
    for (const auto& [name, s] : subs)
      if (s->parsed()) return handlers().at(name)(c);
  } catch (const SchemaError& e) {
    error_report(out, err, e.kind(), e.what(), e.pointer());
  } catch (const Error& e) {
    error_report(out, err, e.kind(), e.what());
  } catch (const std::exception& e) {
    error_report(out, err, "InternalError", e.what());
  }
  return kError;
}

}  // namespace semiflat::cli
