#include "semiflat/report.hpp"

#include <algorithm>
#include <sstream>

namespace semiflat {

Json labels_json(const Semimodule& m, const std::vector<Elem>& xs) {
  Json out = Json::array();
  for (Elem x : xs) out.push_back(m.label(x));
  return out;
}

Json mask_json(const Semimodule& m, const Mask& mask) { return labels_json(m, mask_elements(mask)); }

Json morphism_report(const Morphism& f) {
  Json map = Json::object();
  for (Elem x = 0; x < f.source()->size(); ++x) map[f.source()->label(x)] = f.target()->label(f(x));
  return {{"source", f.source()->name()},
          {"target", f.target()->name()},
          {"map", map},
          {"injective", f.injective()},
          {"surjective", f.surjective()},
          {"k_uniform", is_k_uniform(f)},
          {"i_uniform", is_i_uniform(f)}};
}

Json tensor_report(const TensorPresentation& p) {
  const Semimodule& l = *p.left;
  const Semimodule& r = *p.right;
  const Semimodule& t = *p.module;
  Json pairs = Json::array(), dims = Json::array();
  for (std::size_t c = 0; c < p.pairs.size(); ++c) {
    pairs.push_back({l.label(p.pairs[c].first), r.label(p.pairs[c].second)});
    dims.push_back(p.bounds[c].index + p.bounds[c].period);
  }
  Json tau = Json::object();
  for (Elem m = 0; m < l.size(); ++m) {
    Json row = Json::object();
    for (Elem n = 0; n < r.size(); ++n) row[r.label(n)] = t.label(p.tau_at(m, n));
    tau[l.label(m)] = row;
  }
  return {{"left", l.name()},
          {"right", r.name()},
          {"generators", {{"left", labels_json(l, p.gens_left)}, {"right", labels_json(r, p.gens_right)}}},
          {"generator_pairs", pairs},
          {"box", {{"dimensions", dims}, {"size", p.box_size}}},
          {"relations", p.relation_count},
          {"classes", t.size()},
          {"elements", t.labels()},
          {"balanced_over_ring", p.balanced_over_ring},
          {"tau", tau}};
}

Json takahashi_report(const TakahashiTensor& t) {
  const Semimodule& l = *t.tensor.left;
  const Semimodule& r = *t.tensor.right;
  const Semimodule& c = *t.reflection.module;
  Json tau = Json::object();
  for (Elem m = 0; m < l.size(); ++m) {
    Json row = Json::object();
    for (Elem n = 0; n < r.size(); ++n) row[r.label(n)] = c.label(t.tau[m * r.size() + n]);
    tau[l.label(m)] = row;
  }
  return {{"tensor", tensor_report(t.tensor)},
          {"classes", c.size()},
          {"elements", c.labels()},
          {"tau", tau}};
}

Json reflection_report(const Quotient& q) {
  const Semimodule& m = *q.projection.source();
  Json cls = Json::object();
  for (Elem x = 0; x < m.size(); ++x) cls[m.label(x)] = q.module->label(q.projection(x));
  return {{"source", m.name()},
          {"classes", q.module->size()},
          {"elements", q.module->labels()},
          {"projection", cls},
          {"cancellative", is_cancellative(m)}};
}

Json hom_report(const HomMonoid& h) {
  Json maps = Json::array();
  for (const auto& f : h.maps) maps.push_back(labels_json(*h.target, f.map()));
  return {{"source", h.source->name()},
          {"target", h.target->name()},
          {"domain", h.source->labels()},
          {"size", h.maps.size()},
          {"maps", maps},
          {"has_action", h.module->has_action()}};
}

Json stage_report(const StageReport& s, const Morphism& f, const Morphism& g) {
  const Semimodule& l = *f.source();
  const Semimodule& m = *f.target();
  Json w = Json::object();
  if (!s.chain_witness.empty()) w["chain"] = labels_json(l, s.chain_witness);
  if (!s.proper_witness.empty()) w["proper"] = labels_json(m, s.proper_witness);
  if (!s.semi_witness.empty()) w["semi"] = labels_json(m, s.semi_witness);
  if (!s.k_witness.empty()) w["k_uniform"] = labels_json(m, s.k_witness);
  return {{"at", m.name()},
          {"into", g.target()->name()},
          {"chain", s.chain},
          {"proper", s.proper_exact},
          {"semi", s.semi_exact},
          {"quasi", s.quasi_exact},
          {"exact", s.exact},
          {"kernel", mask_json(m, kernel_mask(g))},
          {"image", mask_json(m, f.image())},
          {"witnesses", w}};
}

Json exactness_report(const ExactnessReport& r, const std::vector<Morphism>& maps) {
  Json stages = Json::array();
  for (std::size_t j = 0; j < r.stages.size(); ++j) stages.push_back(stage_report(r.stages[j], maps[j], maps[j + 1]));
  Json objects = Json::array();
  if (!maps.empty()) objects.push_back(maps.front().source()->name());
  for (const auto& f : maps) objects.push_back(f.target()->name());
  return {{"objects", objects},
          {"chain", r.chain()},
          {"proper", r.proper_exact()},
          {"semi", r.semi_exact()},
          {"quasi", r.quasi_exact()},
          {"exact", r.exact()},
          {"stages", stages}};
}

Json flatness_report(const FlatnessVerdict& v, bool with_checks) {
  Json out = {{"subject", v.subject},
              {"against", v.against},
              {"uniformly_flat", v.uniformly_m_flat},
              {"mono_flat", v.mono_flat},
              {"in_is", v.in_is},
              {"sequence_form", v.sequence_form}};
  Json w = Json::object();
  if (!v.uniform_witness.empty()) w["uniform"] = {{"U", v.uniform_witness}, {"detail", v.witness_detail}};
  if (!v.mono_witness.empty()) w["mono"] = v.mono_witness;
  if (!v.is_witness.empty()) w["is"] = v.is_witness;
  out["witnesses"] = w;
  if (with_checks) {
    Json checks = Json::array();
    for (const auto& c : v.checks) {
      Json row = {{"sub", c.label},
                  {"subtractive", c.uniform_sub},
                  {"injective", c.injective},
                  {"i_uniform", c.i_uniform}};
      if (c.sequence_exact) row["sequence_exact"] = *c.sequence_exact;
      if (!c.witness.empty()) row["witness"] = c.witness;
      checks.push_back(row);
    }
    out["checks"] = checks;
  }
  return out;
}

Json universe_report(const UniverseVerdict& v) {
  Json per = Json::array();
  for (const auto& f : v.per_module) per.push_back(flatness_report(f, false));
  return {{"subject", v.subject},
          {"universe", v.universe},
          {"uniformly_flat", v.holds},
          {"first_failure", v.first_failure},
          {"per_module", per},
          {"skipped", v.skipped}};
}

Json injectivity_report(const InjectivityReport& r, const ModulePtr& q, const std::vector<ModulePtr>& family) {
  Json cases = Json::array();
  for (const auto& c : r.cases) {
    Json sub;
    for (const auto& m : family)
      if (m->name() == c.module) sub = mask_json(*m, c.sub);
    cases.push_back({{"module", c.module}, {"sub", sub}, {"surjective", c.surjective}, {"uniform", c.uniform}});
  }
  Json names = Json::array();
  for (const auto& m : family) names.push_back(m->name());
  return {{"subject", q->name()}, {"family", names}, {"uniformly_injective", r.holds}, {"cases", cases}};
}

namespace {

Json system_json(const PosetSystem& sys) {
  Json nodes = Json::array(), edges = Json::array();
  for (const auto& n : sys.nodes()) nodes.push_back(n->name());
  for (const auto& [a, b] : sys.edges()) edges.push_back({a, b});
  return {{"nodes", nodes}, {"edges", edges}};
}

}  // namespace

Json colimit_report(const DirectedSystem& sys, const Colimit& c) {
  Json legs = Json::array();
  for (const auto& g : c.legs) legs.push_back(labels_json(*c.module, g.map()));
  return {{"kind", "directed"},
          {"system", system_json(sys)},
          {"size", c.module->size()},
          {"elements", c.module->labels()},
          {"legs", legs},
          {"maximum", c.maximum},
          {"matches_shortcut", c.matches_shortcut}};
}

Json inverse_limit_report(const InverseSystem& sys, const InverseLimit& l) {
  Json proj = Json::array();
  for (const auto& p : l.projections) proj.push_back(labels_json(*p.target(), p.map()));
  return {{"kind", "inverse"},
          {"system", system_json(sys)},
          {"size", l.module->size()},
          {"elements", l.module->labels()},
          {"projections", proj}};
}

Json suite_row_json(const SuiteRow& row) {
  return {{"id", row.id},
          {"tag", row.tag},
          {"title", row.title},
          {"passed", row.passed},
          {"instances", row.instances},
          {"applicable", row.applicable},
          {"failures", row.failures},
          {"notes", row.notes}};
}

Json suite_report(const SuiteReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) rows.push_back(suite_row_json(row));
  return {{"passed", r.passed()}, {"criteria_passed", r.criteria_passed()}, {"rows", rows}};
}

Json classification_record(const Classification& c) {
  const Semimodule& m = *c.module;
  Json j = module_to_json(m);
  return {{"name", m.name()},
          {"semiring", c.semiring},
          {"size", m.size()},
          {"tables", j},
          {"mono_flat", c.mono_flat},
          {"in_is", c.in_is},
          {"uniformly_flat", c.uniformly_flat},
          {"certified_flat", c.certified_flat},
          {"certificate_rank", c.certificate_rank ? Json(*c.certificate_rank) : Json()},
          {"witnesses", {{"uniform", c.uniform_witness}, {"mono", c.mono_witness}, {"is", c.is_witness}}},
          {"skipped", c.skipped}};
}

std::string search_jsonl(const SearchReport& r) {
  std::string out;
  for (const auto& c : r.records) out += classification_record(c).dump() + "\n";
  return out;
}

Json search_summary(const SearchReport& r) {
  Json viol = Json::array();
  for (const auto& v : r.violations) viol.push_back({{"rule", v.rule}, {"subject", v.subject}, {"against", v.against}});
  std::size_t flat = 0, certified = 0;
  for (const auto& c : r.records) {
    flat += c.uniformly_flat;
    certified += c.certified_flat;
  }
  return {{"complete", r.complete},
          {"records", r.records.size()},
          {"pairs_evaluated", r.pairs_evaluated},
          {"uniformly_flat", flat},
          {"certified_flat", certified},
          {"candidates", {{"status", "inconclusive"},
                          {"reason", "uniformly flat within the universe, no certificate up to the rank bound"},
                          {"modules", r.candidates}}},
          {"violations", viol}};
}

namespace {

void render(std::ostringstream& os, const Json& j, int depth, const std::string& key) {
  std::string pad(2 * depth, ' ');
  std::string head = key.empty() ? pad : pad + key + ":";
  if (j.is_object()) {
    if (!key.empty()) os << head << "\n";
    for (auto it = j.begin(); it != j.end(); ++it) render(os, it.value(), key.empty() ? depth : depth + 1, it.key());
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); })) {
    os << head << "\n";
    for (const auto& e : j) {
      if (e.is_object()) {
        os << pad << "  -\n";
        for (auto it = e.begin(); it != e.end(); ++it) render(os, it.value(), depth + 2, it.key());
      } else {
        render(os, e, depth + 1, "-");
      }
    }
  } else {
    std::string v = j.is_string() ? j.get<std::string>() : j.dump();
    os << head << (key.empty() ? "" : " ") << v << "\n";
  }
}

}  // namespace

std::string pretty(const Json& report) {
  std::ostringstream os;
  render(os, report, 0, "");
  return os.str();
}

}  // namespace semiflat
