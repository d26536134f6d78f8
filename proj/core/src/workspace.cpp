#include "semiflat/workspace.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "semiflat/catalog.hpp"

namespace semiflat {

namespace {

// Collects problems while walking a document; every getter records an issue
// and returns nullopt instead of throwing.
class Reader {
 public:
  std::vector<WorkspaceIssue> schema, axiom;

  void fail(const std::string& ptr, const std::string& what) {
    schema.push_back({ptr, "SchemaError", what});
  }

  const Json* field(const Json& obj, const std::string& key, const std::string& ptr,
                    bool required = true) {
    auto it = obj.find(key);
    if (it == obj.end()) {
      if (required) fail(ptr + "/" + key, "missing field");
      return nullptr;
    }
    return &*it;
  }

  std::optional<std::string> string(const Json& obj, const std::string& key,
                                    const std::string& ptr) {
    const Json* v = field(obj, key, ptr);
    if (!v) return std::nullopt;
    if (!v->is_string()) {
      fail(ptr + "/" + key, "expected a string");
      return std::nullopt;
    }
    return v->get<std::string>();
  }

  std::optional<std::vector<std::string>> strings(const Json& obj, const std::string& key,
                                                  const std::string& ptr, bool unique) {
    const Json* v = field(obj, key, ptr);
    if (!v) return std::nullopt;
    if (!v->is_array()) {
      fail(ptr + "/" + key, "expected an array of strings");
      return std::nullopt;
    }
    std::vector<std::string> out;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < v->size(); ++i) {
      const Json& e = (*v)[i];
      if (!e.is_string()) {
        fail(ptr + "/" + key + "/" + std::to_string(i), "expected a string");
        return std::nullopt;
      }
      if (unique && !seen.insert(e.get<std::string>()).second) {
        fail(ptr + "/" + key + "/" + std::to_string(i), "duplicate label " + e.get<std::string>());
        return std::nullopt;
      }
      out.push_back(e.get<std::string>());
    }
    return out;
  }

  std::optional<Elem> label(const Json& v, const std::vector<std::string>& labels,
                            const std::string& ptr) {
    if (!v.is_string()) {
      fail(ptr, "expected an element label");
      return std::nullopt;
    }
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == v.get<std::string>()) return static_cast<Elem>(i);
    fail(ptr, "unknown element " + v.get<std::string>());
    return std::nullopt;
  }

  // rows x cols table of labels from `values`, row-major.
  std::optional<std::vector<Elem>> table(const Json& obj, const std::string& key,
                                         const std::string& ptr, std::size_t rows,
                                         std::size_t cols, const std::vector<std::string>& values) {
    const Json* v = field(obj, key, ptr);
    if (!v) return std::nullopt;
    return table_at(*v, ptr + "/" + key, rows, cols, values);
  }

  std::optional<std::vector<Elem>> table_at(const Json& v, const std::string& ptr, std::size_t rows,
                                            std::size_t cols,
                                            const std::vector<std::string>& values) {
    if (!v.is_array() || v.size() != rows) {
      fail(ptr, "expected " + std::to_string(rows) + " rows");
      return std::nullopt;
    }
    std::vector<Elem> out;
    for (std::size_t r = 0; r < rows; ++r) {
      if (!v[r].is_array() || v[r].size() != cols) {
        fail(ptr, "row " + std::to_string(r) + " does not have " + std::to_string(cols) +
                      " entries");
        return std::nullopt;
      }
      for (std::size_t c = 0; c < cols; ++c) {
        auto e = label(v[r][c], values, ptr + "/" + std::to_string(r) + "/" + std::to_string(c));
        if (!e) return std::nullopt;
        out.push_back(*e);
      }
    }
    return out;
  }

  void unknown_keys(const Json& obj, const std::string& ptr, std::initializer_list<const char*> keys) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      bool known = false;
      for (const char* k : keys) known = known || it.key() == k;
      if (!known) fail(ptr + "/" + it.key(), "unknown field");
    }
  }
};

std::optional<Side> parse_side(Reader& r, const Json& obj, const std::string& ptr) {
  auto s = r.string(obj, "side", ptr);
  if (!s) return std::nullopt;
  if (*s == "left") return Side::left;
  if (*s == "right") return Side::right;
  r.fail(ptr + "/side", "expected \"left\" or \"right\"");
  return std::nullopt;
}

Json table_json(const std::vector<Elem>& t, std::size_t rows, std::size_t cols,
                const std::vector<std::string>& labels) {
  Json out = Json::array();
  for (std::size_t r = 0; r < rows; ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < cols; ++c) row.push_back(labels[t[r * cols + c]]);
    out.push_back(std::move(row));
  }
  return out;
}

struct Parsed {
  Workspace ws;
  std::vector<WorkspaceIssue> schema, axiom;
};

Parsed parse(const Json& doc) {
  Parsed p;
  Reader r;
  Workspace& ws = p.ws;
  if (!doc.is_object()) {
    r.fail("", "workspace must be a JSON object");
    p.schema = r.schema;
    return p;
  }
  r.unknown_keys(doc, "", {"format", "config", "semirings", "semimodules", "morphisms", "systems",
                           "diagrams"});
  if (const Json* f = r.field(doc, "format", "")) {
    if (!f->is_number_integer() || f->get<int>() != kWorkspaceFormat)
      r.fail("/format", "unsupported format (expected 1)");
  }
  auto array = [&](const char* key) -> const Json* {
    const Json* v = r.field(doc, key, "", false);
    if (v && !v->is_array()) {
      r.fail(std::string("/") + key, "expected an array");
      return nullptr;
    }
    return v;
  };

  if (const Json* c = r.field(doc, "config", "", false)) {
    if (!c->is_object()) {
      r.fail("/config", "expected an object");
    } else {
      r.unknown_keys(*c, "/config", {"max_size", "budget", "seed", "universe"});
      if (c->contains("max_size")) {
        if ((*c)["max_size"].is_number_unsigned()) ws.config.max_size = (*c)["max_size"].get<std::size_t>();
        else r.fail("/config/max_size", "expected a non-negative integer");
      }
      if (c->contains("budget")) {
        if ((*c)["budget"].is_number()) ws.config.budget = (*c)["budget"].get<double>();
        else r.fail("/config/budget", "expected a number");
      }
      if (c->contains("seed")) {
        if ((*c)["seed"].is_number_unsigned()) ws.config.seed = (*c)["seed"].get<std::uint64_t>();
        else r.fail("/config/seed", "expected a non-negative integer");
      }
      if (c->contains("universe"))
        if (auto u = r.strings(*c, "universe", "/config", false)) ws.config.universe = *u;
    }
  }

  std::set<std::string> names;
  auto fresh = [&](const std::string& kind, const std::string& name, const std::string& ptr) {
    if (names.insert(kind + ":" + name).second) return true;
    r.fail(ptr + "/name", "duplicate " + kind + " name " + name);
    return false;
  };

  if (const Json* list = array("semirings"))
    for (std::size_t i = 0; i < list->size(); ++i) {
      const std::string ptr = "/semirings/" + std::to_string(i);
      const Json& o = (*list)[i];
      if (!o.is_object()) {
        r.fail(ptr, "expected an object");
        continue;
      }
      r.unknown_keys(o, ptr, {"name", "elements", "add", "mul", "zero", "one"});
      auto name = r.string(o, "name", ptr);
      auto labels = r.strings(o, "elements", ptr, true);
      if (!name || !labels || !fresh("semiring", *name, ptr)) continue;
      const std::size_t n = labels->size();
      auto add = r.table(o, "add", ptr, n, n, *labels);
      auto mul = r.table(o, "mul", ptr, n, n, *labels);
      const Json* z = r.field(o, "zero", ptr);
      const Json* one = r.field(o, "one", ptr);
      auto zero = z ? r.label(*z, *labels, ptr + "/zero") : std::nullopt;
      auto unit = one ? r.label(*one, *labels, ptr + "/one") : std::nullopt;
      if (!add || !mul || !zero || !unit) continue;
      SemiringSpec spec{*name, *labels, *add, *mul, *zero, *unit};
      auto v = validate_semiring(spec);
      if (!v.empty()) {
        p.axiom.push_back({ptr, "AxiomViolation", *name + ": " + describe(v)});
        continue;
      }
      ws.semirings.push_back(std::make_shared<const Semiring>(std::move(spec)));
    }

  auto resolve_semiring = [&](const std::string& name, const std::string& ptr) -> SemiringPtr {
    try {
      return ws.semiring(name);
    } catch (const UnknownObject&) {
      r.fail(ptr, "unknown semiring " + name);
      return nullptr;
    }
  };

  if (const Json* list = array("semimodules"))
    for (std::size_t i = 0; i < list->size(); ++i) {
      const std::string ptr = "/semimodules/" + std::to_string(i);
      const Json& o = (*list)[i];
      if (!o.is_object()) {
        r.fail(ptr, "expected an object");
        continue;
      }
      r.unknown_keys(o, ptr, {"name", "semiring", "side", "elements", "add", "zero", "action",
                              "second_action"});
      auto name = r.string(o, "name", ptr);
      auto labels = r.strings(o, "elements", ptr, true);
      if (!name || !labels || !fresh("semimodule", *name, ptr)) continue;
      const std::size_t n = labels->size();
      SemimoduleSpec spec;
      spec.name = *name;
      spec.labels = *labels;
      auto add = r.table(o, "add", ptr, n, n, *labels);
      const Json* z = r.field(o, "zero", ptr);
      auto zero = z ? r.label(*z, *labels, ptr + "/zero") : std::nullopt;
      if (!add || !zero) continue;
      spec.add = *add;
      spec.zero = *zero;
      bool ok = true;
      if (o.contains("semiring")) {
        auto sname = r.string(o, "semiring", ptr);
        auto side = parse_side(r, o, ptr);
        SemiringPtr s = sname ? resolve_semiring(*sname, ptr + "/semiring") : nullptr;
        auto t = s ? r.table(o, "action", ptr, n, s->size(), *labels) : std::nullopt;
        if (!side || !t) continue;
        spec.actions.push_back({s, *side, *t});
        if (const Json* sec = r.field(o, "second_action", ptr, false)) {
          const std::string sp = ptr + "/second_action";
          if (!sec->is_object()) {
            r.fail(sp, "expected an object");
            continue;
          }
          r.unknown_keys(*sec, sp, {"semiring", "side", "table"});
          auto s2name = r.string(*sec, "semiring", sp);
          auto side2 = parse_side(r, *sec, sp);
          SemiringPtr s2 = s2name ? resolve_semiring(*s2name, sp + "/semiring") : nullptr;
          auto t2 = s2 ? r.table(*sec, "table", sp, n, s2->size(), *labels) : std::nullopt;
          if (!side2 || !t2) continue;
          spec.actions.push_back({s2, *side2, *t2});
        }
      } else {
        for (const char* k : {"side", "action", "second_action"})
          if (o.contains(k)) {
            r.fail(ptr + "/" + k, "given without a semiring");
            ok = false;
          }
      }
      if (!ok) continue;
      auto v = validate_semimodule(spec);
      if (!v.empty()) {
        p.axiom.push_back({ptr, "AxiomViolation", *name + ": " + describe(v)});
        continue;
      }
      ws.semimodules.push_back(std::make_shared<const Semimodule>(std::move(spec)));
    }

  auto resolve_module = [&](const Json& o, const char* key, const std::string& ptr) -> ModulePtr {
    auto name = r.string(o, key, ptr);
    if (!name) return nullptr;
    try {
      return ws.module(*name);
    } catch (const UnknownObject&) {
      r.fail(ptr + "/" + key, "unknown semimodule " + *name);
      return nullptr;
    }
  };

  if (const Json* list = array("morphisms"))
    for (std::size_t i = 0; i < list->size(); ++i) {
      const std::string ptr = "/morphisms/" + std::to_string(i);
      const Json& o = (*list)[i];
      if (!o.is_object()) {
        r.fail(ptr, "expected an object");
        continue;
      }
      r.unknown_keys(o, ptr, {"name", "source", "target", "map", "linearity"});
      auto name = r.string(o, "name", ptr);
      ModulePtr src = resolve_module(o, "source", ptr);
      ModulePtr tgt = resolve_module(o, "target", ptr);
      if (!name || !src || !tgt || !fresh("morphism", *name, ptr)) continue;
      Linearity lin = Linearity::linear;
      if (o.contains("linearity")) {
        auto l = r.string(o, "linearity", ptr);
        if (!l) continue;
        if (*l == "additive") lin = Linearity::additive;
        else if (*l != "linear") {
          r.fail(ptr + "/linearity", "expected \"linear\" or \"additive\"");
          continue;
        }
      }
      const Json* m = r.field(o, "map", ptr);
      if (!m) continue;
      if (!m->is_array() || m->size() != src->size()) {
        r.fail(ptr + "/map", "expected " + std::to_string(src->size()) + " target labels");
        continue;
      }
      std::vector<Elem> map;
      bool ok = true;
      for (std::size_t k = 0; k < m->size() && ok; ++k) {
        auto e = r.label((*m)[k], tgt->labels(), ptr + "/map/" + std::to_string(k));
        if (e) map.push_back(*e);
        else ok = false;
      }
      if (!ok) continue;
      try {
        ws.morphisms.push_back({*name, Morphism::build(src, tgt, std::move(map), lin)});
      } catch (const Error& e) {
        p.axiom.push_back({ptr, e.kind(), *name + ": " + e.what()});
      }
    }

  auto resolve_morphism = [&](const std::string& name, const std::string& ptr) -> const Morphism* {
    try {
      return &ws.morphism(name);
    } catch (const UnknownObject&) {
      r.fail(ptr, "unknown morphism " + name);
      return nullptr;
    }
  };

  if (const Json* list = array("systems"))
    for (std::size_t i = 0; i < list->size(); ++i) {
      const std::string ptr = "/systems/" + std::to_string(i);
      const Json& o = (*list)[i];
      if (!o.is_object()) {
        r.fail(ptr, "expected an object");
        continue;
      }
      r.unknown_keys(o, ptr, {"name", "kind", "nodes", "edges"});
      NamedSystem s;
      auto name = r.string(o, "name", ptr);
      auto kind = r.string(o, "kind", ptr);
      auto nodes = r.strings(o, "nodes", ptr, false);
      if (!name || !kind || !nodes || !fresh("system", *name, ptr)) continue;
      if (*kind != "directed" && *kind != "inverse") {
        r.fail(ptr + "/kind", "expected \"directed\" or \"inverse\"");
        continue;
      }
      s.name = *name;
      s.kind = *kind;
      s.nodes = *nodes;
      bool ok = true;
      for (std::size_t k = 0; k < nodes->size(); ++k)
        if (!ws.has_module((*nodes)[k])) {
          r.fail(ptr + "/nodes/" + std::to_string(k), "unknown semimodule " + (*nodes)[k]);
          ok = false;
        }
      const Json* edges = r.field(o, "edges", ptr);
      if (!edges || !edges->is_array()) {
        if (edges) r.fail(ptr + "/edges", "expected an array");
        continue;
      }
      for (std::size_t k = 0; k < edges->size() && ok; ++k) {
        const std::string ep = ptr + "/edges/" + std::to_string(k);
        const Json& e = (*edges)[k];
        if (!e.is_object() || !e.contains("from") || !e.contains("to") ||
            !e["from"].is_number_unsigned() || !e["to"].is_number_unsigned()) {
          r.fail(ep, "expected {\"from\": index, \"to\": index, \"map\": name}");
          ok = false;
          break;
        }
        r.unknown_keys(e, ep, {"from", "to", "map"});
        SystemEdge edge{e["from"].get<std::size_t>(), e["to"].get<std::size_t>(), ""};
        auto map = r.string(e, "map", ep);
        if (!map || edge.from >= nodes->size() || edge.to >= nodes->size()) {
          if (map) r.fail(ep, "node index out of range");
          ok = false;
          break;
        }
        edge.map = *map;
        if (!resolve_morphism(*map, ep + "/map")) ok = false;
        s.edges.push_back(std::move(edge));
      }
      if (!ok) continue;
      try {
        if (s.kind == "directed") ws.directed(s);
        else ws.inverse(s);
        ws.systems.push_back(std::move(s));
      } catch (const Error& e) {
        p.axiom.push_back({ptr, e.kind(), *name + ": " + e.what()});
      }
    }

  if (const Json* list = array("diagrams"))
    for (std::size_t i = 0; i < list->size(); ++i) {
      const std::string ptr = "/diagrams/" + std::to_string(i);
      const Json& o = (*list)[i];
      if (!o.is_object()) {
        r.fail(ptr, "expected an object");
        continue;
      }
      r.unknown_keys(o, ptr, {"name", "nodes", "arrows", "equalities"});
      Diagram d;
      auto name = r.string(o, "name", ptr);
      auto nodes = r.strings(o, "nodes", ptr, false);
      auto arrows = r.strings(o, "arrows", ptr, false);
      if (!name || !nodes || !arrows || !fresh("diagram", *name, ptr)) continue;
      d.name = *name;
      d.nodes = *nodes;
      d.arrows = *arrows;
      bool ok = true;
      for (std::size_t k = 0; k < nodes->size(); ++k)
        if (!ws.has_module((*nodes)[k])) {
          r.fail(ptr + "/nodes/" + std::to_string(k), "unknown semimodule " + (*nodes)[k]);
          ok = false;
        }
      for (std::size_t k = 0; k < arrows->size(); ++k)
        if (!resolve_morphism((*arrows)[k], ptr + "/arrows/" + std::to_string(k))) ok = false;
      if (const Json* eqs = r.field(o, "equalities", ptr, false)) {
        if (!eqs->is_array()) {
          r.fail(ptr + "/equalities", "expected an array");
          ok = false;
        }
        for (std::size_t k = 0; ok && k < eqs->size(); ++k) {
          const std::string qp = ptr + "/equalities/" + std::to_string(k);
          const Json& q = (*eqs)[k];
          if (!q.is_array() || q.size() != 2) {
            r.fail(qp, "expected a pair of paths");
            ok = false;
            break;
          }
          std::vector<std::string> sides[2];
          for (int side = 0; side < 2 && ok; ++side) {
            const Json& path = q[side];
            if (!path.is_array() || path.empty()) {
              r.fail(qp + "/" + std::to_string(side), "expected a non-empty path");
              ok = false;
              break;
            }
            for (std::size_t a = 0; a < path.size(); ++a) {
              const std::string ap = qp + "/" + std::to_string(side) + "/" + std::to_string(a);
              if (!path[a].is_string()) {
                r.fail(ap, "expected a morphism name");
                ok = false;
                break;
              }
              if (!resolve_morphism(path[a].get<std::string>(), ap)) ok = false;
              sides[side].push_back(path[a].get<std::string>());
            }
          }
          if (ok) d.equalities.emplace_back(sides[0], sides[1]);
        }
      }
      if (!ok) continue;
      try {
        if (auto bad = ws.diagram_failure(d)) {
          p.axiom.push_back({ptr, "NotCommutative", *name + ": " + *bad + " fails"});
          continue;
        }
      } catch (const Error& e) {
        p.axiom.push_back({ptr, e.kind(), *name + ": " + e.what()});
        continue;
      }
      ws.diagrams.push_back(std::move(d));
    }

  p.schema = std::move(r.schema);
  return p;
}

Morphism compose_path(const Workspace& ws, const std::vector<std::string>& path) {
  Morphism acc = ws.morphism(path.front());
  for (std::size_t i = 1; i < path.size(); ++i) acc = compose(ws.morphism(path[i]), acc);
  return acc;
}

std::string path_label(const std::vector<std::string>& path) {
  std::string out;
  for (auto it = path.rbegin(); it != path.rend(); ++it) out += (it == path.rbegin() ? "" : " o ") + *it;
  return out;
}

}  // namespace

SemiringPtr Workspace::semiring(const std::string& name) const {
  for (const SemiringPtr& s : semirings)
    if (s->name() == name) return s;
  return semiring_by_name(name);
}

bool Workspace::has_module(const std::string& name) const {
  for (const ModulePtr& m : semimodules)
    if (m->name() == name) return true;
  return default_catalog().find_module(name) != nullptr;
}

const ModulePtr& Workspace::module(const std::string& name) const {
  for (const ModulePtr& m : semimodules)
    if (m->name() == name) return m;
  if (const ModulePtr* m = default_catalog().find_module(name)) return *m;
  throw UnknownObject("unknown semimodule " + name);
}

const Morphism& Workspace::morphism(const std::string& name) const {
  for (const NamedMorphism& f : morphisms)
    if (f.name == name) return f.morphism;
  throw UnknownObject("unknown morphism " + name);
}

const NamedSystem& Workspace::system(const std::string& name) const {
  for (const NamedSystem& s : systems)
    if (s.name == name) return s;
  throw UnknownObject("unknown system " + name);
}

const Diagram& Workspace::diagram(const std::string& name) const {
  for (const Diagram& d : diagrams)
    if (d.name == name) return d;
  throw UnknownObject("unknown diagram " + name);
}

namespace {

template <class System>
System build_system(const Workspace& ws, const NamedSystem& s, bool reversed) {
  std::vector<ModulePtr> nodes;
  for (const std::string& n : s.nodes) nodes.push_back(ws.module(n));
  std::vector<Edge> edges;
  std::vector<Morphism> maps;
  for (const SystemEdge& e : s.edges) {
    const Morphism& f = ws.morphism(e.map);
    const ModulePtr& src = nodes[reversed ? e.to : e.from];
    const ModulePtr& tgt = nodes[reversed ? e.from : e.to];
    if (f.source()->size() != src->size() || f.target()->size() != tgt->size())
      throw ShapeMismatch("edge " + std::to_string(e.from) + " -> " + std::to_string(e.to) +
                          ": " + e.map + " does not connect the nodes");
    edges.emplace_back(e.from, e.to);
    maps.push_back(f);
  }
  return System::build(std::move(nodes), std::move(edges), std::move(maps));
}

}  // namespace

DirectedSystem Workspace::directed(const NamedSystem& s) const {
  if (s.kind != "directed") throw UnknownObject(s.name + " is not a directed system");
  return build_system<DirectedSystem>(*this, s, false);
}

InverseSystem Workspace::inverse(const NamedSystem& s) const {
  if (s.kind != "inverse") throw UnknownObject(s.name + " is not an inverse system");
  return build_system<InverseSystem>(*this, s, true);
}

std::optional<std::string> Workspace::diagram_failure(const Diagram& d) const {
  for (const auto& [p, q] : d.equalities) {
    Morphism a = compose_path(*this, p), b = compose_path(*this, q);
    if (a.source()->size() != b.source()->size() || a.target()->size() != b.target()->size() ||
        a.map() != b.map())
      return path_label(p) + " = " + path_label(q);
  }
  return std::nullopt;
}

std::vector<WorkspaceIssue> check_workspace(const Json& doc) {
  Parsed p = parse(doc);
  std::vector<WorkspaceIssue> out = std::move(p.schema);
  out.insert(out.end(), p.axiom.begin(), p.axiom.end());
  return out;
}

Workspace parse_workspace(const Json& doc) {
  Parsed p = parse(doc);
  if (!p.schema.empty()) {
    const WorkspaceIssue& first = p.schema.front();
    throw SchemaError(first.pointer.empty() ? "/" : first.pointer, first.message);
  }
  if (!p.axiom.empty()) {
    const WorkspaceIssue& first = p.axiom.front();
    throw AxiomViolation({{first.pointer + " " + first.message, {}}});
  }
  return std::move(p.ws);
}

Workspace load_workspace(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UnknownObject("cannot open workspace " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError("/", std::string("not valid JSON: ") + e.what());
  }
  return parse_workspace(doc);
}

Json semiring_to_json(const Semiring& s) {
  const std::size_t n = s.size();
  return Json{{"name", s.name()},
              {"elements", s.labels()},
              {"add", table_json(s.add_table(), n, n, s.labels())},
              {"mul", table_json(s.mul_table(), n, n, s.labels())},
              {"zero", s.label(s.zero())},
              {"one", s.label(s.one())}};
}

Json module_to_json(const Semimodule& m) {
  const std::size_t n = m.size();
  Json o{{"name", m.name()},
         {"elements", m.labels()},
         {"add", table_json(m.add_table(), n, n, m.labels())},
         {"zero", m.label(m.zero())}};
  if (m.has_action()) {
    const Action& a = m.actions()[0];
    o["semiring"] = a.ring->name();
    o["side"] = to_string(a.side);
    o["action"] = table_json(a.table, n, a.ring->size(), m.labels());
    if (m.actions().size() > 1) {
      const Action& b = m.actions()[1];
      o["second_action"] = Json{{"semiring", b.ring->name()},
                                {"side", to_string(b.side)},
                                {"table", table_json(b.table, n, b.ring->size(), m.labels())}};
    }
  }
  return o;
}

Json morphism_to_json(const std::string& name, const Morphism& f) {
  Json map = Json::array();
  for (Elem y : f.map()) map.push_back(f.target()->label(y));
  return Json{{"name", name},
              {"source", f.source()->name()},
              {"target", f.target()->name()},
              {"map", std::move(map)},
              {"linearity", to_string(f.linearity())}};
}

Json workspace_to_json(const Workspace& ws) {
  Json doc{{"format", ws.format}};
  doc["config"] = Json{{"max_size", ws.config.max_size},
                       {"budget", ws.config.budget},
                       {"seed", ws.config.seed},
                       {"universe", ws.config.universe}};
  Json& rings = doc["semirings"] = Json::array();
  for (const SemiringPtr& s : ws.semirings) rings.push_back(semiring_to_json(*s));
  Json& mods = doc["semimodules"] = Json::array();
  for (const ModulePtr& m : ws.semimodules) mods.push_back(module_to_json(*m));
  Json& maps = doc["morphisms"] = Json::array();
  for (const NamedMorphism& f : ws.morphisms) maps.push_back(morphism_to_json(f.name, f.morphism));
  Json& systems = doc["systems"] = Json::array();
  for (const NamedSystem& s : ws.systems) {
    Json edges = Json::array();
    for (const SystemEdge& e : s.edges) edges.push_back({{"from", e.from}, {"to", e.to}, {"map", e.map}});
    systems.push_back({{"name", s.name}, {"kind", s.kind}, {"nodes", s.nodes}, {"edges", edges}});
  }
  Json& diagrams = doc["diagrams"] = Json::array();
  for (const Diagram& d : ws.diagrams) {
    Json eqs = Json::array();
    for (const auto& [p, q] : d.equalities) eqs.push_back(Json::array({p, q}));
    diagrams.push_back({{"name", d.name}, {"nodes", d.nodes}, {"arrows", d.arrows}, {"equalities", eqs}});
  }
  return doc;
}

std::string emit_workspace(const Workspace& ws) { return workspace_to_json(ws).dump(2) + "\n"; }

Workspace catalog_workspace() {
  const Catalog& c = default_catalog();
  Workspace ws;
  ws.semirings = c.semirings;
  ws.semimodules = c.modules;
  auto mod = [&](const std::string& name) { return ws.module(name); };
  auto by_labels = [&](const std::string& name, const std::string& src, const std::string& tgt,
                       const std::vector<std::string>& images) {
    ModulePtr s = mod(src), t = mod(tgt);
    std::vector<Elem> map;
    for (const std::string& l : images) map.push_back(*t->find(l));
    ws.morphisms.push_back({name, Morphism::build(s, t, std::move(map))});
  };
  by_labels("incl03", "SAT3{0,3}", "SAT3", {"0", "3"});
  ws.morphisms.push_back({"sat3_to_triv", zero_morphism(mod("SAT3"), mod("SAT3.TRIV"))});
  by_labels("incl02", "ZMOD4{0,2}", "ZMOD4", {"0", "2"});
  by_labels("double4", "ZMOD4", "ZMOD4{0,2}", {"0", "2", "0", "2"});
  ws.morphisms.push_back({"bool_from_triv", zero_morphism(mod("BOOL.TRIV"), mod("BOOL"))});
  by_labels("bool_diag", "BOOL", "BOOL^2", {"(0,0)", "(1,1)"});
  by_labels("bool_proj1", "BOOL^2", "BOOL", {"0", "1", "0", "1"});
  ws.morphisms.push_back({"bool_to_triv", zero_morphism(mod("BOOL"), mod("BOOL.TRIV"))});

  ws.systems.push_back({"bool_chain", "directed", {"BOOL.TRIV", "BOOL", "BOOL^2"},
                        {{0, 1, "bool_from_triv"}, {1, 2, "bool_diag"}}});
  ws.systems.push_back({"bool_tower", "inverse", {"BOOL.TRIV", "BOOL", "BOOL^2"},
                        {{0, 1, "bool_to_triv"}, {1, 2, "bool_proj1"}}});
  ws.diagrams.push_back({"seq1", {"SAT3{0,3}", "SAT3", "SAT3.TRIV"}, {"incl03", "sat3_to_triv"}, {}});
  ws.diagrams.push_back({"seq2", {"ZMOD4{0,2}", "ZMOD4", "ZMOD4{0,2}"}, {"incl02", "double4"}, {}});
  ws.diagrams.push_back({"split_bool",
                         {"BOOL", "BOOL^2", "BOOL"},
                         {"bool_diag", "bool_proj1"},
                         {{{"bool_diag", "bool_proj1"}, {"bool_diag", "bool_proj1", "bool_diag", "bool_proj1"}}}});
  return ws;
}

}  // namespace semiflat
