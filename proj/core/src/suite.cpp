#include "semiflat/suite.hpp"

#include <functional>
#include <map>
#include <random>

#include "semiflat/limits.hpp"
#include "semiflat/quotient.hpp"
#include "semiflat/search.hpp"
#include "semiflat/tensor_iso.hpp"
#include "semiflat/workspace.hpp"
#include "suite_util.hpp"

namespace semiflat {

using namespace suite_detail;

bool SuiteReport::passed() const {
  for (const auto& r : rows)
    if (!r.passed) return false;
  return true;
}

bool SuiteReport::criteria_passed() const {
  for (const auto& r : rows)
    if (r.id > 0 && !r.passed) return false;
  return true;
}

const SuiteRow* SuiteReport::row(int id) const {
  for (const auto& r : rows)
    if (r.id == id) return &r;
  return nullptr;
}

namespace {

// ---------------------------------------------------------------------------
// Axiom oracles. Each evaluates one axiom at one tuple straight from the raw
// tables; `fails` is true when the equation is false there.

bool in_range(const std::vector<Elem>& w, std::size_t n) {
  for (Elem x : w)
    if (x >= n) return false;
  return true;
}

const std::map<std::string, std::size_t> kRingArity = {
    {"add_associative", 3}, {"add_commutative", 2},   {"add_identity", 1},
    {"mul_associative", 3}, {"mul_identity", 1},      {"left_distributive", 3},
    {"right_distributive", 3}, {"zero_absorbing", 2}, {"one_distinct_zero", 2}};

bool ring_fails(const SemiringSpec& s, const std::string& ax, const std::vector<Elem>& w) {
  const std::size_t n = s.labels.size();
  auto it = kRingArity.find(ax);
  if (it == kRingArity.end() || w.size() != it->second || !in_range(w, n)) return false;
  auto A = [&](Elem a, Elem b) { return s.add[a * n + b]; };
  auto M = [&](Elem a, Elem b) { return s.mul[a * n + b]; };
  const Elem z = s.zero;
  if (ax == "add_associative") return A(A(w[0], w[1]), w[2]) != A(w[0], A(w[1], w[2]));
  if (ax == "add_commutative") return A(w[0], w[1]) != A(w[1], w[0]);
  if (ax == "add_identity") return A(w[0], z) != w[0] || A(z, w[0]) != w[0];
  if (ax == "mul_associative") return M(M(w[0], w[1]), w[2]) != M(w[0], M(w[1], w[2]));
  if (ax == "mul_identity") return M(w[0], s.one) != w[0] || M(s.one, w[0]) != w[0];
  if (ax == "left_distributive") return M(w[0], A(w[1], w[2])) != A(M(w[0], w[1]), M(w[0], w[2]));
  if (ax == "right_distributive") return M(A(w[0], w[1]), w[2]) != A(M(w[0], w[2]), M(w[1], w[2]));
  if (ax == "zero_absorbing") return (w[0] == z || w[1] == z) && M(w[0], w[1]) != z;
  return w[0] == s.one && w[1] == s.zero && s.one == s.zero;
}

// Position types: e = element, s = scalar.
const std::map<std::string, std::string> kModuleShape = {
    {"add_associative", "eee"},
    {"add_commutative", "ee"},
    {"add_identity", "e"},
    {"action_compatible", "ess"},
    {"action_distributes_elements", "ees"},
    {"action_distributes_scalars", "ess"},
    {"action_unit", "es"},
    {"action_zero_scalar", "es"},
    {"action_zero_element", "es"},
    {"actions_commute", "ess"}};

bool module_fails(const SemimoduleSpec& m, const std::string& ax, const std::vector<Elem>& w) {
  auto it = kModuleShape.find(ax);
  if (it == kModuleShape.end() || w.size() != it->second.size()) return false;
  const std::size_t n = m.labels.size();
  for (std::size_t i = 0; i < w.size(); ++i)
    if (it->second[i] == 'e' && w[i] >= n) return false;
  auto A = [&](Elem a, Elem b) { return m.add[a * n + b]; };
  const Elem z = m.zero;
  if (ax == "add_associative") return A(A(w[0], w[1]), w[2]) != A(w[0], A(w[1], w[2]));
  if (ax == "add_commutative") return A(w[0], w[1]) != A(w[1], w[0]);
  if (ax == "add_identity") return A(w[0], z) != w[0] || A(z, w[0]) != w[0];
  if (ax == "actions_commute") {
    if (m.actions.size() != 2) return false;
    const Action& p = m.actions[0];
    const Action& q = m.actions[1];
    const std::size_t np = p.ring->size(), nq = q.ring->size();
    if (w[1] >= np || w[2] >= nq) return false;
    return q.table[p.table[w[0] * np + w[1]] * nq + w[2]] !=
           p.table[q.table[w[0] * nq + w[2]] * np + w[1]];
  }
  for (const Action& a : m.actions) {
    const Semiring& S = *a.ring;
    const std::size_t k = S.size();
    bool ok = true;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (it->second[i] == 's' && w[i] >= k) ok = false;
    if (!ok) continue;
    auto act = [&](Elem x, Elem s) { return a.table[x * k + s]; };
    bool bad = false;
    if (ax == "action_compatible") {
      Elem st = a.side == Side::right ? S.mul(w[1], w[2]) : S.mul(w[2], w[1]);
      bad = act(act(w[0], w[1]), w[2]) != act(w[0], st);
    } else if (ax == "action_distributes_elements") {
      bad = act(A(w[0], w[1]), w[2]) != A(act(w[0], w[2]), act(w[1], w[2]));
    } else if (ax == "action_distributes_scalars") {
      bad = act(w[0], S.add(w[1], w[2])) != A(act(w[0], w[1]), act(w[0], w[2]));
    } else if (ax == "action_unit") {
      bad = w[1] == S.one() && act(w[0], w[1]) != w[0];
    } else if (ax == "action_zero_scalar") {
      bad = w[1] == S.zero() && act(w[0], w[1]) != z;
    } else if (ax == "action_zero_element") {
      bad = w[0] == z && act(w[0], w[1]) != z;
    }
    if (bad) return true;
  }
  return false;
}

bool morphism_fails(const Semimodule& src, const Semimodule& tgt, const std::vector<Elem>& map,
                    const std::string& ax, const std::vector<Elem>& w) {
  const std::size_t n = src.size();
  if (ax == "preserves_zero") return w.size() == 1 && w[0] == src.zero() && map[w[0]] != tgt.zero();
  if (ax == "preserves_add")
    return w.size() == 2 && in_range(w, n) && map[src.add(w[0], w[1])] != tgt.add(map[w[0]], map[w[1]]);
  if (ax == "preserves_action") {
    if (w.size() != 2 || w[0] >= n || !src.has_action() || !tgt.has_action()) return false;
    if (w[1] >= src.actions()[0].ring->size()) return false;
    return map[src.act(0, w[0], w[1])] != tgt.act(0, map[w[0]], w[1]);
  }
  return false;
}

// True when some tuple over the given position ranges makes `fails` true.
bool exists_tuple(const std::vector<std::size_t>& ranges,
                  const std::function<bool(const std::vector<Elem>&)>& fails) {
  std::vector<Elem> w(ranges.size(), 0);
  for (std::size_t r : ranges)
    if (r == 0) return false;
  for (;;) {
    if (fails(w)) return true;
    std::size_t i = w.size();
    for (;;) {
      if (i == 0) return false;
      --i;
      if (++w[i] < ranges[i]) break;
      w[i] = 0;
    }
  }
}

struct Probe {
  MutationFixture info;
  std::function<std::vector<Violation>()> validate;
  std::function<bool(const std::vector<Elem>&)> fails;
};

std::string cell(const std::string& table, const std::vector<std::string>& rows,
                 const std::vector<std::string>& cols, std::size_t idx, std::size_t ncols) {
  return table + "[" + rows[idx / ncols] + "," + cols[idx % ncols] + "]";
}

void semiring_probes(const SemiringSpec& base, std::vector<Probe>& out) {
  const std::size_t n = base.labels.size();
  for (const auto& [ax, arity] : kRingArity) {
    std::vector<std::size_t> ranges(arity, n);
    bool found = false;
    auto try_spec = [&](SemiringSpec s, std::string where) {
      auto fails = [s, ax = ax](const std::vector<Elem>& w) { return ring_fails(s, ax, w); };
      if (!exists_tuple(ranges, fails)) return false;
      out.push_back({{base.name + " " + where, "semiring", ax},
                     [s] { return validate_semiring(s); }, fails});
      return true;
    };
    for (int t = 0; t < 2 && !found; ++t) {
      const auto& table = t == 0 ? base.add : base.mul;
      for (std::size_t i = 0; i < table.size() && !found; ++i)
        for (Elem v = 0; v < n && !found; ++v) {
          if (v == table[i]) continue;
          SemiringSpec s = base;
          (t == 0 ? s.add : s.mul)[i] = v;
          found = try_spec(s, cell(t == 0 ? "add" : "mul", base.labels, base.labels, i, n) +
                                  " := " + base.labels[v]);
        }
    }
    for (Elem v = 0; v < n && !found; ++v) {
      if (v == base.one) continue;
      SemiringSpec s = base;
      s.one = v;
      found = try_spec(s, "one := " + base.labels[v]);
    }
  }
}

void module_probes(const SemimoduleSpec& base, std::vector<Probe>& out) {
  const std::size_t n = base.labels.size();
  std::size_t k = 0;
  for (const auto& a : base.actions) k = std::max(k, a.ring->size());
  for (const auto& [ax, shape] : kModuleShape) {
    std::vector<std::size_t> ranges;
    for (char c : shape) ranges.push_back(c == 'e' ? n : k);
    bool found = false;
    auto try_spec = [&](SemimoduleSpec s, std::string where) {
      auto fails = [s, ax = ax](const std::vector<Elem>& w) { return module_fails(s, ax, w); };
      if (!exists_tuple(ranges, fails)) return false;
      out.push_back({{base.name + " " + where, "semimodule", ax},
                     [s] { return validate_semimodule(s); }, fails});
      return true;
    };
    for (std::size_t i = 0; i < base.add.size() && !found; ++i)
      for (Elem v = 0; v < n && !found; ++v) {
        if (v == base.add[i]) continue;
        SemimoduleSpec s = base;
        s.add[i] = v;
        found = try_spec(s, cell("add", base.labels, base.labels, i, n) + " := " + base.labels[v]);
      }
    for (std::size_t a = 0; a < base.actions.size() && !found; ++a) {
      const auto& act = base.actions[a];
      const std::size_t r = act.ring->size();
      for (std::size_t i = 0; i < act.table.size() && !found; ++i)
        for (Elem v = 0; v < n && !found; ++v) {
          if (v == act.table[i]) continue;
          SemimoduleSpec s = base;
          s.actions[a].table[i] = v;
          found = try_spec(s, cell("act" + std::to_string(a), base.labels, act.ring->labels(), i, r) +
                                  " := " + base.labels[v]);
        }
    }
  }
}

void morphism_probes(const std::string& name, const Morphism& f, std::vector<Probe>& out) {
  const ModulePtr src = f.source(), tgt = f.target();
  const std::size_t n = src->size(), m = tgt->size();
  const std::size_t k = src->has_action() ? src->actions()[0].ring->size() : 0;
  const std::vector<std::pair<std::string, std::vector<std::size_t>>> axioms = {
      {"preserves_zero", {n}}, {"preserves_add", {n, n}}, {"preserves_action", {n, k}}};
  for (const auto& [ax, ranges] : axioms) {
    bool found = false;
    for (Elem x = 0; x < n && !found; ++x)
      for (Elem v = 0; v < m && !found; ++v) {
        if (v == f(x)) continue;
        std::vector<Elem> map = f.map();
        map[x] = v;
        auto fails = [src, tgt, map, ax = ax](const std::vector<Elem>& w) {
          return morphism_fails(*src, *tgt, map, ax, w);
        };
        if (!exists_tuple(ranges, fails)) continue;
        out.push_back({{name + " map[" + src->label(x) + "] := " + tgt->label(v), "morphism", ax},
                       [src, tgt, map] { return validate_morphism(*src, *tgt, map, Linearity::linear); },
                       fails});
        found = true;
      }
  }
}

std::vector<Probe> all_probes() {
  std::vector<Probe> out;
  for (const char* s : {"BOOL", "SAT3", "ZMOD4"}) semiring_probes(catalog_ring(s)->spec(), out);
  module_probes(catalog_module("SAT3")->spec(), out);
  module_probes(catalog_module("BOOL^2")->spec(), out);
  module_probes(make_bimodule(catalog_module("ZMOD4"))->spec(), out);
  const ModulePtr& z4 = catalog_module("ZMOD4");
  Mask half(4, false);
  half[0] = half[2] = true;
  Embedded e = as_module(z4, half);
  morphism_probes("{0,2} -> ZMOD4", e.inclusion, out);
  morphism_probes("id SAT3", identity(catalog_module("SAT3")), out);
  const ModulePtr& b = catalog_module("BOOL");
  ProductObject bb = product({b, b});
  morphism_probes("BOOL -> BOOL^2 diagonal", pairing(bb, {identity(b), identity(b)}), out);
  return out;
}

}  // namespace

std::vector<MutationFixture> mutation_fixtures() {
  std::vector<MutationFixture> out;
  for (auto& p : all_probes()) out.push_back(p.info);
  return out;
}

SuiteRow suite_axioms(const SuiteOptions&) {
  SuiteRow row = make_row(1, "axioms", "shipped structures validate; single-entry mutations are rejected with a correct witness");
  const Catalog& cat = default_catalog();
  for (const auto& s : cat.semirings) {
    ++row.instances;
    if (!validate_semiring(s->spec()).empty()) fail(row, "catalog semiring " + s->name() + " rejected");
  }
  for (const auto& m : cat.modules) {
    ++row.instances;
    if (!validate_semimodule(m->spec()).empty()) fail(row, "catalog module " + m->name() + " rejected");
  }
  Workspace ws = catalog_workspace();
  for (const auto& nm : ws.morphisms) {
    ++row.instances;
    const Morphism& f = nm.morphism;
    if (!validate_morphism(*f.source(), *f.target(), f.map(), f.linearity()).empty())
      fail(row, "catalog morphism " + nm.name + " rejected");
  }
  auto probes = all_probes();
  for (const auto& p : probes) {
    ++row.instances;
    ++row.applicable;
    std::vector<Violation> v;
    try {
      v = p.validate();
    } catch (const Error& e) {
      fail(row, p.info.name + ": threw " + e.kind());
      continue;
    }
    const Violation* hit = nullptr;
    for (const auto& x : v)
      if (x.axiom == p.info.axiom) hit = &x;
    if (!hit) {
      fail(row, p.info.name + ": " + p.info.axiom + " not reported");
      continue;
    }
    if (!p.fails(hit->witness)) fail(row, p.info.name + ": witness does not violate " + p.info.axiom);
  }
  if (probes.size() < 20) fail(row, "only " + std::to_string(probes.size()) + " mutation fixtures");
  // Shape errors are exceptions, not violations.
  SemiringSpec bad = catalog_ring("BOOL")->spec();
  bad.mul.pop_back();
  ++row.instances;
  try {
    validate_semiring(bad);
    fail(row, "short mul table accepted");
  } catch (const MalformedTable&) {
  }
  row.notes.push_back(std::to_string(probes.size()) + " mutation fixtures");
  return row;
}

// ---------------------------------------------------------------------------

ModulePtr cyclic_monoid(unsigned index, unsigned period) {
  const unsigned n = index + period;
  SemimoduleSpec s;
  s.name = "C(" + std::to_string(index) + "," + std::to_string(period) + ")";
  for (unsigned i = 0; i < n; ++i) s.labels.push_back(std::to_string(i));
  s.add.resize(n * n);
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) {
      unsigned v = a + b;
      if (v >= n) v = index + (v - index) % period;
      s.add[a * n + b] = v;
    }
  return build_semimodule(std::move(s));
}

std::vector<bool> naive_congruence(const Semimodule& m, const std::vector<std::pair<Elem, Elem>>& pairs,
                                   bool scalar_aware) {
  const std::size_t n = m.size();
  std::vector<bool> r(n * n, false);
  for (Elem i = 0; i < n; ++i) r[i * n + i] = true;
  for (auto [a, b] : pairs) r[a * n + b] = true;
  for (bool changed = true; changed;) {
    changed = false;
    auto set = [&](Elem a, Elem b) {
      if (!r[a * n + b]) {
        r[a * n + b] = true;
        changed = true;
      }
    };
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        if (!r[a * n + b]) continue;
        set(b, a);
        for (Elem c = 0; c < n; ++c) {
          set(m.add(a, c), m.add(b, c));
          if (r[b * n + c]) set(a, c);
        }
        if (scalar_aware)
          for (std::size_t k = 0; k < m.actions().size(); ++k)
            for (Elem s = 0; s < m.actions()[k].ring->size(); ++s) set(m.act(k, a, s), m.act(k, b, s));
      }
  }
  return r;
}

SuiteRow suite_congruence(const SuiteOptions& opt) {
  SuiteRow row = make_row(2, "congruence", "generated congruences agree with the definitional fixpoint");
  std::vector<std::pair<ModulePtr, bool>> corpus;
  for (unsigned i = 0; i < 12; ++i)
    for (unsigned p = 1; i + p <= 12; ++p) corpus.push_back({cyclic_monoid(i, p), false});
  for (std::size_t n = 1; n <= 4; ++n)
    for (auto& m : enumerate_monoids(n, opt.limits)) corpus.push_back({m, false});
  for (auto& m : default_catalog().modules)
    if (m->size() <= 12) corpus.push_back({m, true});
  std::mt19937_64 rng(opt.seed);
  for (auto& [m, scalars] : corpus) {
    const std::size_t n = m->size();
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<ElemPair> pairs;
      const std::size_t k = 1 + rng() % 3;
      for (std::size_t i = 0; i < k; ++i)
        pairs.emplace_back(static_cast<Elem>(rng() % n), static_cast<Elem>(rng() % n));
      ++row.instances;
      Congruence c = congruence_closure(*m, pairs, scalars);
      auto r = naive_congruence(*m, pairs, scalars);
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
          if (c.same(a, b) != r[a * n + b]) {
            fail(row, m->name() + ": closure and fixpoint disagree on (" + m->label(a) + "," +
                          m->label(b) + ")");
            a = static_cast<Elem>(n);
            break;
          }
    }
  }
  row.applicable = row.instances;
  row.notes.push_back(std::to_string(corpus.size()) + " corpus monoids");
  return row;
}

// ---------------------------------------------------------------------------

SuiteRow suite_unit_law(const SuiteOptions& opt) {
  SuiteRow row = make_row(3, "unit-law", "m |-> m(x)1 and n |-> 1(x)n are bijective morphisms");
  for (const auto& m : default_catalog().modules) {
    ++row.instances;
    try {
      UnitIso u = unit_iso(m, opt.limits);
      UnitIso v = unit_iso_left(m, opt.limits);
      const Elem one = m->ring()->one();
      for (const UnitIso* w : {&u, &v}) {
        const Morphism& f = w->iso.forward;
        bool ok = w->iso.verified && f.injective() && f.surjective() &&
                  validate_morphism(*f.source(), *f.target(), f.map(), f.linearity()).empty();
        for (Elem x = 0; ok && x < m->size(); ++x)
          ok = f(x) == (w == &u ? w->tensor.tau_at(x, one) : w->tensor.tau_at(one, x));
        if (!ok) fail(row, m->name() + (w == &u ? ": M(x)S" : ": S(x)M") + " unit map not an isomorphism");
      }
      ++row.applicable;
    } catch (const Error& e) {
      fail(row, m->name() + ": " + e.what());
    }
  }
  return row;
}

SuiteRow suite_cancellative_tensor(const SuiteOptions& opt) {
  SuiteRow row = make_row(4, "cancellative-tensor",
                          "c(M(x)N) factors every balanced map into small cancellative monoids uniquely");
  std::vector<ModulePtr> targets;
  for (std::size_t n = 1; n <= 4; ++n)
    for (auto& g : enumerate_monoids(n, opt.limits))
      if (is_cancellative(*g)) targets.push_back(g);
  const Catalog& cat = default_catalog();
  std::size_t maps = 0;
  for (const auto& s : cat.semirings) {
    auto mods = small_modules(*s, 4);
    for (const auto& m : mods)
      for (const auto& n : mods) {
        if (m->size() * n->size() > 16) continue;
        ++row.instances;
        try {
          TakahashiTensor t = takahashi_tensor(m, n, {}, opt.limits);
          UniversalCheck u = certify_cancellative_universal(t, targets, opt.limits);
          maps += u.maps_checked;
          ++row.applicable;
          if (u.failures)
            fail(row, m->name() + " (x) " + n->name() + ": " + u.first_failure);
        } catch (const SizeBoundExceeded&) {
        } catch (const BoxBoundExceeded&) {
        }
      }
  }
  if (row.applicable < 5) fail(row, "fewer than 5 pairs in bounds");
  row.notes.push_back(std::to_string(targets.size()) + " cancellative targets, " +
                      std::to_string(maps) + " balanced maps");
  return row;
}

SuiteRow suite_adjunction(const SuiteOptions& opt) {
  SuiteRow row = make_row(5, "adjunction",
                          "currying Hom(M(x)X, Y) -> Hom(X, Hom(M, Y)) is bijective and natural");
  std::size_t non_free = 0;
  for (const auto& s : default_catalog().semirings) {
    auto mods = small_modules(*s, 3);
    for (const auto& m : mods)
      for (const auto& x : mods)
        for (const auto& y : mods) {
          if (m->size() * x->size() * y->size() > 18) continue;
          ++row.instances;
          try {
            auto hx = homs(x, x, opt.limits);
            auto hy = homs(y, y, opt.limits);
            AdjunctionReport r = adjunction_iso(m, x, y, hx, hy, opt.limits);
            ++row.applicable;
            if (m->size() > 1 && m->name() != s->name() && m->name() != s->name() + "^2") ++non_free;
            if (!r.ok())
              fail(row, m->name() + ", " + x->name() + ", " + y->name() + ": " +
                            (r.failure.empty() ? "not a natural bijection" : r.failure));
          } catch (const SizeBoundExceeded&) {
          } catch (const BoxBoundExceeded&) {
          }
        }
  }
  if (row.applicable < 5 || non_free == 0) fail(row, "too few triples, or none with M non-free");
  row.notes.push_back(std::to_string(non_free) + " triples with M not free");
  return row;
}

SuiteReport run_suite(const SuiteOptions& opt) {
  SuiteReport rep;
  for (auto* f : {suite_axioms, suite_congruence, suite_unit_law, suite_cancellative_tensor,
                  suite_adjunction, suite_exactness, suite_flat_positive, suite_flat_negative,
                  suite_lattice, suite_nu, suite_limits, suite_fg_reduction, suite_middle_transfer,
                  suite_flat_injective, suite_colimit_flatness, suite_ideal_criterion})
    rep.rows.push_back(f(opt));
  return rep;
}

}  // namespace semiflat
