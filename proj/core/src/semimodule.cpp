#include "semiflat/semimodule.hpp"

namespace semiflat {

std::optional<Elem> Semimodule::find(const std::string& label) const {
  for (std::size_t i = 0; i < spec_.labels.size(); ++i)
    if (spec_.labels[i] == label) return static_cast<Elem>(i);
  return std::nullopt;
}

std::optional<std::size_t> Semimodule::action_on(const Semiring& ring, Side side) const {
  for (std::size_t k = 0; k < spec_.actions.size(); ++k)
    if (spec_.actions[k].side == side && spec_.actions[k].ring->same_structure(ring)) return k;
  if (ring.is_commutative())
    for (std::size_t k = 0; k < spec_.actions.size(); ++k)
      if (spec_.actions[k].ring->same_structure(ring)) return k;
  return std::nullopt;
}

namespace {

void check_action(const std::string& what, std::size_t m, const Action& a,
                  std::vector<Violation>& out, Elem zero, const std::vector<Elem>& add_table) {
  if (!a.ring) throw MalformedTable(what + ": action without semiring");
  const Semiring& S = *a.ring;
  const std::size_t n = S.size();
  check_table_shape(what + " action", m, n, a.table, m);
  auto act = [&](Elem x, Elem s) { return a.table[x * n + s]; };
  auto add = [&](Elem x, Elem y) { return add_table[x * m + y]; };

  auto first = [&](const char* axiom, auto body) {
    for (Elem x = 0; x < m; ++x)
      for (Elem s = 0; s < n; ++s)
        for (Elem t = 0; t < n; ++t)
          if (!body(x, s, t)) {
            out.push_back({axiom, {x, s, t}});
            return;
          }
  };
  // Right: (xs)t = x(st). Left: t(sx) = (ts)x.
  first("action_compatible", [&](Elem x, Elem s, Elem t) {
    Elem st = a.side == Side::right ? S.mul(s, t) : S.mul(t, s);
    return act(act(x, s), t) == act(x, st);
  });
  for (Elem x = 0, done = 0; x < m && !done; ++x)
    for (Elem y = 0; y < m && !done; ++y)
      for (Elem s = 0; s < n; ++s)
        if (act(add(x, y), s) != add(act(x, s), act(y, s))) {
          out.push_back({"action_distributes_elements", {x, y, s}});
          done = 1;
          break;
        }
  first("action_distributes_scalars", [&](Elem x, Elem s, Elem t) {
    return act(x, S.add(s, t)) == add(act(x, s), act(x, t));
  });
  for (Elem x = 0; x < m; ++x)
    if (act(x, S.one()) != x) {
      out.push_back({"action_unit", {x, S.one()}});
      break;
    }
  for (Elem x = 0; x < m; ++x)
    if (act(x, S.zero()) != zero) {
      out.push_back({"action_zero_scalar", {x, S.zero()}});
      break;
    }
  for (Elem s = 0; s < n; ++s)
    if (act(zero, s) != zero) {
      out.push_back({"action_zero_element", {zero, s}});
      break;
    }
}

}  // namespace

std::vector<Violation> validate_semimodule(const SemimoduleSpec& s) {
  const std::size_t m = s.labels.size();
  const std::string what = "semimodule " + s.name;
  if (m == 0) throw MalformedTable(what + ": empty carrier");
  check_unique_labels(what, s.labels);
  check_table_shape(what + " add", m, m, s.add, m);
  if (s.zero >= m) throw MalformedTable(what + ": zero out of range");
  if (s.actions.size() > 2) throw MalformedTable(what + ": at most two actions");

  auto add = [&](Elem a, Elem b) { return s.add[a * m + b]; };
  std::vector<Violation> out;
  for (Elem a = 0, done = 0; a < m && !done; ++a)
    for (Elem b = 0; b < m && !done; ++b)
      for (Elem c = 0; c < m; ++c)
        if (add(add(a, b), c) != add(a, add(b, c))) {
          out.push_back({"add_associative", {a, b, c}});
          done = 1;
          break;
        }
  for (Elem a = 0, done = 0; a < m && !done; ++a)
    for (Elem b = 0; b < m; ++b)
      if (add(a, b) != add(b, a)) {
        out.push_back({"add_commutative", {a, b}});
        done = 1;
        break;
      }
  for (Elem a = 0; a < m; ++a)
    if (add(a, s.zero) != a || add(s.zero, a) != a) {
      out.push_back({"add_identity", {a}});
      break;
    }
  for (const Action& a : s.actions) check_action(what, m, a, out, s.zero, s.add);

  if (s.actions.size() == 2) {
    const Action& p = s.actions[0];
    const Action& q = s.actions[1];
    const std::size_t np = p.ring->size(), nq = q.ring->size();
    for (Elem x = 0, done = 0; x < m && !done; ++x)
      for (Elem a = 0; a < np && !done; ++a)
        for (Elem b = 0; b < nq; ++b) {
          Elem lhs = q.table[p.table[x * np + a] * nq + b];
          Elem rhs = p.table[q.table[x * nq + b] * np + a];
          if (lhs != rhs) {
            out.push_back({"actions_commute", {x, a, b}});
            done = 1;
            break;
          }
        }
  }
  return out;
}

ModulePtr build_semimodule(SemimoduleSpec spec) {
  auto v = validate_semimodule(spec);
  if (!v.empty()) throw AxiomViolation(std::move(v));
  return std::make_shared<const Semimodule>(std::move(spec));
}

ModulePtr make_bimodule(const ModulePtr& m) {
  if (!m->has_action()) throw SideMismatch("make_bimodule: " + m->name() + " has no action");
  if (!m->ring()->is_commutative())
    throw NotCommutative("make_bimodule: semiring " + m->ring()->name() + " is not commutative");
  if (m->actions().size() == 2) return m;
  SemimoduleSpec s = m->spec();
  Action copy = s.actions[0];
  copy.side = opposite(copy.side);
  s.actions.push_back(std::move(copy));
  return std::make_shared<const Semimodule>(std::move(s));
}

ModulePtr with_side(const ModulePtr& m, Side side) {
  if (!m->has_action() || m->side() == side) return m;
  if (!m->ring()->is_commutative())
    throw SideMismatch(m->name() + " is a " + to_string(m->side()) + " module over " +
                       m->ring()->name() + ", which is not commutative");
  SemimoduleSpec s = m->spec();
  s.actions[0].side = side;
  return std::make_shared<const Semimodule>(std::move(s));
}

ModulePtr forget_actions(const ModulePtr& m) {
  if (!m->has_action()) return m;
  SemimoduleSpec s = m->spec();
  s.actions.clear();
  return std::make_shared<const Semimodule>(std::move(s));
}

ModulePtr with_name(const ModulePtr& m, std::string name) {
  if (m->name() == name) return m;
  SemimoduleSpec s = m->spec();
  s.name = std::move(name);
  return std::make_shared<const Semimodule>(std::move(s));
}

ModulePtr keep_action(const ModulePtr& m, std::size_t k) {
  SemimoduleSpec s = m->spec();
  Action a = s.actions.at(k);
  s.actions.clear();
  s.actions.push_back(std::move(a));
  return std::make_shared<const Semimodule>(std::move(s));
}

std::vector<std::pair<std::size_t, std::size_t>> matched_actions(const Semimodule& a,
                                                                 const Semimodule& b) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < a.actions().size(); ++i) {
    const Action& ai = a.actions()[i];
    std::optional<std::size_t> hit;
    for (std::size_t j = 0; j < b.actions().size() && !hit; ++j)
      if (b.actions()[j].side == ai.side && b.actions()[j].ring->same_structure(*ai.ring)) hit = j;
    if (!hit && ai.ring->is_commutative())
      for (std::size_t j = 0; j < b.actions().size() && !hit; ++j)
        if (b.actions()[j].ring->same_structure(*ai.ring)) hit = j;
    if (hit) out.emplace_back(i, *hit);
  }
  return out;
}

bool same_ring_and_side(const Semimodule& a, const Semimodule& b) {
  if (!a.has_action() || !b.has_action()) return !a.has_action() && !b.has_action();
  if (!a.ring()->same_structure(*b.ring())) return false;
  return a.side() == b.side() || a.ring()->is_commutative();
}

std::vector<std::vector<Elem>> semiring_morphisms(const Semiring& from, const Semiring& to) {
  std::vector<std::vector<Elem>> out;
  const std::size_t n = from.size(), k = to.size();
  std::vector<Elem> phi(n, 0);
  auto ok = [&] {
    if (phi[from.zero()] != to.zero() || phi[from.one()] != to.one()) return false;
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        if (phi[from.add(a, b)] != to.add(phi[a], phi[b]) ||
            phi[from.mul(a, b)] != to.mul(phi[a], phi[b]))
          return false;
    return true;
  };
  for (;;) {
    if (ok()) out.push_back(phi);
    std::size_t i = n;
    while (i > 0 && phi[i - 1] + 1 == k) phi[--i] = 0;
    if (i == 0) break;
    ++phi[i - 1];
  }
  return out;
}

ModulePtr restrict_scalars(const ModulePtr& m, const SemiringPtr& s, const std::vector<Elem>& phi) {
  if (!m->has_action()) throw SideMismatch(m->name() + " carries no action to restrict");
  if (phi.size() != s->size()) throw ShapeMismatch("restrict_scalars: phi has the wrong length");
  SemimoduleSpec spec = m->spec();
  Action a{s, m->side(), std::vector<Elem>(m->size() * s->size())};
  for (Elem x = 0; x < m->size(); ++x)
    for (Elem t = 0; t < s->size(); ++t) a.table[x * s->size() + t] = m->act(0, x, phi[t]);
  spec.actions = {std::move(a)};
  return std::make_shared<const Semimodule>(std::move(spec));
}

}  // namespace semiflat
