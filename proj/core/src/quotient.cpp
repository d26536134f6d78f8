#include "semiflat/quotient.hpp"

namespace semiflat {

Quotient quotient_by_congruence(const ModulePtr& m, const Congruence& c, std::string name) {
  if (auto v = congruence_violation(*m, c))
    throw NotACongruence("partition of " + m->name() + " is not a congruence: " +
                         describe({*v}));
  const std::size_t k = c.class_count;
  auto reps = c.representatives();
  SemimoduleSpec s;
  s.name = name.empty() ? m->name() + "/~" : std::move(name);
  for (Elem r : reps) s.labels.push_back("[" + m->label(r) + "]");
  s.add.resize(k * k);
  for (Elem i = 0; i < k; ++i)
    for (Elem j = 0; j < k; ++j) s.add[i * k + j] = c.class_of[m->add(reps[i], reps[j])];
  s.zero = c.class_of[m->zero()];
  for (std::size_t a = 0; a < m->actions().size(); ++a) {
    Action act = m->actions()[a];
    const std::size_t n = act.ring->size();
    act.table.assign(k * n, 0);
    for (Elem i = 0; i < k; ++i)
      for (Elem t = 0; t < n; ++t) act.table[i * n + t] = c.class_of[m->act(a, reps[i], t)];
    s.actions.push_back(std::move(act));
  }
  auto q = std::make_shared<const Semimodule>(std::move(s));
  return {q, Morphism::trusted(m, q, c.class_of), c};
}

Congruence congruence_mod(const Semimodule& m, const Mask& l) {
  UnionFind uf(m.size());
  auto members = mask_elements(l);
  for (Elem x = 0; x < m.size(); ++x)
    for (Elem y : members) uf.unite(x, m.add(x, y));
  return uf.to_congruence();
}

Congruence cancellative_congruence_mod(const Semimodule& m, const Mask& l) {
  Congruence base = congruence_mod(m, l);
  UnionFind uf(m.size());
  for (Elem a = 0; a < m.size(); ++a)
    for (Elem b = a + 1; b < m.size(); ++b) {
      if (uf.find(a) == uf.find(b)) continue;
      for (Elem x = 0; x < m.size(); ++x)
        if (base.same(m.add(a, x), m.add(b, x))) {
          uf.unite(a, b);
          break;
        }
    }
  return uf.to_congruence();
}

Quotient quotient_by_sub(const ModulePtr& m, const Mask& l, std::string name) {
  if (!is_subsemimodule(*m, l))
    throw NotASubsemimodule(mask_label(*m, l) + " is not a subsemimodule of " + m->name());
  if (name.empty()) name = m->name() + "/" + mask_label(*m, l);
  return quotient_by_congruence(m, congruence_mod(*m, l), std::move(name));
}

Quotient quotient_cancellative(const ModulePtr& m, const Mask& l, std::string name) {
  if (!is_subsemimodule(*m, l))
    throw NotASubsemimodule(mask_label(*m, l) + " is not a subsemimodule of " + m->name());
  if (name.empty()) name = m->name() + "//" + mask_label(*m, l);
  return quotient_by_congruence(m, cancellative_congruence_mod(*m, l), std::move(name));
}

Quotient cancellative_reflection(const ModulePtr& m, std::string name) {
  Mask zero(m->size(), false);
  zero[m->zero()] = true;
  if (name.empty()) name = "c(" + m->name() + ")";
  return quotient_by_congruence(m, cancellative_congruence_mod(*m, zero), std::move(name));
}

bool is_cancellative(const Semimodule& m) {
  for (Elem c = 0; c < m.size(); ++c) {
    std::vector<bool> hit(m.size(), false);
    for (Elem a = 0; a < m.size(); ++a) {
      Elem v = m.add(a, c);
      if (hit[v]) return false;
      hit[v] = true;
    }
  }
  return true;
}

ElementOrder element_order(const Semimodule& m, Elem x) {
  std::vector<std::int64_t> first(m.size(), -1);
  Elem cur = m.zero();
  for (std::uint32_t step = 0;; ++step) {
    if (first[cur] >= 0) {
      auto i = static_cast<std::uint32_t>(first[cur]);
      return {i, step - i};
    }
    first[cur] = step;
    cur = m.add(cur, x);
  }
}

std::vector<ElementOrder> element_orders(const Semimodule& m) {
  std::vector<ElementOrder> out;
  out.reserve(m.size());
  for (Elem x = 0; x < m.size(); ++x) out.push_back(element_order(m, x));
  return out;
}

}  // namespace semiflat
