#include "semiflat/congruence.hpp"

#include <unordered_map>

#include "semiflat/subsemimodule.hpp"

namespace semiflat {

std::vector<Elem> Congruence::representatives() const {
  std::vector<Elem> reps(class_count, 0);
  std::vector<bool> seen(class_count, false);
  for (Elem i = 0; i < class_of.size(); ++i)
    if (!seen[class_of[i]]) {
      seen[class_of[i]] = true;
      reps[class_of[i]] = i;
    }
  return reps;
}

Congruence Congruence::identity(std::size_t n) {
  Congruence c;
  c.class_of.resize(n);
  std::iota(c.class_of.begin(), c.class_of.end(), 0u);
  c.class_count = n;
  return c;
}

Congruence Congruence::total(std::size_t n) {
  Congruence c;
  c.class_of.assign(n, 0);
  c.class_count = n ? 1 : 0;
  return c;
}

Congruence Congruence::from_blocks(const std::vector<Elem>& block_of) {
  Congruence c;
  c.class_of.resize(block_of.size());
  std::unordered_map<Elem, Elem> id_of;
  for (std::size_t i = 0; i < block_of.size(); ++i) {
    auto [it, fresh] = id_of.emplace(block_of[i], static_cast<Elem>(id_of.size()));
    c.class_of[i] = it->second;
  }
  c.class_count = id_of.size();
  return c;
}

bool Congruence::refines(const Congruence& coarser) const {
  std::vector<Elem> image(class_count, UINT32_MAX);
  for (std::size_t i = 0; i < class_of.size(); ++i) {
    Elem& slot = image[class_of[i]];
    if (slot == UINT32_MAX) slot = coarser.class_of[i];
    else if (slot != coarser.class_of[i]) return false;
  }
  return true;
}

Congruence congruence_closure(const Semimodule& m, const std::vector<ElemPair>& pairs,
                              bool scalar_aware) {
  // Translation by an additive generator set is enough: any translation is a
  // composite of them.
  std::vector<Elem> gens = minimal_additive_generating_set(m);
  struct Fn {
    bool action;
    std::size_t k;
    Elem arg;
  };
  std::vector<Fn> fns;
  for (Elem g : gens) fns.push_back({false, 0, g});
  if (scalar_aware)
    for (std::size_t k = 0; k < m.actions().size(); ++k)
      for (Elem s = 0; s < m.actions()[k].ring->size(); ++s) fns.push_back({true, k, s});
  return close_under_maps(
      m.size(), fns.size(),
      [&](std::size_t i, Elem x) {
        const Fn& f = fns[i];
        return f.action ? m.act(f.k, x, f.arg) : m.add(x, f.arg);
      },
      pairs);
}

std::optional<Violation> congruence_violation(const Semimodule& m, const Congruence& c,
                                              bool scalar_aware) {
  if (c.size() != m.size()) throw ShapeMismatch("partition size differs from carrier size");
  for (Elem a = 0; a < m.size(); ++a)
    for (Elem b = a + 1; b < m.size(); ++b) {
      if (!c.same(a, b)) continue;
      for (Elem x = 0; x < m.size(); ++x)
        if (!c.same(m.add(a, x), m.add(b, x))) return Violation{"compatible_add", {a, b, x}};
      if (!scalar_aware) continue;
      for (std::size_t k = 0; k < m.actions().size(); ++k)
        for (Elem s = 0; s < m.actions()[k].ring->size(); ++s)
          if (!c.same(m.act(k, a, s), m.act(k, b, s)))
            return Violation{"compatible_action", {a, b, s}};
    }
  return std::nullopt;
}

}  // namespace semiflat
