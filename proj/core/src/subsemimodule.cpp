#include "semiflat/subsemimodule.hpp"

#include <algorithm>
#include <set>

namespace semiflat {

bool is_subsemimodule(const Semimodule& m, const Mask& mask) {
  if (mask.size() != m.size() || !mask[m.zero()]) return false;
  auto elems = mask_elements(mask);
  for (Elem a : elems)
    for (Elem b : elems)
      if (!mask[m.add(a, b)]) return false;
  for (std::size_t k = 0; k < m.actions().size(); ++k)
    for (Elem a : elems)
      for (Elem s = 0; s < m.actions()[k].ring->size(); ++s)
        if (!mask[m.act(k, a, s)]) return false;
  return true;
}

Subsemimodule make_subsemimodule(const ModulePtr& m, Mask mask) {
  if (!is_subsemimodule(*m, mask))
    throw NotASubsemimodule(mask_label(*m, mask) + " is not a subsemimodule of " + m->name());
  return Subsemimodule{m, std::move(mask)};
}

Mask generated_mask(const Semimodule& m, const std::vector<Elem>& seed, bool scalar_aware) {
  Mask mask(m.size(), false);
  std::vector<Elem> members;
  auto push = [&](Elem x) {
    if (!mask[x]) {
      mask[x] = true;
      members.push_back(x);
    }
  };
  push(m.zero());
  for (Elem x : seed) push(x);
  // Each new member is combined with every earlier one exactly once.
  for (std::size_t i = 0; i < members.size(); ++i) {
    Elem x = members[i];
    for (std::size_t j = 0; j <= i; ++j) push(m.add(x, members[j]));
    if (scalar_aware)
      for (std::size_t k = 0; k < m.actions().size(); ++k)
        for (Elem s = 0; s < m.actions()[k].ring->size(); ++s) push(m.act(k, x, s));
  }
  return mask;
}

Subsemimodule generated_subsemimodule(const ModulePtr& m, const std::vector<Elem>& seed) {
  return Subsemimodule{m, generated_mask(*m, seed, true)};
}

std::vector<Subsemimodule> enumerate_subsemimodules(const ModulePtr& m, const Limits& limits) {
  if (m->size() > limits.max_enumeration_size)
    throw SizeBoundExceeded("enumerate_subsemimodules: |" + m->name() + "| = " +
                            std::to_string(m->size()) + " exceeds " +
                            std::to_string(limits.max_enumeration_size));
  std::set<Mask> seen;
  std::vector<Mask> frontier{generated_mask(*m, {})};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    Mask cur = std::move(frontier.back());
    frontier.pop_back();
    auto base = mask_elements(cur);
    for (Elem x = 0; x < m->size(); ++x) {
      if (cur[x]) continue;
      auto seed = base;
      seed.push_back(x);
      Mask next = generated_mask(*m, seed);
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  std::vector<Subsemimodule> out;
  for (const Mask& mk : seen) out.push_back({m, mk});
  std::sort(out.begin(), out.end(), [](const Subsemimodule& a, const Subsemimodule& b) {
    std::size_t sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    return a.elements() < b.elements();
  });
  return out;
}

Mask subtractive_closure_mask(const Semimodule& m, const Mask& y) {
  Mask cur = y;
  for (;;) {
    auto members = mask_elements(cur);
    Mask next = cur;
    for (Elem n = 0; n < m.size(); ++n) {
      if (next[n]) continue;
      for (Elem y1 : members)
        if (cur[m.add(n, y1)]) {
          next[n] = true;
          break;
        }
    }
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

Subsemimodule subtractive_closure(const ModulePtr& m, const Mask& y) {
  if (!is_subsemimodule(*m, y))
    throw NotASubsemimodule(mask_label(*m, y) + " is not a subsemimodule of " + m->name());
  return Subsemimodule{m, subtractive_closure_mask(*m, y)};
}

bool is_subtractive(const Semimodule& m, const Mask& y) {
  return subtractive_closure_mask(m, y) == y;
}

namespace {

std::vector<Elem> greedy_generators(const Semimodule& m, bool scalar_aware) {
  std::vector<Elem> gens;
  for (Elem x = 0; x < m.size(); ++x)
    if (x != m.zero()) gens.push_back(x);
  for (std::size_t i = 0; i < gens.size();) {
    std::vector<Elem> rest;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i) rest.push_back(gens[j]);
    if (generated_mask(m, rest, scalar_aware)[gens[i]]) gens.erase(gens.begin() + i);
    else ++i;
  }
  return gens;
}

}  // namespace

std::vector<Elem> minimal_generating_set(const Semimodule& m) { return greedy_generators(m, true); }

std::vector<Elem> minimal_additive_generating_set(const Semimodule& m) {
  return greedy_generators(m, false);
}

Embedded as_module(const ModulePtr& parent, const Mask& mask, std::string name) {
  if (!is_subsemimodule(*parent, mask))
    throw NotASubsemimodule(mask_label(*parent, mask) + " is not a subsemimodule of " +
                            parent->name());
  auto elems = mask_elements(mask);
  std::vector<Elem> index(parent->size(), 0);
  for (Elem i = 0; i < elems.size(); ++i) index[elems[i]] = i;
  SemimoduleSpec s;
  s.name = name.empty() ? mask_label(*parent, mask) : std::move(name);
  for (Elem x : elems) s.labels.push_back(parent->label(x));
  const std::size_t k = elems.size();
  s.add.resize(k * k);
  for (Elem i = 0; i < k; ++i)
    for (Elem j = 0; j < k; ++j) s.add[i * k + j] = index[parent->add(elems[i], elems[j])];
  s.zero = index[parent->zero()];
  for (std::size_t a = 0; a < parent->actions().size(); ++a) {
    Action act = parent->actions()[a];
    const std::size_t n = act.ring->size();
    act.table.assign(k * n, 0);
    for (Elem i = 0; i < k; ++i)
      for (Elem t = 0; t < n; ++t) act.table[i * n + t] = index[parent->act(a, elems[i], t)];
    s.actions.push_back(std::move(act));
  }
  auto sub = std::make_shared<const Semimodule>(std::move(s));
  return {sub, Morphism::trusted(sub, parent, elems)};
}

std::string mask_label(const Semimodule& m, const Mask& mask) {
  std::string out = "{";
  bool first = true;
  for (Elem i = 0; i < mask.size(); ++i)
    if (mask[i]) {
      if (!first) out += ",";
      out += m.label(i);
      first = false;
    }
  return out + "}";
}

}  // namespace semiflat
