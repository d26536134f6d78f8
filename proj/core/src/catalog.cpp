#include "semiflat/catalog.hpp"

#include <set>

#include "semiflat/isomorphism.hpp"
#include "semiflat/quotient.hpp"
#include "semiflat/subsemimodule.hpp"

namespace semiflat {

namespace {

SemiringPtr from_ops(std::string name, std::size_t n, auto&& add, auto&& mul,
                     std::vector<std::string> labels = {}) {
  SemiringSpec s;
  s.name = std::move(name);
  if (labels.empty())
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  s.labels = std::move(labels);
  s.add.resize(n * n);
  s.mul.resize(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      s.add[a * n + b] = add(a, b);
      s.mul[a * n + b] = mul(a, b);
    }
  s.zero = 0;
  s.one = n > 1 ? 1 : 0;
  return build_semiring(std::move(s));
}

std::string tuple_label(const std::vector<std::string>& parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + parts[i];
  return out + ")";
}

std::string partition_label(const Semimodule& m, const Congruence& c) {
  std::vector<std::vector<Elem>> blocks(c.class_count);
  for (Elem x = 0; x < m.size(); ++x) blocks[c.class_of[x]].push_back(x);
  std::string out = "[";
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) out += "|";
    for (std::size_t i = 0; i < blocks[b].size(); ++i) out += (i ? "," : "") + m.label(blocks[b][i]);
  }
  return out + "]";
}

}  // namespace

SemiringPtr boolean_semiring() {
  static const SemiringPtr s = from_ops(
      "BOOL", 2, [](Elem a, Elem b) { return a | b; }, [](Elem a, Elem b) { return a & b; });
  return s;
}

SemiringPtr saturating_semiring(unsigned k) {
  if (k == 0) throw UnknownObject("SAT0 has no unit distinct from zero");
  return from_ops(
      "SAT" + std::to_string(k), k + 1, [k](Elem a, Elem b) { return std::min(a + b, k); },
      [k](Elem a, Elem b) { return std::min(a * b, k); });
}

SemiringPtr zmod_semiring(unsigned n) {
  if (n < 2) throw UnknownObject("ZMOD" + std::to_string(n) + " has no unit distinct from zero");
  return from_ops(
      "ZMOD" + std::to_string(n), n, [n](Elem a, Elem b) { return (a + b) % n; },
      [n](Elem a, Elem b) { return (a * b) % n; });
}

SemiringPtr product_semiring(const SemiringPtr& a, const SemiringPtr& b) {
  const std::size_t nb = b->size();
  std::vector<std::string> labels;
  for (Elem x = 0; x < a->size(); ++x)
    for (Elem y = 0; y < nb; ++y) labels.push_back(tuple_label({a->label(x), b->label(y)}));
  SemiringSpec s;
  s.name = a->name() + "x" + b->name();
  s.labels = std::move(labels);
  const std::size_t n = a->size() * nb;
  s.add.resize(n * n);
  s.mul.resize(n * n);
  for (Elem p = 0; p < n; ++p)
    for (Elem q = 0; q < n; ++q) {
      Elem pa = p / nb, pb = p % nb, qa = q / nb, qb = q % nb;
      s.add[p * n + q] = a->add(pa, qa) * nb + b->add(pb, qb);
      s.mul[p * n + q] = a->mul(pa, qa) * nb + b->mul(pb, qb);
    }
  s.zero = a->zero() * nb + b->zero();
  s.one = a->one() * nb + b->one();
  return build_semiring(std::move(s));
}

SemiringPtr semiring_by_name(const std::string& name) {
  if (auto x = name.find('x'); x != std::string::npos)
    return product_semiring(semiring_by_name(name.substr(0, x)), semiring_by_name(name.substr(x + 1)));
  if (name == "BOOL") return boolean_semiring();
  auto number = [&](std::size_t prefix) -> unsigned {
    std::string digits = name.substr(prefix);
    if (digits.empty() || digits.size() > 2 ||
        digits.find_first_not_of("0123456789") != std::string::npos)
      throw UnknownObject("unknown semiring " + name);
    return static_cast<unsigned>(std::stoul(digits));
  };
  if (name.rfind("SAT", 0) == 0) return saturating_semiring(number(3));
  if (name.rfind("ZMOD", 0) == 0) return zmod_semiring(number(4));
  throw UnknownObject("unknown semiring " + name);
}

ModulePtr regular_module(const SemiringPtr& s, Side side, std::string name) {
  return free_module(s, 1, side, name.empty() ? s->name() : std::move(name));
}

ModulePtr free_module(const SemiringPtr& s, unsigned n, Side side, std::string name) {
  const std::size_t k = s->size();
  std::size_t size = 1;
  for (unsigned i = 0; i < n; ++i) {
    size *= k;
    if (size > default_limits().max_product_size)
      throw SizeBoundExceeded("free_module: " + s->name() + "^" + std::to_string(n) + " too large");
  }
  // Element index is the base-k number with the first coordinate most
  // significant.
  auto digits = [&](Elem x) {
    std::vector<Elem> d(n);
    for (unsigned i = n; i-- > 0;) {
      d[i] = x % k;
      x /= k;
    }
    return d;
  };
  auto pack = [&](const std::vector<Elem>& d) {
    Elem x = 0;
    for (Elem v : d) x = x * k + v;
    return x;
  };
  SemimoduleSpec m;
  if (name.empty()) name = n == 0 ? "TRIV" : n == 1 ? s->name() : s->name() + "^" + std::to_string(n);
  m.name = std::move(name);
  for (Elem x = 0; x < size; ++x) {
    if (n == 0) {
      m.labels.push_back("0");
    } else if (n == 1) {
      m.labels.push_back(s->label(x));
    } else {
      std::vector<std::string> parts;
      for (Elem v : digits(x)) parts.push_back(s->label(v));
      m.labels.push_back(tuple_label(parts));
    }
  }
  m.add.resize(size * size);
  for (Elem x = 0; x < size; ++x)
    for (Elem y = 0; y < size; ++y) {
      auto dx = digits(x), dy = digits(y);
      for (unsigned i = 0; i < n; ++i) dx[i] = s->add(dx[i], dy[i]);
      m.add[x * size + y] = pack(dx);
    }
  std::vector<Elem> zero(n, s->zero());
  m.zero = pack(zero);
  Action act{s, side, std::vector<Elem>(size * k)};
  for (Elem x = 0; x < size; ++x)
    for (Elem t = 0; t < k; ++t) {
      auto dx = digits(x);
      for (unsigned i = 0; i < n; ++i) dx[i] = side == Side::right ? s->mul(dx[i], t) : s->mul(t, dx[i]);
      act.table[x * k + t] = pack(dx);
    }
  m.actions.push_back(std::move(act));
  return std::make_shared<const Semimodule>(std::move(m));
}

ModulePtr trivial_module(const SemiringPtr& s, Side side, std::string name) {
  return free_module(s, 0, side, name.empty() ? "TRIV" : std::move(name));
}

ModulePtr trivial_monoid(std::string name) {
  SemimoduleSpec m;
  m.name = std::move(name);
  m.labels = {"0"};
  m.add = {0};
  return std::make_shared<const Semimodule>(std::move(m));
}

std::vector<Congruence> enumerate_congruences(const Semimodule& m, std::size_t max_count) {
  const std::size_t n = m.size();
  std::vector<Congruence> out{Congruence::identity(n)};
  std::set<std::vector<Elem>> seen{out.front().class_of};
  std::vector<ElemPair> principal;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b) principal.emplace_back(a, b);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::vector<ElemPair> base;
    auto reps = out[i].representatives();
    for (Elem x = 0; x < n; ++x)
      if (reps[out[i].class_of[x]] != x) base.emplace_back(reps[out[i].class_of[x]], x);
    for (auto p : principal) {
      if (out[i].same(p.first, p.second)) continue;
      auto pairs = base;
      pairs.push_back(p);
      Congruence c = congruence_closure(m, pairs);
      if (seen.insert(c.class_of).second) {
        out.push_back(std::move(c));
        if (out.size() > max_count)
          throw SizeBoundExceeded("enumerate_congruences: more than " + std::to_string(max_count) +
                                  " congruences on " + m.name());
      }
    }
  }
  return out;
}

std::vector<ModulePtr> catalog_modules(const SemiringPtr& s, std::size_t max_size, Side side) {
  std::vector<ModulePtr> candidates;
  const std::string sn = s->name();
  auto s1 = regular_module(s, side);
  candidates.push_back(trivial_module(s, side, sn + ".TRIV"));
  candidates.push_back(s1);
  ModulePtr s2;
  if (s->size() * s->size() <= default_limits().max_enumeration_size) {
    s2 = free_module(s, 2, side);
    candidates.push_back(s2);
  }
  for (const ModulePtr& parent : {s1, s2}) {
    if (!parent) continue;
    for (const auto& sub : enumerate_subsemimodules(parent))
      if (sub.size() > 1 && sub.size() < parent->size())
        candidates.push_back(
            as_module(parent, sub.members, parent->name() + mask_label(*parent, sub.members)).module);
  }
  for (const Congruence& c : enumerate_congruences(*s1))
    if (c.class_count > 1 && c.class_count < s1->size())
      candidates.push_back(quotient_by_congruence(s1, c, sn + "/" + partition_label(*s1, c)).module);
  if (s2)
    for (const auto& sub : enumerate_subsemimodules(s2))
      if (sub.size() > 1 && sub.size() < s2->size())
        candidates.push_back(quotient_by_sub(s2, sub.members).module);

  std::vector<ModulePtr> out;
  for (const ModulePtr& m : candidates) {
    if (m->size() > max_size && m != s1 && m != s2) continue;
    bool dup = false;
    for (const ModulePtr& o : out)
      if (isomorphic(*m, *o)) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(m);
  }
  return out;
}

std::vector<ModulePtr> Catalog::modules_over(const Semiring& s) const {
  std::vector<ModulePtr> out;
  for (const auto& m : modules)
    if (m->ring() && m->ring()->same_structure(s) && m->ring()->name() == s.name()) out.push_back(m);
  return out;
}

const ModulePtr* Catalog::find_module(const std::string& name) const {
  for (const auto& m : modules)
    if (m->name() == name) return &m;
  return nullptr;
}

const SemiringPtr* Catalog::find_semiring(const std::string& name) const {
  for (const auto& s : semirings)
    if (s->name() == name) return &s;
  return nullptr;
}

Catalog build_catalog(const std::vector<SemiringPtr>& semirings, std::size_t max_size) {
  Catalog c;
  c.semirings = semirings;
  for (const auto& s : semirings)
    for (auto& m : catalog_modules(s, max_size)) c.modules.push_back(std::move(m));
  return c;
}

const Catalog& default_catalog() {
  static const Catalog c = build_catalog(
      {boolean_semiring(), saturating_semiring(3), zmod_semiring(2), zmod_semiring(4)});
  return c;
}

}  // namespace semiflat
