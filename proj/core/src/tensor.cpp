#include "semiflat/tensor.hpp"

#include <stdexcept>

#include "semiflat/hom.hpp"
#include "semiflat/subsemimodule.hpp"

namespace semiflat {

namespace {

struct Box {
  std::vector<std::uint32_t> radix, index, period;
  std::vector<std::uint64_t> stride;
  std::uint64_t size = 1;

  std::uint32_t reduce(std::size_t j, std::uint64_t v) const {
    if (v < radix[j]) return static_cast<std::uint32_t>(v);
    return index[j] + static_cast<std::uint32_t>((v - index[j]) % period[j]);
  }
  std::vector<std::uint32_t> decode(std::uint64_t code) const {
    std::vector<std::uint32_t> d(radix.size());
    for (std::size_t j = 0; j < d.size(); ++j) {
      d[j] = static_cast<std::uint32_t>(code % radix[j]);
      code /= radix[j];
    }
    return d;
  }
  std::uint64_t encode(const std::vector<std::uint32_t>& d) const {
    std::uint64_t code = 0;
    for (std::size_t j = 0; j < d.size(); ++j) code += d[j] * stride[j];
    return code;
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    auto da = decode(a), db = decode(b);
    for (std::size_t j = 0; j < da.size(); ++j) da[j] = reduce(j, std::uint64_t(da[j]) + db[j]);
    return encode(da);
  }
  std::uint64_t increment(std::size_t j, std::uint64_t code) const {
    std::uint32_t d = static_cast<std::uint32_t>((code / stride[j]) % radix[j]);
    std::uint32_t nd = reduce(j, std::uint64_t(d) + 1);
    return code - std::uint64_t(d) * stride[j] + std::uint64_t(nd) * stride[j];
  }
};

// Generators and fixed expansions of every element.
void expansions(const Semimodule& m, const TensorOptions& opt, std::vector<Elem>& gens,
                std::vector<std::vector<std::uint32_t>>& expr) {
  gens.clear();
  if (!opt.zero_relations) {
    for (Elem x = 0; x < m.size(); ++x) gens.push_back(x);
  } else if (opt.dense) {
    for (Elem x = 0; x < m.size(); ++x)
      if (x != m.zero()) gens.push_back(x);
  } else {
    gens = minimal_additive_generating_set(m);
  }
  expr.assign(m.size(), std::vector<std::uint32_t>(gens.size(), 0));
  if (!opt.zero_relations || opt.dense) {
    for (std::size_t a = 0; a < gens.size(); ++a) expr[gens[a]][a] = 1;
    return;
  }
  // Breadth-first search over the addition Cayley graph, generators in order.
  std::vector<bool> seen(m.size(), false);
  std::vector<Elem> queue{m.zero()};
  seen[m.zero()] = true;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    Elem x = queue[q];
    for (std::size_t a = 0; a < gens.size(); ++a) {
      Elem y = m.add(x, gens[a]);
      if (seen[y]) continue;
      seen[y] = true;
      expr[y] = expr[x];
      ++expr[y][a];
      queue.push_back(y);
    }
  }
}

std::string pair_label(const TensorPresentation& p, std::size_t j) {
  return p.left->label(p.pairs[j].first) + "⊗" + p.right->label(p.pairs[j].second);
}

}  // namespace

Elem multiple(const Semimodule& m, Elem x, std::uint64_t c) {
  Elem acc = m.zero();
  for (std::uint64_t i = 0; i < c; ++i) acc = m.add(acc, x);
  return acc;
}

TensorPresentation tensor_product(const ModulePtr& m, const ModulePtr& n, const TensorOptions& opt,
                                  const Limits& limits) {
  TensorPresentation p;
  p.left = m;
  p.right = n;

  // Balancing actions.
  if (m->has_action() || n->has_action()) {
    if (!m->has_action() || !n->has_action())
      throw SideMismatch("cannot balance " + m->name() + " against " + n->name() +
                         ": only one side carries an action");
    std::optional<std::size_t> la = opt.left_action;
    if (!la) la = m->action_on(*m->ring(), Side::right);
    if (!la)
      throw SideMismatch(m->name() + " has no right action to balance with");
    const Action& ma = m->actions().at(*la);
    std::optional<std::size_t> ra = opt.right_action;
    if (!ra) ra = n->action_on(*ma.ring, Side::left);
    if (!ra || !n->actions().at(*ra).ring->same_structure(*ma.ring))
      throw SideMismatch(n->name() + " has no left action of " + ma.ring->name());
    p.left_action = *la;
    p.right_action = *ra;
    p.balanced_over_ring = true;
  }

  expansions(*m, opt, p.gens_left, p.expr_left);
  expansions(*n, opt, p.gens_right, p.expr_right);

  auto om = element_orders(*m), on = element_orders(*n);
  Box box;
  for (std::size_t a = 0; a < p.gens_left.size(); ++a)
    for (std::size_t b = 0; b < p.gens_right.size(); ++b) {
      ElementOrder x = om[p.gens_left[a]], y = on[p.gens_right[b]];
      if (!opt.zero_relations) {
        x.index = std::max<std::uint32_t>(x.index, 1);
        y.index = std::max<std::uint32_t>(y.index, 1);
      }
      ElementOrder o = (x.index + x.period <= y.index + y.period) ? x : y;
      p.pairs.emplace_back(p.gens_left[a], p.gens_right[b]);
      p.bounds.push_back(o);
      box.radix.push_back(o.index + o.period);
      box.index.push_back(o.index);
      box.period.push_back(o.period);
      box.stride.push_back(box.size);
      if (box.size > limits.max_box_size / box.radix.back())
        throw BoxBoundExceeded("tensor " + m->name() + " (x) " + n->name() + ": box size exceeds " +
                               std::to_string(limits.max_box_size) + " after " +
                               std::to_string(p.pairs.size()) + " generator pairs");
      box.size *= box.radix.back();
    }
  p.box_size = box.size;

  // emb(m, n) expanded bilinearly through the fixed expansions.
  const std::size_t nm = m->size(), nn = n->size(), k = p.pairs.size();
  std::vector<std::uint64_t> emb(nm * nn);
  for (Elem x = 0; x < nm; ++x)
    for (Elem y = 0; y < nn; ++y) {
      std::vector<std::uint32_t> d(k);
      for (std::size_t a = 0; a < p.gens_left.size(); ++a)
        for (std::size_t b = 0; b < p.gens_right.size(); ++b) {
          std::size_t j = p.coordinate(a, b);
          d[j] = box.reduce(j, std::uint64_t(p.expr_left[x][a]) * p.expr_right[y][b]);
        }
      emb[x * nn + y] = box.encode(d);
    }

  std::vector<ElemPair> relations;
  auto relate = [&](std::uint64_t a, std::uint64_t b) {
    if (a != b) relations.emplace_back(static_cast<Elem>(a), static_cast<Elem>(b));
  };
  for (Elem x1 = 0; x1 < nm; ++x1)
    for (Elem x2 = 0; x2 < nm; ++x2)
      for (Elem y = 0; y < nn; ++y)
        relate(emb[m->add(x1, x2) * nn + y], box.add(emb[x1 * nn + y], emb[x2 * nn + y]));
  for (Elem x = 0; x < nm; ++x)
    for (Elem y1 = 0; y1 < nn; ++y1)
      for (Elem y2 = 0; y2 < nn; ++y2)
        relate(emb[x * nn + n->add(y1, y2)], box.add(emb[x * nn + y1], emb[x * nn + y2]));
  if (p.balanced_over_ring) {
    const std::size_t ns = m->actions()[p.left_action].ring->size();
    for (Elem x = 0; x < nm; ++x)
      for (Elem s = 0; s < ns; ++s)
        for (Elem y = 0; y < nn; ++y)
          relate(emb[m->act(p.left_action, x, s) * nn + y],
                 emb[x * nn + n->act(p.right_action, y, s)]);
  }
  p.relation_count = relations.size();

  Congruence sigma = close_under_maps(
      box.size, k, [&](std::size_t j, Elem code) { return static_cast<Elem>(box.increment(j, code)); },
      relations);
  const std::size_t classes = sigma.class_count;
  if (classes > limits.max_tensor_size)
    throw BoxBoundExceeded("tensor " + m->name() + " (x) " + n->name() + " has " +
                           std::to_string(classes) + " elements, above " +
                           std::to_string(limits.max_tensor_size));
  auto reps = sigma.representatives();
  for (Elem r : reps) p.normal_forms.push_back(box.decode(r));
  p.tau.resize(nm * nn);
  for (std::size_t i = 0; i < emb.size(); ++i) p.tau[i] = sigma.class_of[emb[i]];

  SemimoduleSpec s;
  s.name = m->name() + "⊗" + n->name();
  s.add.resize(classes * classes);
  for (Elem a = 0; a < classes; ++a)
    for (Elem b = a; b < classes; ++b)
      s.add[a * classes + b] = s.add[b * classes + a] = sigma.class_of[box.add(reps[a], reps[b])];
  s.zero = sigma.class_of[0];

  // Labels: "m(x)n" for the first pure tensor hitting the class, otherwise
  // the normal form.
  s.labels.assign(classes, "");
  s.labels[s.zero] = "0";
  for (Elem x = 0; x < nm; ++x)
    for (Elem y = 0; y < nn; ++y) {
      Elem c = p.tau[x * nn + y];
      if (s.labels[c].empty()) s.labels[c] = m->label(x) + "⊗" + n->label(y);
    }
  for (Elem c = 0; c < classes; ++c) {
    if (!s.labels[c].empty()) continue;
    std::string out;
    for (std::size_t j = 0; j < k; ++j) {
      std::uint32_t coef = p.normal_forms[c][j];
      if (!coef) continue;
      if (!out.empty()) out += "+";
      out += coef == 1 ? pair_label(p, j) : std::to_string(coef) + "(" + pair_label(p, j) + ")";
    }
    s.labels[c] = out;
  }

  // Induced actions, evaluated on normal forms.
  Semimodule plain(SemimoduleSpec{s.name, s.labels, s.add, s.zero, {}});
  auto induced = [&](const SemiringPtr& ring, Side side, auto&& image_of_pair) {
    Action act{ring, side, std::vector<Elem>(classes * ring->size())};
    for (Elem c = 0; c < classes; ++c)
      for (Elem t = 0; t < ring->size(); ++t) {
        Elem acc = plain.zero();
        for (std::size_t j = 0; j < k; ++j)
          if (p.normal_forms[c][j])
            acc = plain.add(acc, multiple(plain, image_of_pair(j, t), p.normal_forms[c][j]));
        act.table[c * ring->size() + t] = acc;
      }
    s.actions.push_back(std::move(act));
  };
  for (std::size_t i = 0; i < m->actions().size(); ++i) {
    if (p.balanced_over_ring && i == p.left_action) continue;
    const Action& a = m->actions()[i];
    induced(a.ring, a.side, [&](std::size_t j, Elem t) {
      return p.tau_at(m->act(i, p.pairs[j].first, t), p.pairs[j].second);
    });
  }
  for (std::size_t i = 0; i < n->actions().size(); ++i) {
    if (p.balanced_over_ring && i == p.right_action) continue;
    const Action& a = n->actions()[i];
    induced(a.ring, a.side, [&](std::size_t j, Elem t) {
      return p.tau_at(p.pairs[j].first, n->act(i, p.pairs[j].second, t));
    });
  }
  if (s.actions.empty() && p.balanced_over_ring) {
    const Action& a = m->actions()[p.left_action];
    if (a.ring->is_commutative()) {
      std::size_t i = p.left_action;
      induced(a.ring, a.side, [&](std::size_t j, Elem t) {
        return p.tau_at(m->act(i, p.pairs[j].first, t), p.pairs[j].second);
      });
    }
  }
  if (s.actions.size() > 2) s.actions.resize(2);
  p.module = std::make_shared<const Semimodule>(std::move(s));
  return p;
}

std::optional<Violation> balanced_violation(const TensorPresentation& p, const BalancedMap& b) {
  const Semimodule &m = *p.left, &n = *p.right, &g = *b.target;
  const std::size_t nn = n.size();
  auto at = [&](Elem x, Elem y) { return b.table[x * nn + y]; };
  for (Elem y = 0; y < nn; ++y)
    if (at(m.zero(), y) != g.zero()) return Violation{"zero_left", {y}};
  for (Elem x = 0; x < m.size(); ++x)
    if (at(x, n.zero()) != g.zero()) return Violation{"zero_right", {x}};
  for (Elem x1 = 0; x1 < m.size(); ++x1)
    for (Elem x2 = 0; x2 < m.size(); ++x2)
      for (Elem y = 0; y < nn; ++y)
        if (at(m.add(x1, x2), y) != g.add(at(x1, y), at(x2, y)))
          return Violation{"additive_left", {x1, x2, y}};
  for (Elem x = 0; x < m.size(); ++x)
    for (Elem y1 = 0; y1 < nn; ++y1)
      for (Elem y2 = 0; y2 < nn; ++y2)
        if (at(x, n.add(y1, y2)) != g.add(at(x, y1), at(x, y2)))
          return Violation{"additive_right", {x, y1, y2}};
  if (p.balanced_over_ring) {
    const std::size_t ns = m.actions()[p.left_action].ring->size();
    for (Elem x = 0; x < m.size(); ++x)
      for (Elem s = 0; s < ns; ++s)
        for (Elem y = 0; y < nn; ++y)
          if (at(m.act(p.left_action, x, s), y) != at(x, n.act(p.right_action, y, s)))
            return Violation{"balanced", {x, s, y}};
  }
  return std::nullopt;
}

BalancedMap tau_map(const TensorPresentation& p) { return {p.module, p.tau}; }

Morphism factor_balanced(const TensorPresentation& p, const BalancedMap& beta) {
  if (beta.table.size() != p.left->size() * p.right->size())
    throw ShapeMismatch("balanced map table has the wrong size");
  if (auto v = balanced_violation(p, beta)) {
    if (v->axiom.rfind("zero_", 0) == 0) throw NotZeroPreserving(describe({*v}));
    throw NotBalanced(describe({*v}));
  }
  const Semimodule& g = *beta.target;
  const Semimodule& t = *p.module;
  const std::size_t nn = p.right->size();
  std::vector<Elem> gamma(t.size());
  for (Elem c = 0; c < t.size(); ++c) {
    Elem acc = g.zero();
    for (std::size_t j = 0; j < p.pairs.size(); ++j)
      if (p.normal_forms[c][j])
        acc = g.add(acc, multiple(g, beta.table[p.pairs[j].first * nn + p.pairs[j].second],
                                  p.normal_forms[c][j]));
    gamma[c] = acc;
  }
  for (std::size_t i = 0; i < p.tau.size(); ++i)
    if (gamma[p.tau[i]] != beta.table[i])
      throw std::logic_error("factor_balanced: gamma o tau differs from beta");
  for (Elem a = 0; a < t.size(); ++a)
    for (Elem b = 0; b < t.size(); ++b)
      if (gamma[t.add(a, b)] != g.add(gamma[a], gamma[b]))
        throw std::logic_error("factor_balanced: induced map is not additive");
  return Morphism::trusted(p.module, beta.target, std::move(gamma), Linearity::additive);
}

std::vector<BalancedMap> enumerate_balanced_maps(const TensorPresentation& p, const ModulePtr& g,
                                                 const Limits& limits) {
  const std::size_t k = p.pairs.size(), ng = g->size();
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < k; ++j) {
    total *= ng;
    if (total > limits.max_hom_candidates)
      throw SizeBoundExceeded("enumerate_balanced_maps: " + std::to_string(ng) + "^" +
                              std::to_string(k) + " assignments");
  }
  const std::size_t nm = p.left->size(), nn = p.right->size();
  std::vector<BalancedMap> out;
  std::vector<Elem> values(k, 0);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t rest = code;
    for (std::size_t j = 0; j < k; ++j) {
      values[j] = static_cast<Elem>(rest % ng);
      rest /= ng;
    }
    BalancedMap b{g, std::vector<Elem>(nm * nn)};
    for (Elem x = 0; x < nm; ++x)
      for (Elem y = 0; y < nn; ++y) {
        Elem acc = g->zero();
        for (std::size_t a = 0; a < p.gens_left.size(); ++a)
          for (std::size_t c = 0; c < p.gens_right.size(); ++c) {
            std::uint64_t coef = std::uint64_t(p.expr_left[x][a]) * p.expr_right[y][c];
            if (coef) acc = g->add(acc, multiple(*g, values[p.coordinate(a, c)], coef));
          }
        b.table[x * nn + y] = acc;
      }
    if (!balanced_violation(p, b)) out.push_back(std::move(b));
  }
  return out;
}

Morphism tensor_morphisms(const Morphism& f, const Morphism& g, const TensorPresentation& src,
                          const TensorPresentation& dst) {
  if (f.source()->size() != src.left->size() || g.source()->size() != src.right->size() ||
      f.target()->size() != dst.left->size() || g.target()->size() != dst.right->size())
    throw ShapeMismatch("tensor_morphisms: maps do not match the presentations");
  const Semimodule& t = *dst.module;
  std::vector<Elem> map(src.module->size());
  for (Elem c = 0; c < map.size(); ++c) {
    Elem acc = t.zero();
    for (std::size_t j = 0; j < src.pairs.size(); ++j)
      if (src.normal_forms[c][j])
        acc = t.add(acc, multiple(t, dst.tau_at(f(src.pairs[j].first), g(src.pairs[j].second)),
                                  src.normal_forms[c][j]));
    map[c] = acc;
  }
  std::vector<Violation> bad;
  for (Elem x = 0; x < src.left->size() && bad.empty(); ++x)
    for (Elem y = 0; y < src.right->size(); ++y)
      if (map[src.tau_at(x, y)] != dst.tau_at(f(x), g(y))) {
        bad.push_back({"commutes_with_tau", {x, y}});
        break;
      }
  const Semimodule& s = *src.module;
  for (Elem a = 0; a < s.size() && bad.empty(); ++a)
    for (Elem b = 0; b < s.size(); ++b)
      if (map[s.add(a, b)] != t.add(map[a], map[b])) {
        bad.push_back({"preserves_add", {a, b}});
        break;
      }
  if (!bad.empty()) throw AxiomViolation(std::move(bad));
  Linearity lin = matched_actions(s, t).size() == s.actions().size() && s.has_action()
                      ? Linearity::linear
                      : Linearity::additive;
  return Morphism::trusted(src.module, dst.module, std::move(map), lin);
}

TakahashiTensor takahashi_tensor(const ModulePtr& m, const ModulePtr& n, const TensorOptions& opt,
                                 const Limits& limits) {
  TensorPresentation p = tensor_product(m, n, opt, limits);
  Quotient r = cancellative_reflection(
      p.module, m->name() + "⊠" + n->name());
  std::vector<Elem> tau(p.tau.size());
  for (std::size_t i = 0; i < tau.size(); ++i) tau[i] = r.projection(p.tau[i]);
  return {std::move(p), std::move(r), std::move(tau)};
}

UniversalCheck certify_cancellative_universal(const TakahashiTensor& t,
                                              const std::vector<ModulePtr>& targets,
                                              const Limits& limits) {
  UniversalCheck out;
  const ModulePtr& c = t.reflection.module;
  for (const ModulePtr& g : targets) {
    auto homs = enumerate_homs(*c, *g, {Linearity::additive, std::nullopt}, limits);
    for (const BalancedMap& beta : enumerate_balanced_maps(t.tensor, g, limits)) {
      ++out.maps_checked;
      std::size_t matches = 0;
      for (const auto& gamma : homs) {
        bool ok = true;
        for (std::size_t i = 0; i < t.tau.size() && ok; ++i) ok = gamma[t.tau[i]] == beta.table[i];
        if (ok) ++matches;
      }
      if (matches != 1) {
        if (!out.failures)
          out.first_failure = std::to_string(matches) + " factorizations into " + g->name();
        ++out.failures;
      }
    }
  }
  return out;
}

}  // namespace semiflat
