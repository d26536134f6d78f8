#include "semiflat/limits.hpp"

#include <algorithm>

#include "semiflat/catalog.hpp"
#include "semiflat/homology.hpp"

namespace semiflat {

namespace {

Linearity linearity_between(const Semimodule& a, const Semimodule& b) {
  return a.has_action() && !matched_actions(a, b).empty() ? Linearity::linear
                                                          : Linearity::additive;
}

std::string joined_names(const std::vector<ModulePtr>& fs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < fs.size(); ++i) out += (i ? sep : "") + fs[i]->name();
  return out;
}

// inverse[y] = x with inclusion(x) = y, or kNone.
constexpr Elem kNone = UINT32_MAX;
std::vector<Elem> invert_inclusion(const Morphism& inc) {
  std::vector<Elem> inv(inc.target()->size(), kNone);
  for (Elem x = 0; x < inc.source()->size(); ++x) inv[inc(x)] = x;
  return inv;
}

}  // namespace

std::vector<Elem> ProductObject::components(Elem x) const {
  std::vector<Elem> c(factors.size());
  for (std::size_t i = factors.size(); i-- > 0;) {
    c[i] = x % factors[i]->size();
    x /= static_cast<Elem>(factors[i]->size());
  }
  return c;
}

Elem ProductObject::element(const std::vector<Elem>& c) const {
  Elem x = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) x = x * factors[i]->size() + c[i];
  return x;
}

ProductObject product(const std::vector<ModulePtr>& factors, const Limits& limits,
                      const ModulePtr& shape, std::string name) {
  ProductObject p;
  p.factors = factors;
  if (factors.empty()) {
    p.module = shape ? zero_module_like(*shape, "TRIV") : trivial_monoid("TRIV");
    return p;
  }
  std::uint64_t total = 1;
  for (const auto& f : factors) {
    total *= f->size();
    if (total > limits.max_product_size)
      throw SizeBoundExceeded("product " + joined_names(factors, "×") + " exceeds " +
                              std::to_string(limits.max_product_size) + " elements");
  }
  const std::size_t n = total, k = factors.size();
  // Action k of the first factor and the matching action of every other.
  std::vector<std::vector<std::size_t>> act_index;
  for (const Action& a : factors[0]->actions()) {
    std::vector<std::size_t> idx;
    for (const auto& f : factors) {
      auto j = f->action_on(*a.ring, a.side);
      if (!j || !f->actions()[*j].ring->same_structure(*a.ring))
        throw SideMismatch(f->name() + " has no action matching " + factors[0]->name());
      idx.push_back(*j);
    }
    act_index.push_back(std::move(idx));
  }

  SemimoduleSpec s;
  s.name = name.empty() ? joined_names(factors, "×") : std::move(name);
  s.labels.resize(n);
  s.add.resize(n * n);
  for (Elem x = 0; x < n; ++x) {
    auto c = p.components(x);
    std::string l = "(";
    for (std::size_t i = 0; i < k; ++i) l += (i ? "," : "") + factors[i]->label(c[i]);
    s.labels[x] = l + ")";
  }
  std::vector<std::vector<Elem>> comps(n);
  for (Elem x = 0; x < n; ++x) comps[x] = p.components(x);
  std::vector<Elem> tmp(k);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      for (std::size_t i = 0; i < k; ++i) tmp[i] = factors[i]->add(comps[x][i], comps[y][i]);
      s.add[x * n + y] = p.element(tmp);
    }
  for (std::size_t i = 0; i < k; ++i) tmp[i] = factors[i]->zero();
  s.zero = p.element(tmp);
  for (std::size_t a = 0; a < act_index.size(); ++a) {
    const Action& base = factors[0]->actions()[a];
    Action act{base.ring, base.side, std::vector<Elem>(n * base.ring->size())};
    for (Elem x = 0; x < n; ++x)
      for (Elem t = 0; t < base.ring->size(); ++t) {
        for (std::size_t i = 0; i < k; ++i)
          tmp[i] = factors[i]->act(act_index[a][i], comps[x][i], t);
        act.table[x * base.ring->size() + t] = p.element(tmp);
      }
    s.actions.push_back(std::move(act));
  }
  p.module = std::make_shared<const Semimodule>(std::move(s));

  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Elem> pr(n), in(factors[i]->size());
    for (Elem x = 0; x < n; ++x) pr[x] = comps[x][i];
    for (Elem y = 0; y < factors[i]->size(); ++y) {
      for (std::size_t j = 0; j < k; ++j) tmp[j] = j == i ? y : factors[j]->zero();
      in[y] = p.element(tmp);
    }
    p.projections.push_back(Morphism::trusted(p.module, factors[i], std::move(pr),
                                              linearity_between(*p.module, *factors[i])));
    p.injections.push_back(Morphism::trusted(factors[i], p.module, std::move(in),
                                             linearity_between(*factors[i], *p.module)));
  }
  return p;
}

ProductObject coproduct(const std::vector<ModulePtr>& factors, const Limits& limits,
                        const ModulePtr& shape, std::string name) {
  if (name.empty() && !factors.empty()) name = joined_names(factors, "⊕");
  return product(factors, limits, shape, std::move(name));
}

Morphism pairing(const ProductObject& p, const std::vector<Morphism>& fs) {
  if (fs.size() != p.factors.size() || fs.empty())
    throw ShapeMismatch("pairing needs one map per factor");
  const ModulePtr& x = fs[0].source();
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (fs[i].source()->size() != x->size() || fs[i].target()->size() != p.factors[i]->size())
      throw ShapeMismatch("pairing: map " + std::to_string(i) + " has the wrong shape");
  std::vector<Elem> map(x->size()), c(fs.size());
  for (Elem a = 0; a < x->size(); ++a) {
    for (std::size_t i = 0; i < fs.size(); ++i) c[i] = fs[i](a);
    map[a] = p.element(c);
  }
  return Morphism::trusted(x, p.module, std::move(map), linearity_between(*x, *p.module));
}

Morphism copairing(const ProductObject& p, const std::vector<Morphism>& fs) {
  if (fs.size() != p.factors.size() || fs.empty())
    throw ShapeMismatch("copairing needs one map per factor");
  const ModulePtr& y = fs[0].target();
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (fs[i].target()->size() != y->size() || fs[i].source()->size() != p.factors[i]->size())
      throw ShapeMismatch("copairing: map " + std::to_string(i) + " has the wrong shape");
  std::vector<Elem> map(p.module->size());
  for (Elem a = 0; a < map.size(); ++a) {
    auto c = p.components(a);
    Elem acc = y->zero();
    for (std::size_t i = 0; i < fs.size(); ++i) acc = y->add(acc, fs[i](c[i]));
    map[a] = acc;
  }
  return Morphism::trusted(p.module, y, std::move(map), linearity_between(*p.module, *y));
}

Embedded equalizer(const Morphism& f, const Morphism& g) {
  if (f.source()->size() != g.source()->size() || f.target()->size() != g.target()->size())
    throw ShapeMismatch("equalizer needs a parallel pair");
  Mask mask(f.source()->size(), false);
  for (Elem x = 0; x < mask.size(); ++x) mask[x] = f(x) == g(x);
  return as_module(f.source(), mask, "Eq");
}

Quotient coequalizer(const Morphism& f, const Morphism& g) {
  if (f.source()->size() != g.source()->size() || f.target()->size() != g.target()->size())
    throw ShapeMismatch("coequalizer needs a parallel pair");
  std::vector<ElemPair> pairs;
  for (Elem x = 0; x < f.source()->size(); ++x)
    if (f(x) != g(x)) pairs.emplace_back(f(x), g(x));
  return quotient_by_congruence(f.target(), congruence_closure(*f.target(), pairs), "Coeq");
}

Pullback pullback(const Morphism& f, const Morphism& g, const Limits& limits) {
  if (f.target()->size() != g.target()->size())
    throw ShapeMismatch("pullback needs a cospan");
  Pullback p;
  p.ambient = product({f.source(), g.source()}, limits);
  Mask mask(p.ambient.module->size(), false);
  for (Elem x = 0; x < mask.size(); ++x) {
    auto c = p.ambient.components(x);
    mask[x] = f(c[0]) == g(c[1]);
  }
  auto e = as_module(p.ambient.module, mask, f.source()->name() + "×_" + f.target()->name() + g.source()->name());
  p.module = e.module;
  p.inclusion = e.inclusion;
  p.left = compose(p.ambient.projections[0], p.inclusion);
  p.right = compose(p.ambient.projections[1], p.inclusion);
  return p;
}

std::optional<Morphism> factor_through_equalizer(const Embedded& e, const Morphism& h) {
  if (h.target()->size() != e.inclusion.target()->size())
    throw ShapeMismatch("factor_through_equalizer: map lands outside the ambient module");
  auto inv = invert_inclusion(e.inclusion);
  std::vector<Elem> map(h.source()->size());
  for (Elem x = 0; x < map.size(); ++x) {
    if (inv[h(x)] == kNone) return std::nullopt;
    map[x] = inv[h(x)];
  }
  return Morphism::trusted(h.source(), e.module, std::move(map), h.linearity());
}

std::optional<Morphism> factor_through_coequalizer(const Quotient& q, const Morphism& h) {
  if (h.source()->size() != q.projection.source()->size())
    throw ShapeMismatch("factor_through_coequalizer: map does not start at the quotiented module");
  auto reps = q.congruence.representatives();
  std::vector<Elem> map(reps.size());
  for (Elem c = 0; c < reps.size(); ++c) map[c] = h(reps[c]);
  for (Elem x = 0; x < h.source()->size(); ++x)
    if (map[q.congruence.class_of[x]] != h(x)) return std::nullopt;
  return Morphism::trusted(q.module, h.target(), std::move(map), h.linearity());
}

std::optional<Morphism> factor_through_pullback(const Pullback& p, const Morphism& a,
                                                const Morphism& b) {
  if (a.source()->size() != b.source()->size())
    throw ShapeMismatch("factor_through_pullback: maps have different sources");
  Morphism both = pairing(p.ambient, {a, b});
  Embedded e{p.module, p.inclusion};
  return factor_through_equalizer(e, both);
}

// ---------------------------------------------------------------------------

const Morphism& PosetSystem::transition(std::size_t j, std::size_t k) const {
  const auto& t = transitions_.at(j * size() + k);
  if (!t)
    throw ShapeMismatch("no transition between indices " + std::to_string(j) + " and " +
                        std::to_string(k));
  return *t;
}

void PosetSystem::close(bool reversed) {
  const std::size_t n = nodes_.size();
  if (maps_.size() != edges_.size())
    throw ShapeMismatch("system has " + std::to_string(edges_.size()) + " relations but " +
                        std::to_string(maps_.size()) + " maps");
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto [j, k] = edges_[e];
    if (j >= n || k >= n) throw ShapeMismatch("relation " + std::to_string(e) + " names no index");
    const ModulePtr& from = nodes_[reversed ? k : j];
    const ModulePtr& to = nodes_[reversed ? j : k];
    if (maps_[e].source()->size() != from->size() || maps_[e].target()->size() != to->size())
      throw ShapeMismatch("transition " + std::to_string(e) + " has the wrong shape");
    if (j == k && !same_map(maps_[e], identity(nodes_[j])))
      throw AxiomViolation({{"identity_transition", {static_cast<Elem>(j)}}});
  }
  leq_.assign(n * n, false);
  for (std::size_t j = 0; j < n; ++j) leq_[j * n + j] = true;
  for (auto [j, k] : edges_) leq_[j * n + k] = true;
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t j = 0; j < n; ++j)
      if (leq_[j * n + m])
        for (std::size_t k = 0; k < n; ++k)
          if (leq_[m * n + k]) leq_[j * n + k] = true;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k)
      if (leq_[j * n + k] && leq_[k * n + j])
        throw AxiomViolation({{"antisymmetric", {static_cast<Elem>(j), static_cast<Elem>(k)}}});

  std::vector<std::vector<std::size_t>> out_edges(n);
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (edges_[e].first != edges_[e].second) out_edges[edges_[e].first].push_back(e);
  transitions_.assign(n * n, std::nullopt);
  for (std::size_t j = 0; j < n; ++j) {
    transitions_[j * n + j] = identity(nodes_[j]);
    std::vector<std::size_t> queue{j};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      std::size_t k = queue[q];
      for (std::size_t e : out_edges[k]) {
        std::size_t k2 = edges_[e].second;
        const Morphism& fk = *transitions_[j * n + k];
        Morphism next = reversed ? compose(fk, maps_[e]) : compose(maps_[e], fk);
        auto& slot = transitions_[j * n + k2];
        if (!slot) {
          slot = std::move(next);
          queue.push_back(k2);
        } else if (!same_map(*slot, next)) {
          throw AxiomViolation({{"coherence", {static_cast<Elem>(j), static_cast<Elem>(k2)}}});
        }
      }
    }
  }
}

DirectedSystem DirectedSystem::build(std::vector<ModulePtr> nodes, std::vector<Edge> edges,
                                     std::vector<Morphism> maps) {
  DirectedSystem s;
  s.nodes_ = std::move(nodes);
  s.edges_ = std::move(edges);
  s.maps_ = std::move(maps);
  if (s.nodes_.empty()) throw NotDirected("directed system has no indices");
  s.close(false);
  for (std::size_t j = 0; j < s.size(); ++j)
    for (std::size_t k = j + 1; k < s.size(); ++k)
      if (!s.upper_bound(j, k))
        throw NotDirected("indices " + std::to_string(j) + " and " + std::to_string(k) +
                          " have no upper bound");
  return s;
}

std::optional<std::size_t> DirectedSystem::upper_bound(std::size_t j, std::size_t k) const {
  for (std::size_t l = 0; l < size(); ++l)
    if (leq(j, l) && leq(k, l)) return l;
  return std::nullopt;
}

std::size_t DirectedSystem::maximum() const {
  for (std::size_t l = 0; l < size(); ++l) {
    bool top = true;
    for (std::size_t j = 0; j < size() && top; ++j) top = leq(j, l);
    if (top) return l;
  }
  throw NotDirected("finite directed system without a maximum");
}

InverseSystem InverseSystem::build(std::vector<ModulePtr> nodes, std::vector<Edge> edges,
                                   std::vector<Morphism> maps) {
  InverseSystem s;
  s.nodes_ = std::move(nodes);
  s.edges_ = std::move(edges);
  s.maps_ = std::move(maps);
  s.close(true);
  return s;
}

// ---------------------------------------------------------------------------

namespace {

// Least (index, element) of each colimit class.
std::vector<std::pair<std::size_t, Elem>> class_reps(const PosetSystem& sys, const Colimit& c) {
  std::vector<std::pair<std::size_t, Elem>> reps(c.module->size(), {SIZE_MAX, 0});
  for (std::size_t j = 0; j < sys.size(); ++j)
    for (Elem x = 0; x < sys.node(j)->size(); ++x) {
      Elem cls = c.legs[j](x);
      if (reps[cls].first == SIZE_MAX) reps[cls] = {j, x};
    }
  return reps;
}

}  // namespace

Colimit directed_colimit(const DirectedSystem& sys, std::string name) {
  const std::size_t n = sys.size();
  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t j = 0; j < n; ++j) offset[j + 1] = offset[j] + sys.node(j)->size();
  const std::size_t total = offset[n];
  std::vector<std::size_t> index_of(total);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t u = offset[j]; u < offset[j + 1]; ++u) index_of[u] = j;

  // (x, j) ~ (x', j') iff some l above both sends them to one element:
  // group everything below l by its image in M_l.
  UnionFind uf(total);
  for (std::size_t l = 0; l < n; ++l) {
    std::vector<std::size_t> first(sys.node(l)->size(), SIZE_MAX);
    for (std::size_t j = 0; j < n; ++j) {
      if (!sys.leq(j, l)) continue;
      const Morphism& f = sys.transition(j, l);
      for (Elem x = 0; x < sys.node(j)->size(); ++x) {
        std::size_t& slot = first[f(x)];
        if (slot == SIZE_MAX) slot = offset[j] + x;
        else uf.unite(static_cast<Elem>(slot), static_cast<Elem>(offset[j] + x));
      }
    }
  }
  std::vector<std::size_t> ub(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) ub[j * n + k] = *sys.upper_bound(j, k);
  Congruence cls = uf.to_congruence();
  const std::size_t m = cls.class_count;
  auto reps = cls.representatives();

  auto cls_of = [&](std::size_t j, Elem x) { return cls.class_of[offset[j] + x]; };
  auto sum_class = [&](std::size_t u, std::size_t v) {
    std::size_t j = index_of[u], k = index_of[v];
    std::size_t l = ub[j * n + k];
    Elem a = sys.transition(j, l)(static_cast<Elem>(u - offset[j]));
    Elem b = sys.transition(k, l)(static_cast<Elem>(v - offset[k]));
    return cls_of(l, sys.node(l)->add(a, b));
  };

  SemimoduleSpec s;
  s.name = name.empty() ? "colim" : std::move(name);
  for (Elem c = 0; c < m; ++c) {
    std::size_t j = index_of[reps[c]];
    s.labels.push_back("[" + sys.node(j)->label(static_cast<Elem>(reps[c] - offset[j])) + "]_" +
                       std::to_string(j));
  }
  s.add.resize(m * m);
  for (Elem a = 0; a < m; ++a)
    for (Elem b = 0; b < m; ++b) s.add[a * m + b] = sum_class(reps[a], reps[b]);
  for (std::size_t u = 0; u < total; ++u)
    for (std::size_t v = 0; v < total; ++v)
      if (s.add[cls.class_of[u] * m + cls.class_of[v]] != sum_class(u, v))
        throw NotACongruence("colimit addition depends on representatives");
  s.zero = cls_of(0, sys.node(0)->zero());

  const ModulePtr& first = sys.node(0);
  for (const Action& base : first->actions()) {
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < n; ++j) {
      auto k = sys.node(j)->action_on(*base.ring, base.side);
      if (!k) throw SideMismatch(sys.node(j)->name() + " lacks the action of " + first->name());
      idx.push_back(*k);
    }
    const std::size_t ns = base.ring->size();
    Action act{base.ring, base.side, std::vector<Elem>(m * ns)};
    for (Elem c = 0; c < m; ++c)
      for (Elem t = 0; t < ns; ++t) {
        std::size_t j = index_of[reps[c]];
        act.table[c * ns + t] =
            cls_of(j, sys.node(j)->act(idx[j], static_cast<Elem>(reps[c] - offset[j]), t));
      }
    for (std::size_t u = 0; u < total; ++u) {
      std::size_t j = index_of[u];
      for (Elem t = 0; t < ns; ++t)
        if (act.table[cls.class_of[u] * ns + t] !=
            cls_of(j, sys.node(j)->act(idx[j], static_cast<Elem>(u - offset[j]), t)))
          throw NotACongruence("colimit action depends on representatives");
    }
    s.actions.push_back(std::move(act));
  }

  Colimit out;
  out.module = std::make_shared<const Semimodule>(std::move(s));
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Elem> leg(sys.node(j)->size());
    for (Elem x = 0; x < leg.size(); ++x) leg[x] = cls_of(j, x);
    out.legs.push_back(Morphism::trusted(sys.node(j), out.module, std::move(leg),
                                         linearity_between(*sys.node(j), *out.module)));
  }

  out.maximum = sys.maximum();
  const ModulePtr& top = sys.node(out.maximum);
  std::vector<Elem> down(m);
  bool consistent = true;
  for (std::size_t u = 0; u < total; ++u) {
    std::size_t j = index_of[u];
    Elem y = sys.transition(j, out.maximum)(static_cast<Elem>(u - offset[j]));
    if (reps[cls.class_of[u]] == u) down[cls.class_of[u]] = y;
  }
  for (std::size_t u = 0; u < total; ++u) {
    std::size_t j = index_of[u];
    if (down[cls.class_of[u]] != sys.transition(j, out.maximum)(static_cast<Elem>(u - offset[j])))
      consistent = false;
  }
  out.to_maximum = Morphism::trusted(out.module, top, down, linearity_between(*out.module, *top));
  out.matches_shortcut = consistent && out.to_maximum.injective() && out.to_maximum.surjective() &&
                         validate_morphism(*out.module, *top, down, out.to_maximum.linearity()).empty();
  return out;
}

InverseLimit inverse_limit(const InverseSystem& sys, const Limits& limits, std::string name) {
  ProductObject p = product(sys.nodes(), limits);
  Mask mask(p.module->size(), false);
  for (Elem x = 0; x < mask.size(); ++x) {
    auto c = p.components(x);
    bool ok = true;
    for (std::size_t e = 0; e < sys.edges().size() && ok; ++e) {
      auto [j, k] = sys.edges()[e];
      ok = c[j] == sys.maps()[e](c[k]);
    }
    mask[x] = ok;
  }
  auto e = as_module(p.module, mask, name.empty() ? "lim" : std::move(name));
  InverseLimit out{e.module, {}};
  for (const auto& pr : p.projections) out.projections.push_back(compose(pr, e.inclusion));
  return out;
}

Morphism colimit_morphism(const DirectedSystem& a, const Colimit& ca, const DirectedSystem& b,
                          const Colimit& cb, const std::vector<Morphism>& h) {
  if (a.size() != b.size() || h.size() != a.size())
    throw ShapeMismatch("colimit_morphism needs systems over one index set and a map per index");
  for (std::size_t j = 0; j < a.size(); ++j)
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (!a.leq(j, k)) continue;
      if (!b.leq(j, k)) throw NotIntertwining("index sets differ at " + std::to_string(j));
      const Morphism &f = a.transition(j, k), &g = b.transition(j, k);
      for (Elem x = 0; x < a.node(j)->size(); ++x)
        if (h[k](f(x)) != g(h[j](x)))
          throw NotIntertwining("h_" + std::to_string(k) + " o f differs from g o h_" +
                                std::to_string(j) + " at " + a.node(j)->label(x));
    }
  auto reps = class_reps(a, ca);
  std::vector<Elem> map(ca.module->size());
  for (Elem c = 0; c < map.size(); ++c) map[c] = cb.legs[reps[c].first](h[reps[c].first](reps[c].second));
  for (std::size_t j = 0; j < a.size(); ++j)
    for (Elem x = 0; x < a.node(j)->size(); ++x)
      if (map[ca.legs[j](x)] != cb.legs[j](h[j](x)))
        throw NotIntertwining("induced map depends on representatives");
  return Morphism::trusted(ca.module, cb.module, std::move(map),
                           linearity_between(*ca.module, *cb.module));
}

DirectedSystem kernel_system(const DirectedSystem& m, const std::vector<Morphism>& beta) {
  if (beta.size() != m.size()) throw ShapeMismatch("kernel_system needs a map per index");
  std::vector<ModulePtr> nodes;
  std::vector<Embedded> subs;
  for (std::size_t j = 0; j < m.size(); ++j) {
    subs.push_back(as_module(m.node(j), kernel_mask(beta[j]), "Ker_" + std::to_string(j)));
    nodes.push_back(subs.back().module);
  }
  std::vector<Morphism> maps;
  for (std::size_t e = 0; e < m.edges().size(); ++e) {
    auto [j, k] = m.edges()[e];
    auto inv = invert_inclusion(subs[k].inclusion);
    std::vector<Elem> map(nodes[j]->size());
    for (Elem x = 0; x < map.size(); ++x) {
      Elem y = m.maps()[e](subs[j].inclusion(x));
      if (inv[y] == kNone) throw NotIntertwining("transition leaves the kernel at index " + std::to_string(k));
      map[x] = inv[y];
    }
    maps.push_back(Morphism::trusted(nodes[j], nodes[k], std::move(map),
                                     linearity_between(*nodes[j], *nodes[k])));
  }
  return DirectedSystem::build(nodes, m.edges(), maps);
}

DirectedSystem cokernel_system(const DirectedSystem& m, const std::vector<Morphism>& alpha) {
  if (alpha.size() != m.size()) throw ShapeMismatch("cokernel_system needs a map per index");
  std::vector<Quotient> qs;
  std::vector<ModulePtr> nodes;
  for (std::size_t j = 0; j < m.size(); ++j) {
    qs.push_back(quotient_by_sub(m.node(j), alpha[j].image(), "Coker_" + std::to_string(j)));
    nodes.push_back(qs.back().module);
  }
  std::vector<Morphism> maps;
  for (std::size_t e = 0; e < m.edges().size(); ++e) {
    auto [j, k] = m.edges()[e];
    auto h = factor_through_coequalizer(qs[j], compose(qs[k].projection, m.maps()[e]));
    if (!h) throw NotIntertwining("transition does not descend to the cokernels");
    maps.push_back(*h);
  }
  return DirectedSystem::build(nodes, m.edges(), maps);
}

DirectedSystem subsemimodule_system(const ModulePtr& m, const Limits& limits) {
  auto subs = enumerate_subsemimodules(m, limits);
  std::vector<Embedded> emb;
  std::vector<ModulePtr> nodes;
  for (const auto& s : subs) {
    emb.push_back(as_module(m, s.members, mask_label(*m, s.members)));
    nodes.push_back(emb.back().module);
  }
  const std::size_t n = subs.size();
  std::vector<bool> below(n * n, false);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      bool inside = j != k;
      for (Elem x = 0; x < m->size() && inside; ++x) inside = !subs[j].members[x] || subs[k].members[x];
      below[j * n + k] = inside;
    }
  // Covering relations only; the rest follow by composition.
  std::vector<Edge> edges;
  std::vector<Morphism> maps;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      if (!below[j * n + k]) continue;
      bool cover = true;
      for (std::size_t l = 0; l < n && cover; ++l) cover = !(below[j * n + l] && below[l * n + k]);
      if (!cover) continue;
      auto inv = invert_inclusion(emb[k].inclusion);
      std::vector<Elem> map(nodes[j]->size());
      for (Elem x = 0; x < map.size(); ++x) map[x] = inv[emb[j].inclusion(x)];
      edges.emplace_back(j, k);
      maps.push_back(Morphism::trusted(nodes[j], nodes[k], std::move(map)));
    }
  return DirectedSystem::build(nodes, edges, maps);
}

TensoredSystem tensor_system(const ModulePtr& f, const DirectedSystem& sys, const Limits& limits) {
  TensoredSystem out;
  std::vector<ModulePtr> nodes;
  for (const auto& node : sys.nodes()) {
    out.tensors.push_back(tensor_product(f, node, {}, limits));
    nodes.push_back(out.tensors.back().module);
  }
  std::vector<Morphism> maps;
  for (std::size_t e = 0; e < sys.edges().size(); ++e) {
    auto [j, k] = sys.edges()[e];
    maps.push_back(tensor_morphisms(identity(f), sys.maps()[e], out.tensors[j], out.tensors[k]));
  }
  out.system = DirectedSystem::build(nodes, sys.edges(), maps);
  return out;
}

PsiMap psi_x(const ModulePtr& x, const DirectedSystem& sys, const Colimit& colim,
             const Limits& limits) {
  std::vector<HomMonoid> homs;
  std::vector<ModulePtr> nodes;
  for (const auto& node : sys.nodes()) {
    homs.push_back(hom_monoid(x, node, {}, limits));
    nodes.push_back(forget_actions(with_name(homs.back().module, "Hom(" + x->name() + "," + node->name() + ")")));
  }
  std::vector<Morphism> maps;
  for (std::size_t e = 0; e < sys.edges().size(); ++e) {
    auto [j, k] = sys.edges()[e];
    Morphism h = hom_cov(homs[j], homs[k], sys.maps()[e]);
    maps.push_back(Morphism::trusted(nodes[j], nodes[k], h.map(), Linearity::additive));
  }
  PsiMap out{DirectedSystem::build(nodes, sys.edges(), maps), {}, {}, {}, false, false};
  out.colimit_of_homs = directed_colimit(out.homs, "colim Hom");
  out.target = hom_monoid(x, colim.module, {}, limits);
  auto reps = class_reps(out.homs, out.colimit_of_homs);
  std::vector<Elem> map(reps.size());
  for (Elem c = 0; c < map.size(); ++c) {
    auto [j, a] = reps[c];
    Morphism pushed = compose(colim.legs[j], homs[j].maps[a]);
    map[c] = out.target.index_of(pushed);
  }
  ModulePtr tgt = forget_actions(out.target.module);
  out.psi = Morphism::trusted(out.colimit_of_homs.module, tgt, std::move(map), Linearity::additive);
  out.injective = out.psi.injective();
  out.bijective = out.injective && out.psi.surjective();
  return out;
}

}  // namespace semiflat
