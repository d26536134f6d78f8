#include "semiflat/tensor_iso.hpp"

#include "semiflat/catalog.hpp"
#include "semiflat/homology.hpp"

namespace semiflat {

namespace {

Morphism best_linearity(const ModulePtr& src, const ModulePtr& tgt, std::vector<Elem> map) {
  bool linear = src->has_action() && !matched_actions(*src, *tgt).empty() &&
                validate_morphism(*src, *tgt, map, Linearity::linear).empty();
  return Morphism::trusted(src, tgt, std::move(map),
                           linear ? Linearity::linear : Linearity::additive);
}

void check_inverse(CanonicalIso& iso) {
  const Morphism &f = iso.forward, &g = iso.backward;
  for (Elem x = 0; x < f.source()->size(); ++x)
    if (g(f(x)) != x) {
      iso.failure = "backward o forward differs from the identity at " + f.source()->label(x);
      return;
    }
  for (Elem y = 0; y < g.source()->size(); ++y)
    if (f(g(y)) != y) {
      iso.failure = "forward o backward differs from the identity at " + g.source()->label(y);
      return;
    }
  iso.verified = true;
}

std::size_t required_action(const ModulePtr& m, Side side) {
  if (!m->has_action()) throw SideMismatch(m->name() + " carries no action");
  auto k = m->action_on(*m->ring(), side);
  if (!k) throw SideMismatch(m->name() + " has no " + std::string(to_string(side)) + " action");
  return *k;
}

}  // namespace

UnitIso unit_iso(const ModulePtr& m, const Limits& limits) {
  std::size_t k = required_action(m, Side::right);
  const SemiringPtr& s = m->actions()[k].ring;
  auto reg = regular_module(s, Side::left);
  TensorOptions opt;
  opt.left_action = k;
  opt.right_action = 0;
  UnitIso out{tensor_product(m, reg, opt, limits), {}};
  const auto& p = out.tensor;
  std::vector<Elem> fwd(m->size());
  for (Elem x = 0; x < m->size(); ++x) fwd[x] = p.tau_at(x, s->one());
  BalancedMap beta{m, std::vector<Elem>(m->size() * s->size())};
  for (Elem x = 0; x < m->size(); ++x)
    for (Elem t = 0; t < s->size(); ++t) beta.table[x * s->size() + t] = m->act(k, x, t);
  out.iso.forward = best_linearity(m, p.module, std::move(fwd));
  out.iso.backward = factor_balanced(p, beta);
  check_inverse(out.iso);
  return out;
}

UnitIso unit_iso_left(const ModulePtr& n, const Limits& limits) {
  std::size_t k = required_action(n, Side::left);
  const SemiringPtr& s = n->actions()[k].ring;
  auto reg = regular_module(s, Side::right);
  TensorOptions opt;
  opt.left_action = 0;
  opt.right_action = k;
  UnitIso out{tensor_product(reg, n, opt, limits), {}};
  const auto& p = out.tensor;
  std::vector<Elem> fwd(n->size());
  for (Elem y = 0; y < n->size(); ++y) fwd[y] = p.tau_at(s->one(), y);
  BalancedMap beta{n, std::vector<Elem>(s->size() * n->size())};
  for (Elem t = 0; t < s->size(); ++t)
    for (Elem y = 0; y < n->size(); ++y) beta.table[t * n->size() + y] = n->act(k, y, t);
  out.iso.forward = best_linearity(n, p.module, std::move(fwd));
  out.iso.backward = factor_balanced(p, beta);
  check_inverse(out.iso);
  return out;
}

AssocIso assoc_iso(const ModulePtr& m, const ModulePtr& n, const ModulePtr& x,
                   const Limits& limits) {
  if (n->actions().size() != 2)
    throw SideMismatch("assoc_iso: middle factor " + n->name() + " must carry two actions");
  AssocIso out;
  TensorOptions mn;
  mn.right_action = 1;
  out.inner_left = tensor_product(m, n, mn, limits);
  out.outer_left = tensor_product(out.inner_left.module, x, {}, limits);
  TensorOptions nx;
  nx.left_action = 0;
  out.inner_right = tensor_product(n, x, nx, limits);
  out.outer_right = tensor_product(m, out.inner_right.module, {}, limits);

  const auto &il = out.inner_left, &ol = out.outer_left;
  const auto &ir = out.inner_right, &orr = out.outer_right;
  const std::size_t nm = m->size(), nn = n->size(), nx_ = x->size();

  // Forward: for each x factor (m, n) |-> m (x) (n (x) x) through M (x) N,
  // then factor the resulting map on (M (x) N) x X.
  BalancedMap outer_f{orr.module, std::vector<Elem>(il.module->size() * nx_)};
  for (Elem c = 0; c < nx_; ++c) {
    BalancedMap bx{orr.module, std::vector<Elem>(nm * nn)};
    for (Elem a = 0; a < nm; ++a)
      for (Elem b = 0; b < nn; ++b) bx.table[a * nn + b] = orr.tau_at(a, ir.tau_at(b, c));
    Morphism g = factor_balanced(il, bx);
    for (Elem t = 0; t < il.module->size(); ++t) outer_f.table[t * nx_ + c] = g(t);
  }
  // Backward: for each m factor (n, x) |-> (m (x) n) (x) x through N (x) X.
  BalancedMap outer_b{ol.module, std::vector<Elem>(nm * ir.module->size())};
  for (Elem a = 0; a < nm; ++a) {
    BalancedMap bm{ol.module, std::vector<Elem>(nn * nx_)};
    for (Elem b = 0; b < nn; ++b)
      for (Elem c = 0; c < nx_; ++c) bm.table[b * nx_ + c] = ol.tau_at(il.tau_at(a, b), c);
    Morphism g = factor_balanced(ir, bm);
    for (Elem t = 0; t < ir.module->size(); ++t) outer_b.table[a * ir.module->size() + t] = g(t);
  }
  out.iso.forward = factor_balanced(ol, outer_f);
  out.iso.backward = factor_balanced(orr, outer_b);
  check_inverse(out.iso);
  return out;
}

AdjunctionReport adjunction_iso(const ModulePtr& m_in, const ModulePtr& x, const ModulePtr& y,
                                const std::vector<Morphism>& into_x,
                                const std::vector<Morphism>& out_of_y, const Limits& limits) {
  ModulePtr m = m_in->actions().size() == 1 ? make_bimodule(m_in) : m_in;
  if (m->actions().size() != 2)
    throw SideMismatch("adjunction_iso: " + m->name() + " must carry two actions");
  AdjunctionReport r;
  const std::size_t bal = required_action(m, Side::right);
  const std::size_t other = 1 - bal;
  TensorOptions opt;
  opt.left_action = bal;

  auto lhs_for = [&](const ModulePtr& xx) { return tensor_product(m, xx, opt, limits); };
  HomOptions via_other{Linearity::linear, other};

  TensorPresentation p = lhs_for(x);
  HomMonoid lhs = hom_monoid(p.module, y, {}, limits);
  HomMonoid hmy = hom_monoid(m, y, via_other, limits);
  HomMonoid rhs = hom_monoid(x, hmy.module, {}, limits);
  r.lhs_size = lhs.maps.size();
  r.rhs_size = rhs.maps.size();

  // phi |-> (x |-> [m |-> phi(m (x) x)]), as an index into rhs.
  auto curry = [&](const Morphism& phi, const TensorPresentation& pp, const HomMonoid& inner,
                   const HomMonoid& outer) -> std::optional<Elem> {
    const ModulePtr& xx = pp.right;
    std::vector<Elem> img(xx->size());
    for (Elem c = 0; c < xx->size(); ++c) {
      std::vector<Elem> g(m->size());
      for (Elem a = 0; a < m->size(); ++a) g[a] = phi(pp.tau_at(a, c));
      auto i = inner.find(g);
      if (!i) return std::nullopt;
      img[c] = *i;
    }
    return outer.find(img);
  };

  r.well_defined = true;
  for (const Morphism& phi : lhs.maps) {
    auto i = curry(phi, p, hmy, rhs);
    if (!i) {
      r.well_defined = false;
      r.failure = "curried map of " + lhs.module->label(lhs.index_of(phi)) + " is not linear";
      return r;
    }
    r.sigma.push_back(*i);
  }
  std::vector<bool> hit(r.rhs_size, false);
  std::size_t distinct = 0;
  for (Elem i : r.sigma)
    if (!hit[i]) {
      hit[i] = true;
      ++distinct;
    }
  r.bijective = distinct == r.lhs_size && distinct == r.rhs_size;
  if (!r.bijective) r.failure = "currying is not a bijection";

  r.additive = true;
  for (Elem a = 0; a < r.lhs_size && r.additive; ++a)
    for (Elem b = 0; b < r.lhs_size; ++b)
      if (r.sigma[lhs.module->add(a, b)] != rhs.module->add(r.sigma[a], r.sigma[b])) {
        r.additive = false;
        if (r.failure.empty()) r.failure = "currying does not preserve addition";
        break;
      }

  // Naturality in X: precompose with id (x) h on the left, with h on the right.
  for (const Morphism& h : into_x) {
    TensorPresentation p2 = lhs_for(h.source());
    Morphism idh = tensor_morphisms(identity(m), h, p2, p);
    HomMonoid lhs2 = hom_monoid(p2.module, y, {}, limits);
    HomMonoid rhs2 = hom_monoid(h.source(), hmy.module, {}, limits);
    for (Elem a = 0; a < r.lhs_size; ++a) {
      ++r.squares_x;
      Morphism pulled = compose(lhs.maps[a], idh);
      auto left = curry(pulled, p2, hmy, rhs2);
      Morphism right = compose(rhs.maps[r.sigma[a]], h);
      if (!left || rhs2.maps[*left].map() != right.map()) {
        r.natural_x = false;
        if (r.failure.empty()) r.failure = "naturality in X fails along " + h.source()->name();
        break;
      }
    }
  }
  // Naturality in Y: postcompose with k on the left, with Hom(M, k) on the right.
  for (const Morphism& k : out_of_y) {
    HomMonoid lhs2 = hom_monoid(p.module, k.target(), {}, limits);
    HomMonoid hmy2 = hom_monoid(m, k.target(), via_other, limits);
    HomMonoid rhs2 = hom_monoid(x, hmy2.module, {}, limits);
    for (Elem a = 0; a < r.lhs_size; ++a) {
      ++r.squares_y;
      auto left = curry(compose(k, lhs.maps[a]), p, hmy2, rhs2);
      const Morphism& s = rhs.maps[r.sigma[a]];
      std::vector<Elem> right(x->size());
      bool ok = left.has_value();
      for (Elem c = 0; c < x->size() && ok; ++c) {
        Morphism g = compose(k, hmy.maps[s(c)]);
        auto j = hmy2.find(g.map());
        ok = j && rhs2.maps[*left](c) == *j;
      }
      if (!ok) {
        r.natural_y = false;
        if (r.failure.empty()) r.failure = "naturality in Y fails along " + k.target()->name();
        break;
      }
    }
  }

  if (is_cancellative(*y)) {
    // Precomposition with the reflection c: M (x) X -> c(M (x) X) is a
    // bijection onto Hom(M (x) X, Y) exactly when the variant holds.
    Quotient c = cancellative_reflection(p.module);
    HomMonoid hc = hom_monoid(c.module, y, {}, limits);
    std::vector<bool> seen(r.lhs_size, false);
    bool ok = hc.maps.size() == r.lhs_size;
    for (const Morphism& g : hc.maps) {
      if (!ok) break;
      auto i = lhs.find(compose(g, c.projection).map());
      ok = i && !seen[*i];
      if (ok) seen[*i] = true;
    }
    r.cancellative_bijective = ok && r.bijective;
    if (!ok && r.failure.empty()) r.failure = "cancellative variant is not a bijection";
  }
  return r;
}

namespace {

void profile_nu(NuMap& out) {
  out.injective = out.nu.injective();
  out.surjective = out.nu.surjective();
  out.uniform = is_uniform(out.nu);
}

}  // namespace

NuMap nu_xyz(const ModulePtr& x, const ModulePtr& y_in, const ModulePtr& z, const Limits& limits) {
  ModulePtr y = y_in->actions().size() == 1 ? make_bimodule(y_in) : y_in;
  if (y->actions().size() != 2)
    throw SideMismatch("nu_xyz: " + y->name() + " must carry two actions");
  NuMap out;
  out.name = "nu(" + x->name() + "," + y_in->name() + "," + z->name() + ")";
  // Hom(X, Y) preserves action 0 of Y; action 1 balances Y (x) Z.
  out.hom_source = hom_monoid(x, y, {Linearity::linear, 0}, limits);
  TensorOptions yz;
  yz.left_action = 1;
  out.inner = tensor_product(y, z, yz, limits);
  out.tensor = tensor_product(out.hom_source.module, z, {}, limits);
  out.hom_target = hom_monoid(x, out.inner->module, {Linearity::linear, 0}, limits);

  const auto& hs = out.hom_source;
  const auto& in = *out.inner;
  BalancedMap beta{out.hom_target.module, std::vector<Elem>(hs.maps.size() * z->size())};
  for (Elem f = 0; f < hs.maps.size(); ++f)
    for (Elem c = 0; c < z->size(); ++c) {
      std::vector<Elem> img(x->size());
      for (Elem a = 0; a < x->size(); ++a) img[a] = in.tau_at(hs.maps[f](a), c);
      auto i = out.hom_target.find(img);
      if (!i) throw NotBalanced(out.name + ": f(-) (x) z is not linear");
      beta.table[f * z->size() + c] = *i;
    }
  out.nu = factor_balanced(out.tensor, beta);
  profile_nu(out);
  return out;
}

NuMap nu_xz(const ModulePtr& x, const ModulePtr& z, const Limits& limits) {
  if (!x->has_action()) throw SideMismatch("nu_xz: " + x->name() + " carries no action");
  const SemiringPtr& s = x->actions()[0].ring;
  std::size_t kz = required_action(z, Side::left);
  ModulePtr sb = make_bimodule(regular_module(s));
  NuMap out;
  out.name = "nu(" + x->name() + "," + z->name() + ")";
  out.hom_source = hom_monoid(x, sb, {Linearity::linear, 0}, limits);
  out.tensor = tensor_product(out.hom_source.module, z, {}, limits);
  out.hom_target = hom_monoid(x, z, {}, limits);

  const auto& hs = out.hom_source;
  BalancedMap beta{out.hom_target.module, std::vector<Elem>(hs.maps.size() * z->size())};
  for (Elem f = 0; f < hs.maps.size(); ++f)
    for (Elem c = 0; c < z->size(); ++c) {
      std::vector<Elem> img(x->size());
      for (Elem a = 0; a < x->size(); ++a) img[a] = z->act(kz, c, hs.maps[f](a));
      auto i = out.hom_target.find(img);
      if (!i) throw NotBalanced(out.name + ": f(-) z is not linear");
      beta.table[f * z->size() + c] = *i;
    }
  out.nu = factor_balanced(out.tensor, beta);
  profile_nu(out);
  return out;
}

}  // namespace semiflat
