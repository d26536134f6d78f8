#include "semiflat/flatness.hpp"

#include "semiflat/catalog.hpp"

namespace semiflat {

namespace {

std::string pair_witness(const Semimodule& m, const std::vector<Elem>& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? ", " : "") + m.label(w[i]);
  return out;
}

bool same_tables(const Semimodule& a, const Semimodule& b) {
  if (a.size() != b.size() || a.add_table() != b.add_table() || a.zero() != b.zero()) return false;
  if (a.actions().size() != b.actions().size()) return false;
  for (std::size_t k = 0; k < a.actions().size(); ++k)
    if (a.actions()[k].table != b.actions()[k].table) return false;
  return true;
}

std::optional<unsigned> free_rank(const Semimodule& m, const SemiringPtr& s) {
  std::size_t size = 1;
  for (unsigned n = 0; size <= m.size(); ++n, size *= s->size()) {
    if (size == m.size()) {
      if (same_tables(m, *free_module(s, n, m.side()))) return n;
      return std::nullopt;
    }
    if (s->size() == 1) break;
  }
  return std::nullopt;
}

}  // namespace

FlatnessVerdict flatness_verdict(const ModulePtr& f, const ModulePtr& m, const Limits& limits) {
  FlatnessVerdict v;
  v.subject = f->name();
  v.against = m->name();
  TensorPresentation pm = tensor_product(f, m, {}, limits);
  const Morphism id = identity(f);
  for (const Subsemimodule& sub : enumerate_subsemimodules(m, limits)) {
    SubTensorCheck c;
    c.sub = sub.members;
    c.label = mask_label(*m, sub.members);
    c.uniform_sub = is_subtractive(*m, sub.members);
    Embedded e = as_module(m, sub.members, c.label);
    TensorPresentation pl = tensor_product(f, e.module, {}, limits);
    Morphism t = tensor_morphisms(id, e.inclusion, pl, pm);
    MorphismProfile prof = morphism_profile(t);
    c.injective = prof.injective;
    c.i_uniform = prof.i_uniform;
    if (!c.injective)
      c.witness = "id⊗ι identifies " + pair_witness(*pl.module, prof.injective_witness);
    else if (!c.i_uniform)
      c.witness = "image of id⊗ι misses " + pair_witness(*pm.module, prof.i_witness) +
                  " of its subtractive closure";
    if (c.uniform_sub) {
      Quotient q = quotient_by_sub(m, sub.members);
      TensorPresentation pq = tensor_product(f, q.module, {}, limits);
      Morphism tp = tensor_morphisms(id, q.projection, pm, pq);
      c.sequence_exact = classify_sequence(short_sequence(t, tp)).exact();
      if (!*c.sequence_exact) v.sequence_form = false;
      if (v.uniformly_m_flat && !(c.injective && c.i_uniform)) {
        v.uniformly_m_flat = false;
        v.uniform_witness = c.label;
        v.witness_detail = c.witness;
      }
      if (v.in_is && !c.i_uniform) {
        v.in_is = false;
        v.is_witness = c.label;
      }
    }
    if (v.mono_flat && !c.injective) {
      v.mono_flat = false;
      v.mono_witness = c.label;
    }
    v.checks.push_back(std::move(c));
  }
  return v;
}

UniverseVerdict is_uniformly_flat(const ModulePtr& f, const std::vector<ModulePtr>& universe,
                                  const std::string& universe_name, const Limits& limits) {
  UniverseVerdict u;
  u.subject = f->name();
  u.universe = universe_name;
  for (const ModulePtr& m : universe) {
    if (!m->has_action() || !f->has_action() || !m->ring()->same_structure(*f->ring())) continue;
    try {
      u.per_module.push_back(flatness_verdict(f, m, limits));
    } catch (const BoxBoundExceeded&) {
      u.skipped.push_back(m->name());
      continue;
    } catch (const SizeBoundExceeded&) {
      u.skipped.push_back(m->name());
      continue;
    }
    if (u.holds && !u.per_module.back().uniformly_m_flat) {
      u.holds = false;
      u.first_failure = m->name();
    }
  }
  return u;
}

FgReduction fg_reduction_check(const ModulePtr& f, const ModulePtr& m, const Limits& limits) {
  FgReduction r;
  FlatnessVerdict v = flatness_verdict(f, m, limits);
  r.applicable = v.in_is;
  r.uniformly_m_flat = v.uniformly_m_flat;
  r.all_mono = v.mono_flat;
  r.generator_bound = minimal_generating_set(*m).size();
  r.bounded_mono = true;
  for (const SubTensorCheck& c : v.checks) {
    Embedded e = as_module(m, c.sub);
    if (minimal_generating_set(*e.module).size() > r.generator_bound) continue;
    if (!c.injective) {
      r.bounded_mono = false;
      if (r.witness.empty()) r.witness = c.label;
    }
  }
  if (r.witness.empty() && !v.uniform_witness.empty()) r.witness = v.uniform_witness;
  return r;
}

MiddleTransfer middle_flat_transfer(const ModulePtr& f, const Morphism& gamma, const Morphism& delta,
                                    const Limits& limits) {
  if (!classify_sequence(short_sequence(gamma, delta)).exact())
    throw NotExact("0 -> " + gamma.source()->name() + " -> " + gamma.target()->name() + " -> " +
                   delta.target()->name() + " -> 0 is not exact");
  MiddleTransfer t;
  t.m_flat = flatness_verdict(f, gamma.target(), limits).uniformly_m_flat;
  t.m1_flat = flatness_verdict(f, gamma.source(), limits).uniformly_m_flat;
  FlatnessVerdict v2 = flatness_verdict(f, delta.target(), limits);
  t.in_is_m2 = v2.in_is;
  t.m2_flat = v2.uniformly_m_flat;
  return t;
}

SumRetractReport sum_retract_suite(const std::vector<ModulePtr>& family, const ModulePtr& m,
                                   const Limits& limits) {
  SumRetractReport r;
  ProductObject sum = coproduct(family, limits);
  r.sum_flat = flatness_verdict(sum.module, m, limits).uniformly_m_flat;
  r.all_members_flat = true;
  std::vector<ModulePtr> flat;
  for (const ModulePtr& x : family)
    if (flatness_verdict(x, m, limits).uniformly_m_flat) flat.push_back(x);
    else r.all_members_flat = false;
  if (r.sum_flat) flat.push_back(sum.module);
  for (const ModulePtr& x : flat) {
    EndComp ec;
    try {
      ec = end_comp(x, limits);
    } catch (const SizeBoundExceeded&) {
      continue;
    }
    for (const Mask& summand : ec.summands) {
      Embedded e = as_module(x, summand);
      ++r.retracts_checked;
      if (!flatness_verdict(e.module, m, limits).uniformly_m_flat)
        r.retract_failures.push_back(mask_label(*x, summand) + " in " + x->name());
    }
  }
  return r;
}

Morphism map_from_free(const ModulePtr& free, unsigned n, const ModulePtr& x,
                       const std::vector<Elem>& images) {
  if (images.size() != n) throw ShapeMismatch("map_from_free needs one image per basis vector");
  const SemiringPtr s = free->has_action() ? free->ring_ptr() : x->ring_ptr();
  const Elem base = static_cast<Elem>(s->size());
  auto k = x->action_on(*s, free->has_action() ? free->side() : x->side());
  if (!k) throw SideMismatch(x->name() + " has no action of " + s->name());
  std::vector<Elem> map(free->size());
  for (Elem e = 0; e < free->size(); ++e) {
    Elem rest = e, acc = x->zero();
    for (unsigned i = n; i-- > 0;) {
      acc = x->add(acc, x->act(*k, images[i], rest % base));
      rest /= base;
    }
    map[e] = acc;
  }
  return Morphism::trusted(free, x, std::move(map));
}

namespace {

// Calls visit(images) for every tuple in X^n, lexicographically.
template <class Visit>
bool for_each_tuple(std::size_t size, unsigned n, const Limits& limits, Visit&& visit) {
  std::uint64_t total = 1;
  for (unsigned i = 0; i < n; ++i) {
    total *= size;
    if (total > limits.max_hom_candidates)
      throw SizeBoundExceeded("generator search: " + std::to_string(size) + "^" +
                              std::to_string(n) + " tuples");
  }
  std::vector<Elem> t(n, 0);
  for (std::uint64_t c = 0; c < total; ++c) {
    std::uint64_t rest = c;
    for (unsigned i = n; i-- > 0;) {
      t[i] = static_cast<Elem>(rest % size);
      rest /= size;
    }
    if (visit(t)) return true;
  }
  return false;
}

ModulePtr bounded_free(const ModulePtr& x, unsigned n, const Limits& limits) {
  std::uint64_t size = 1;
  for (unsigned i = 0; i < n; ++i) size *= x->ring()->size();
  if (size > limits.max_product_size) return nullptr;
  return free_module(x->ring_ptr(), n, x->side());
}

}  // namespace

std::optional<FgWitness> is_uniformly_fg(const ModulePtr& x, unsigned n_max, const Limits& limits) {
  if (!x->has_action()) throw SideMismatch(x->name() + " carries no action");
  for (unsigned n = 1; n <= n_max; ++n) {
    ModulePtr free = bounded_free(x, n, limits);
    if (!free) break;
    std::optional<FgWitness> found;
    for_each_tuple(x->size(), n, limits, [&](const std::vector<Elem>& t) {
      Morphism g = map_from_free(free, n, x, t);
      if (!g.surjective() || !is_uniform(g)) return false;
      found = FgWitness{n, free, g};
      return true;
    });
    if (found) return found;
  }
  return std::nullopt;
}

std::optional<FpWitness> is_uniformly_fp(const ModulePtr& x, unsigned n_max, const Limits& limits) {
  auto fg = is_uniformly_fg(x, n_max, limits);
  if (!fg) return std::nullopt;
  FpWitness w;
  w.fg = *fg;
  bool all_generated = true;
  for_each_tuple(x->size(), fg->n, limits, [&](const std::vector<Elem>& t) {
    Morphism g = map_from_free(fg->free, fg->n, x, t);
    if (!g.surjective() || !is_uniform(g)) return false;
    ++w.presentations_checked;
    Mask k = kernel_mask(g);
    Embedded e = as_module(fg->free, k);
    std::vector<Elem> gens;
    for (Elem y : minimal_generating_set(*e.module)) gens.push_back(e.inclusion(y));
    if (generated_mask(*fg->free, gens) != k) all_generated = false;
    return false;
  });
  if (!all_generated) return std::nullopt;
  Mask k = kernel_mask(fg->surjection);
  Embedded e = as_module(fg->free, k);
  std::vector<Elem> gens;
  for (Elem y : minimal_generating_set(*e.module)) gens.push_back(e.inclusion(y));
  w.m = static_cast<unsigned>(gens.size());
  w.free_m = free_module(x->ring_ptr(), w.m, x->side());
  w.relations = map_from_free(w.free_m, w.m, fg->free, gens);
  w.certificate = classify_sequence({w.relations, fg->surjection, to_zero(x)});
  return w;
}

bool tensor_preserves_pullback(const ModulePtr& f, const Morphism& a, const Morphism& b,
                               const Limits& limits) {
  Pullback pb = pullback(a, b, limits);
  TensorPresentation ta = tensor_product(f, a.source(), {}, limits);
  TensorPresentation tb = tensor_product(f, b.source(), {}, limits);
  TensorPresentation tc = tensor_product(f, a.target(), {}, limits);
  TensorPresentation tp = tensor_product(f, pb.module, {}, limits);
  const Morphism id = identity(f);
  Morphism fa = tensor_morphisms(id, a, ta, tc);
  Morphism fb = tensor_morphisms(id, b, tb, tc);
  Pullback pb2 = pullback(fa, fb, limits);
  auto u = factor_through_pullback(pb2, tensor_morphisms(id, pb.left, tp, ta),
                                   tensor_morphisms(id, pb.right, tp, tb));
  return u && u->injective() && u->surjective();
}

CertificateReport flat_certificate_check(const ModulePtr& f, const FlatCertificate& cert,
                                         const std::vector<ModulePtr>& universe,
                                         const std::vector<std::pair<Morphism, Morphism>>& cospans,
                                         const Limits& limits) {
  const DirectedSystem& sys = cert.system;
  if (cert.nodes.size() != sys.size())
    throw BadCertificate("certificate has " + std::to_string(cert.nodes.size()) +
                         " node witnesses for " + std::to_string(sys.size()) + " nodes");
  if (!f->has_action()) throw BadCertificate("subject " + f->name() + " carries no action");
  for (std::size_t j = 0; j < sys.size(); ++j) {
    const ProjectiveWitness& w = cert.nodes[j];
    const std::string where = "node " + std::to_string(j) + ": ";
    const ModulePtr& node = sys.node(j);
    if (w.section.source()->size() != node->size() || w.retraction.target()->size() != node->size() ||
        w.section.target()->size() != w.retraction.source()->size())
      throw BadCertificate(where + "retract witness has the wrong shape");
    if (!free_rank(*w.section.target(), f->ring_ptr()))
      throw BadCertificate(where + "section does not land in a free module");
    if (!validate_morphism(*node, *w.section.target(), w.section.map(), Linearity::linear).empty() ||
        !validate_morphism(*w.retraction.source(), *node, w.retraction.map(), Linearity::linear).empty())
      throw BadCertificate(where + "retract witness is not linear");
    for (Elem x = 0; x < node->size(); ++x)
      if (w.retraction(w.section(x)) != x)
        throw BadCertificate(where + "retraction o section is not the identity");
  }
  Colimit c = directed_colimit(sys);
  const Morphism& iso = cert.to_subject;
  if (iso.source()->size() != c.module->size() || iso.target()->size() != f->size() ||
      !validate_morphism(*c.module, *f, iso.map(), Linearity::linear).empty() ||
      !iso.injective() || !iso.surjective())
    throw BadCertificate("colimit is not isomorphic to " + f->name());

  CertificateReport r;
  r.accepted = true;
  r.flatness = is_uniformly_flat(f, universe, "catalog", limits);
  for (const auto& [a, b] : cospans) {
    ++r.pullbacks_checked;
    if (tensor_preserves_pullback(f, a, b, limits)) ++r.pullbacks_preserved;
  }
  return r;
}

std::optional<FlatCertificate> find_flat_certificate(const ModulePtr& f, unsigned n_max,
                                                     const Limits& limits) {
  if (!f->has_action()) return std::nullopt;
  for (unsigned n = 0; n <= n_max; ++n) {
    ModulePtr free = bounded_free(f, n, limits);
    if (!free) break;
    std::optional<Retraction> r;
    try {
      r = find_retraction(f, free, limits);
    } catch (const SizeBoundExceeded&) {
      break;
    }
    if (!r) continue;
    FlatCertificate cert{DirectedSystem::build({f}, {}, {}), {{r->section, r->retraction}}, {}};
    Colimit c = directed_colimit(cert.system);
    std::vector<Elem> map(c.module->size());
    for (Elem x = 0; x < f->size(); ++x) map[c.legs[0](x)] = x;
    cert.to_subject = Morphism::trusted(c.module, f, std::move(map));
    return cert;
  }
  return std::nullopt;
}

BaerReport baer_ideal_criterion(const ModulePtr& f, const ModulePtr& q,
                                const std::vector<ModulePtr>& universe, const Limits& limits) {
  if (!f->has_action()) throw SideMismatch(f->name() + " carries no action");
  BaerReport r;
  ModulePtr s = regular_module(f->ring_ptr(), Side::left);
  TensorPresentation ps = tensor_product(f, s, {}, limits);
  const Morphism id = identity(f);
  for (const Subsemimodule& sub : enumerate_subsemimodules(s, limits)) {
    if (!is_subtractive(*s, sub.members)) continue;
    ++r.ideals_checked;
    Embedded e = as_module(s, sub.members);
    TensorPresentation pi = tensor_product(f, e.module, {}, limits);
    Morphism t = tensor_morphisms(id, e.inclusion, pi, ps);
    if (r.ideal_wise && !(t.injective() && is_i_uniform(t))) {
      r.ideal_wise = false;
      r.ideal_witness = mask_label(*s, sub.members);
    }
  }
  r.uniformly_flat = is_uniformly_flat(f, universe, "catalog", limits).holds;
  HomMonoid h = hom_monoid(f, q, {}, limits);
  r.hom_injective = uniformly_injective_rel(h.module, universe, limits).holds;
  return r;
}

}  // namespace semiflat
