#include "semiflat/homology.hpp"

#include <algorithm>

namespace semiflat {

Mask kernel_mask(const Morphism& f) {
  Mask k(f.source()->size(), false);
  for (Elem x = 0; x < k.size(); ++x) k[x] = f(x) == f.target()->zero();
  return k;
}

Subsemimodule kernel(const Morphism& f) { return Subsemimodule{f.source(), kernel_mask(f)}; }

Quotient cokernel(const Morphism& f) {
  return quotient_by_sub(f.target(), f.image(), "Coker(" + f.source()->name() + "->" +
                                                    f.target()->name() + ")");
}

bool is_k_uniform(const Morphism& f, std::vector<Elem>* witness) {
  const Semimodule& m = *f.source();
  Congruence steady = congruence_mod(m, kernel_mask(f));
  // First source element seen for each image value.
  std::vector<Elem> first(f.target()->size(), UINT32_MAX);
  for (Elem x = 0; x < m.size(); ++x) {
    Elem& slot = first[f(x)];
    if (slot == UINT32_MAX) {
      slot = x;
    } else if (!steady.same(slot, x)) {
      if (witness) *witness = {slot, x};
      return false;
    }
  }
  return true;
}

bool is_i_uniform(const Morphism& f) {
  Mask img = f.image();
  return subtractive_closure_mask(*f.target(), img) == img;
}

bool is_uniform(const Morphism& f) { return is_k_uniform(f) && is_i_uniform(f); }

bool is_semi_epi(const Morphism& f) {
  Mask c = subtractive_closure_mask(*f.target(), f.image());
  return mask_count(c) == c.size();
}

MorphismProfile morphism_profile(const Morphism& f) {
  MorphismProfile p;
  p.injective = f.injective();
  p.surjective = f.surjective();
  if (!p.injective) {
    std::vector<Elem> first(f.target()->size(), UINT32_MAX);
    for (Elem x = 0; x < f.source()->size() && p.injective_witness.empty(); ++x) {
      if (first[f(x)] == UINT32_MAX) first[f(x)] = x;
      else p.injective_witness = {first[f(x)], x};
    }
  }
  Mask img = f.image();
  for (Elem y = 0; y < img.size() && !p.surjective; ++y)
    if (!img[y]) {
      p.surjective_witness = {y};
      break;
    }
  p.k_uniform = is_k_uniform(f, &p.k_witness);
  Mask closure = subtractive_closure_mask(*f.target(), img);
  p.i_uniform = closure == img;
  for (Elem y = 0; y < img.size(); ++y) {
    if (closure[y] && !img[y] && p.i_witness.empty()) p.i_witness = {y};
    if (!closure[y] && p.semi_epi_witness.empty()) p.semi_epi_witness = {y};
  }
  p.semi_epi = p.semi_epi_witness.empty();
  p.uniform = p.k_uniform && p.i_uniform;
  return p;
}

namespace {

bool same_module(const Semimodule& a, const Semimodule& b) {
  return &a == &b || (a.size() == b.size() && a.zero() == b.zero() && a.add_table() == b.add_table());
}

std::vector<Elem> first_difference(const Mask& a, const Mask& b) {
  for (Elem x = 0; x < a.size(); ++x)
    if (a[x] != b[x]) return {x};
  return {};
}

}  // namespace

StageReport classify_stage(const Morphism& f, const Morphism& g) {
  if (!same_module(*f.target(), *g.source()))
    throw NotComposable("sequence breaks between " + f.target()->name() + " and " +
                        g.source()->name());
  StageReport r;
  const Semimodule& mid = *f.target();
  r.chain = true;
  for (Elem x = 0; x < f.source()->size(); ++x)
    if (g(f(x)) != g.target()->zero()) {
      r.chain = false;
      r.chain_witness = {x};
      break;
    }
  Mask img = f.image();
  Mask ker = kernel_mask(g);
  Mask closure = subtractive_closure_mask(mid, img);
  r.proper_exact = img == ker;
  r.semi_exact = closure == ker;
  r.proper_witness = first_difference(img, ker);
  r.semi_witness = first_difference(closure, ker);
  bool k = is_k_uniform(g, &r.k_witness);
  r.quasi_exact = r.semi_exact && k;
  r.exact = r.proper_exact && k;
  return r;
}

ExactnessReport classify_sequence(const std::vector<Morphism>& maps) {
  ExactnessReport rep;
  for (std::size_t i = 0; i + 1 < maps.size(); ++i)
    rep.stages.push_back(classify_stage(maps[i], maps[i + 1]));
  return rep;
}

#define SEMIFLAT_ALL_STAGES(method, field)                      \
  bool ExactnessReport::method() const {                        \
    return std::all_of(stages.begin(), stages.end(),            \
                       [](const StageReport& s) { return s.field; }); \
  }
SEMIFLAT_ALL_STAGES(chain, chain)
SEMIFLAT_ALL_STAGES(proper_exact, proper_exact)
SEMIFLAT_ALL_STAGES(semi_exact, semi_exact)
SEMIFLAT_ALL_STAGES(quasi_exact, quasi_exact)
SEMIFLAT_ALL_STAGES(exact, exact)
#undef SEMIFLAT_ALL_STAGES

ModulePtr zero_module_like(const Semimodule& m, std::string name) {
  SemimoduleSpec s;
  s.name = std::move(name);
  s.labels = {"0"};
  s.add = {0};
  for (const Action& a : m.actions()) s.actions.push_back({a.ring, a.side, std::vector<Elem>(a.ring->size(), 0)});
  return std::make_shared<const Semimodule>(std::move(s));
}

Morphism from_zero(const ModulePtr& a) {
  return Morphism::trusted(zero_module_like(*a), a, {a->zero()});
}

Morphism to_zero(const ModulePtr& b) {
  return Morphism::trusted(b, zero_module_like(*b), std::vector<Elem>(b->size(), 0));
}

std::vector<Morphism> short_sequence(const Morphism& f, const Morphism& g) {
  return {from_zero(f.source()), f, g, to_zero(g.target())};
}

EndComp end_comp(const ModulePtr& m, const Limits& limits) {
  EndComp e{hom_monoid(m, m, {}, limits), {}, {}, {}};
  const auto& maps = e.end.maps;
  const std::size_t k = maps.size();
  const Elem id = e.end.index_of(identity(m));
  const Elem zero = e.end.module->zero();
  std::vector<Elem> comp_table(k * k);
  for (Elem a = 0; a < k; ++a)
    for (Elem b = 0; b < k; ++b) comp_table[a * k + b] = e.end.index_of(compose(maps[a], maps[b]));
  for (Elem t = 0; t < k; ++t) {
    if (comp_table[t * k + t] == t) e.idempotents.push_back(t);
    for (Elem u = 0; u < k; ++u)
      if (e.end.module->add(t, u) == id && comp_table[t * k + u] == zero &&
          comp_table[u * k + t] == zero) {
        e.comp.push_back(t);
        Mask img = maps[t].image();
        if (std::find(e.summands.begin(), e.summands.end(), img) == e.summands.end())
          e.summands.push_back(img);
        break;
      }
  }
  std::sort(e.summands.begin(), e.summands.end(), [](const Mask& a, const Mask& b) {
    std::size_t ca = mask_count(a), cb = mask_count(b);
    return ca != cb ? ca < cb : mask_elements(a) < mask_elements(b);
  });
  return e;
}

std::optional<Retraction> find_retraction(const ModulePtr& n, const ModulePtr& m,
                                          const Limits& limits) {
  if (n->size() > m->size()) return std::nullopt;
  auto sections = enumerate_homs(*n, *m, {}, limits);
  auto retractions = enumerate_homs(*m, *n, {}, limits);
  for (const auto& psi : sections) {
    std::vector<bool> hit(m->size(), false);
    bool inj = true;
    for (Elem y : psi) {
      if (hit[y]) inj = false;
      hit[y] = true;
    }
    if (!inj) continue;
    for (const auto& theta : retractions) {
      bool ok = true;
      for (Elem x = 0; x < n->size() && ok; ++x) ok = theta[psi[x]] == x;
      if (ok) return Retraction{Morphism::trusted(n, m, psi), Morphism::trusted(m, n, theta)};
    }
  }
  return std::nullopt;
}

InjectivityReport uniformly_injective_rel(const ModulePtr& q, const std::vector<ModulePtr>& family,
                                          const Limits& limits) {
  InjectivityReport rep;
  for (const ModulePtr& m : family) {
    HomMonoid hm = hom_monoid(m, q, {}, limits);
    for (const auto& sub : enumerate_subsemimodules(m, limits)) {
      if (!is_subtractive(*m, sub.members)) continue;
      Embedded e = as_module(m, sub.members);
      HomMonoid hl = hom_monoid(e.module, q, {}, limits);
      Morphism r = hom_contra(e.inclusion, hm, hl);
      InjectivityCase c{m->name(), sub.members, r.surjective(), is_uniform(r)};
      rep.holds = rep.holds && c.surjective && c.uniform;
      rep.cases.push_back(std::move(c));
    }
  }
  return rep;
}

CogeneratorReport uniformly_cogenerates(const ModulePtr& q, const std::vector<Morphism>& probes,
                                        const Limits& limits) {
  CogeneratorReport rep;
  for (const Morphism& iota : probes) {
    HomMonoid hm = hom_monoid(iota.target(), q, {}, limits);
    HomMonoid hu = hom_monoid(iota.source(), q, {}, limits);
    Morphism r = hom_contra(iota, hm, hu);
    CogeneratorCase c;
    c.restriction_surjective = r.surjective();
    c.restriction_uniform = is_uniform(r);
    c.probe_injective = iota.injective();
    c.probe_uniform = is_uniform(iota);
    c.consistent = (!c.restriction_surjective || c.probe_injective) &&
                   (!(c.restriction_surjective && c.restriction_uniform) ||
                    (c.probe_injective && c.probe_uniform));
    rep.holds = rep.holds && c.consistent;
    rep.cases.push_back(c);
  }
  return rep;
}

namespace {

void require_equal(const Morphism& a, const Morphism& b, const std::string& what) {
  if (a.map() == b.map()) return;
  for (Elem x = 0; x < a.map().size(); ++x)
    if (a(x) != b(x))
      throw NotCommutative(what + " fails at element " + a.source()->label(x));
}

void require_identity(const Morphism& retraction, const Morphism& section, const std::string& what) {
  require_equal(compose(retraction, section), identity(section.source()), what);
}

ImplicationCheck implication(std::string item, bool hypothesis, bool conclusion) {
  return {std::move(item), hypothesis, !hypothesis || conclusion};
}

}  // namespace

std::vector<ImplicationCheck> verify_retract_square(const RetractSquare& d) {
  require_identity(d.pi, d.iota, "pi o iota = id");
  require_identity(d.pi2, d.iota2, "pi' o iota' = id");
  require_equal(compose(d.gamma, d.iota), compose(d.iota2, d.gamma_t), "upper square");
  require_equal(compose(d.pi2, d.gamma), compose(d.gamma_t, d.pi), "lower square");
  bool k = is_k_uniform(d.gamma), i = is_i_uniform(d.gamma);
  bool kt = is_k_uniform(d.gamma_t), it = is_i_uniform(d.gamma_t);
  return {implication("retract-square.uniform", k && i, kt && it),
          implication("retract-square.k-uniform", k, kt), implication("retract-square.i-uniform", i, it)};
}

std::vector<ImplicationCheck> verify_retract_ladder(const RetractLadder& d) {
  require_identity(d.pi, d.iota, "pi o iota = id");
  require_identity(d.pi1, d.iota1, "pi' o iota' = id");
  require_identity(d.pi2, d.iota2, "pi'' o iota'' = id");
  require_equal(compose(d.f, d.iota), compose(d.iota1, d.f_t), "left upper square");
  require_equal(compose(d.pi1, d.f), compose(d.f_t, d.pi), "left lower square");
  require_equal(compose(d.g, d.iota1), compose(d.iota2, d.g_t), "right upper square");
  require_equal(compose(d.pi2, d.g), compose(d.g_t, d.pi1), "right lower square");
  StageReport mid = classify_stage(d.f, d.g);
  StageReport out = classify_stage(d.f_t, d.g_t);
  return {implication("retract-ladder.exact", mid.exact, out.exact),
          implication("retract-ladder.proper-exact", mid.proper_exact, out.proper_exact),
          implication("retract-ladder.semi-exact", mid.semi_exact, out.semi_exact),
          implication("retract-ladder.quasi-exact", mid.quasi_exact, out.quasi_exact)};
}

std::vector<ImplicationCheck> verify_ladder(const LadderDiagram& d) {
  require_equal(compose(d.a2, d.f1), compose(d.f2, d.a1), "left square");
  require_equal(compose(d.a3, d.g1), compose(d.g2, d.a2), "right square");
  StageReport row1 = classify_stage(d.f1, d.g1);
  StageReport row2 = classify_stage(d.f2, d.g2);
  bool h1 = row2.quasi_exact && d.g1.surjective() && d.a1.surjective();
  bool h2 = row1.semi_exact && d.f2.injective();
  bool ker_a3_zero = mask_count(kernel_mask(d.a3)) == 1;
  return {
      implication("ladder.a3-injective", h1 && row1.chain && d.a2.injective(), d.a3.injective()),
      implication("ladder.a2-semi-epi", h1 && d.a3.surjective(), is_semi_epi(d.a2)),
      implication("ladder.a2-surjective", h1 && d.a3.surjective() && is_i_uniform(d.a2),
                  d.a2.surjective()),
      implication("ladder.a1-semi-epi", h2 && row2.chain && ker_a3_zero && d.a2.surjective(),
                  is_semi_epi(d.a1)),
      implication("ladder.a1-surjective",
                  h2 && row2.chain && ker_a3_zero && d.a2.surjective() &&
                      (is_i_uniform(d.a1) || is_i_uniform(d.f1)),
                  d.a1.surjective()),
  };
}

}  // namespace semiflat
