#include <map>

#include "semiflat/homology.hpp"
#include "semiflat/isomorphism.hpp"
#include "semiflat/limits.hpp"
#include "semiflat/quotient.hpp"
#include "semiflat/suite.hpp"
#include "semiflat/tensor.hpp"
#include "semiflat/workspace.hpp"
#include "suite_util.hpp"

namespace semiflat {

using namespace suite_detail;

namespace {

using Key = std::vector<std::vector<Elem>>;

// Groups the maps u in `candidates` by (p_1 o u, ..., p_k o u) and returns
// the number of maps in each class.
std::map<Key, std::size_t> count_by_composites(const std::vector<Morphism>& candidates,
                                               const std::vector<Morphism>& after, bool post) {
  std::map<Key, std::size_t> out;
  for (const auto& u : candidates) {
    Key k;
    for (const auto& p : after) k.push_back(post ? compose(p, u).map() : compose(u, p).map());
    ++out[k];
  }
  return out;
}

// Every node of a subsemimodule system carries its parent's labels.
Morphism node_inclusion(const ModulePtr& node, const ModulePtr& parent) {
  std::vector<Elem> map(node->size());
  for (Elem x = 0; x < node->size(); ++x) map[x] = *parent->find(node->label(x));
  return Morphism::trusted(node, parent, std::move(map));
}

class LimitsCheck {
 public:
  LimitsCheck(SuiteRow& row, const Limits& limits) : row_(row), limits_(limits) {}

  void expect(bool ok, const std::string& what) {
    ++row_.instances;
    ++row_.applicable;
    if (!ok) fail(row_, what);
  }

  void products(const std::vector<ModulePtr>& mods) {
    for (const auto& a : mods)
      for (const auto& b : mods) {
        ProductObject p = product({a, b}, limits_);
        ProductObject c = coproduct({a, b}, limits_);
        for (const auto& x : mods) {
          auto cones = count_by_composites(homs(x, p.module, limits_), p.projections, true);
          for (const auto& f : homs(x, a, limits_))
            for (const auto& g : homs(x, b, limits_)) {
              Morphism h = pairing(p, {f, g});
              expect(cones[{f.map(), g.map()}] == 1 && same_map(compose(p.projections[0], h), f) &&
                         same_map(compose(p.projections[1], h), g),
                     "product " + p.module->name() + " from " + x->name());
            }
          auto cocones = count_by_composites(homs(c.module, x, limits_), c.injections, false);
          for (const auto& f : homs(a, x, limits_))
            for (const auto& g : homs(b, x, limits_)) {
              Morphism h = copairing(c, {f, g});
              expect(cocones[{f.map(), g.map()}] == 1 && same_map(compose(h, c.injections[0]), f) &&
                         same_map(compose(h, c.injections[1]), g),
                     "coproduct " + c.module->name() + " into " + x->name());
            }
        }
      }
  }

  void equalizers(const std::vector<ModulePtr>& mods) {
    for (const auto& a : mods)
      for (const auto& b : mods) {
        auto ab = homs(a, b, limits_);
        for (const auto& f : ab)
          for (const auto& g : ab) {
            Embedded e = equalizer(f, g);
            Quotient q = coequalizer(f, g);
            for (const auto& x : mods) {
              auto through = count_by_composites(homs(x, e.module, limits_), {e.inclusion}, true);
              for (const auto& h : homs(x, a, limits_)) {
                bool eq = same_map(compose(f, h), compose(g, h));
                auto u = factor_through_equalizer(e, h);
                expect(eq ? (u && same_map(compose(e.inclusion, *u), h) && through[{h.map()}] == 1) : !u,
                       "equalizer of two maps " + a->name() + " -> " + b->name() + " from " + x->name());
              }
              auto out = count_by_composites(homs(q.module, x, limits_), {q.projection}, false);
              for (const auto& h : homs(b, x, limits_)) {
                bool eq = same_map(compose(h, f), compose(h, g));
                auto u = factor_through_coequalizer(q, h);
                expect(eq ? (u && same_map(compose(*u, q.projection), h) && out[{h.map()}] == 1) : !u,
                       "coequalizer of two maps " + a->name() + " -> " + b->name() + " into " + x->name());
              }
            }
          }
      }
  }

  void pullbacks(const std::vector<ModulePtr>& mods) {
    for (const auto& c : mods)
      for (const auto& a : mods)
        for (const auto& b : mods)
          for (const auto& f : homs(a, c, limits_))
            for (const auto& g : homs(b, c, limits_)) {
              Pullback p = pullback(f, g, limits_);
              // The same object as the inverse limit of the cospan, whose
              // index set has no upper bound.
              InverseSystem span = InverseSystem::build({c, a, b}, {{0, 1}, {0, 2}}, {f, g});
              InverseLimit lim = inverse_limit(span, limits_);
              expect(isomorphic(*lim.module, *p.module), "pullback vs inverse limit over " + c->name());
              for (const auto& x : mods) {
                auto through = count_by_composites(homs(x, p.module, limits_), {p.left, p.right}, true);
                for (const auto& u : homs(x, a, limits_))
                  for (const auto& v : homs(x, b, limits_)) {
                    bool cone = same_map(compose(f, u), compose(g, v));
                    auto h = factor_through_pullback(p, u, v);
                    expect(cone ? (h && same_map(compose(p.left, *h), u) && same_map(compose(p.right, *h), v) &&
                                   through[{u.map(), v.map()}] == 1)
                                : !h,
                           "pullback over " + c->name() + " from " + x->name());
                  }
              }
            }
  }

  void inverse_chains(const std::vector<ModulePtr>& mods) {
    for (const auto& a : mods)
      for (const auto& b : mods)
        for (const auto& f : homs(b, a, limits_)) {
          InverseSystem sys = InverseSystem::build({a, b}, {{0, 1}}, {f});
          InverseLimit lim = inverse_limit(sys, limits_);
          for (const auto& x : mods) {
            auto through = count_by_composites(homs(x, lim.module, limits_), lim.projections, true);
            for (const auto& v : homs(x, b, limits_)) {
              Morphism u = compose(f, v);
              expect(through[{u.map(), v.map()}] == 1,
                     "inverse limit of " + b->name() + " -> " + a->name() + " from " + x->name());
            }
          }
        }
    const Workspace& ws = catalog_workspace();
    for (const auto& named : ws.systems) {
      if (named.kind != "inverse") continue;
      InverseSystem sys = ws.inverse(named);
      InverseLimit lim = inverse_limit(sys, limits_);
      bool compatible = true;
      for (std::size_t j = 0; j < sys.size(); ++j)
        for (std::size_t k = 0; k < sys.size(); ++k)
          if (sys.leq(j, k) && !same_map(compose(sys.transition(j, k), lim.projections[k]), lim.projections[j]))
            compatible = false;
      expect(compatible, "projections of the limit of " + named.name);
    }
  }

  // Legs commute with transitions, the relation construction matches
  // the value at the maximum, and cocones factor uniquely.
  void colimit(const DirectedSystem& sys, const std::vector<ModulePtr>& tests, const std::string& what) {
    Colimit c = directed_colimit(sys);
    bool legs = true;
    for (std::size_t j = 0; j < sys.size(); ++j)
      for (std::size_t k = 0; k < sys.size(); ++k)
        if (sys.leq(j, k) && !same_map(compose(c.legs[k], sys.transition(j, k)), c.legs[j])) legs = false;
    expect(legs && c.matches_shortcut, what + ": legs or shortcut");
    const std::size_t top = sys.maximum();
    for (const auto& y : tests) {
      auto through = count_by_composites(homs(c.module, y, limits_), c.legs, false);
      // A cocone is fixed by its component at the maximum.
      for (const auto& h : homs(sys.node(top), y, limits_)) {
        Key k;
        for (std::size_t j = 0; j < sys.size(); ++j) k.push_back(compose(h, sys.transition(j, top)).map());
        expect(through[k] == 1, what + ": cocone into " + y->name());
      }
    }
  }

  void psi(const ModulePtr& x, const DirectedSystem& sys, const std::string& what) {
    Colimit c = directed_colimit(sys);
    PsiMap p = psi_x(x, sys, c, limits_);
    expect(p.injective, "psi_" + x->name() + " on " + what);
  }

 private:
  SuiteRow& row_;
  Limits limits_;
};

}  // namespace

SuiteRow suite_limits(const SuiteOptions& opt) {
  SuiteRow row = make_row(11, "limits",
                          "universal factorizations exist uniquely; colimits match the maximum; psi injective");
  LimitsCheck chk(row, opt.limits);
  for (const auto& ring : default_catalog().semirings) {
    auto three = small_modules(*ring, 3);
    auto four = small_modules(*ring, 4);
    chk.products(three);
    chk.equalizers(three);
    chk.pullbacks(three);
    chk.inverse_chains(three);

    // Each module is the colimit of its subsemimodules.
    for (const auto& m : four) {
      DirectedSystem sys = subsemimodule_system(m, opt.limits);
      chk.colimit(sys, three, "subsemimodules of " + m->name());
      chk.expect(isomorphic(*directed_colimit(sys).module, *m), "colimit of subsemimodules of " + m->name());
      for (const auto& x : four) chk.psi(x, sys, "subsemimodules of " + m->name());
    }
    for (const auto& a : three)
      for (const auto& b : three)
        for (const auto& f : homs(a, b, opt.limits)) {
          DirectedSystem chain = DirectedSystem::build({a, b}, {{0, 1}}, {f});
          chk.colimit(chain, three, a->name() + " -> " + b->name());
          for (const auto& x : three) chk.psi(x, chain, a->name() + " -> " + b->name());
          // A diamond with two copies of f.
          DirectedSystem diamond = DirectedSystem::build(
              {a, b, b, b}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {f, f, identity(b), identity(b)});
          chk.colimit(diamond, {}, "diamond on " + a->name() + " -> " + b->name());
          for (const auto& c : three)
            for (const auto& g : homs(b, c, opt.limits)) {
              DirectedSystem three_chain = DirectedSystem::build({a, b, c}, {{0, 1}, {1, 2}}, {f, g});
              chk.colimit(three_chain, {}, a->name() + " -> " + b->name() + " -> " + c->name());
            }
        }

    // Levelwise maps L -> M, M -> M built from one endomorphism f of M.
    for (const auto& m : four)
      for (const Subsemimodule& l : enumerate_subsemimodules(m, opt.limits)) {
        Embedded e = as_module(m, l.members);
        DirectedSystem src = DirectedSystem::build({e.module, m}, {{0, 1}}, {e.inclusion});
        DirectedSystem dst = DirectedSystem::build({m, m}, {{0, 1}}, {identity(m)});
        Colimit cs = directed_colimit(src), cd = directed_colimit(dst);
        for (const auto& f : homs(m, m, opt.limits)) {
          std::vector<Morphism> h{compose(f, e.inclusion), f};
          Morphism hc = colimit_morphism(src, cs, dst, cd, h);
          bool inj = h[0].injective() && h[1].injective();
          bool surj = h[0].surjective() && h[1].surjective();
          bool uni = is_uniform(h[0]) && is_uniform(h[1]);
          bool commutes = true;
          for (std::size_t j = 0; j < 2; ++j)
            commutes = commutes && same_map(compose(hc, cs.legs[j]), compose(cd.legs[j], h[j]));
          chk.expect(commutes && (!inj || hc.injective()) && (!surj || hc.surjective()) &&
                         (!uni || is_uniform(hc)),
                     "induced colimit map on " + e.module->name() + " -> " + m->name());
        }
      }

    // Levelwise sequences Ker(beta_j) -> L_j -> M/U over the subsemimodule
    // system of M, with beta_j the inclusion followed by the projection.
    for (const auto& m : four) {
      DirectedSystem sys = subsemimodule_system(m, opt.limits);
      Colimit cs = directed_colimit(sys);
      for (const Subsemimodule& u : enumerate_subsemimodules(m, opt.limits)) {
        Quotient q = quotient_by_sub(m, u.members);
        std::vector<Morphism> beta, ids;
        std::vector<ModulePtr> tops(sys.size(), q.module);
        for (std::size_t j = 0; j < sys.size(); ++j) beta.push_back(compose(q.projection, node_inclusion(sys.node(j), m)));
        for (std::size_t e = 0; e < sys.edges().size(); ++e) ids.push_back(identity(q.module));
        DirectedSystem target = DirectedSystem::build(tops, sys.edges(), ids);
        Colimit ct = directed_colimit(target);
        Morphism bc = colimit_morphism(sys, cs, target, ct, beta);
        DirectedSystem ks = kernel_system(sys, beta);
        Colimit ck = directed_colimit(ks);
        std::vector<Morphism> alpha;
        for (std::size_t j = 0; j < sys.size(); ++j)
          alpha.push_back(Morphism::trusted(ks.node(j), sys.node(j), mask_elements(kernel_mask(beta[j]))));
        Morphism ac = colimit_morphism(ks, ck, sys, cs, alpha);
        chk.expect(isomorphic(*ck.module, *as_module(cs.module, kernel_mask(bc)).module) &&
                       ac.image() == kernel_mask(bc),
                   "kernel of the colimit map over " + m->name() + "/" + mask_label(*m, u.members));
        DirectedSystem cks = cokernel_system(sys, alpha);
        chk.expect(isomorphic(*directed_colimit(cks).module, *cokernel(ac).module),
                   "cokernel of the colimit map over " + m->name());
        bool lv_exact = true, lv_proper = true, lv_semi = true, lv_quasi = true;
        for (std::size_t j = 0; j < sys.size(); ++j) {
          StageReport s = classify_stage(alpha[j], beta[j]);
          lv_exact &= s.exact;
          lv_proper &= s.proper_exact;
          lv_semi &= s.semi_exact;
          lv_quasi &= s.quasi_exact;
        }
        StageReport s = classify_stage(ac, bc);
        chk.expect((!lv_exact || s.exact) && (!lv_proper || s.proper_exact) && (!lv_semi || s.semi_exact) &&
                       (!lv_quasi || s.quasi_exact),
                   "levelwise exactness not inherited over " + m->name());
      }
    }

    // Tensor and Hom against sums, products and colimits.
    for (const auto& f : three)
      for (const auto& x : three)
        for (const auto& y : three) {
          ProductObject sum = coproduct({x, y}, opt.limits);
          ModulePtr lhs = tensor_product(f, sum.module, {}, opt.limits).module;
          ProductObject rhs = coproduct({tensor_product(f, x, {}, opt.limits).module,
                                         tensor_product(f, y, {}, opt.limits).module},
                                        opt.limits);
          chk.expect(isomorphic(*lhs, *rhs.module, false), "tensor with a sum " + f->name());
          ProductObject prod = product({x, y}, opt.limits);
          ProductObject homs_prod = product({hom_monoid(f, x, {}, opt.limits).module,
                                             hom_monoid(f, y, {}, opt.limits).module},
                                            opt.limits);
          chk.expect(isomorphic(*hom_monoid(f, prod.module, {}, opt.limits).module, *homs_prod.module, false),
                     "Hom into a product " + f->name());
        }
    for (const auto& f : three)
      for (const auto& m : four) {
        DirectedSystem sys = subsemimodule_system(m, opt.limits);
        TensoredSystem ts = tensor_system(f, sys, opt.limits);
        chk.expect(isomorphic(*directed_colimit(ts.system).module,
                              *tensor_product(f, directed_colimit(sys).module, {}, opt.limits).module, false),
                   "tensor with a colimit " + f->name() + ", " + m->name());
      }
  }
  return row;
}

}  // namespace semiflat
