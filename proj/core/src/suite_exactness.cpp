#include <map>
#include <tuple>

#include "semiflat/homology.hpp"
#include "semiflat/limits.hpp"
#include "semiflat/quotient.hpp"
#include "semiflat/suite.hpp"
#include "semiflat/tensor.hpp"
#include "suite_util.hpp"

namespace semiflat {

using namespace suite_detail;

namespace {

struct Tally {
  std::size_t instances = 0, applicable = 0, failures = 0;
};

class Items {
 public:
  explicit Items(SuiteRow& row) : row_(row) {}
  // Implication: hypotheses `applicable`, conclusion `holds`.
  void check(const std::string& tag, bool applicable, bool holds, const std::string& where) {
    Tally& t = tallies_[tag];
    ++t.instances;
    ++row_.instances;
    if (!applicable) return;
    ++t.applicable;
    ++row_.applicable;
    if (!holds) {
      ++t.failures;
      fail(row_, tag + ": " + where);
    }
  }
  void equivalence(const std::string& tag, bool lhs, bool rhs, const std::string& where) {
    check(tag, true, lhs == rhs, where);
  }
  void summarize() {
    for (const auto& [tag, t] : tallies_)
      row_.notes.push_back(tag + " " + std::to_string(t.applicable) + "/" + std::to_string(t.instances));
  }

 private:
  SuiteRow& row_;
  std::map<std::string, Tally> tallies_;
};

std::string arrow(const Morphism& f) { return f.source()->name() + " -> " + f.target()->name(); }

std::string pair_name(const Morphism& f, const Morphism& g) {
  return f.source()->name() + " -> " + f.target()->name() + " -> " + g.target()->name() + " [" +
         std::to_string(f.map().size()) + "]";
}

// f identifies A with Ker g.
bool is_kernel_of(const Morphism& f, const Morphism& g) {
  return f.injective() && f.image() == kernel_mask(g);
}

// g identifies C with B modulo f(A).
bool is_cokernel_of(const Morphism& f, const Morphism& g) {
  if (!g.surjective()) return false;
  const Semimodule& b = *g.source();
  Congruence c = congruence_mod(b, f.image());
  for (Elem x = 0; x < b.size(); ++x)
    for (Elem y = x + 1; y < b.size(); ++y)
      if ((g(x) == g(y)) != c.same(x, y)) return false;
  return true;
}

struct Variants {
  bool k, i, u;
};
Variants variants(const Morphism& f) {
  bool k = is_k_uniform(f), i = is_i_uniform(f);
  return {k, i, k && i};
}

// Direct sum of two maps on coproduct carriers.
Morphism sum_map(const Morphism& f, const Morphism& g, const Limits& limits) {
  ProductObject src = coproduct({f.source(), g.source()}, limits);
  ProductObject dst = coproduct({f.target(), g.target()}, limits);
  std::vector<Elem> map(src.module->size());
  for (Elem x = 0; x < map.size(); ++x) {
    auto c = src.components(x);
    map[x] = dst.element({f(c[0]), g(c[1])});
  }
  return Morphism::trusted(src.module, dst.module, std::move(map));
}

struct RetractPair {
  Morphism iota, pi;  // N -> M, M -> N
};

class RingContext {
 public:
  RingContext(const SemiringPtr& ring, const Limits& limits) : limits_(limits) {
    mods_ = small_modules(*ring, 4);
    for (std::size_t i = 0; i < mods_.size(); ++i) index_[mods_[i].get()] = i;
    homs_.resize(mods_.size() * mods_.size());
    for (std::size_t a = 0; a < mods_.size(); ++a)
      for (std::size_t b = 0; b < mods_.size(); ++b)
        homs_[a * mods_.size() + b] = homs(mods_[a], mods_[b], limits);
  }
  const std::vector<ModulePtr>& modules() const { return mods_; }
  std::size_t index(const ModulePtr& m) const { return index_.at(m.get()); }
  const std::vector<Morphism>& hom(std::size_t a, std::size_t b) const {
    return homs_[a * mods_.size() + b];
  }
  const HomMonoid& hom_monoid_of(std::size_t g, std::size_t x, bool covariant) {
    auto key = std::make_tuple(g, x, covariant);
    auto it = hm_.find(key);
    if (it != hm_.end()) return it->second;
    return hm_.emplace(key, covariant ? hom_monoid(mods_[g], mods_[x], {}, limits_)
                                      : hom_monoid(mods_[x], mods_[g], {}, limits_))
        .first->second;
  }
  const TensorPresentation& tensor(const ModulePtr& g, std::size_t x) {
    auto key = std::make_pair(g.get(), x);
    auto it = tensors_.find(key);
    if (it != tensors_.end()) return it->second;
    return tensors_.emplace(key, tensor_product(g, mods_[x], {}, limits_)).first->second;
  }

 private:
  Limits limits_;
  std::vector<ModulePtr> mods_;
  std::map<const Semimodule*, std::size_t> index_;
  std::vector<std::vector<Morphism>> homs_;
  std::map<std::tuple<std::size_t, std::size_t, bool>, HomMonoid> hm_;
  std::map<std::pair<const Semimodule*, std::size_t>, TensorPresentation> tensors_;
};

void exactness_items(RingContext& ctx, Items& items) {
  const auto& mods = ctx.modules();
  const std::size_t n = mods.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (const Morphism& f : ctx.hom(a, b)) {
        items.equivalence("exact.injective", classify_sequence({from_zero(mods[a]), f}).exact(),
                          f.injective(), arrow(f));
        items.equivalence("exact.surjective", classify_sequence({f, to_zero(mods[b])}).exact(),
                          f.surjective(), arrow(f));
      }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (const Morphism& f : ctx.hom(a, b))
          for (const Morphism& g : ctx.hom(b, c)) {
            const std::string where = pair_name(f, g);
            bool left = classify_sequence({from_zero(mods[a]), f, g}).semi_exact() && is_uniform(f);
            items.equivalence("exact.kernel", left, is_kernel_of(f, g), where);
            bool right = classify_sequence({f, g, to_zero(mods[c])}).semi_exact() && is_uniform(g);
            items.equivalence("exact.cokernel", right, is_cokernel_of(f, g), where);
            items.equivalence("exact.short", classify_sequence(short_sequence(f, g)).exact(),
                              is_kernel_of(f, g) && is_cokernel_of(f, g), where);
          }
}

void hom_items(RingContext& ctx, Items& items) {
  const auto& mods = ctx.modules();
  const std::size_t n = mods.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (const Morphism& f : ctx.hom(a, b)) {
        bool inj_uniform = f.injective() && is_uniform(f);
        bool surj_uniform = f.surjective() && is_uniform(f);
        for (std::size_t g = 0; g < n; ++g) {
          if (inj_uniform) {
            Morphism gf = hom_cov(ctx.hom_monoid_of(g, a, true), ctx.hom_monoid_of(g, b, true), f);
            items.check("hom-cov.injective", true, gf.injective() && is_uniform(gf),
                        mods[g]->name() + ", " + arrow(f));
          }
          if (surj_uniform) {
            Morphism fg = hom_contra(f, ctx.hom_monoid_of(g, b, false), ctx.hom_monoid_of(g, a, false));
            items.check("hom-contra.injective", true, fg.injective() && is_uniform(fg),
                        mods[g]->name() + ", " + arrow(f));
          }
        }
      }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (const Morphism& f : ctx.hom(a, b))
          for (const Morphism& g : ctx.hom(b, c)) {
            ExactnessReport left = classify_sequence({from_zero(mods[a]), f, g});
            bool lsemi = left.semi_exact() && is_uniform(f);
            bool lexact = left.exact();
            ExactnessReport right = classify_sequence({f, g, to_zero(mods[c])});
            bool rsemi = right.semi_exact() && is_uniform(g);
            bool rexact = right.exact();
            if (!lsemi && !lexact && !rsemi && !rexact) continue;
            for (std::size_t h = 0; h < n; ++h) {
              const std::string where = mods[h]->name() + ", " + pair_name(f, g);
              if (lsemi || lexact) {
                const HomMonoid& hl = ctx.hom_monoid_of(h, a, true);
                const HomMonoid& hm = ctx.hom_monoid_of(h, b, true);
                const HomMonoid& hn = ctx.hom_monoid_of(h, c, true);
                Morphism gf = hom_cov(hl, hm, f), gg = hom_cov(hm, hn, g);
                ExactnessReport r = classify_sequence({from_zero(hl.module), gf, gg});
                if (lsemi)
                  items.check("hom-cov.semi-exact", true, r.semi_exact() && r.proper_exact() && is_uniform(gf),
                              where);
                if (lexact) items.check("hom-cov.exact", is_k_uniform(gg), r.exact(), where);
              }
              if (rsemi || rexact) {
                const HomMonoid& hl = ctx.hom_monoid_of(h, a, false);
                const HomMonoid& hm = ctx.hom_monoid_of(h, b, false);
                const HomMonoid& hn = ctx.hom_monoid_of(h, c, false);
                Morphism fg = hom_contra(f, hm, hl), gg = hom_contra(g, hn, hm);
                ExactnessReport r = classify_sequence({from_zero(hn.module), gg, fg});
                if (rsemi)
                  items.check("hom-contra.semi-exact", true,
                              r.semi_exact() && r.proper_exact() && is_uniform(gg), where);
                if (rexact) items.check("hom-contra.exact", is_k_uniform(fg), r.exact(), where);
              }
            }
          }
}

void tensor_items(RingContext& ctx, Items& items) {
  const auto& mods = ctx.modules();
  const std::size_t n = mods.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (const Morphism& g : ctx.hom(a, b)) {
        if (!g.surjective() || !is_uniform(g)) continue;
        for (const auto& h : mods) {
          Morphism t = tensor_morphisms(identity(h), g, ctx.tensor(h, a), ctx.tensor(h, b));
          items.check("tensor.surjective", true, t.surjective() && is_uniform(t), h->name() + ", " + arrow(g));
        }
      }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (const Morphism& f : ctx.hom(a, b))
          for (const Morphism& g : ctx.hom(b, c)) {
            ExactnessReport r = classify_sequence({f, g, to_zero(mods[c])});
            bool semi = r.semi_exact() && is_uniform(g);
            bool exact = r.exact();
            if (!semi && !exact) continue;
            for (const auto& h : mods) {
              const auto& pa = ctx.tensor(h, a);
              const auto& pb = ctx.tensor(h, b);
              const auto& pc = ctx.tensor(h, c);
              Morphism tf = tensor_morphisms(identity(h), f, pa, pb);
              Morphism tg = tensor_morphisms(identity(h), g, pb, pc);
              ExactnessReport t = classify_sequence({tf, tg, to_zero(pc.module)});
              const std::string where = h->name() + ", " + pair_name(f, g);
              if (semi) items.check("tensor.semi-exact", true, t.semi_exact() && is_uniform(tg), where);
              if (exact) items.check("tensor.exact", is_i_uniform(tf), t.exact(), where);
            }
          }
}

void sum_items(const SemiringPtr& ring, RingContext& ctx, Items& items, const Limits& limits) {
  const auto& mods = ctx.modules();
  const std::size_t n = mods.size();
  std::vector<const Morphism*> all;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (const Morphism& f : ctx.hom(a, b)) all.push_back(&f);
  std::vector<Variants> var;
  for (const Morphism* f : all) var.push_back(variants(*f));
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j) {
      Variants v = variants(sum_map(*all[i], *all[j], limits));
      const std::string where = arrow(*all[i]) + " (+) " + arrow(*all[j]);
      items.equivalence("sum.k-uniform", v.k, var[i].k && var[j].k, where);
      items.equivalence("sum.i-uniform", v.i, var[i].i && var[j].i, where);
      items.equivalence("sum.uniform", v.u, var[i].u && var[j].u, where);
    }
  const ModulePtr& s = catalog_module(ring->name());
  const ModulePtr& s2 = catalog_module(ring->name() + "^2");
  std::vector<ModulePtr> projective;
  for (const auto& free : {s, s2})
    for (const Mask& m : end_comp(free, limits).summands)
      if (mask_count(m) > 1) projective.push_back(as_module(free, m).module);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (const Morphism& phi : ctx.hom(a, b)) {
        Variants v = variants(phi);
        for (const auto& f : {s, s2}) {
          Variants t = variants(tensor_morphisms(identity(f), phi, ctx.tensor(f, a), ctx.tensor(f, b)));
          const std::string where = f->name() + ", " + arrow(phi);
          items.equivalence("free-tensor.k-uniform", t.k, v.k, where);
          items.equivalence("free-tensor.i-uniform", t.i, v.i, where);
          items.equivalence("free-tensor.uniform", t.u, v.u, where);
        }
        for (const auto& p : projective) {
          Variants t = variants(tensor_morphisms(identity(p), phi, ctx.tensor(p, a), ctx.tensor(p, b)));
          const std::string where = p->name() + ", " + arrow(phi);
          items.check("projective-tensor.k-uniform", v.k, t.k, where);
          items.check("projective-tensor.i-uniform", v.i, t.i, where);
          items.check("projective-tensor.uniform", v.u, t.u, where);
        }
      }
}

void retract_items(RingContext& ctx, Items& items) {
  const auto& mods = ctx.modules();
  const std::size_t n = mods.size();
  std::vector<RetractPair> pairs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (const Morphism& iota : ctx.hom(a, b))
        if (iota.injective())
          for (const Morphism& pi : ctx.hom(b, a))
            if (same_map(compose(pi, iota), identity(mods[a]))) pairs.push_back({iota, pi});

  // Commuting arrows between retract pairs: gamma: M -> M' with
  // gamma o iota = iota' o g~ and pi' o gamma = g~ o pi, g~ = pi' gamma iota.
  struct Arrow {
    std::size_t from, to;
    Morphism gamma, reduced;
  };
  std::vector<Arrow> arrows;
  for (std::size_t p = 0; p < pairs.size(); ++p)
    for (std::size_t q = 0; q < pairs.size(); ++q) {
      const auto& x = pairs[p];
      const auto& y = pairs[q];
      for (const Morphism& gamma :
           ctx.hom(ctx.index(x.iota.target()), ctx.index(y.iota.target()))) {
        Morphism reduced = compose(y.pi, compose(gamma, x.iota));
        if (!same_map(compose(gamma, x.iota), compose(y.iota, reduced)) ||
            !same_map(compose(y.pi, gamma), compose(reduced, x.pi)))
          continue;
        arrows.push_back({p, q, gamma, reduced});
        for (const auto& c : verify_retract_square({x.iota, x.pi, y.iota, y.pi, gamma, reduced}))
          items.check(c.item, c.applicable, c.holds, arrow(gamma));
      }
    }
  std::vector<std::vector<std::size_t>> out_of(pairs.size());
  for (std::size_t i = 0; i < arrows.size(); ++i) out_of[arrows[i].from].push_back(i);
  for (const Arrow& f : arrows)
    for (std::size_t gi : out_of[f.to]) {
      const Arrow& g = arrows[gi];
      const auto& p0 = pairs[f.from];
      const auto& p1 = pairs[f.to];
      const auto& p2 = pairs[g.to];
      RetractLadder d{p0.iota, p0.pi, p1.iota, p1.pi, p2.iota, p2.pi, f.gamma, g.gamma, f.reduced, g.reduced};
      for (const auto& c : verify_retract_ladder(d))
        items.check(c.item, c.applicable, c.holds, pair_name(f.gamma, g.gamma));
    }
}

// Rows L -> M -> M/L for every subsemimodule L; verticals are every
// a2: M1 -> M2 that restricts to L1 -> L2 and descends to the quotients.
void ladder_items(RingContext& ctx, Items& items, const Limits& limits) {
  struct Row {
    std::size_t m;
    Embedded sub;
    Quotient quot;
  };
  std::vector<Row> rows;
  const auto& mods = ctx.modules();
  for (std::size_t i = 0; i < mods.size(); ++i)
    for (const Subsemimodule& l : enumerate_subsemimodules(mods[i], limits))
      rows.push_back({i, as_module(mods[i], l.members), quotient_by_sub(mods[i], l.members)});
  for (const Row& r1 : rows)
    for (const Row& r2 : rows)
      for (const Morphism& a2 : ctx.hom(r1.m, r2.m)) {
        const auto& l1 = r1.sub.inclusion;
        const auto& l2 = r2.sub.inclusion;
        // a1 = a2 restricted, when a2(L1) lies in L2.
        std::vector<Elem> index(mods[r2.m]->size(), 0);
        Mask in_l2 = l2.image();
        for (Elem y = 0; y < l2.source()->size(); ++y) index[l2(y)] = y;
        std::vector<Elem> a1map(l1.source()->size());
        bool restricts = true;
        for (Elem y = 0; y < a1map.size() && restricts; ++y) {
          Elem v = a2(l1(y));
          restricts = in_l2[v];
          a1map[y] = index[v];
        }
        if (!restricts) continue;
        // a3 on classes, when a2 respects the congruences.
        const auto& q1 = r1.quot.projection;
        const auto& q2 = r2.quot.projection;
        std::vector<Elem> a3map(q1.target()->size(), 0);
        std::vector<bool> set(a3map.size(), false);
        bool descends = true;
        for (Elem x = 0; x < q1.source()->size() && descends; ++x) {
          Elem c = q1(x), v = q2(a2(x));
          if (set[c]) descends = a3map[c] == v;
          a3map[c] = v;
          set[c] = true;
        }
        if (!descends) continue;
        Morphism a1 = Morphism::trusted(l1.source(), l2.source(), a1map);
        Morphism a3 = Morphism::trusted(q1.target(), q2.target(), a3map);
        LadderDiagram d{l1, q1, l2, q2, a1, a2, a3};
        for (const auto& c : verify_ladder(d))
          items.check(c.item, c.applicable, c.holds,
                      r1.sub.module->name() + " in " + mods[r1.m]->name() + " => " + r2.sub.module->name() +
                          " in " + mods[r2.m]->name());
      }
}

}  // namespace

SuiteRow suite_exactness(const SuiteOptions& opt) {
  SuiteRow row = make_row(6, "exactness",
                          "exactness lemmas, Hom and tensor exactness, direct sums, retracts and ladders");
  Items items(row);
  for (const char* name : {"BOOL", "SAT3", "ZMOD4"}) {
    const SemiringPtr& ring = catalog_ring(name);
    RingContext ctx(ring, opt.limits);
    exactness_items(ctx, items);
    hom_items(ctx, items);
    tensor_items(ctx, items);
    sum_items(ring, ctx, items, opt.limits);
    retract_items(ctx, items);
    ladder_items(ctx, items, opt.limits);
  }
  items.summarize();
  return row;
}

}  // namespace semiflat
