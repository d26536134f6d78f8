#include <algorithm>
#include <map>
#include <set>

#include "semiflat/flatness.hpp"
#include "semiflat/isomorphism.hpp"
#include "semiflat/quotient.hpp"
#include "semiflat/search.hpp"
#include "semiflat/suite.hpp"
#include "semiflat/tensor_iso.hpp"
#include "suite_util.hpp"

namespace semiflat {

using namespace suite_detail;

namespace {

// Cospans a: A -> C, b: B -> C among catalog modules of size <= 2, at most
// `cap` of them.
std::vector<std::pair<Morphism, Morphism>> small_cospans(const Semiring& s, std::size_t cap,
                                                         const Limits& limits) {
  std::vector<std::pair<Morphism, Morphism>> out;
  auto mods = small_modules(s, 2);
  for (const auto& c : mods)
    for (const auto& a : mods)
      for (const auto& b : mods)
        for (const auto& f : homs(a, c, limits))
          for (const auto& g : homs(b, c, limits)) {
            if (out.size() >= cap) return out;
            out.emplace_back(f, g);
          }
  return out;
}

Elem pair_element(const Semimodule& s2, const Semimodule& s, Elem a, Elem b) {
  return *s2.find("(" + s.label(a) + "," + s.label(b) + ")");
}

// S -> S^2, x |-> (x, 0), as a two-node certificate of S^2.
FlatCertificate chain_certificate(const ModulePtr& s, const ModulePtr& s2) {
  std::vector<Elem> emb(s->size());
  for (Elem x = 0; x < s->size(); ++x) emb[x] = pair_element(*s2, *s, x, s->zero());
  Morphism e = Morphism::build(s, s2, emb);
  FlatCertificate cert{DirectedSystem::build({s, s2}, {{0, 1}}, {e}),
                       {{identity(s), identity(s)}, {identity(s2), identity(s2)}},
                       {}};
  Colimit c = directed_colimit(cert.system);
  std::vector<Elem> map(c.module->size());
  for (Elem x = 0; x < s2->size(); ++x) map[c.legs[1](x)] = x;
  cert.to_subject = Morphism::trusted(c.module, s2, std::move(map));
  return cert;
}

}  // namespace

SuiteRow suite_flat_positive(const SuiteOptions& opt) {
  SuiteRow row = make_row(7, "flat-positive",
                          "free modules, TRIV and retracts of free modules are uniformly flat");
  for (const auto& ring : default_catalog().semirings) {
    const std::string rn = ring->name();
    auto universe = default_catalog().modules_over(*ring);
    const ModulePtr& s = catalog_module(rn);
    const ModulePtr& s2 = catalog_module(rn + "^2");
    const ModulePtr& triv = catalog_module(rn + ".TRIV");

    std::vector<ModulePtr> subjects{triv, s, s2};
    for (const auto& free : {s, s2})
      for (const Mask& m : end_comp(free, opt.limits).summands)
        subjects.push_back(as_module(free, m, "retract " + mask_label(*free, m) + " of " + free->name()).module);
    for (const auto& m : universe)
      if (m->size() <= s2->size() && find_retraction(m, s2, opt.limits)) subjects.push_back(m);
    std::vector<ModulePtr> unique;
    for (const auto& m : subjects)
      if (std::none_of(unique.begin(), unique.end(), [&](const ModulePtr& u) { return isomorphic(*u, *m); }))
        unique.push_back(m);

    auto cospans = small_cospans(*ring, 24, opt.limits);
    for (const auto& f : unique) {
      ++row.instances;
      UniverseVerdict v = is_uniformly_flat(f, universe, "catalog", opt.limits);
      if (!v.holds) fail(row, f->name() + " not uniformly flat against " + v.first_failure);
      if (!v.skipped.empty())
        row.notes.push_back(f->name() + ": " + std::to_string(v.skipped.size()) + " universe members out of bounds");
      auto cert = find_flat_certificate(f, 3, opt.limits);
      if (!cert) {
        fail(row, f->name() + ": no retraction of S^n found for n <= 3");
        continue;
      }
      CertificateReport cr = flat_certificate_check(f, *cert, universe, cospans, opt.limits);
      if (!cr.holds()) fail(row, f->name() + ": certificate accepted but a pullback is not preserved");
      ++row.applicable;
    }

    auto small = small_modules(*ring, 4);
    for (const auto& m : small) {
      ++row.instances;
      for (const auto& fam : {std::vector<ModulePtr>{s, s}, std::vector<ModulePtr>{s, triv}}) {
        SumRetractReport sr = sum_retract_suite(fam, m, opt.limits);
        if (!sr.holds() || !sr.sum_flat)
          fail(row, "sum " + fam[0]->name() + " + " + fam[1]->name() + " against " + m->name());
      }
    }

    // A two-node chain certificate, and two corrupted copies of it.
    ++row.instances;
    FlatCertificate chain = chain_certificate(s, s2);
    if (!flat_certificate_check(s2, chain, universe, cospans, opt.limits).holds())
      fail(row, rn + ": chain certificate of S^2 rejected");
    FlatCertificate bad = chain;
    bad.to_subject = zero_morphism(chain.to_subject.source(), s2);
    FlatCertificate bad_node = chain;
    bad_node.nodes[1].retraction = zero_morphism(s2, s2);
    for (const auto* c : {&bad, &bad_node}) {
      try {
        flat_certificate_check(s2, *c, universe, cospans, opt.limits);
        fail(row, rn + ": corrupted certificate accepted");
      } catch (const BadCertificate&) {
      }
    }
  }
  return row;
}

SuiteRow suite_flat_negative(const SuiteOptions& opt) {
  SuiteRow row = make_row(8, "flat-negative", "ZMOD2 over ZMOD4 is not uniformly ZMOD4-flat, witness {0,2}");
  const SemiringPtr& z4 = catalog_ring("ZMOD4");
  const ModulePtr& m = catalog_module("ZMOD4");
  auto down = semiring_morphisms(*z4, *catalog_ring("ZMOD2"));
  if (down.size() != 1) {
    fail(row, "expected exactly one semiring map ZMOD4 -> ZMOD2");
    return row;
  }
  ModulePtr f = restrict_scalars(catalog_module("ZMOD2"), z4, down.front());
  ++row.instances;
  FlatnessVerdict v = flatness_verdict(f, m, opt.limits);
  if (v.uniformly_m_flat) fail(row, "reported uniformly flat");
  if (v.uniform_witness != "{0,2}") fail(row, "witness " + v.uniform_witness);
  if (v.sequence_form) fail(row, "tensored short sequence reported exact");
  row.notes.push_back("detail: " + v.witness_detail);

  // Second route: every generator pair kept, no presentation shortcuts.
  TensorOptions dense;
  dense.dense = true;
  std::string first;
  for (const Subsemimodule& u : enumerate_subsemimodules(m, opt.limits)) {
    if (!is_subtractive(*m, u.members)) continue;
    ++row.instances;
    Embedded e = as_module(m, u.members);
    TensorPresentation pu = tensor_product(f, e.module, dense, opt.limits);
    TensorPresentation pm = tensor_product(f, m, dense, opt.limits);
    Morphism t = tensor_morphisms(identity(f), e.inclusion, pu, pm);
    if ((!t.injective() || !is_i_uniform(t)) && first.empty()) first = mask_label(*m, u.members);
  }
  if (first != "{0,2}") fail(row, "dense route gives first failure " + (first.empty() ? "none" : first));
  row.applicable = row.instances;
  return row;
}

SuiteRow suite_lattice(const SuiteOptions& opt) {
  SuiteRow row = make_row(9, "lattice",
                          "(I_S and mono-flat) implies uniformly flat; certified implies uniformly flat");
  SearchConfig cfg;
  cfg.semirings = {catalog_ring("BOOL"), catalog_ring("ZMOD4")};
  cfg.max_size = 4;
  cfg.limits = opt.limits;
  SearchReport rep = search_counterexamples(cfg);
  row.instances += rep.pairs_evaluated;
  if (!rep.complete) fail(row, "search ran out of budget");
  for (const auto& v : rep.violations) fail(row, v.rule + ": " + v.subject + " against " + v.against);
  std::size_t certified = 0;
  for (const auto& c : rep.records) certified += c.certified_flat;
  row.notes.push_back(std::to_string(rep.records.size()) + " modules searched, " +
                      std::to_string(certified) + " certified, " +
                      std::to_string(rep.candidates.size()) + " uncertified uniformly flat");

  // The same rules on catalog pairs, plus agreement of the two forms of
  // the definition.
  for (const auto& ring : default_catalog().semirings) {
    auto universe = default_catalog().modules_over(*ring);
    for (const auto& f : small_modules(*ring, 4)) {
      bool uniform_all = true;
      for (const auto& m : universe) {
        FlatnessVerdict v;
        try {
          v = flatness_verdict(f, m, opt.limits);
        } catch (const BoxBoundExceeded&) {
          continue;
        } catch (const SizeBoundExceeded&) {
          continue;
        }
        ++row.instances;
        if (v.in_is && v.mono_flat) ++row.applicable;
        if (!v.lattice_holds()) fail(row, f->name() + " against " + m->name() + ": lattice");
        if (!v.sequence_agrees()) fail(row, f->name() + " against " + m->name() + ": sequence form");
        uniform_all = uniform_all && v.uniformly_m_flat;
      }
      if (find_flat_certificate(f, 3, opt.limits) && !uniform_all)
        fail(row, f->name() + ": certified but not uniformly flat");
    }
  }
  return row;
}

SuiteRow suite_nu(const SuiteOptions& opt) {
  SuiteRow row = make_row(10, "nu-maps",
                          "nu is injective and uniform for X u.f.g., an isomorphism for X u.f.p., Z uniformly flat");
  std::size_t outside = 0, skipped = 0;
  for (const auto& ring : default_catalog().semirings) {
    auto universe = default_catalog().modules_over(*ring);
    auto small = small_modules(*ring, 4);
    std::map<std::string, bool> flat, fg, fp;
    for (const auto& m : small) {
      flat[m->name()] = is_uniformly_flat(m, universe, "catalog", opt.limits).holds;
      fg[m->name()] = is_uniformly_fg(m, 2, opt.limits).has_value();
      auto p = is_uniformly_fp(m, 2, opt.limits);
      fp[m->name()] = p && p->certificate.exact();
    }
    auto judge = [&](const NuMap& nu, const ModulePtr& x, const ModulePtr& z, const std::string& what) {
      ++row.instances;
      const bool hz = flat[z->name()];
      bool any = false;
      if (fg[x->name()] && hz) {
        any = true;
        if (!nu.injective || !nu.uniform) fail(row, what + ": not injective and uniform");
      }
      if (fp[x->name()] && hz) {
        any = true;
        if (!nu.isomorphism()) fail(row, what + ": not an isomorphism");
      }
      if (any) ++row.applicable;
      else ++outside;
    };
    for (const auto& x : small)
      for (const auto& z : small) {
        for (const auto& y : small) {
          try {
            judge(nu_xyz(x, y, z, opt.limits), x, z,
                  "nu(" + x->name() + ", " + y->name() + ", " + z->name() + ")");
          } catch (const BoxBoundExceeded&) {
            ++skipped;
          } catch (const SizeBoundExceeded&) {
            ++skipped;
          }
        }
        try {
          judge(nu_xz(x, z, opt.limits), x, z, "nu(" + x->name() + ", " + z->name() + ")");
        } catch (const BoxBoundExceeded&) {
          ++skipped;
        } catch (const SizeBoundExceeded&) {
          ++skipped;
        }
      }
  }
  if (outside == 0) fail(row, "no instance outside the hypotheses");
  row.notes.push_back(std::to_string(outside) + " instances outside the hypotheses evaluated");
  row.notes.push_back(std::to_string(skipped) + " instances over the size bounds");
  return row;
}

// ---------------------------------------------------------------------------
// Supplementary rows.

SuiteRow suite_fg_reduction(const SuiteOptions& opt) {
  SuiteRow row = make_row(0, "fg-reduction",
                          "for F in I_S(M): uniformly M-flat iff id(x)iota_L injective for every f.g. L");
  for (const auto& ring : default_catalog().semirings) {
    auto mods = default_catalog().modules_over(*ring);
    for (const auto& f : mods)
      for (const auto& m : mods) {
        if (f->size() > 4 && m->size() > 4) continue;
        FgReduction r;
        try {
          r = fg_reduction_check(f, m, opt.limits);
        } catch (const BoxBoundExceeded&) {
          continue;
        } catch (const SizeBoundExceeded&) {
          continue;
        }
        ++row.instances;
        if (!r.applicable) continue;
        ++row.applicable;
        if (!r.agrees())
          fail(row, f->name() + " against " + m->name() + ": uniformly flat " +
                        (r.uniformly_m_flat ? "yes" : "no") + ", injective on every L " +
                        (r.all_mono ? "yes" : "no") + " (L = " + r.witness + ")");
      }
  }
  return row;
}

SuiteRow suite_middle_transfer(const SuiteOptions& opt) {
  SuiteRow row = make_row(0, "middle-transfer",
                          "uniform M-flatness passes to M1, and to M2 for F in I_S(M2)");
  for (const auto& ring : default_catalog().semirings) {
    auto small = small_modules(*ring, 4);
    for (const auto& m : small)
      for (const Subsemimodule& u : enumerate_subsemimodules(m, opt.limits)) {
        Embedded e = as_module(m, u.members);
        Quotient q = quotient_by_sub(m, u.members);
        if (!classify_sequence(short_sequence(e.inclusion, q.projection)).exact()) continue;
        for (const auto& f : small) {
          ++row.instances;
          MiddleTransfer t = middle_flat_transfer(f, e.inclusion, q.projection, opt.limits);
          if (t.m_flat) ++row.applicable;
          if (!t.holds())
            fail(row, f->name() + " over 0 -> " + e.module->name() + " -> " + m->name() + " -> " +
                          q.module->name() + " -> 0");
        }
      }
  }
  return row;
}

SuiteRow suite_flat_injective(const SuiteOptions& opt) {
  SuiteRow row = make_row(0, "flat-injective",
                          "flatness against M and injectivity of Hom(F, X) relative to M, both directions");
  std::size_t dir1 = 0, dir2 = 0;
  for (const auto& ring : default_catalog().semirings) {
    auto small = small_modules(*ring, 4);
    for (const auto& f : small)
      for (const auto& m : small) {
        if (f->size() * m->size() > 8) continue;
        FlatnessVerdict fv = flatness_verdict(f, m, opt.limits);
        TensorPresentation fm = tensor_product(f, m, {}, opt.limits);
        std::vector<Morphism> probes;
        for (const Subsemimodule& u : enumerate_subsemimodules(m, opt.limits)) {
          if (!is_subtractive(*m, u.members)) continue;
          Embedded e = as_module(m, u.members);
          TensorPresentation fu = tensor_product(f, e.module, {}, opt.limits);
          probes.push_back(tensor_morphisms(identity(f), e.inclusion, fu, fm));
        }
        for (const auto& x : small) {
          ++row.instances;
          try {
            HomMonoid hfx = hom_monoid(f, x, {}, opt.limits);
            bool x_inj = uniformly_injective_rel(x, {fm.module}, opt.limits).holds;
            bool hom_inj = uniformly_injective_rel(hfx.module, {m}, opt.limits).holds;
            bool cog = uniformly_cogenerates(x, probes, opt.limits).holds;
            if (x_inj && fv.uniformly_m_flat) {
              ++dir1;
              if (!hom_inj) fail(row, "(1) " + f->name() + ", " + m->name() + ", " + x->name());
            }
            if (cog && hom_inj) {
              ++dir2;
              if (!fv.uniformly_m_flat) fail(row, "(2) " + f->name() + ", " + m->name() + ", " + x->name());
            }
            if ((x_inj && fv.uniformly_m_flat) || (cog && hom_inj)) ++row.applicable;
          } catch (const SizeBoundExceeded&) {
          } catch (const SideMismatch&) {
          }
        }
      }
  }
  row.notes.push_back(std::to_string(dir1) + " instances of direction (1), " + std::to_string(dir2) +
                      " of direction (2)");
  return row;
}

SuiteRow suite_colimit_flatness(const SuiteOptions& opt) {
  SuiteRow row = make_row(0, "colimit-flatness",
                          "directed colimits of uniformly flat modules are uniformly flat");
  for (const auto& ring : default_catalog().semirings) {
    auto universe = default_catalog().modules_over(*ring);
    std::vector<std::pair<ModulePtr, bool>> memo;
    auto flat = [&](const ModulePtr& m) {
      for (const auto& [known, holds] : memo)
        if (isomorphic(*known, *m)) return holds;
      bool holds = is_uniformly_flat(m, universe, "catalog", opt.limits).holds;
      memo.emplace_back(m, holds);
      return holds;
    };
    auto check = [&](const DirectedSystem& sys, const std::string& what) {
      ++row.instances;
      bool all = true;
      for (const auto& n : sys.nodes()) all = all && flat(n);
      if (!all) return;
      ++row.applicable;
      if (!flat(directed_colimit(sys).module)) fail(row, what + ": colimit not uniformly flat");
    };
    auto small = small_modules(*ring, 4);
    // Each module is the colimit of its subsemimodules, all finitely
    // generated here.
    for (const auto& m : small) check(subsemimodule_system(m, opt.limits), "subsemimodules of " + m->name());
    auto three = small_modules(*ring, 3);
    for (const auto& a : three)
      for (const auto& b : three)
        for (const auto& f : homs(a, b, opt.limits))
          check(DirectedSystem::build({a, b}, {{0, 1}}, {f}), a->name() + " -> " + b->name());
  }
  return row;
}

SuiteRow suite_ideal_criterion(const SuiteOptions& opt) {
  SuiteRow row = make_row(0, "ideal-criterion",
                          "ideal-wise flatness, full flatness and injectivity of Hom(F, Q) side by side");
  std::size_t agree = 0, disagree = 0;
  for (const auto& ring : default_catalog().semirings) {
    auto small = small_modules(*ring, 4);
    const ModulePtr& q = catalog_module(ring->name());
    for (const auto& f : small) {
      ++row.instances;
      try {
        BaerReport b = baer_ideal_criterion(f, q, small, opt.limits);
        ++row.applicable;
        (b.ideal_wise == b.uniformly_flat ? agree : disagree) += 1;
        if (b.ideal_wise != b.uniformly_flat)
          row.notes.push_back(f->name() + ": ideal-wise " + (b.ideal_wise ? "yes" : "no") +
                              ", uniformly flat " + (b.uniformly_flat ? "yes" : "no"));
      } catch (const SizeBoundExceeded&) {
      }
    }
  }
  row.notes.push_back(std::to_string(agree) + " agree, " + std::to_string(disagree) +
                      " differ (no equivalence asserted)");
  return row;
}

}  // namespace semiflat
