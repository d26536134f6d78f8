#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "semiflat/catalog.hpp"
#include "semiflat/flatness.hpp"
#include "semiflat/subsemimodule.hpp"

using namespace semiflat;

namespace {

const ModulePtr& mod(const std::string& name) { return *default_catalog().find_module(name); }
const SemiringPtr& ring(const std::string& name) { return *default_catalog().find_semiring(name); }

ModulePtr zmod2_over_zmod4() {
  auto phis = semiring_morphisms(*ring("ZMOD4"), *ring("ZMOD2"));
  EXPECT_EQ(phis.size(), 1u);
  return restrict_scalars(mod("ZMOD2"), ring("ZMOD4"), phis.front());
}

// id (x) iota: F (x) L -> F (x) M from the dense oracle, when every class
// of F (x) L is a pure tensor. nullopt otherwise.
std::optional<bool> oracle_injective(const ModulePtr& f, const ModulePtr& m, const Mask& sub) {
  Embedded l = as_module(m, sub);
  auto fl = oracle::dense_tensor(*f, *l.module, 1u << 16);
  auto fm = oracle::dense_tensor(*f, *m, 1u << 16);
  std::vector<std::int64_t> image(fl.classes, -1);
  for (Elem a = 0; a < f->size(); ++a)
    for (Elem u = 0; u < l.module->size(); ++u) {
      auto cls = fl.tau_at(a, u, l.module->size());
      auto tgt = static_cast<std::int64_t>(fm.tau_at(a, l.inclusion(u), m->size()));
      if (image[cls] >= 0 && image[cls] != tgt) ADD_FAILURE() << "oracle map not well defined";
      image[cls] = tgt;
    }
  std::set<std::int64_t> seen;
  for (auto x : image) {
    if (x < 0) return std::nullopt;
    seen.insert(x);
  }
  return seen.size() == image.size();
}

}  // namespace

TEST(Flatness, Zmod2IsNotUniformlyZmod4Flat) {
  ModulePtr f = zmod2_over_zmod4();
  FlatnessVerdict v = flatness_verdict(f, mod("ZMOD4"));
  EXPECT_FALSE(v.uniformly_m_flat);
  EXPECT_EQ(v.uniform_witness, "{0,2}");
  EXPECT_FALSE(v.sequence_form);
  Mask u(4, false);
  u[0] = u[2] = true;
  auto inj = oracle_injective(f, mod("ZMOD4"), u);
  ASSERT_TRUE(inj.has_value());
  EXPECT_FALSE(*inj);
}

TEST(Flatness, FreeAndTrivialAreFlat) {
  for (const auto& r : default_catalog().semirings) {
    auto universe = default_catalog().modules_over(*r);
    for (const std::string suffix : {"", "^2", ".TRIV"}) {
      UniverseVerdict v = is_uniformly_flat(mod(r->name() + suffix), universe);
      EXPECT_TRUE(v.holds) << r->name() << suffix << " against " << v.first_failure;
    }
  }
}

TEST(Flatness, VerdictsAgreeWithOracleInjectivity) {
  std::size_t compared = 0;
  for (const auto& r : default_catalog().semirings)
    for (const auto& f : default_catalog().modules_over(*r))
      for (const auto& m : default_catalog().modules_over(*r)) {
        if (f->size() * m->size() > 16) continue;
        FlatnessVerdict v = flatness_verdict(f, m);
        for (const auto& c : v.checks) {
          std::optional<bool> inj;
          try {
            inj = oracle_injective(f, m, c.sub);
          } catch (const std::length_error&) {
            continue;
          }
          if (!inj) continue;
          EXPECT_EQ(c.injective, *inj) << f->name() << " against " << m->name() << " at " << c.label;
          ++compared;
        }
      }
  EXPECT_GT(compared, 50u);
}

TEST(Flatness, LatticeOnCatalogPairs) {
  for (const auto& r : default_catalog().semirings)
    for (const auto& f : default_catalog().modules_over(*r))
      for (const auto& m : default_catalog().modules_over(*r)) {
        if (f->size() * m->size() > 64) continue;
        FlatnessVerdict v = flatness_verdict(f, m);
        EXPECT_TRUE(v.lattice_holds()) << f->name() << " against " << m->name();
        EXPECT_TRUE(v.sequence_agrees()) << f->name() << " against " << m->name();
      }
}

// Uniform flatness over SAT3 does not force injectivity on the
// non-subtractive L = {0,2,3}.
TEST(Flatness, NonSubtractiveSubNeedNotStayInjective) {
  const ModulePtr& f = mod("SAT3{0,2,3}");
  const ModulePtr& m = mod("SAT3");
  FlatnessVerdict v = flatness_verdict(f, m);
  EXPECT_TRUE(v.uniformly_m_flat);
  EXPECT_TRUE(v.in_is);
  Mask l(4, true);
  l[1] = false;
  auto inj = oracle_injective(f, m, l);
  ASSERT_TRUE(inj.has_value());
  EXPECT_FALSE(*inj);
  EXPECT_FALSE(is_subtractive(*m, l));
  FgReduction r = fg_reduction_check(f, m);
  EXPECT_TRUE(r.applicable);
  EXPECT_FALSE(r.all_mono);
}

TEST(Flatness, CertificateForFreeModule) {
  auto cert = find_flat_certificate(mod("ZMOD4^2"), 2);
  ASSERT_TRUE(cert.has_value());
  EXPECT_FALSE(find_flat_certificate(zmod2_over_zmod4(), 3).has_value());
}
