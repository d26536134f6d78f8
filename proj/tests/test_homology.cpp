#include <gtest/gtest.h>

#include "oracles.hpp"
#include "semiflat/catalog.hpp"
#include "semiflat/hom.hpp"
#include "semiflat/homology.hpp"
#include "semiflat/workspace.hpp"

using namespace semiflat;

namespace {

const ModulePtr& mod(const std::string& name) { return *default_catalog().find_module(name); }

std::vector<Morphism> homs(const ModulePtr& a, const ModulePtr& b) {
  std::vector<Morphism> out;
  for (auto& map : enumerate_homs(*a, *b)) out.push_back(Morphism::trusted(a, b, map));
  return out;
}

std::vector<ModulePtr> small_over(const std::string& ring, std::size_t max_size) {
  std::vector<ModulePtr> out;
  for (const auto& m : default_catalog().modules_over(**default_catalog().find_semiring(ring)))
    if (m->size() <= max_size) out.push_back(m);
  return out;
}

struct Flags {
  bool chain, proper, semi, quasi, exact;
};

Flags oracle_flags(const Morphism& f, const Morphism& g) {
  const Semimodule& m = *f.target();
  auto img = oracle::image_of(f);
  auto ker = oracle::kernel_of(g);
  auto closed = oracle::subtractive_closure(m, img);
  bool chain = true;
  for (Elem x = 0; x < m.size(); ++x)
    if (img[x] && !ker[x]) chain = false;
  bool proper = img == ker, semi = closed == ker, k = oracle::k_uniform(g);
  return {chain, proper, semi, semi && k, proper && k};
}

}  // namespace

TEST(Exactness, Seq1Flags) {
  Workspace ws = catalog_workspace();
  const auto& arrows = ws.diagram("seq1").arrows;
  const Morphism& f = ws.morphism(arrows[0]);
  const Morphism& g = ws.morphism(arrows[1]);
  StageReport s = classify_stage(f, g);
  Flags o = oracle_flags(f, g);
  EXPECT_TRUE(s.semi_exact);
  EXPECT_TRUE(s.quasi_exact);
  EXPECT_FALSE(s.proper_exact);
  EXPECT_FALSE(s.exact);
  EXPECT_EQ(s.semi_exact, o.semi);
  EXPECT_EQ(s.quasi_exact, o.quasi);
  EXPECT_EQ(s.proper_exact, o.proper);
  EXPECT_EQ(s.exact, o.exact);
}

TEST(Exactness, Seq2IsExact) {
  Workspace ws = catalog_workspace();
  const auto& arrows = ws.diagram("seq2").arrows;
  EXPECT_TRUE(classify_stage(ws.morphism(arrows[0]), ws.morphism(arrows[1])).exact);
}

// Every composable pair among small modules, against the definitions.
TEST(Exactness, ClassifierMatchesOracleOnAllPairs) {
  std::size_t pairs = 0;
  for (const std::string r : {"BOOL", "SAT3", "ZMOD4"}) {
    auto mods = small_over(r, 4);
    for (const auto& a : mods)
      for (const auto& b : mods)
        for (const auto& c : mods) {
          auto fs = homs(a, b);
          auto gs = homs(b, c);
          for (const auto& f : fs)
            for (const auto& g : gs) {
              StageReport s = classify_stage(f, g);
              Flags o = oracle_flags(f, g);
              ASSERT_EQ(s.chain, o.chain);
              ASSERT_EQ(s.proper_exact, o.proper);
              ASSERT_EQ(s.semi_exact, o.semi);
              ASSERT_EQ(s.quasi_exact, o.quasi);
              ASSERT_EQ(s.exact, o.exact);
              ++pairs;
            }
        }
  }
  EXPECT_GT(pairs, 1000u);
}

TEST(Uniformity, MatchesOracle) {
  for (const std::string r : {"BOOL", "SAT3", "ZMOD4"}) {
    auto mods = small_over(r, 4);
    for (const auto& a : mods)
      for (const auto& b : mods)
        for (const auto& f : homs(a, b)) {
          EXPECT_EQ(is_k_uniform(f), oracle::k_uniform(f));
          auto img = oracle::image_of(f);
          EXPECT_EQ(is_i_uniform(f), oracle::subtractive_closure(*b, img) == img);
        }
  }
}

TEST(Uniformity, InclusionOf03IsNotIUniform) {
  Workspace ws = catalog_workspace();
  const Morphism& f = ws.morphism("incl03");
  EXPECT_TRUE(f.injective());
  EXPECT_TRUE(is_k_uniform(f));
  EXPECT_FALSE(is_i_uniform(f));
}

TEST(Retracts, FreeModulesSplit) {
  for (const std::string r : {"BOOL", "SAT3", "ZMOD4"}) {
    EndComp e = end_comp(mod(r + "^2"));
    // 0, id and the two coordinate idempotents at least.
    EXPECT_GE(e.comp.size(), 4u) << r;
    EXPECT_TRUE(find_retraction(mod(r), mod(r + "^2")).has_value()) << r;
  }
}
