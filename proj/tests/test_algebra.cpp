#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "semiflat/catalog.hpp"
#include "semiflat/congruence.hpp"
#include "semiflat/errors.hpp"
#include "semiflat/quotient.hpp"
#include "semiflat/search.hpp"
#include "semiflat/subsemimodule.hpp"
#include "semiflat/suite.hpp"

using namespace semiflat;

namespace {

const ModulePtr& mod(const std::string& name) { return *default_catalog().find_module(name); }
const SemiringPtr& ring(const std::string& name) { return *default_catalog().find_semiring(name); }

}  // namespace

TEST(Catalog, SemiringsAndSizes) {
  const Catalog& c = default_catalog();
  std::vector<std::string> names;
  for (const auto& s : c.semirings) names.push_back(s->name());
  EXPECT_EQ(names, (std::vector<std::string>{"BOOL", "SAT3", "ZMOD2", "ZMOD4"}));
  EXPECT_EQ(mod("SAT3^2")->size(), 16u);
  EXPECT_EQ(mod("BOOL^2")->size(), 4u);
  EXPECT_EQ(mod("ZMOD4{0,2}")->size(), 2u);
  EXPECT_GE(c.modules.size(), 10u);
}

TEST(Catalog, EverythingValidates) {
  for (const auto& s : default_catalog().semirings) EXPECT_TRUE(validate_semiring(s->spec()).empty()) << s->name();
  for (const auto& m : default_catalog().modules) EXPECT_TRUE(validate_semimodule(m->spec()).empty()) << m->name();
}

TEST(Axioms, MutatedMultiplicationIsRejected) {
  SemiringSpec spec = ring("BOOL")->spec();
  spec.mul[1 * 2 + 1] = 0;  // 1 * 1 := 0
  auto v = validate_semiring(spec);
  ASSERT_FALSE(v.empty());
  EXPECT_THROW(build_semiring(spec), AxiomViolation);
}

TEST(Axioms, ShortTableIsMalformed) {
  SemiringSpec spec = ring("SAT3")->spec();
  spec.mul.pop_back();
  EXPECT_THROW(build_semiring(spec), MalformedTable);
}

TEST(Axioms, MutationFixturesBreakTheirAxiom) {
  auto fx = mutation_fixtures();
  EXPECT_GE(fx.size(), 20u);
  for (const auto& f : fx) EXPECT_FALSE(f.axiom.empty()) << f.name;
}

// Random generator pairs against the definitional fixpoint.
TEST(Congruence, ClosureMatchesFixpointOracle) {
  std::mt19937_64 rng(7);
  std::size_t checked = 0;
  for (unsigned i = 0; i <= 5; ++i)
    for (unsigned p = 1; i + p <= 9; ++p) {
      ModulePtr m = cyclic_monoid(i, p);
      for (int trial = 0; trial < 3; ++trial) {
        std::vector<ElemPair> pairs;
        for (int k = 0; k < 2; ++k) pairs.emplace_back(rng() % m->size(), rng() % m->size());
        Congruence c = congruence_closure(*m, pairs, false);
        auto r = oracle::fixpoint_congruence(*m, pairs, false);
        for (Elem a = 0; a < m->size(); ++a)
          for (Elem b = 0; b < m->size(); ++b) ASSERT_EQ(c.same(a, b), r[a][b]) << m->name();
        ++checked;
      }
    }
  for (const auto& m : default_catalog().modules) {
    if (m->size() > 12) continue;
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<ElemPair> pairs{{static_cast<Elem>(rng() % m->size()), static_cast<Elem>(rng() % m->size())}};
      Congruence c = congruence_closure(*m, pairs, true);
      auto r = oracle::fixpoint_congruence(*m, pairs, true);
      for (Elem a = 0; a < m->size(); ++a)
        for (Elem b = 0; b < m->size(); ++b) ASSERT_EQ(c.same(a, b), r[a][b]) << m->name();
      EXPECT_FALSE(congruence_violation(*m, c, true).has_value());
      ++checked;
    }
  }
  EXPECT_GE(checked, 50u);
}

TEST(Congruence, CyclicMonoidShape) {
  ModulePtr m = cyclic_monoid(2, 3);
  ASSERT_EQ(m->size(), 5u);
  // 4 + 1 wraps to 2.
  EXPECT_EQ(m->add(4, 1), 2u);
  EXPECT_EQ(element_order(*m, 1), (ElementOrder{2, 3}));
}

TEST(Subsemimodules, SubtractiveClosureMatchesOracle) {
  for (const auto& m : default_catalog().modules) {
    if (m->size() > 16) continue;
    for (const Subsemimodule& l : enumerate_subsemimodules(m)) {
      std::vector<bool> want = oracle::subtractive_closure(*m, l.members);
      Mask got = subtractive_closure_mask(*m, l.members);
      EXPECT_EQ(std::vector<bool>(got.begin(), got.end()), want) << m->name() << " " << mask_label(*m, l.members);
      EXPECT_TRUE(is_subsemimodule(*m, got));
    }
  }
}

TEST(Subsemimodules, Sat3Lattice) {
  // {0}, {0,3}, {0,2,3}, SAT3.
  EXPECT_EQ(enumerate_subsemimodules(mod("SAT3")).size(), 4u);
  EXPECT_TRUE(is_subtractive(*mod("SAT3"), enumerate_subsemimodules(mod("SAT3")).front().members));
  Mask m03(4, false);
  m03[0] = m03[3] = true;
  EXPECT_FALSE(is_subtractive(*mod("SAT3"), m03));
}

TEST(Quotients, ReflectionOfSat3IsTrivial) {
  Quotient q = cancellative_reflection(mod("SAT3"));
  EXPECT_EQ(q.module->size(), 1u);
  EXPECT_TRUE(is_cancellative(*q.module));
  EXPECT_TRUE(is_cancellative(*mod("ZMOD4")));
  EXPECT_FALSE(is_cancellative(*mod("BOOL")));
}

TEST(Search, MonoidCountsBySize) {
  // Commutative monoids up to isomorphism: 1, 2, 5, 19 on 1..4 elements.
  EXPECT_EQ(enumerate_monoids(1).size(), 1u);
  EXPECT_EQ(enumerate_monoids(2).size(), 2u);
  EXPECT_EQ(enumerate_monoids(3).size(), 5u);
  EXPECT_EQ(enumerate_monoids(4).size(), 19u);
}
