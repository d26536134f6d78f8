#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "semiflat/catalog.hpp"
#include "semiflat/congruence.hpp"
#include "semiflat/hom.hpp"
#include "semiflat/homology.hpp"
#include "semiflat/isomorphism.hpp"
#include "semiflat/quotient.hpp"
#include "semiflat/search.hpp"
#include "semiflat/subsemimodule.hpp"
#include "semiflat/tensor.hpp"

using namespace semiflat;

namespace {

const SemiringPtr& ring(const std::string& name) { return *default_catalog().find_semiring(name); }

std::vector<ModulePtr> universe(const std::string& r, std::size_t n) { return enumerate_semimodules(ring(r), n); }

}  // namespace

class OverRing : public ::testing::TestWithParam<std::string> {};

TEST_P(OverRing, TensorIsSymmetric) {
  auto mods = universe(GetParam(), 3);
  for (const auto& m : mods)
    for (const auto& n : mods) {
      auto mn = tensor_product(m, n).module;
      auto nm = tensor_product(n, m).module;
      EXPECT_TRUE(isomorphic(*mn, *nm, false)) << m->name() << ", " << n->name();
    }
}

TEST_P(OverRing, TensorIsDeterministic) {
  auto mods = universe(GetParam(), 3);
  for (const auto& m : mods) {
    auto a = tensor_product(m, m);
    auto b = tensor_product(m, m);
    EXPECT_EQ(a.module->labels(), b.module->labels());
    EXPECT_EQ(a.tau, b.tau);
  }
}

// Ker(M -> M/L) is the subtractive closure of L, so the quotient sequence
// is proper-exact exactly when L is subtractive.
TEST_P(OverRing, QuotientKernelIsSubtractiveClosure) {
  for (const auto& m : universe(GetParam(), 4))
    for (const Subsemimodule& l : enumerate_subsemimodules(m)) {
      Embedded e = as_module(m, l.members);
      Quotient q = quotient_by_sub(m, l.members);
      Mask ker = kernel_mask(q.projection);
      EXPECT_EQ(std::vector<bool>(ker.begin(), ker.end()), oracle::subtractive_closure(*m, l.members));
      StageReport s = classify_stage(e.inclusion, q.projection);
      EXPECT_TRUE(s.semi_exact);
      EXPECT_EQ(s.proper_exact, is_subtractive(*m, l.members));
    }
}

TEST_P(OverRing, HomsAreMorphisms) {
  auto mods = universe(GetParam(), 3);
  for (const auto& a : mods)
    for (const auto& b : mods)
      for (const auto& map : enumerate_homs(*a, *b))
        EXPECT_TRUE(validate_morphism(*a, *b, map, Linearity::linear).empty());
}

TEST_P(OverRing, RandomCongruencesAreLeastCongruences) {
  std::mt19937_64 rng(11);
  for (const auto& m : universe(GetParam(), 4)) {
    std::vector<ElemPair> pairs{{static_cast<Elem>(rng() % m->size()), static_cast<Elem>(rng() % m->size())}};
    Congruence c = congruence_closure(*m, pairs, true);
    EXPECT_FALSE(congruence_violation(*m, c, true).has_value());
    for (auto [a, b] : pairs) EXPECT_TRUE(c.same(a, b));
    // Any congruence containing the pairs is coarser.
    for (Elem x = 0; x < m->size(); ++x) {
      Congruence d = congruence_closure(*m, {pairs[0], {x, m->zero()}}, true);
      EXPECT_TRUE(c.refines(d));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Rings, OverRing, ::testing::Values("BOOL", "SAT3", "ZMOD2", "ZMOD4"));
