#include <gtest/gtest.h>

#include "oracles.hpp"
#include "semiflat/catalog.hpp"
#include "semiflat/errors.hpp"
#include "semiflat/isomorphism.hpp"
#include "semiflat/limits.hpp"
#include "semiflat/tensor.hpp"
#include "semiflat/tensor_iso.hpp"

using namespace semiflat;

namespace {

const ModulePtr& mod(const std::string& name) { return *default_catalog().find_module(name); }

bool same_ring(const Semimodule& a, const Semimodule& b) {
  return a.ring() && b.ring() && a.ring()->name() == b.ring()->name();
}

// The library tensor and the dense oracle agree on the class count and on
// which pure tensors coincide. False when the oracle box is too large.
bool expect_matches_oracle(const ModulePtr& m, const ModulePtr& n) {
  oracle::OracleTensor o;
  try {
    o = oracle::dense_tensor(*m, *n, 1u << 16);
  } catch (const std::length_error&) {
    return false;
  }
  for (bool dense : {false, true}) {
    TensorOptions opt;
    opt.dense = dense;
    TensorPresentation p = tensor_product(m, n, opt);
    EXPECT_EQ(p.module->size(), o.classes) << m->name() << " (x) " << n->name() << (dense ? " dense" : "");
    const std::size_t r = n->size();
    for (Elem a = 0; a < m->size(); ++a)
      for (Elem b = 0; b < r; ++b)
        for (Elem a2 = 0; a2 < m->size(); ++a2)
          for (Elem b2 = 0; b2 < r; ++b2)
            if ((p.tau_at(a, b) == p.tau_at(a2, b2)) != (o.tau_at(a, b, r) == o.tau_at(a2, b2, r))) {
              ADD_FAILURE() << m->name() << " (x) " << n->name() << ": pure tensors disagree";
              return true;
            }
  }
  return true;
}

}  // namespace

TEST(Tensor, BoolBoolHasTwoClasses) {
  TensorPresentation p = tensor_product(mod("BOOL"), mod("BOOL"));
  EXPECT_EQ(p.module->size(), 2u);
  EXPECT_EQ(p.module->label(p.tau_at(1, 1)), "1⊗1");
  EXPECT_EQ(p.tau_at(0, 1), p.module->zero());
}

TEST(Tensor, CatalogPairsMatchDenseOracle) {
  std::size_t checked = 0;
  for (const auto& m : default_catalog().modules)
    for (const auto& n : default_catalog().modules) {
      if (!same_ring(*m, *n) || m->size() * n->size() > 16) continue;
      if (expect_matches_oracle(m, n)) ++checked;
    }
  EXPECT_GE(checked, 20u);
}

TEST(Tensor, ZeroRelationsOffKeepsZeroPairs) {
  TensorOptions opt;
  opt.zero_relations = false;
  TensorPresentation p = tensor_product(mod("BOOL"), mod("BOOL"), opt);
  EXPECT_EQ(p.module->size(), 3u);
}

TEST(Tensor, SatTimesSatIsSat) {
  TensorPresentation p = tensor_product(mod("SAT3"), mod("SAT3"));
  EXPECT_TRUE(isomorphic(*p.module, *mod("SAT3"), false));
}

TEST(Tensor, TrivialFactorGivesTrivialTensor) {
  for (const std::string s : {"BOOL", "SAT3", "ZMOD2", "ZMOD4"})
    EXPECT_EQ(tensor_product(mod(s + ".TRIV"), mod(s)).module->size(), 1u);
}

TEST(Tensor, MismatchedRingsThrow) {
  EXPECT_THROW(tensor_product(mod("BOOL"), mod("SAT3")), SideMismatch);
}

TEST(Tensor, UnitLawOnEveryCatalogModule) {
  for (const auto& m : default_catalog().modules) {
    UnitIso u = unit_iso(m);
    EXPECT_TRUE(u.iso.verified) << m->name() << ": " << u.iso.failure;
    EXPECT_TRUE(u.iso.forward.injective() && u.iso.forward.surjective()) << m->name();
    UnitIso l = unit_iso_left(m);
    EXPECT_TRUE(l.iso.verified) << m->name() << ": " << l.iso.failure;
  }
}

TEST(Tensor, TakahashiOfZmod4IsItself) {
  TakahashiTensor t = takahashi_tensor(mod("ZMOD4"), mod("ZMOD4"));
  EXPECT_EQ(t.reflection.module->size(), 4u);
  // SAT3 has no nonzero cancellative quotient.
  EXPECT_EQ(takahashi_tensor(mod("SAT3"), mod("SAT3")).reflection.module->size(), 1u);
}

TEST(Tensor, DistributesOverSums) {
  for (const std::string s : {"BOOL", "ZMOD2"}) {
    ModulePtr m = mod(s);
    ProductObject sum = coproduct({m, m});
    EXPECT_TRUE(isomorphic(*tensor_product(m, sum.module).module,
                           *coproduct({tensor_product(m, m).module, tensor_product(m, m).module}).module, false));
  }
}
