#include <gtest/gtest.h>

#include "semiflat/catalog.hpp"
#include "semiflat/errors.hpp"
#include "semiflat/hom.hpp"
#include "semiflat/isomorphism.hpp"
#include "semiflat/limits.hpp"
#include "semiflat/subsemimodule.hpp"
#include "semiflat/workspace.hpp"

using namespace semiflat;

namespace {

const ModulePtr& mod(const std::string& name) { return *default_catalog().find_module(name); }

}  // namespace

TEST(Limits, ProductOfBoolIsBoolSquared) {
  ProductObject p = product({mod("BOOL"), mod("BOOL")});
  EXPECT_TRUE(isomorphic(*p.module, *mod("BOOL^2")));
  EXPECT_EQ(p.components(p.element({1, 0})), (std::vector<Elem>{1, 0}));
  Morphism d = pairing(p, {identity(mod("BOOL")), identity(mod("BOOL"))});
  EXPECT_TRUE(same_map(compose(p.projections[0], d), identity(mod("BOOL"))));
}

TEST(Limits, EqualizerOfIdentityAndZero) {
  const ModulePtr& m = mod("ZMOD4");
  Embedded e = equalizer(identity(m), zero_morphism(m, m));
  EXPECT_EQ(e.module->size(), 1u);
  Quotient q = coequalizer(identity(m), zero_morphism(m, m));
  EXPECT_EQ(q.module->size(), 1u);
}

TEST(Limits, PullbackOverTrivialIsProduct) {
  const ModulePtr& s = mod("SAT3");
  const ModulePtr& t = mod("SAT3.TRIV");
  Pullback p = pullback(zero_morphism(s, t), zero_morphism(s, t));
  EXPECT_EQ(p.module->size(), 16u);
}

TEST(Limits, WorkspaceChainAndTower) {
  Workspace ws = catalog_workspace();
  DirectedSystem chain = ws.directed(ws.system("bool_chain"));
  Colimit c = directed_colimit(chain);
  EXPECT_TRUE(c.matches_shortcut);
  EXPECT_TRUE(isomorphic(*c.module, *mod("BOOL^2")));
  InverseLimit l = inverse_limit(ws.inverse(ws.system("bool_tower")));
  EXPECT_TRUE(isomorphic(*l.module, *mod("BOOL^2")));
}

TEST(Limits, ColimitOfSubsemimodulesIsTheModule) {
  for (const auto& m : default_catalog().modules) {
    if (m->size() > 4) continue;
    DirectedSystem sys = subsemimodule_system(m);
    Colimit c = directed_colimit(sys);
    EXPECT_TRUE(c.matches_shortcut) << m->name();
    EXPECT_TRUE(isomorphic(*c.module, *m)) << m->name();
    PsiMap p = psi_x(mod(m->ring()->name()), sys, c);
    EXPECT_TRUE(p.injective) << m->name();
  }
}

TEST(Limits, NotDirectedIsRejected) {
  const ModulePtr& b = mod("BOOL");
  EXPECT_THROW(DirectedSystem::build({b, b}, {}, {}), NotDirected);
}

TEST(Limits, NonIntertwiningLevelMapsThrow) {
  const ModulePtr& b = mod("BOOL");
  DirectedSystem sys = DirectedSystem::build({b, b}, {{0, 1}}, {identity(b)});
  Colimit c = directed_colimit(sys);
  EXPECT_THROW(colimit_morphism(sys, c, sys, c, {identity(b), zero_morphism(b, b)}), NotIntertwining);
}
