#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "semiflat/errors.hpp"
#include "semiflat/workspace.hpp"

using namespace semiflat;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::string kCatalog = std::string(SEMIFLAT_DATA_DIR) + "/catalog.json";

}  // namespace

TEST(Workspace, ShippedCatalogRoundTrips) {
  std::string text = slurp(kCatalog);
  ASSERT_FALSE(text.empty());
  Workspace ws = load_workspace(kCatalog);
  EXPECT_EQ(emit_workspace(ws), text);
  EXPECT_EQ(emit_workspace(catalog_workspace()), text);
  std::vector<std::string> rings;
  for (const auto& s : ws.semirings) rings.push_back(s->name());
  EXPECT_EQ(rings, (std::vector<std::string>{"BOOL", "SAT3", "ZMOD2", "ZMOD4"}));
}

TEST(Workspace, NonSquareTableIsASchemaError) {
  Json doc = Json::parse(slurp(kCatalog));
  doc["semirings"][1]["add"].erase(0);
  auto issues = check_workspace(doc);
  ASSERT_FALSE(issues.empty());
  EXPECT_EQ(issues.front().kind, "SchemaError");
  EXPECT_EQ(issues.front().pointer.rfind("/semirings/1/add", 0), 0u) << issues.front().pointer;
  EXPECT_THROW(parse_workspace(doc), SchemaError);
}

TEST(Workspace, UnknownSemiringIsNamed) {
  Json doc = Json::parse(slurp(kCatalog));
  doc["semimodules"][1]["semiring"] = "NOPE";
  auto issues = check_workspace(doc);
  ASSERT_FALSE(issues.empty());
  EXPECT_NE(issues.front().message.find("NOPE"), std::string::npos) << issues.front().message;
}

TEST(Workspace, BrokenAxiomIsReportedAfterSchema) {
  Json doc = Json::parse(slurp(kCatalog));
  auto& mul = doc["semirings"][0]["mul"];
  mul[1][1] = mul[0][0];
  auto issues = check_workspace(doc);
  ASSERT_FALSE(issues.empty());
  EXPECT_EQ(issues.front().kind, "AxiomViolation");
  EXPECT_THROW(parse_workspace(doc), AxiomViolation);
}

TEST(Workspace, UnknownNamesThrow) {
  Workspace ws = catalog_workspace();
  EXPECT_THROW(ws.module("NOPE"), UnknownObject);
  EXPECT_THROW(ws.morphism("NOPE"), UnknownObject);
  EXPECT_THROW(ws.system("NOPE"), UnknownObject);
}
