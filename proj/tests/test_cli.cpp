#include <gtest/gtest.h>

#include <cctype>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "golden_cases.hpp"
#include "semiflat/workspace.hpp"

using namespace semiflat;

namespace {

struct Result {
  int code;
  std::string out;
  Json json;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Result r{cli::run(args, out, err), out.str(), Json()};
  r.json = Json::parse(r.out, nullptr, false);
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Golden : public ::testing::TestWithParam<golden::Case> {};

}  // namespace

// tests/update_goldens.sh regenerates the stored reports.
TEST_P(Golden, MatchesStoredReport) {
  const golden::Case& c = GetParam();
  Result r = call(c.args);
  EXPECT_EQ(r.code, c.exit_code);
  std::string path = golden::path(c);
  EXPECT_EQ(r.out, slurp(path)) << path;
}

INSTANTIATE_TEST_SUITE_P(Cli, Golden, ::testing::ValuesIn(golden::cases(false)),
                         [](const auto& info) {
                           std::string n = info.param.file.substr(0, info.param.file.rfind('.'));
                           for (char& ch : n)
                             if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
                           return n;
                         });

TEST(Cli, TensorBoolBool) {
  Result r = call({"tensor", "BOOL", "BOOL"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.json["classes"], 2);
  EXPECT_EQ(r.json["tau"]["1"]["1"], "1⊗1");
}

TEST(Cli, ExactSeq1Flags) {
  Result r = call({"exact", "seq1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.json["semi"], true);
  EXPECT_EQ(r.json["quasi"], true);
  EXPECT_EQ(r.json["proper"], false);
  EXPECT_EQ(r.json["exact"], false);
}

TEST(Cli, FlatZmod2AgainstZmod4) {
  Result r = call({"flat", "ZMOD2", "--against", "ZMOD4"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.json["uniformly_flat"], false);
  EXPECT_EQ(r.json["witness"]["U"], "{0,2}");
}

TEST(Cli, ErrorsExitTwo) {
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({}).code, 2);
  Result r = call({"tensor", "BOOL", "NOPE"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.json["error"]["kind"], "UnknownObject");
  EXPECT_EQ(call({"--workspace", "/nonexistent/ws.json", "catalog"}).code, 2);
}

TEST(Cli, ValidateExitCodes) {
  EXPECT_EQ(call({"validate", std::string(SEMIFLAT_DATA_DIR) + "/catalog.json"}).code, 0);
  Json doc = Json::parse(slurp(std::string(SEMIFLAT_DATA_DIR) + "/catalog.json"));
  doc["semirings"][0]["add"] = Json::array({Json::array({"0"})});
  std::string p = ::testing::TempDir() + "semiflat_schema.json";
  std::ofstream(p) << doc.dump();
  Result r = call({"validate", p});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.json["issues"][0]["kind"], "SchemaError");
}

TEST(Cli, BooleanQueriesNeverExitZeroWhenFalse) {
  for (const std::vector<std::string>& args :
       std::vector<std::vector<std::string>>{{"exact", "seq1"},
                                             {"exact", "seq2"},
                                             {"flat", "ZMOD2", "--against", "ZMOD4"},
                                             {"flat", "SAT3"},
                                             {"flat", "SAT3{0,3}", "--against", "SAT3"},
                                             {"inj", "BOOL"},
                                             {"inj", "ZMOD4"}}) {
    Result r = call(args);
    ASSERT_TRUE(r.code == 0 || r.code == 1) << args[0];
    bool verdict = r.json.value("exact", r.json.value("uniformly_flat", r.json.value("uniformly_injective", false)));
    EXPECT_EQ(r.code == 0, verdict) << args[0] << " " << args[1];
  }
}

TEST(Cli, CatalogEmitMatchesShippedFile) {
  EXPECT_EQ(call({"catalog"}).out, slurp(std::string(SEMIFLAT_DATA_DIR) + "/catalog.json"));
}
