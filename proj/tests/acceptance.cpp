// Runs the twelve acceptance criteria and prints one line per criterion.
// Exit status 0 when every criterion holds.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <regex>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "golden_cases.hpp"
#include "semiflat/catalog.hpp"
#include "semiflat/suite.hpp"

using namespace semiflat;

namespace {

struct Timed {
  SuiteRow row;
  double seconds = 0;
};

Timed timed(const std::function<SuiteRow(const SuiteOptions&)>& f) {
  auto t0 = std::chrono::steady_clock::now();
  Timed t{f(SuiteOptions{}), 0};
  t.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return t;
}

// The leading count of the first note containing `phrase`, or 0.
std::size_t note_count(const SuiteRow& row, const std::string& phrase) {
  for (const auto& n : row.notes) {
    if (n.find(phrase) == std::string::npos) continue;
    std::smatch m;
    if (std::regex_search(n, m, std::regex("^(\\d+)"))) return std::stoul(m[1]);
  }
  return 0;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int failures = 0;

void line(int id, bool ok, const std::string& what) {
  std::printf("%s criterion %2d: %s\n", ok ? "PASS" : "FAIL", id, what.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

std::string summary(const Timed& t) {
  std::string s = std::to_string(t.row.applicable) + "/" + std::to_string(t.row.instances) + " instances, " +
                  fmt("%.2f s", t.seconds);
  if (!t.row.failures.empty()) s += "; first failure: " + t.row.failures.front();
  return s;
}

}  // namespace

int main() {
  double total = 0;
  auto run = [&](auto f) {
    Timed t = timed(f);
    total += t.seconds;
    return t;
  };

  Timed r1 = run(suite_axioms);
  std::size_t fixtures = mutation_fixtures().size();
  line(1, r1.row.passed && fixtures >= 20 && r1.seconds < 1.0,
       "axiom engine, " + std::to_string(fixtures) + " mutation fixtures, " + summary(r1));

  Timed r2 = run(suite_congruence);
  std::size_t monoids = note_count(r2.row, "corpus monoids");
  line(2, r2.row.passed && monoids >= 50 && r2.seconds < 30.0,
       "congruence oracle on " + std::to_string(monoids) + " corpus monoids, " + summary(r2));

  Timed r3 = run(suite_unit_law);
  std::size_t mods = default_catalog().modules.size();
  line(3, r3.row.passed && mods >= 10 && r3.row.applicable >= mods,
       "unit law on " + std::to_string(mods) + " catalog modules, " + summary(r3));

  Timed r4 = run(suite_cancellative_tensor);
  line(4, r4.row.passed && r4.row.applicable >= 5, "cancellative tensor universality, " + summary(r4));

  Timed r5 = run(suite_adjunction);
  std::size_t non_free = note_count(r5.row, "not free");
  line(5, r5.row.passed && r5.row.applicable >= 5 && non_free >= 1,
       "adjunction, " + std::to_string(non_free) + " triples with a non-free module, " + summary(r5));

  Timed r6 = run(suite_exactness);
  line(6, r6.row.passed && r6.seconds < 120.0, "exactness suite, " + summary(r6));

  Timed r7 = run(suite_flat_positive);
  line(7, r7.row.passed, "flatness positives, " + summary(r7));

  Timed r8 = run(suite_flat_negative);
  line(8, r8.row.passed, "flatness negative ZMOD2 against ZMOD4, " + summary(r8));

  Timed r9 = run(suite_lattice);
  Timed r10 = run(suite_nu);
  Timed r11 = run(suite_limits);
  for (auto f : {suite_fg_reduction, suite_middle_transfer, suite_flat_injective, suite_colimit_flatness,
                 suite_ideal_criterion})
    run(f);
  line(9, r9.row.passed && total < 300.0, "implication lattice, " + summary(r9) + fmt(", whole suite %.1f s", total));

  std::size_t outside = note_count(r10.row, "outside the hypotheses");
  line(10, r10.row.passed && outside >= 1,
       "nu maps, " + std::to_string(outside) + " instances outside the hypotheses, " + summary(r10));
  line(11, r11.row.passed, "limits suite, " + summary(r11));

  // Every golden report byte-for-byte, with its exit code.
  std::size_t matched = 0, cases = 0;
  std::string first;
  for (const auto& c : golden::cases(true)) {
    ++cases;
    std::ostringstream out, err;
    int code = cli::run(c.args, out, err);
    bool ok = code == c.exit_code && out.str() == slurp(golden::path(c));
    if (ok)
      ++matched;
    else if (first.empty())
      first = c.file + " (exit " + std::to_string(code) + ")";
  }
  line(12, matched == cases,
       "golden reports " + std::to_string(matched) + "/" + std::to_string(cases) +
           (first.empty() ? "" : "; first mismatch: " + first));
  return failures == 0 ? 0 : 1;
}
