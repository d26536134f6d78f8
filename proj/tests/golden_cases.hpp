#pragma once

// Fixture list for the byte-for-byte report comparisons, read from
// golden/cases.txt.

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace golden {

struct Case {
  std::string file;
  int exit_code = 0;
  std::vector<std::string> args;
};

// Readable test parameter names in gtest output.
inline void PrintTo(const Case& c, std::ostream* os) { *os << c.file; }

inline std::string dir() { return SEMIFLAT_GOLDEN_DIR; }
inline std::string path(const Case& c) { return dir() + "/" + c.file; }

// The suite case runs the whole property suite; with_suite = false drops it.
inline std::vector<Case> cases(bool with_suite) {
  std::ifstream in(dir() + "/cases.txt");
  if (!in) throw std::runtime_error("missing " + dir() + "/cases.txt");
  std::vector<Case> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    Case c;
    ls >> c.file >> c.exit_code;
    for (std::string a; ls >> a;) c.args.push_back(a);
    if (with_suite || c.args.front() != "suite") out.push_back(c);
  }
  return out;
}

}  // namespace golden
