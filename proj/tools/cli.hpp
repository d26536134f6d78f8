#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace semiflat::cli {

enum Exit : int { kOk = 0, kFalse = 1, kError = 2 };

// One command line without the program name. The report goes to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace semiflat::cli
