#include "semiflat/errors.hpp"

#include <sstream>

namespace semiflat {

std::string describe(const std::vector<Violation>& violations) {
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << violations[i].axiom << " at (";
    for (std::size_t j = 0; j < violations[i].witness.size(); ++j) {
      if (j) os << ",";
      os << violations[i].witness[j];
    }
    os << ")";
  }
  return os.str();
}

}  // namespace semiflat
