#include "semiflat/types.hpp"

namespace semiflat {

std::vector<Elem> mask_elements(const Mask& m) {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i]) out.push_back(static_cast<Elem>(i));
  return out;
}

std::size_t mask_count(const Mask& m) {
  std::size_t c = 0;
  for (bool b : m) c += b ? 1 : 0;
  return c;
}

}  // namespace semiflat
