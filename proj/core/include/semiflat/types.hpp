#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace semiflat {

// Elements of every finite carrier are indices 0..n-1.
using Elem = std::uint32_t;

// Membership mask over a carrier; bit i set iff element i belongs.
using Mask = std::vector<bool>;

enum class Side { left, right };

inline Side opposite(Side s) { return s == Side::left ? Side::right : Side::left; }
inline const char* to_string(Side s) { return s == Side::left ? "left" : "right"; }

// Size bounds for the exponential operations (subset, hom and box
// enumeration). Every enumerating operation takes one of these.
struct Limits {
  std::size_t max_enumeration_size = 16;   // |M| for subsemimodule scans
  std::size_t max_semiring_size = 8;       // |S| for catalog/search
  std::uint64_t max_hom_candidates = 1u << 22;
  std::size_t max_hom_size = 1u << 14;
  std::uint64_t max_box_size = 1u << 20;   // tensor ambient box
  std::size_t max_tensor_size = 4096;      // classes of a tensor quotient
  std::uint64_t max_product_size = 1u << 16;
};

inline const Limits& default_limits() {
  static const Limits limits{};
  return limits;
}

std::vector<Elem> mask_elements(const Mask& m);
std::size_t mask_count(const Mask& m);

}  // namespace semiflat
