#pragma once

#include <optional>
#include <vector>

#include "semiflat/morphism.hpp"

namespace semiflat {

// An isomorphism a -> b as an index map, or nothing. With actions, each
// action of a must be carried onto its matched action of b.
std::optional<std::vector<Elem>> find_isomorphism(const Semimodule& a, const Semimodule& b,
                                                  bool with_actions = true);

inline bool isomorphic(const Semimodule& a, const Semimodule& b, bool with_actions = true) {
  return find_isomorphism(a, b, with_actions).has_value();
}

// Isomorphism invariant per element: additive order, number of elements it
// absorbs, and so on. Used to prune relabelings.
std::vector<std::uint64_t> element_signatures(const Semimodule& m);

// Lexicographically least encoding of (zero-first add table, action tables)
// over relabelings that keep signature order. Equal codes iff isomorphic.
std::vector<Elem> canonical_form(const Semimodule& m);

}  // namespace semiflat
