#pragma once

#include <string>
#include <vector>

#include "semiflat/morphism.hpp"

namespace semiflat {

struct Subsemimodule {
  ModulePtr parent;
  Mask members;

  std::size_t size() const { return mask_count(members); }
  bool contains(Elem x) const { return members[x]; }
  std::vector<Elem> elements() const { return mask_elements(members); }
  bool operator==(const Subsemimodule& o) const { return members == o.members; }
};

// Contains zero and is closed under addition and every action.
bool is_subsemimodule(const Semimodule& m, const Mask& mask);
// Throws NotASubsemimodule.
Subsemimodule make_subsemimodule(const ModulePtr& m, Mask mask);

// Least subsemimodule containing `seed`; with scalar_aware false, the least
// additive submonoid.
Mask generated_mask(const Semimodule& m, const std::vector<Elem>& seed, bool scalar_aware = true);
Subsemimodule generated_subsemimodule(const ModulePtr& m, const std::vector<Elem>& seed);

// All subsemimodules, sorted by size and then by member list. Throws
// SizeBoundExceeded above limits.max_enumeration_size.
std::vector<Subsemimodule> enumerate_subsemimodules(const ModulePtr& m,
                                                    const Limits& limits = default_limits());

// Least fixed point of Y -> {n | n + y1 = y2 for some y1, y2 in Y}.
Mask subtractive_closure_mask(const Semimodule& m, const Mask& y);
// Throws NotASubsemimodule when y is not one.
Subsemimodule subtractive_closure(const ModulePtr& m, const Mask& y);
bool is_subtractive(const Semimodule& m, const Mask& y);

// Greedy inclusion-minimal generating sets: scan nonzero elements in index
// order and drop each one the rest still generates.
std::vector<Elem> minimal_generating_set(const Semimodule& m);
std::vector<Elem> minimal_additive_generating_set(const Semimodule& m);

// The subsemimodule as a module of its own (elements renumbered in parent
// order, parent labels kept) with its inclusion.
struct Embedded {
  ModulePtr module;
  Morphism inclusion;
};
Embedded as_module(const ModulePtr& parent, const Mask& mask, std::string name = "");

std::string mask_label(const Semimodule& m, const Mask& mask);

}  // namespace semiflat
