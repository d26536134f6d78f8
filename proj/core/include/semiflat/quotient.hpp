#pragma once

#include <string>
#include <vector>

#include "semiflat/congruence.hpp"
#include "semiflat/subsemimodule.hpp"

namespace semiflat {

struct Quotient {
  ModulePtr module;
  Morphism projection;  // surjective
  Congruence congruence;
};

// Throws NotACongruence naming the first compatibility failure. Quotient
// elements are labelled "[r]" with r the least member of the class.
Quotient quotient_by_congruence(const ModulePtr& m, const Congruence& c, std::string name = "");

// m1 ~ m2 iff m1 + l1 = m2 + l2 for some l1, l2 in L.
Congruence congruence_mod(const Semimodule& m, const Mask& l);
// m1 ~ m2 iff m1 + l1 + x = m2 + l2 + x for some l1, l2 in L, x in M.
Congruence cancellative_congruence_mod(const Semimodule& m, const Mask& l);

// M/L with its uniform projection; throws NotASubsemimodule.
Quotient quotient_by_sub(const ModulePtr& m, const Mask& l, std::string name = "");
// M by the cancellative congruence of L.
Quotient quotient_cancellative(const ModulePtr& m, const Mask& l, std::string name = "");
// c(M) with the canonical surjection.
Quotient cancellative_reflection(const ModulePtr& m, std::string name = "");

bool is_cancellative(const Semimodule& m);

struct ElementOrder {
  std::uint32_t index = 0;
  std::uint32_t period = 1;
  bool operator==(const ElementOrder& o) const { return index == o.index && period == o.period; }
};
// Least i >= 0, p >= 1 with (i+p)x = ix under repeated addition.
ElementOrder element_order(const Semimodule& m, Elem x);
std::vector<ElementOrder> element_orders(const Semimodule& m);

}  // namespace semiflat
