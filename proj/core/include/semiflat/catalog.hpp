#pragma once

#include <string>
#include <vector>

#include "semiflat/congruence.hpp"
#include "semiflat/semimodule.hpp"

namespace semiflat {

// ({0,1}, max, min).
SemiringPtr boolean_semiring();
// {0..k} with addition and multiplication saturating at k.
SemiringPtr saturating_semiring(unsigned k);
// Integers mod n.
SemiringPtr zmod_semiring(unsigned n);
// Componentwise product, elements labelled "(a,b)".
SemiringPtr product_semiring(const SemiringPtr& a, const SemiringPtr& b);
// Parses "BOOL", "SATk", "ZMODn" and "AxB" products; throws UnknownObject.
SemiringPtr semiring_by_name(const std::string& name);

// S acting on itself by multiplication.
ModulePtr regular_module(const SemiringPtr& s, Side side = Side::right, std::string name = "");
// S^n with componentwise operations; S^0 is the trivial module.
ModulePtr free_module(const SemiringPtr& s, unsigned n, Side side = Side::right,
                      std::string name = "");
ModulePtr trivial_module(const SemiringPtr& s, Side side = Side::right, std::string name = "");
// One-element monoid without actions.
ModulePtr trivial_monoid(std::string name = "TRIV");

// Every congruence of M (scalar-aware), identity first, then in discovery
// order from joins of principal congruences. Throws SizeBoundExceeded when
// more than `max_count` exist.
std::vector<Congruence> enumerate_congruences(const Semimodule& m, std::size_t max_count = 1u << 14);

// TRIV, S, S^2, proper subsemimodules of S and S^2, quotients of S by its
// congruences and of S^2 by its subsemimodules. Isomorphic duplicates are
// dropped (first occurrence kept), and so is anything above max_size other
// than S and S^2.
std::vector<ModulePtr> catalog_modules(const SemiringPtr& s, std::size_t max_size = 4,
                                       Side side = Side::right);

struct Catalog {
  std::vector<SemiringPtr> semirings;
  std::vector<ModulePtr> modules;

  std::vector<ModulePtr> modules_over(const Semiring& s) const;
  const ModulePtr* find_module(const std::string& name) const;
  const SemiringPtr* find_semiring(const std::string& name) const;
};

Catalog build_catalog(const std::vector<SemiringPtr>& semirings, std::size_t max_size = 4);
// BOOL, SAT3, ZMOD2 and ZMOD4 with their catalog modules.
const Catalog& default_catalog();

}  // namespace semiflat
