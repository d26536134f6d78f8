#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semiflat/quotient.hpp"

namespace semiflat {

struct TensorOptions {
  // Every nonzero element is a generator (the unoptimized presentation).
  bool dense = false;
  // false drops the zero identifications: m(x)0 and 0(x)n stay generators
  // of their own. Implies dense with 0 included.
  bool zero_relations = true;
  // Actions used for balancing: a right action of S on M and a left action
  // on N. Chosen automatically when unset.
  std::optional<std::size_t> left_action, right_action;
};

// M (x) N as a quotient of a finite box monoid. The box is a direct sum of
// cyclic monoids C(i, p), one per generator pair (g, h) in G_M x G_N. Its
// elements are mixed-radix codes with digit j in [0, i_j + p_j).
struct TensorPresentation {
  ModulePtr left, right;
  std::size_t left_action = 0, right_action = 0;  // balancing actions (if any)
  bool balanced_over_ring = false;
  std::vector<Elem> gens_left, gens_right;
  // expr_left[m][a] = multiplicity of gens_left[a] in the fixed expansion of m.
  std::vector<std::vector<std::uint32_t>> expr_left, expr_right;
  std::vector<std::pair<Elem, Elem>> pairs;  // box coordinates
  std::vector<ElementOrder> bounds;          // per coordinate
  std::uint64_t box_size = 1;
  std::size_t relation_count = 0;  // nontrivial generating pairs
  ModulePtr module;
  // Least box code of each class, as digit vectors.
  std::vector<std::vector<std::uint32_t>> normal_forms;
  std::vector<Elem> tau;  // tau[m * |N| + n]

  Elem tau_at(Elem m, Elem n) const { return tau[m * right->size() + n]; }
  std::size_t coordinate(std::size_t a, std::size_t b) const { return a * gens_right.size() + b; }
};

// Throws SideMismatch when the modules cannot be balanced over one ring,
// BoxBoundExceeded when the box or the quotient is too large.
TensorPresentation tensor_product(const ModulePtr& m, const ModulePtr& n,
                                  const TensorOptions& opt = {},
                                  const Limits& limits = default_limits());

// c * x by repeated addition.
Elem multiple(const Semimodule& m, Elem x, std::uint64_t c);

// A map M x N -> G for a commutative monoid G, table[m * |N| + n].
struct BalancedMap {
  ModulePtr target;
  std::vector<Elem> table;
};

// First failure among: additive_left (m1, m2, n), additive_right (m, n1, n2),
// balanced (m, s, n), zero_left (n), zero_right (m).
std::optional<Violation> balanced_violation(const TensorPresentation& p, const BalancedMap& b);

BalancedMap tau_map(const TensorPresentation& p);

// The unique additive gamma with gamma o tau = beta, read off generator
// pairs and re-verified by a full scan. Throws NotBalanced or
// NotZeroPreserving with the witness.
Morphism factor_balanced(const TensorPresentation& p, const BalancedMap& beta);

// Every zero-preserving balanced map into g: all assignments of generator
// pairs, expanded bilinearly and kept when balanced.
std::vector<BalancedMap> enumerate_balanced_maps(const TensorPresentation& p, const ModulePtr& g,
                                                 const Limits& limits = default_limits());

// f (x) g: M (x) N -> M' (x) N', on generators (a, b) |-> f(a) (x) g(b).
// Throws AxiomViolation when the induced map is not additive or does not
// commute with tau (which would mean f or g is not linear).
Morphism tensor_morphisms(const Morphism& f, const Morphism& g, const TensorPresentation& src,
                          const TensorPresentation& dst);

// c(M (x) N) with tau~ = c o tau.
struct TakahashiTensor {
  TensorPresentation tensor;
  Quotient reflection;
  std::vector<Elem> tau;  // |M| * |N|
};
TakahashiTensor takahashi_tensor(const ModulePtr& m, const ModulePtr& n,
                                 const TensorOptions& opt = {},
                                 const Limits& limits = default_limits());

// Universal property against cancellative targets: every balanced map
// into each target has exactly one additive gamma: c(M (x) N) -> G with
// gamma o tau~ = beta, counted by enumerating all additive maps.
struct UniversalCheck {
  std::size_t maps_checked = 0;
  std::size_t failures = 0;
  std::string first_failure;
};
UniversalCheck certify_cancellative_universal(const TakahashiTensor& t,
                                              const std::vector<ModulePtr>& targets,
                                              const Limits& limits = default_limits());

}  // namespace semiflat
