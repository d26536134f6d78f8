#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semiflat/flatness.hpp"

namespace semiflat {

// Commutative monoids on 0..n-1 with neutral element 0, one per
// isomorphism class, ordered by canonical form.
std::vector<ModulePtr> enumerate_monoids(std::size_t n, const Limits& limits = default_limits());

// Every action of `s` on `monoid` satisfying the semimodule axioms, one per
// isomorphism class of the resulting module.
std::vector<ModulePtr> enumerate_actions(const ModulePtr& monoid, const SemiringPtr& s,
                                         Side side = Side::right);

// S-semimodules of size <= max_size up to isomorphism, by size and then code.
// Names are "<S>.M<size>.<k>".
std::vector<ModulePtr> enumerate_semimodules(const SemiringPtr& s, std::size_t max_size,
                                             Side side = Side::right,
                                             const Limits& limits = default_limits());

struct SearchConfig {
  std::vector<SemiringPtr> semirings;
  std::size_t max_size = 4;
  double budget_seconds = 300.0;
  unsigned certificate_rank = 3;  // largest free rank tried for certificates
  Limits limits = default_limits();
};

struct Classification {
  ModulePtr module;
  std::string semiring;
  bool mono_flat = true;
  bool in_is = true;
  bool uniformly_flat = true;  // relative to the enumerated universe
  bool certified_flat = false;
  std::optional<unsigned> certificate_rank;
  std::string uniform_witness;  // "<M>: <U>"
  std::string mono_witness;
  std::string is_witness;
  std::vector<std::string> skipped;  // universe members over the bounds
};

struct LatticeViolation {
  std::string rule;
  std::string subject;
  std::string against;  // empty for universe-level rules
};

struct SearchReport {
  bool complete = true;  // false when the budget ran out
  double elapsed_seconds = 0;
  std::size_t pairs_evaluated = 0;
  std::vector<Classification> records;
  // Uniformly flat relative to the universe, no certificate within the
  // rank bound. Inconclusive by construction.
  std::vector<std::string> candidates;
  std::vector<LatticeViolation> violations;
};

// Classifies everything enumerate_semimodules produces for each configured
// semiring, stopping early (complete = false) once the budget is spent.
SearchReport search_counterexamples(const SearchConfig& config);

// Throws TimeBudgetExceeded when the report is partial.
void require_complete(const SearchReport& report);

}  // namespace semiflat
