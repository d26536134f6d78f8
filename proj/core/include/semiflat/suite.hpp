#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semiflat/semimodule.hpp"

namespace semiflat {

// One line of the property suite. Numbered rows (1..11) are the acceptance
// criteria the library can run on its own; the CLI adds the exit-code row.
// Rows with id 0 are supplementary checks.
struct SuiteRow {
  int id = 0;
  std::string tag;    // short name, e.g. "unit-law"
  std::string title;  // one-line description
  bool passed = false;
  std::size_t instances = 0;   // everything evaluated
  std::size_t applicable = 0;  // instances whose hypotheses held
  std::vector<std::string> failures;  // first few
  std::vector<std::string> notes;
};

struct SuiteOptions {
  Limits limits = default_limits();
  std::uint64_t seed = 0;
};

struct SuiteReport {
  std::vector<SuiteRow> rows;
  bool passed() const;
  // Numbered rows only.
  bool criteria_passed() const;
  const SuiteRow* row(int id) const;
};

SuiteRow suite_axioms(const SuiteOptions& opt);
SuiteRow suite_congruence(const SuiteOptions& opt);
SuiteRow suite_unit_law(const SuiteOptions& opt);
SuiteRow suite_cancellative_tensor(const SuiteOptions& opt);
SuiteRow suite_adjunction(const SuiteOptions& opt);
SuiteRow suite_exactness(const SuiteOptions& opt);
SuiteRow suite_flat_positive(const SuiteOptions& opt);
SuiteRow suite_flat_negative(const SuiteOptions& opt);
SuiteRow suite_lattice(const SuiteOptions& opt);
SuiteRow suite_nu(const SuiteOptions& opt);
SuiteRow suite_limits(const SuiteOptions& opt);

// Supplementary rows (id 0).
SuiteRow suite_fg_reduction(const SuiteOptions& opt);
SuiteRow suite_middle_transfer(const SuiteOptions& opt);
SuiteRow suite_flat_injective(const SuiteOptions& opt);
SuiteRow suite_colimit_flatness(const SuiteOptions& opt);
SuiteRow suite_ideal_criterion(const SuiteOptions& opt);

// Rows 1..11 in order, then the supplementary rows.
SuiteReport run_suite(const SuiteOptions& opt = {});

// Single-entry mutations of valid structures, each breaking one named axiom.
struct MutationFixture {
  std::string name;       // e.g. "BOOL mul[0,1] := 1"
  std::string kind;       // "semiring", "semimodule" or "morphism"
  std::string axiom;      // the axiom the mutation breaks
};
std::vector<MutationFixture> mutation_fixtures();

// Least congruence by the definition: start from the pairs, close under
// symmetry, transitivity, translation (and scalars) until nothing changes.
// Quadratic memory; meant as an oracle for small carriers.
std::vector<bool> naive_congruence(const Semimodule& m, const std::vector<std::pair<Elem, Elem>>& pairs,
                                   bool scalar_aware);

// C(i, p): {0, ..., i + p - 1} under addition with n + p identified with n
// for n >= i.
ModulePtr cyclic_monoid(unsigned index, unsigned period);

}  // namespace semiflat
