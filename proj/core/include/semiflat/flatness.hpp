#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semiflat/homology.hpp"
#include "semiflat/limits.hpp"
#include "semiflat/tensor.hpp"

namespace semiflat {

// id_F (x) iota_L for one subsemimodule L of M.
struct SubTensorCheck {
  Mask sub;
  std::string label;
  bool uniform_sub = false;  // L subtractive in M
  bool injective = false, i_uniform = false;
  // The tensored short sequence 0 -> F(x)L -> F(x)M -> F(x)(M/L) -> 0 is
  // exact; evaluated for uniform L only.
  std::optional<bool> sequence_exact;
  std::string witness;
};

// The three flatness predicates of F against one module M, each with the
// first failing subsemimodule. uniformly_m_flat quantifies over uniform
// (subtractive) U and needs id (x) iota injective and i-uniform;
// mono_flat quantifies over every L and needs injectivity; in_is over
// uniform U and needs i-uniformity.
struct FlatnessVerdict {
  std::string subject, against;
  bool uniformly_m_flat = true, mono_flat = true, in_is = true;
  std::string uniform_witness, mono_witness, is_witness;  // sub labels
  std::string witness_detail;  // for the uniform failure
  // Conjunction of the tensored-sequence exactness over uniform U.
  bool sequence_form = true;
  std::vector<SubTensorCheck> checks;

  bool sequence_agrees() const { return sequence_form == uniformly_m_flat; }
  // (in_is and mono_flat) implies uniformly_m_flat.
  bool lattice_holds() const { return !(in_is && mono_flat) || uniformly_m_flat; }
};

FlatnessVerdict flatness_verdict(const ModulePtr& f, const ModulePtr& m,
                                 const Limits& limits = default_limits());
inline FlatnessVerdict is_uniformly_M_flat(const ModulePtr& f, const ModulePtr& m,
                                           const Limits& limits = default_limits()) {
  return flatness_verdict(f, m, limits);
}

// Conjunction over a finite universe, reported relative to it. Modules
// over another semiring are ignored; modules whose tensors exceed the
// bounds are listed in `skipped`.
struct UniverseVerdict {
  std::string subject, universe;
  bool holds = true;
  std::string first_failure;  // module name
  std::vector<FlatnessVerdict> per_module;
  std::vector<std::string> skipped;
};
UniverseVerdict is_uniformly_flat(const ModulePtr& f, const std::vector<ModulePtr>& universe,
                                  const std::string& universe_name = "catalog",
                                  const Limits& limits = default_limits());

// F in I_S(M) first; then uniform M-flatness against injectivity of
// id (x) iota_L for every L generated by at most rank(M) elements and for
// every L at all.
struct FgReduction {
  bool applicable = false;
  bool uniformly_m_flat = false;
  bool bounded_mono = false;  // L with at most `generator_bound` generators
  bool all_mono = false;
  std::size_t generator_bound = 0;
  std::string witness;
  bool agrees() const { return !applicable || (uniformly_m_flat == bounded_mono && bounded_mono == all_mono); }
};
FgReduction fg_reduction_check(const ModulePtr& f, const ModulePtr& m,
                               const Limits& limits = default_limits());

// For an exact 0 -> M1 -> M -> M2 -> 0: uniform M-flatness passes to M1,
// and to M2 when F is in I_S(M2). Throws NotExact.
struct MiddleTransfer {
  bool m_flat = false, m1_flat = false, in_is_m2 = false, m2_flat = false;
  bool holds() const { return !m_flat || (m1_flat && (!in_is_m2 || m2_flat)); }
};
MiddleTransfer middle_flat_transfer(const ModulePtr& f, const Morphism& gamma, const Morphism& delta,
                                    const Limits& limits = default_limits());

// The sum is uniformly M-flat iff every member is; every retract cut out
// by a complemented idempotent of a uniformly M-flat member or of the sum
// is uniformly M-flat.
struct SumRetractReport {
  bool sum_flat = false, all_members_flat = false;
  std::size_t retracts_checked = 0;
  std::vector<std::string> retract_failures;
  bool holds() const { return sum_flat == all_members_flat && retract_failures.empty(); }
};
SumRetractReport sum_retract_suite(const std::vector<ModulePtr>& family, const ModulePtr& m,
                                   const Limits& limits = default_limits());

// A uniform surjection S^n -> X, n <= n_max, found by trying generator
// tuples in lexicographic order.
struct FgWitness {
  unsigned n = 0;
  ModulePtr free;
  Morphism surjection;
};
std::optional<FgWitness> is_uniformly_fg(const ModulePtr& x, unsigned n_max,
                                         const Limits& limits = default_limits());
// Every uniform surjection S^n -> X at the least n has a finitely generated
// kernel (true of every finite kernel; still checked). Emits S^m -> S^n ->
// X -> 0 sending the basis of S^m onto a minimal generating set of the
// kernel, with its exactness report.
struct FpWitness {
  FgWitness fg;
  std::size_t presentations_checked = 0;
  unsigned m = 0;
  ModulePtr free_m;
  Morphism relations;
  ExactnessReport certificate;
};
std::optional<FpWitness> is_uniformly_fp(const ModulePtr& x, unsigned n_max,
                                         const Limits& limits = default_limits());

// Linear map S^n -> X sending the basis to `images`.
Morphism map_from_free(const ModulePtr& free, unsigned n, const ModulePtr& x,
                       const std::vector<Elem>& images);

// Flat in the directed-colimit sense, certified: every node is a retract of
// a free module (section into S^n, retraction back) and the colimit maps
// isomorphically onto the subject.
struct ProjectiveWitness {
  Morphism section, retraction;
};
struct FlatCertificate {
  DirectedSystem system;
  std::vector<ProjectiveWitness> nodes;
  Morphism to_subject;  // colim -> F
};
// id (x) - applied to the pullback of f: A -> C, g: B -> C maps
// isomorphically onto the pullback of the tensored cospan.
bool tensor_preserves_pullback(const ModulePtr& f, const Morphism& a, const Morphism& b,
                               const Limits& limits = default_limits());
struct CertificateReport {
  bool accepted = false;
  UniverseVerdict flatness;
  std::size_t pullbacks_checked = 0, pullbacks_preserved = 0;
  bool holds() const {
    return accepted && flatness.holds && pullbacks_checked == pullbacks_preserved;
  }
};
// Throws BadCertificate naming the node and the reason.
CertificateReport flat_certificate_check(const ModulePtr& f, const FlatCertificate& cert,
                                         const std::vector<ModulePtr>& universe,
                                         const std::vector<std::pair<Morphism, Morphism>>& cospans,
                                         const Limits& limits = default_limits());
// A one-node certificate from a retraction of S^n, n <= n_max. At finite
// scale this is the whole search: a finite directed colimit is its value at
// the maximum.
std::optional<FlatCertificate> find_flat_certificate(const ModulePtr& f, unsigned n_max,
                                                     const Limits& limits = default_limits());

// Three verdicts side by side, no equivalence asserted: (a) id (x) iota
// injective and i-uniform for every uniform ideal I of S, (b) uniform
// flatness over the universe, (c) Hom(F, Q) uniformly injective relative
// to the universe.
struct BaerReport {
  bool ideal_wise = true;
  std::string ideal_witness;
  std::size_t ideals_checked = 0;
  bool uniformly_flat = false;
  bool hom_injective = false;
};
BaerReport baer_ideal_criterion(const ModulePtr& f, const ModulePtr& q,
                                const std::vector<ModulePtr>& universe,
                                const Limits& limits = default_limits());

}  // namespace semiflat
