#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semiflat/hom.hpp"
#include "semiflat/quotient.hpp"
#include "semiflat/subsemimodule.hpp"

namespace semiflat {

Mask kernel_mask(const Morphism& f);
// Preimage of zero; always subtractive.
Subsemimodule kernel(const Morphism& f);
// target / f(source) with its projection.
Quotient cokernel(const Morphism& f);

// f(m1) = f(m2) implies m1 + k1 = m2 + k2 for some k1, k2 in Ker f. On
// failure `witness` receives the first colliding pair (m1, m2).
bool is_k_uniform(const Morphism& f, std::vector<Elem>* witness = nullptr);
// Image equals its subtractive closure.
bool is_i_uniform(const Morphism& f);
bool is_uniform(const Morphism& f);
// Subtractive closure of the image is the whole codomain.
bool is_semi_epi(const Morphism& f);

struct MorphismProfile {
  bool injective = false, surjective = false;
  bool k_uniform = false, i_uniform = false, uniform = false, semi_epi = false;
  std::vector<Elem> injective_witness;  // a != b with f(a) = f(b)
  std::vector<Elem> surjective_witness; // codomain element missed
  std::vector<Elem> k_witness;          // collision without kernel correction
  std::vector<Elem> i_witness;          // in the closure of the image, not in it
  std::vector<Elem> semi_epi_witness;   // outside the closure of the image
};
MorphismProfile morphism_profile(const Morphism& f);

struct StageReport {
  bool chain = false;         // g o f = 0
  bool proper_exact = false;  // f(L) = Ker g
  bool semi_exact = false;    // closure of f(L) = Ker g
  bool quasi_exact = false;   // semi-exact and g k-uniform
  bool exact = false;         // proper-exact and g k-uniform
  std::vector<Elem> chain_witness;   // x with g(f(x)) != 0
  std::vector<Elem> proper_witness;  // element of Ker g xor f(L)
  std::vector<Elem> semi_witness;    // element of Ker g xor closure f(L)
  std::vector<Elem> k_witness;       // for g
};

struct ExactnessReport {
  std::vector<StageReport> stages;  // stage j is M_j -> M_{j+1} -> M_{j+2}
  bool chain() const;
  bool proper_exact() const;
  bool semi_exact() const;
  bool quasi_exact() const;
  bool exact() const;
};

// f: L -> M, g: M -> N; throws NotComposable.
StageReport classify_stage(const Morphism& f, const Morphism& g);
ExactnessReport classify_sequence(const std::vector<Morphism>& maps);

// The zero module with the same action shape as m.
ModulePtr zero_module_like(const Semimodule& m, std::string name = "0");
// 0 -> A (from the zero module) and B -> 0.
Morphism from_zero(const ModulePtr& a);
Morphism to_zero(const ModulePtr& b);
// 0 -> A -> B -> C -> 0 as four maps.
std::vector<Morphism> short_sequence(const Morphism& f, const Morphism& g);

// Complemented idempotents of End(M) and the summands they cut out.
struct EndComp {
  HomMonoid end;
  std::vector<Elem> idempotents;  // indices into end.maps
  std::vector<Elem> comp;         // t with t + u = id, tu = 0 = ut for some u
  std::vector<Mask> summands;     // distinct images of comp elements
};
EndComp end_comp(const ModulePtr& m, const Limits& limits = default_limits());

struct Retraction {
  Morphism section;     // psi: N -> M
  Morphism retraction;  // theta: M -> N, theta o psi = id_N
};
// First (psi, theta) in enumeration order, if N is a retract of M.
std::optional<Retraction> find_retraction(const ModulePtr& n, const ModulePtr& m,
                                          const Limits& limits = default_limits());

// Q uniformly injective relative to a family: for every M in the family and
// every L <= M with uniform inclusion (the subtractive ones), restriction
// Hom(M, Q) -> Hom(L, Q) is surjective and uniform.
struct InjectivityCase {
  std::string module;
  Mask sub;
  bool surjective = false;
  bool uniform = false;
};
struct InjectivityReport {
  bool holds = true;
  std::vector<InjectivityCase> cases;
};
InjectivityReport uniformly_injective_rel(const ModulePtr& q, const std::vector<ModulePtr>& family,
                                          const Limits& limits = default_limits());

// For each probe iota: U -> M, restriction along iota being surjective
// (and uniform) must force iota injective (and uniform).
struct CogeneratorCase {
  bool restriction_surjective = false, restriction_uniform = false;
  bool probe_injective = false, probe_uniform = false;
  bool consistent = true;
};
struct CogeneratorReport {
  bool holds = true;
  std::vector<CogeneratorCase> cases;
};
CogeneratorReport uniformly_cogenerates(const ModulePtr& q, const std::vector<Morphism>& probes,
                                        const Limits& limits = default_limits());

// One implication evaluated on one instance.
struct ImplicationCheck {
  std::string item;
  bool applicable = false;  // hypotheses hold
  bool holds = true;        // conclusion holds (or not applicable)
};

// iota: N -> M, pi: M -> N with pi o iota = id, and likewise on the primed
// side; gamma: M -> M', gamma_t: N -> N'. Throws NotCommutative unless
// gamma o iota = iota' o gamma_t and pi' o gamma = gamma_t o pi.
struct RetractSquare {
  Morphism iota, pi, iota2, pi2, gamma, gamma_t;
};
std::vector<ImplicationCheck> verify_retract_square(const RetractSquare& d);

// Three retract pairs and two rows f, g (middle) and f_t, g_t (outer).
struct RetractLadder {
  Morphism iota, pi, iota1, pi1, iota2, pi2;
  Morphism f, g, f_t, g_t;
};
std::vector<ImplicationCheck> verify_retract_ladder(const RetractLadder& d);

// Rows L1 -f1-> M1 -g1-> N1 and L2 -f2-> M2 -g2-> N2 with verticals a1, a2,
// a3. Throws NotCommutative unless both squares commute.
struct LadderDiagram {
  Morphism f1, g1, f2, g2, a1, a2, a3;
};
std::vector<ImplicationCheck> verify_ladder(const LadderDiagram& d);

}  // namespace semiflat
