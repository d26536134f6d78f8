#pragma once

#include <optional>
#include <vector>

#include "semiflat/morphism.hpp"

namespace semiflat {

// Hom(M, N) as a commutative monoid under pointwise addition. Element i of
// `module` is maps[i]; labels list the images "[f(0),f(1),...]".
struct HomMonoid {
  ModulePtr source, target;
  ModulePtr module;
  std::vector<Morphism> maps;

  std::optional<Elem> find(const std::vector<Elem>& map) const;
  Elem index_of(const Morphism& f) const;  // throws UnknownObject
};

struct HomOptions {
  Linearity linearity = Linearity::linear;
  // Only this source action must be preserved (matched on the target);
  // by default every matched action is.
  std::optional<std::size_t> source_action;
};

// All maps M -> N that are additive, zero-preserving and (if linear)
// compatible with the selected actions, sorted by image vector. Found by
// backtracking over images of a minimal generating set with propagation.
// Throws SizeBoundExceeded past limits.max_hom_candidates search nodes or
// limits.max_hom_size results; SideMismatch when linear and no action of M
// matches one of N.
std::vector<std::vector<Elem>> enumerate_homs(const Semimodule& m, const Semimodule& n,
                                              const HomOptions& opt = {},
                                              const Limits& limits = default_limits());

// The hom monoid with an action when one is available:
//  - an unused source action x*s induces (s.f)(x) = f(x*s), opposite side;
//  - else an unused target action induces (f.t)(x) = f(x)*t, same side;
//  - else, over a commutative ring, the target's matched action pointwise.
HomMonoid hom_monoid(const ModulePtr& m, const ModulePtr& n, const HomOptions& opt = {},
                     const Limits& limits = default_limits());

// (G, f): Hom(G, M) -> Hom(G, M'), phi |-> f o phi.
Morphism hom_cov(const HomMonoid& from, const HomMonoid& to, const Morphism& f);
// (f, G): Hom(M, G) -> Hom(L, G), phi |-> phi o f, for f: L -> M.
Morphism hom_contra(const Morphism& f, const HomMonoid& from, const HomMonoid& to);

// Hom(S, M) -> M, phi |-> phi(1), for the regular module S.
Morphism evaluation_at_one(const HomMonoid& hom_s_m);

}  // namespace semiflat
