#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semiflat/hom.hpp"
#include "semiflat/tensor.hpp"

namespace semiflat {

// A mutually inverse pair, checked by composing both ways.
struct CanonicalIso {
  Morphism forward, backward;
  bool verified = false;
  std::string failure;
};

// M -> M (x) S, m |-> m (x) 1, with inverse m (x) s |-> ms factored through
// the tensor. M needs an action of S usable on the right.
struct UnitIso {
  TensorPresentation tensor;
  CanonicalIso iso;
};
UnitIso unit_iso(const ModulePtr& m, const Limits& limits = default_limits());
// N -> S (x) N, n |-> 1 (x) n.
UnitIso unit_iso_left(const ModulePtr& n, const Limits& limits = default_limits());

// (M (x) N) (x) X -> M (x) (N (x) X). N must carry two actions: index 1
// balances against M and index 0 against X (make_bimodule gives this shape
// over a commutative ring).
struct AssocIso {
  TensorPresentation inner_left, outer_left;    // M (x) N, (M (x) N) (x) X
  TensorPresentation inner_right, outer_right;  // N (x) X, M (x) (N (x) X)
  CanonicalIso iso;
};
AssocIso assoc_iso(const ModulePtr& m, const ModulePtr& n, const ModulePtr& x,
                   const Limits& limits = default_limits());

// Currying Hom(M (x) X, Y) -> Hom(X, Hom(M, Y)), phi |-> (x |-> phi(- (x) x)).
// M over a commutative ring with a single action is first made a
// bimodule. Naturality is checked against the supplied maps h: X' -> X
// and k: Y -> Y'.
struct AdjunctionReport {
  std::size_t lhs_size = 0, rhs_size = 0;
  std::vector<Elem> sigma;  // lhs index -> rhs index
  bool well_defined = false, bijective = false, additive = false;
  std::size_t squares_x = 0, squares_y = 0;
  bool natural_x = true, natural_y = true;
  // Set when Y is cancellative: Hom(c(M (x) X), Y) -> Hom(X, Hom(M, Y)).
  std::optional<bool> cancellative_bijective;
  std::string failure;

  bool ok() const {
    return well_defined && bijective && additive && natural_x && natural_y &&
           cancellative_bijective.value_or(true);
  }
};
AdjunctionReport adjunction_iso(const ModulePtr& m, const ModulePtr& x, const ModulePtr& y,
                                const std::vector<Morphism>& into_x = {},
                                const std::vector<Morphism>& out_of_y = {},
                                const Limits& limits = default_limits());

// nu: Hom(X, Y) (x) Z -> Hom(X, Y (x) Z), f (x) z |-> (x |-> f(x) (x) z),
// and nu: X* (x) Z -> Hom(X, Z), f (x) z |-> (x |-> f(x) z), X* = Hom(X, S).
struct NuMap {
  std::string name;
  HomMonoid hom_source;          // Hom(X, Y) or X*
  TensorPresentation tensor;     // its tensor with Z
  HomMonoid hom_target;          // Hom(X, Y (x) Z) or Hom(X, Z)
  std::optional<TensorPresentation> inner;  // Y (x) Z
  Morphism nu;
  bool injective = false, surjective = false, uniform = false;
  bool isomorphism() const { return injective && surjective; }
};
// Y over a commutative ring with one action is first made a bimodule.
NuMap nu_xyz(const ModulePtr& x, const ModulePtr& y, const ModulePtr& z,
             const Limits& limits = default_limits());
NuMap nu_xz(const ModulePtr& x, const ModulePtr& z, const Limits& limits = default_limits());

}  // namespace semiflat
