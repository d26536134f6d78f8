#pragma once

#include <vector>

#include "semiflat/semimodule.hpp"

namespace semiflat {

enum class Linearity { additive, linear };

inline const char* to_string(Linearity l) { return l == Linearity::additive ? "additive" : "linear"; }

// A total map between carriers. Injectivity and surjectivity are computed
// on construction; uniformity lives in morphism_profile.
class Morphism {
 public:
  Morphism() = default;

  // Validating constructor: throws ShapeMismatch, SideMismatch or
  // AxiomViolation (preserves_zero, preserves_add, preserves_action).
  static Morphism build(ModulePtr source, ModulePtr target, std::vector<Elem> map,
                        Linearity linearity = Linearity::linear);
  // For maps the library constructed itself.
  static Morphism trusted(ModulePtr source, ModulePtr target, std::vector<Elem> map,
                          Linearity linearity = Linearity::linear);

  Elem operator()(Elem x) const { return map_[x]; }
  const std::vector<Elem>& map() const { return map_; }
  const ModulePtr& source() const { return source_; }
  const ModulePtr& target() const { return target_; }
  Linearity linearity() const { return linearity_; }
  bool injective() const { return injective_; }
  bool surjective() const { return surjective_; }
  bool is_zero() const;
  Mask image() const;

 private:
  Morphism(ModulePtr s, ModulePtr t, std::vector<Elem> map, Linearity l);

  ModulePtr source_, target_;
  std::vector<Elem> map_;
  Linearity linearity_ = Linearity::linear;
  bool injective_ = false, surjective_ = false;
};

std::vector<Violation> validate_morphism(const Semimodule& source, const Semimodule& target,
                                         const std::vector<Elem>& map, Linearity linearity);

Morphism identity(const ModulePtr& m);
Morphism zero_morphism(const ModulePtr& source, const ModulePtr& target);
// g after f; throws NotComposable when f.target and g.source differ in size.
Morphism compose(const Morphism& g, const Morphism& f);
// Same underlying map on the same carriers.
bool same_map(const Morphism& f, const Morphism& g);

}  // namespace semiflat
