#include "semiflat/morphism.hpp"

namespace semiflat {

Morphism::Morphism(ModulePtr s, ModulePtr t, std::vector<Elem> map, Linearity l)
    : source_(std::move(s)), target_(std::move(t)), map_(std::move(map)), linearity_(l) {
  std::vector<bool> hit(target_->size(), false);
  std::size_t distinct = 0;
  for (Elem y : map_)
    if (!hit[y]) {
      hit[y] = true;
      ++distinct;
    }
  injective_ = distinct == map_.size();
  surjective_ = distinct == target_->size();
}

std::vector<Violation> validate_morphism(const Semimodule& src, const Semimodule& tgt,
                                         const std::vector<Elem>& map, Linearity linearity) {
  if (map.size() != src.size())
    throw ShapeMismatch("morphism map has " + std::to_string(map.size()) + " entries, source " +
                        src.name() + " has " + std::to_string(src.size()));
  for (Elem y : map)
    if (y >= tgt.size()) throw ShapeMismatch("morphism image index out of range");

  std::vector<Violation> out;
  if (map[src.zero()] != tgt.zero()) out.push_back({"preserves_zero", {src.zero()}});
  for (Elem a = 0, done = 0; a < src.size() && !done; ++a)
    for (Elem b = 0; b < src.size(); ++b)
      if (map[src.add(a, b)] != tgt.add(map[a], map[b])) {
        out.push_back({"preserves_add", {a, b}});
        done = 1;
        break;
      }
  if (linearity == Linearity::linear && src.has_action()) {
    auto pairs = matched_actions(src, tgt);
    if (pairs.empty())
      throw SideMismatch("no action of " + src.name() + " matches an action of " + tgt.name());
    for (auto [i, j] : pairs) {
      const std::size_t n = src.actions()[i].ring->size();
      bool done = false;
      for (Elem x = 0; x < src.size() && !done; ++x)
        for (Elem s = 0; s < n; ++s)
          if (map[src.act(i, x, s)] != tgt.act(j, map[x], s)) {
            out.push_back({"preserves_action", {x, s}});
            done = true;
            break;
          }
    }
  }
  return out;
}

Morphism Morphism::build(ModulePtr source, ModulePtr target, std::vector<Elem> map,
                         Linearity linearity) {
  auto v = validate_morphism(*source, *target, map, linearity);
  if (!v.empty()) throw AxiomViolation(std::move(v));
  return Morphism(std::move(source), std::move(target), std::move(map), linearity);
}

Morphism Morphism::trusted(ModulePtr source, ModulePtr target, std::vector<Elem> map,
                           Linearity linearity) {
  return Morphism(std::move(source), std::move(target), std::move(map), linearity);
}

bool Morphism::is_zero() const {
  for (Elem y : map_)
    if (y != target_->zero()) return false;
  return true;
}

Mask Morphism::image() const {
  Mask m(target_->size(), false);
  for (Elem y : map_) m[y] = true;
  return m;
}

Morphism identity(const ModulePtr& m) {
  std::vector<Elem> map(m->size());
  for (Elem i = 0; i < map.size(); ++i) map[i] = i;
  return Morphism::trusted(m, m, std::move(map));
}

Morphism zero_morphism(const ModulePtr& source, const ModulePtr& target) {
  return Morphism::trusted(source, target, std::vector<Elem>(source->size(), target->zero()));
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (f.target()->size() != g.source()->size())
    throw NotComposable("cannot compose " + f.source()->name() + "->" + f.target()->name() +
                        " with " + g.source()->name() + "->" + g.target()->name());
  std::vector<Elem> map(f.map().size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = g(f(static_cast<Elem>(i)));
  Linearity l = (f.linearity() == Linearity::linear && g.linearity() == Linearity::linear)
                    ? Linearity::linear
                    : Linearity::additive;
  return Morphism::trusted(f.source(), g.target(), std::move(map), l);
}

bool same_map(const Morphism& f, const Morphism& g) { return f.map() == g.map(); }

}  // namespace semiflat
