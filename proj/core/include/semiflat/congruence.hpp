#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "semiflat/semimodule.hpp"

namespace semiflat {

using ElemPair = std::pair<Elem, Elem>;

// Partition of 0..n-1. Class ids are numbered by least member, so class 0
// always contains element 0.
struct Congruence {
  std::vector<Elem> class_of;
  std::size_t class_count = 0;

  std::size_t size() const { return class_of.size(); }
  bool same(Elem a, Elem b) const { return class_of[a] == class_of[b]; }
  // Least member of each class, indexed by class id.
  std::vector<Elem> representatives() const;

  static Congruence identity(std::size_t n);
  static Congruence total(std::size_t n);
  // Renumbers arbitrary block labels by least member.
  static Congruence from_blocks(const std::vector<Elem>& block_of);

  bool operator==(const Congruence& o) const { return class_of == o.class_of; }
  // Every pair identified here is identified in `coarser`.
  bool refines(const Congruence& coarser) const;
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }
  Elem find(Elem x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // True when the two classes were distinct. The smaller root survives.
  bool unite(Elem a, Elem b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }
  // Roots are least members, so ids come out in least-member order.
  Congruence to_congruence() {
    Congruence c;
    c.class_of.resize(parent_.size());
    for (Elem i = 0; i < parent_.size(); ++i) {
      Elem r = find(i);
      c.class_of[i] = r == i ? static_cast<Elem>(c.class_count++) : c.class_of[r];
    }
    return c;
  }

 private:
  std::vector<Elem> parent_;
};

// Least equivalence on 0..n-1 containing `pairs` and closed under each of the
// unary maps apply(k, x), k < num_maps. Every successful union of (a, b)
// enqueues (f(a), f(b)) for every map f, which suffices because any two
// related elements are joined by a chain of united pairs.
template <class Apply>
Congruence close_under_maps(std::size_t n, std::size_t num_maps, Apply&& apply,
                            const std::vector<ElemPair>& pairs) {
  UnionFind uf(n);
  std::vector<ElemPair> queue(pairs.begin(), pairs.end());
  while (!queue.empty()) {
    auto [a, b] = queue.back();
    queue.pop_back();
    if (!uf.unite(a, b)) continue;
    for (std::size_t k = 0; k < num_maps; ++k) queue.emplace_back(apply(k, a), apply(k, b));
  }
  return uf.to_congruence();
}

// Least congruence of M containing `pairs`: closed under translation by every
// element and, when scalar_aware, under every scalar action.
Congruence congruence_closure(const Semimodule& m, const std::vector<ElemPair>& pairs,
                              bool scalar_aware = true);

// First compatibility failure of a partition: (a, b, c) with a~b but
// a+c !~ b+c, or (a, b, s) with as !~ bs (axiom "compatible_action").
std::optional<Violation> congruence_violation(const Semimodule& m, const Congruence& c,
                                              bool scalar_aware = true);

}  // namespace semiflat
