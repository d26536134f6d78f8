#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semiflat/hom.hpp"
#include "semiflat/quotient.hpp"
#include "semiflat/tensor.hpp"

namespace semiflat {

// Finite product; also the coproduct (same carrier). Element labels are
// "(a,b,...)", the first factor most significant. The empty product is
// TRIV, with the action shape of `shape` when given.
struct ProductObject {
  std::vector<ModulePtr> factors;
  ModulePtr module;
  std::vector<Morphism> projections, injections;

  std::vector<Elem> components(Elem x) const;
  Elem element(const std::vector<Elem>& components) const;
};
// Named "A×B" (product) or "A⊕B" (coproduct) unless `name` is given.
ProductObject product(const std::vector<ModulePtr>& factors, const Limits& limits = default_limits(),
                      const ModulePtr& shape = nullptr, std::string name = "");
ProductObject coproduct(const std::vector<ModulePtr>& factors,
                        const Limits& limits = default_limits(), const ModulePtr& shape = nullptr,
                        std::string name = "");
// <f_1, ..., f_n>: X -> prod, the unique map with pi_i o <f> = f_i.
Morphism pairing(const ProductObject& p, const std::vector<Morphism>& fs);
// [f_1, ..., f_n]: coprod -> Y, the unique map with [f] o iota_i = f_i.
Morphism copairing(const ProductObject& p, const std::vector<Morphism>& fs);

// {x | f(x) = g(x)} with its inclusion. Throws ShapeMismatch.
Embedded equalizer(const Morphism& f, const Morphism& g);
// Target modulo the congruence generated by {(f(x), g(x))}.
Quotient coequalizer(const Morphism& f, const Morphism& g);

struct Pullback {
  ProductObject ambient;  // A x B
  ModulePtr module;
  Morphism inclusion, left, right;  // left: P -> A, right: P -> B
};
Pullback pullback(const Morphism& f, const Morphism& g, const Limits& limits = default_limits());

// Factorizations through the universal objects; nullopt when h does not
// satisfy the required equation.
std::optional<Morphism> factor_through_equalizer(const Embedded& e, const Morphism& h);
std::optional<Morphism> factor_through_coequalizer(const Quotient& q, const Morphism& h);
std::optional<Morphism> factor_through_pullback(const Pullback& p, const Morphism& a,
                                                const Morphism& b);

using Edge = std::pair<std::size_t, std::size_t>;  // j <= j'

// A finite poset with a module per index and a map per generating
// relation j <= j': nodes[j] -> nodes[j'] for directed systems, and
// nodes[j'] -> nodes[j] for inverse systems. build() closes the relation
// reflexively and transitively, composes transitions along every path and
// rejects incoherent data (AxiomViolation), cycles and, for directed
// systems, index pairs without an upper bound (NotDirected).
class PosetSystem {
 public:
  std::size_t size() const { return nodes_.size(); }
  const ModulePtr& node(std::size_t j) const { return nodes_[j]; }
  const std::vector<ModulePtr>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Morphism>& maps() const { return maps_; }
  bool leq(std::size_t j, std::size_t k) const { return leq_[j * size() + k]; }
  // f_{jk} for j <= k (directed) or f_{jk}: M_k -> M_j (inverse).
  const Morphism& transition(std::size_t j, std::size_t k) const;

 protected:
  void close(bool reversed);

  std::vector<ModulePtr> nodes_;
  std::vector<Edge> edges_;
  std::vector<Morphism> maps_;
  std::vector<bool> leq_;
  std::vector<std::optional<Morphism>> transitions_;
};

class DirectedSystem : public PosetSystem {
 public:
  static DirectedSystem build(std::vector<ModulePtr> nodes, std::vector<Edge> edges,
                              std::vector<Morphism> maps);
  // The greatest index, which every finite directed poset has.
  std::size_t maximum() const;
  std::optional<std::size_t> upper_bound(std::size_t j, std::size_t k) const;
};

// Index sets need not be directed.
class InverseSystem : public PosetSystem {
 public:
  static InverseSystem build(std::vector<ModulePtr> nodes, std::vector<Edge> edges,
                             std::vector<Morphism> maps);
};

// The disjoint union of the nodes modulo (x, j) ~ (x', j') iff
// f_{jj''}(x) = f_{j'j''}(x') for some j'' above both. Sums are computed at a
// common upper index. Cross-checked against the value at the maximum.
struct Colimit {
  ModulePtr module;
  std::vector<Morphism> legs;  // gamma_j: M_j -> colim
  std::size_t maximum = 0;
  Morphism to_maximum;  // [(x, j)] |-> f_{j,max}(x)
  bool matches_shortcut = false;
};
Colimit directed_colimit(const DirectedSystem& sys, std::string name = "");

// Compatible tuples (m_j) with m_j = f_{jj'}(m_{j'}) inside the product.
struct InverseLimit {
  ModulePtr module;
  std::vector<Morphism> projections;
};
InverseLimit inverse_limit(const InverseSystem& sys, const Limits& limits = default_limits(),
                           std::string name = "");

// The induced map of colimits for levelwise maps h_j: A_j -> B_j with
// h_k o f_{jk} = g_{jk} o h_j. Throws NotIntertwining naming the edge.
Morphism colimit_morphism(const DirectedSystem& a, const Colimit& ca, const DirectedSystem& b,
                          const Colimit& cb, const std::vector<Morphism>& h);

// Ker(beta_j) with restricted transitions, and Coker(alpha_j) with the
// transitions they induce.
DirectedSystem kernel_system(const DirectedSystem& m, const std::vector<Morphism>& beta);
DirectedSystem cokernel_system(const DirectedSystem& m, const std::vector<Morphism>& alpha);

// All subsemimodules of M ordered by inclusion.
DirectedSystem subsemimodule_system(const ModulePtr& m, const Limits& limits = default_limits());

// F (x) M_j with transitions id (x) f_{jk}.
struct TensoredSystem {
  std::vector<TensorPresentation> tensors;
  DirectedSystem system;
};
TensoredSystem tensor_system(const ModulePtr& f, const DirectedSystem& sys,
                             const Limits& limits = default_limits());

// psi_X: colim Hom(X, M_j) -> Hom(X, colim M_j), [(a, j)] |-> gamma_j o a.
struct PsiMap {
  DirectedSystem homs;  // Hom(X, M_j) as monoids, transitions f_{jk} o -
  Colimit colimit_of_homs;
  HomMonoid target;     // Hom(X, colim M_j)
  Morphism psi;
  bool injective = false, bijective = false;
};
PsiMap psi_x(const ModulePtr& x, const DirectedSystem& sys, const Colimit& colim,
             const Limits& limits = default_limits());

}  // namespace semiflat
