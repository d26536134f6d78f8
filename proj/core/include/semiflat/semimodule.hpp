#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "semiflat/semiring.hpp"

namespace semiflat {

// One scalar action. table[x * |ring| + s] is x*s for a right action and
// s*x for a left action.
struct Action {
  SemiringPtr ring;
  Side side = Side::right;
  std::vector<Elem> table;
};

struct SemimoduleSpec {
  std::string name;
  std::vector<std::string> labels;
  std::vector<Elem> add;  // row-major m*m
  Elem zero = 0;
  // Empty: a plain commutative monoid. One entry: an S-semimodule. Two
  // entries: a bisemimodule; the first is the primary action.
  std::vector<Action> actions;
};

class Semimodule {
 public:
  // Unchecked; use build_semimodule for untrusted input.
  explicit Semimodule(SemimoduleSpec spec) : spec_(std::move(spec)) {}

  const std::string& name() const { return spec_.name; }
  std::size_t size() const { return spec_.labels.size(); }
  Elem zero() const { return spec_.zero; }
  Elem add(Elem a, Elem b) const { return spec_.add[a * size() + b]; }

  const std::vector<std::string>& labels() const { return spec_.labels; }
  const std::string& label(Elem a) const { return spec_.labels[a]; }
  std::optional<Elem> find(const std::string& label) const;

  const std::vector<Action>& actions() const { return spec_.actions; }
  bool has_action() const { return !spec_.actions.empty(); }
  Elem act(std::size_t k, Elem x, Elem s) const {
    const Action& a = spec_.actions[k];
    return a.table[x * a.ring->size() + s];
  }

  // Primary action ring and side; ring() is null for a plain monoid.
  const Semiring* ring() const { return has_action() ? spec_.actions[0].ring.get() : nullptr; }
  SemiringPtr ring_ptr() const { return has_action() ? spec_.actions[0].ring : nullptr; }
  Side side() const { return has_action() ? spec_.actions[0].side : Side::left; }

  // Index of an action of `ring` usable on `side`: an exact side match wins,
  // otherwise any action of a commutative ring.
  std::optional<std::size_t> action_on(const Semiring& ring, Side side) const;

  const std::vector<Elem>& add_table() const { return spec_.add; }
  const SemimoduleSpec& spec() const { return spec_; }

 private:
  SemimoduleSpec spec_;
};

using ModulePtr = std::shared_ptr<const Semimodule>;

std::vector<Violation> validate_semimodule(const SemimoduleSpec& spec);
ModulePtr build_semimodule(SemimoduleSpec spec);

// Adds the opposite-side copy of the primary action. Requires a commutative
// ring; throws NotCommutative otherwise.
ModulePtr make_bimodule(const ModulePtr& m);

// Re-tags the primary action with `side` (commutative rings only). Returns m
// unchanged when it already has that side.
ModulePtr with_side(const ModulePtr& m, Side side);

// Underlying additive monoid (all actions dropped).
ModulePtr forget_actions(const ModulePtr& m);

ModulePtr with_name(const ModulePtr& m, std::string name);

// Drops every action except the one at index k, which becomes primary.
ModulePtr keep_action(const ModulePtr& m, std::size_t k);

// Pairs (i, j) of source action i matched with target action j: same ring
// structure and same side, or any side when the ring is commutative.
std::vector<std::pair<std::size_t, std::size_t>> matched_actions(const Semimodule& a,
                                                                 const Semimodule& b);

// Structural compatibility as modules over one ring: both plain, or both
// carrying a primary action over the same ring on a compatible side.
bool same_ring_and_side(const Semimodule& a, const Semimodule& b);

// Unital semiring homomorphisms from -> to, as index maps in lexicographic
// order.
std::vector<std::vector<Elem>> semiring_morphisms(const Semiring& from, const Semiring& to);

// M over R viewed over S through phi: S -> R, x*s := x*phi(s). Only the
// primary action is kept.
ModulePtr restrict_scalars(const ModulePtr& m, const SemiringPtr& s, const std::vector<Elem>& phi);

}  // namespace semiflat
