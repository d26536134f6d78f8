#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "semiflat/errors.hpp"
#include "semiflat/types.hpp"

namespace semiflat {

// Raw description of a finite semiring. Tables are row-major n*n.
struct SemiringSpec {
  std::string name;
  std::vector<std::string> labels;
  std::vector<Elem> add;
  std::vector<Elem> mul;
  Elem zero = 0;
  Elem one = 1;
};

class Semiring {
 public:
  // Unchecked; use build_semiring for untrusted input.
  explicit Semiring(SemiringSpec spec);

  const std::string& name() const { return spec_.name; }
  std::size_t size() const { return spec_.labels.size(); }
  Elem zero() const { return spec_.zero; }
  Elem one() const { return spec_.one; }
  Elem add(Elem a, Elem b) const { return spec_.add[a * size() + b]; }
  Elem mul(Elem a, Elem b) const { return spec_.mul[a * size() + b]; }

  const std::vector<std::string>& labels() const { return spec_.labels; }
  const std::string& label(Elem a) const { return spec_.labels[a]; }
  std::optional<Elem> find(const std::string& label) const;

  const std::vector<Elem>& add_table() const { return spec_.add; }
  const std::vector<Elem>& mul_table() const { return spec_.mul; }
  const SemiringSpec& spec() const { return spec_; }

  bool is_commutative() const { return commutative_; }

  // Same carrier size, tables and constants (labels and name ignored).
  bool same_structure(const Semiring& other) const;

 private:
  SemiringSpec spec_;
  bool commutative_ = false;
};

using SemiringPtr = std::shared_ptr<const Semiring>;

// Shape problems throw MalformedTable; axiom failures are returned, one entry
// per violated axiom with the first witness in scan order.
std::vector<Violation> validate_semiring(const SemiringSpec& spec);

// Validates and throws AxiomViolation when anything fails.
SemiringPtr build_semiring(SemiringSpec spec);

// Checks the carrier for duplicate labels and table index ranges.
void check_table_shape(const std::string& what, std::size_t rows, std::size_t cols,
                       const std::vector<Elem>& table, std::size_t range);
void check_unique_labels(const std::string& what, const std::vector<std::string>& labels);

}  // namespace semiflat
