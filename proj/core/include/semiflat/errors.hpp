#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "semiflat/types.hpp"

namespace semiflat {

// Base of everything the library throws on bad input. Programming errors
// (broken internal invariants) surface as std::logic_error instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "Error"; }
};

// One violated axiom with the element indices that demonstrate it.
struct Violation {
  std::string axiom;
  std::vector<Elem> witness;
};

std::string describe(const std::vector<Violation>& violations);

class AxiomViolation : public Error {
 public:
  explicit AxiomViolation(std::vector<Violation> v)
      : Error("axiom violation: " + describe(v)), violations_(std::move(v)) {}
  const std::vector<Violation>& violations() const noexcept { return violations_; }
  const char* kind() const noexcept override { return "AxiomViolation"; }

 private:
  std::vector<Violation> violations_;
};

#define SEMIFLAT_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                         \
   public:                                                            \
    using Error::Error;                                               \
    const char* kind() const noexcept override { return #Name; }      \
  };

SEMIFLAT_DEFINE_ERROR(MalformedTable)
SEMIFLAT_DEFINE_ERROR(SideMismatch)
SEMIFLAT_DEFINE_ERROR(SizeBoundExceeded)
SEMIFLAT_DEFINE_ERROR(NotACongruence)
SEMIFLAT_DEFINE_ERROR(NotASubsemimodule)
SEMIFLAT_DEFINE_ERROR(NotComposable)
SEMIFLAT_DEFINE_ERROR(NotCommutative)
SEMIFLAT_DEFINE_ERROR(NotDirected)
SEMIFLAT_DEFINE_ERROR(NotIntertwining)
SEMIFLAT_DEFINE_ERROR(ShapeMismatch)
SEMIFLAT_DEFINE_ERROR(BoxBoundExceeded)
SEMIFLAT_DEFINE_ERROR(NotBalanced)
SEMIFLAT_DEFINE_ERROR(NotZeroPreserving)
SEMIFLAT_DEFINE_ERROR(BadCertificate)
SEMIFLAT_DEFINE_ERROR(NotExact)
SEMIFLAT_DEFINE_ERROR(TimeBudgetExceeded)
SEMIFLAT_DEFINE_ERROR(UnknownObject)
SEMIFLAT_DEFINE_ERROR(UnknownSubcommand)

#undef SEMIFLAT_DEFINE_ERROR

// Workspace document errors carry a JSON pointer to the offending node.
class SchemaError : public Error {
 public:
  SchemaError(std::string pointer, const std::string& what)
      : Error("schema error at " + pointer + ": " + what), pointer_(std::move(pointer)) {}
  const std::string& pointer() const noexcept { return pointer_; }
  const char* kind() const noexcept override { return "SchemaError"; }

 private:
  std::string pointer_;
};

}  // namespace semiflat
