#include "semiflat/semiring.hpp"

#include <set>

namespace semiflat {

Semiring::Semiring(SemiringSpec spec) : spec_(std::move(spec)) {
  const std::size_t n = size();
  commutative_ = true;
  for (Elem a = 0; a < n && commutative_; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (mul(a, b) != mul(b, a)) {
        commutative_ = false;
        break;
      }
}

std::optional<Elem> Semiring::find(const std::string& label) const {
  for (std::size_t i = 0; i < spec_.labels.size(); ++i)
    if (spec_.labels[i] == label) return static_cast<Elem>(i);
  return std::nullopt;
}

bool Semiring::same_structure(const Semiring& o) const {
  if (this == &o) return true;
  return size() == o.size() && zero() == o.zero() && one() == o.one() &&
         spec_.add == o.spec_.add && spec_.mul == o.spec_.mul;
}

void check_table_shape(const std::string& what, std::size_t rows, std::size_t cols,
                       const std::vector<Elem>& table, std::size_t range) {
  if (table.size() != rows * cols)
    throw MalformedTable(what + ": expected " + std::to_string(rows) + "x" +
                         std::to_string(cols) + " entries, got " +
                         std::to_string(table.size()));
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] >= range)
      throw MalformedTable(what + ": entry " + std::to_string(i) + " out of range");
}

void check_unique_labels(const std::string& what, const std::vector<std::string>& labels) {
  std::set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second) throw MalformedTable(what + ": duplicate label '" + l + "'");
}

std::vector<Violation> validate_semiring(const SemiringSpec& s) {
  const std::size_t n = s.labels.size();
  if (n == 0) throw MalformedTable("semiring " + s.name + ": empty carrier");
  check_unique_labels("semiring " + s.name, s.labels);
  check_table_shape("semiring " + s.name + " add", n, n, s.add, n);
  check_table_shape("semiring " + s.name + " mul", n, n, s.mul, n);
  if (s.zero >= n || s.one >= n)
    throw MalformedTable("semiring " + s.name + ": zero/one out of range");

  auto add = [&](Elem a, Elem b) { return s.add[a * n + b]; };
  auto mul = [&](Elem a, Elem b) { return s.mul[a * n + b]; };
  std::vector<Violation> out;

  auto scan3 = [&](const char* axiom, auto holds) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c)
          if (!holds(a, b, c)) {
            out.push_back({axiom, {a, b, c}});
            return;
          }
  };
  auto scan2 = [&](const char* axiom, auto holds) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        if (!holds(a, b)) {
          out.push_back({axiom, {a, b}});
          return;
        }
  };
  auto scan1 = [&](const char* axiom, auto holds) {
    for (Elem a = 0; a < n; ++a)
      if (!holds(a)) {
        out.push_back({axiom, {a}});
        return;
      }
  };

  scan3("add_associative", [&](Elem a, Elem b, Elem c) {
    return add(add(a, b), c) == add(a, add(b, c));
  });
  scan2("add_commutative", [&](Elem a, Elem b) { return add(a, b) == add(b, a); });
  scan1("add_identity", [&](Elem a) { return add(a, s.zero) == a && add(s.zero, a) == a; });
  scan3("mul_associative", [&](Elem a, Elem b, Elem c) {
    return mul(mul(a, b), c) == mul(a, mul(b, c));
  });
  scan1("mul_identity", [&](Elem a) { return mul(a, s.one) == a && mul(s.one, a) == a; });
  scan3("left_distributive", [&](Elem a, Elem b, Elem c) {
    return mul(a, add(b, c)) == add(mul(a, b), mul(a, c));
  });
  scan3("right_distributive", [&](Elem a, Elem b, Elem c) {
    return mul(add(a, b), c) == add(mul(a, c), mul(b, c));
  });
  // Witness (0,a) for 0a != 0 and (a,0) for a0 != 0, whichever comes first.
  for (Elem a = 0; a < n; ++a) {
    if (mul(s.zero, a) != s.zero) {
      out.push_back({"zero_absorbing", {s.zero, a}});
      break;
    }
    if (mul(a, s.zero) != s.zero) {
      out.push_back({"zero_absorbing", {a, s.zero}});
      break;
    }
  }
  if (s.one == s.zero) out.push_back({"one_distinct_zero", {s.one, s.zero}});
  return out;
}

SemiringPtr build_semiring(SemiringSpec spec) {
  auto v = validate_semiring(spec);
  if (!v.empty()) throw AxiomViolation(std::move(v));
  return std::make_shared<const Semiring>(std::move(spec));
}

}  // namespace semiflat
