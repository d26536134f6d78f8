#pragma once

// Helpers shared by the suite translation units.

#include <string>
#include <vector>

#include "semiflat/catalog.hpp"
#include "semiflat/hom.hpp"
#include "semiflat/suite.hpp"

namespace semiflat::suite_detail {

constexpr std::size_t kMaxFailures = 5;

inline void fail(SuiteRow& row, const std::string& what) {
  row.passed = false;
  if (row.failures.size() < kMaxFailures) row.failures.push_back(what);
}

inline SuiteRow make_row(int id, std::string tag, std::string title) {
  SuiteRow r;
  r.id = id;
  r.tag = std::move(tag);
  r.title = std::move(title);
  r.passed = true;
  return r;
}

inline std::vector<Morphism> homs(const ModulePtr& a, const ModulePtr& b,
                                  const Limits& limits = default_limits()) {
  std::vector<Morphism> out;
  for (auto& map : enumerate_homs(*a, *b, {}, limits)) out.push_back(Morphism::trusted(a, b, map));
  return out;
}

// Catalog modules over s with at most max_size elements.
inline std::vector<ModulePtr> small_modules(const Semiring& s, std::size_t max_size) {
  std::vector<ModulePtr> out;
  for (auto& m : default_catalog().modules_over(s))
    if (m->size() <= max_size) out.push_back(m);
  return out;
}

inline const SemiringPtr& catalog_ring(const std::string& name) {
  return *default_catalog().find_semiring(name);
}

inline const ModulePtr& catalog_module(const std::string& name) {
  return *default_catalog().find_module(name);
}

}  // namespace semiflat::suite_detail
