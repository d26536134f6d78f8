#include "semiflat/search.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "semiflat/isomorphism.hpp"

namespace semiflat {

namespace {

constexpr Elem kUnknown = static_cast<Elem>(-1);

bool associative(const std::vector<Elem>& add, std::size_t n) {
  for (std::size_t a = 1; a < n; ++a)
    for (std::size_t b = 1; b < n; ++b)
      for (std::size_t c = 1; c < n; ++c)
        if (add[add[a * n + b] * n + c] != add[a * n + add[b * n + c]]) return false;
  return true;
}

std::vector<std::string> digit_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

// Fills consequences of x(a+b) = xa + xb and the multiplicative law until
// nothing changes. False on a contradiction.
bool propagate(const Semimodule& m, const Semiring& s, Side side, std::vector<Elem>& t) {
  const std::size_t k = s.size();
  auto set = [&](std::size_t x, Elem sc, Elem v, bool& changed) {
    Elem& slot = t[x * k + sc];
    if (slot == kUnknown) {
      slot = v;
      changed = true;
      return true;
    }
    return slot == v;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (Elem x = 0; x < m.size(); ++x)
      for (Elem a = 0; a < k; ++a) {
        Elem xa = t[x * k + a];
        if (xa == kUnknown) continue;
        for (Elem b = 0; b < k; ++b) {
          Elem xb = t[x * k + b];
          if (xb != kUnknown && !set(x, s.add(a, b), m.add(xa, xb), changed)) return false;
          // right: (xa)b = x(ab); left: b(ax) = (ba)x.
          Elem sc = side == Side::right ? s.mul(a, b) : s.mul(b, a);
          Elem v = t[xa * k + b];
          if (v != kUnknown && !set(x, sc, v, changed)) return false;
        }
      }
  }
  return true;
}

void extend_actions(const ModulePtr& monoid, const SemiringPtr& s, Side side,
                    std::vector<Elem> t, std::vector<std::vector<Elem>>& out) {
  if (!propagate(*monoid, *s, side, t)) return;
  auto hole = std::find(t.begin(), t.end(), kUnknown);
  if (hole == t.end()) {
    out.push_back(std::move(t));
    return;
  }
  for (Elem v = 0; v < monoid->size(); ++v) {
    *hole = v;
    extend_actions(monoid, s, side, t, out);
  }
}

}  // namespace

std::vector<ModulePtr> enumerate_monoids(std::size_t n, const Limits& limits) {
  if (n == 0) return {};
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) cells.emplace_back(i, j);
  std::uint64_t total = 1;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    total *= n;
    if (total > limits.max_hom_candidates)
      throw SizeBoundExceeded("enumerate_monoids: " + std::to_string(n) + "^" +
                              std::to_string(cells.size()) + " tables");
  }
  std::vector<Elem> add(n * n, 0);
  for (Elem i = 0; i < n; ++i) add[i] = add[i * n] = i;
  std::map<std::vector<Elem>, ModulePtr> by_code;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t rest = code;
    for (auto [i, j] : cells) {
      add[i * n + j] = add[j * n + i] = static_cast<Elem>(rest % n);
      rest /= n;
    }
    if (!associative(add, n)) continue;
    SemimoduleSpec spec{"", digit_labels(n), add, 0, {}};
    auto m = std::make_shared<const Semimodule>(std::move(spec));
    by_code.emplace(canonical_form(*m), m);
  }
  std::vector<ModulePtr> out;
  for (auto& [code, m] : by_code) out.push_back(m);
  return out;
}

std::vector<ModulePtr> enumerate_actions(const ModulePtr& monoid, const SemiringPtr& s, Side side) {
  const std::size_t k = s->size(), n = monoid->size();
  std::vector<Elem> t(n * k, kUnknown);
  for (Elem x = 0; x < n; ++x) {
    t[x * k + s->zero()] = monoid->zero();
    t[x * k + s->one()] = x;
  }
  for (Elem sc = 0; sc < k; ++sc) t[monoid->zero() * k + sc] = monoid->zero();
  std::vector<std::vector<Elem>> tables;
  extend_actions(monoid, s, side, std::move(t), tables);
  std::map<std::vector<Elem>, ModulePtr> by_code;
  for (auto& table : tables) {
    SemimoduleSpec spec = monoid->spec();
    spec.actions = {Action{s, side, std::move(table)}};
    if (!validate_semimodule(spec).empty()) continue;
    auto m = std::make_shared<const Semimodule>(std::move(spec));
    by_code.emplace(canonical_form(*m), m);
  }
  std::vector<ModulePtr> out;
  for (auto& [code, m] : by_code) out.push_back(m);
  return out;
}

std::vector<ModulePtr> enumerate_semimodules(const SemiringPtr& s, std::size_t max_size, Side side,
                                             const Limits& limits) {
  if (s->size() > limits.max_semiring_size)
    throw SizeBoundExceeded("enumerate_semimodules: |" + s->name() + "| = " +
                            std::to_string(s->size()));
  std::vector<ModulePtr> out;
  for (std::size_t n = 1; n <= max_size; ++n) {
    std::size_t k = 0;
    for (const ModulePtr& monoid : enumerate_monoids(n, limits))
      for (const ModulePtr& m : enumerate_actions(monoid, s, side)) {
        SemimoduleSpec spec = m->spec();
        spec.name = s->name() + ".M" + std::to_string(n) + "." + std::to_string(k++);
        out.push_back(std::make_shared<const Semimodule>(std::move(spec)));
      }
  }
  return out;
}

SearchReport search_counterexamples(const SearchConfig& config) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(clock::now() - start).count(); };
  SearchReport report;
  for (const SemiringPtr& s : config.semirings) {
    if (!report.complete) break;
    std::vector<ModulePtr> universe = enumerate_semimodules(s, config.max_size, Side::right,
                                                            config.limits);
    for (const ModulePtr& f : universe) {
      if (elapsed() > config.budget_seconds) {
        report.complete = false;
        break;
      }
      Classification c;
      c.module = f;
      c.semiring = s->name();
      for (const ModulePtr& m : universe) {
        FlatnessVerdict v;
        try {
          v = flatness_verdict(f, m, config.limits);
        } catch (const BoxBoundExceeded&) {
          c.skipped.push_back(m->name());
          continue;
        } catch (const SizeBoundExceeded&) {
          c.skipped.push_back(m->name());
          continue;
        }
        ++report.pairs_evaluated;
        if (c.mono_flat && !v.mono_flat) {
          c.mono_flat = false;
          c.mono_witness = m->name() + ": " + v.mono_witness;
        }
        if (c.in_is && !v.in_is) {
          c.in_is = false;
          c.is_witness = m->name() + ": " + v.is_witness;
        }
        if (c.uniformly_flat && !v.uniformly_m_flat) {
          c.uniformly_flat = false;
          c.uniform_witness = m->name() + ": " + v.uniform_witness;
        }
        if (!v.lattice_holds())
          report.violations.push_back({"in_is_and_mono_flat_implies_uniform", f->name(), m->name()});
        if (!v.sequence_agrees())
          report.violations.push_back({"sequence_form_agrees", f->name(), m->name()});
      }
      try {
        if (auto cert = find_flat_certificate(f, config.certificate_rank, config.limits)) {
          c.certified_flat = true;
          std::size_t size = cert->nodes.front().section.target()->size(), rank = 0;
          for (std::size_t p = 1; p < size; p *= s->size()) ++rank;
          c.certificate_rank = static_cast<unsigned>(rank);
        }
      } catch (const SizeBoundExceeded&) {
      }
      if (c.certified_flat && !c.uniformly_flat)
        report.violations.push_back({"certified_implies_uniform", f->name(), ""});
      if (c.uniformly_flat && !c.certified_flat) report.candidates.push_back(f->name());
      report.records.push_back(std::move(c));
    }
  }
  report.elapsed_seconds = elapsed();
  return report;
}

void require_complete(const SearchReport& report) {
  if (!report.complete)
    throw TimeBudgetExceeded("search stopped after " + std::to_string(report.records.size()) +
                             " modules");
}

}  // namespace semiflat
