#include "semiflat/isomorphism.hpp"

#include <algorithm>
#include <numeric>

#include "semiflat/quotient.hpp"
#include "semiflat/subsemimodule.hpp"

namespace semiflat {

std::vector<std::uint64_t> element_signatures(const Semimodule& m) {
  auto orders = element_orders(m);
  std::vector<std::uint64_t> sig(m.size());
  for (Elem x = 0; x < m.size(); ++x) {
    std::uint64_t absorbs = 0, absorbed_by = 0, orbit = 0;
    for (Elem y = 0; y < m.size(); ++y) {
      if (m.add(x, y) == x) ++absorbs;
      if (m.add(x, y) == y) ++absorbed_by;
    }
    if (m.has_action()) {
      Mask seen(m.size(), false);
      for (Elem s = 0; s < m.actions()[0].ring->size(); ++s) seen[m.act(0, x, s)] = true;
      orbit = mask_count(seen);
    }
    std::uint64_t nz = x == m.zero() ? 0 : 1;
    sig[x] = (nz << 60) | (std::uint64_t(std::min<std::uint32_t>(orders[x].index, 255)) << 52) |
             (std::uint64_t(std::min<std::uint32_t>(orders[x].period, 255)) << 44) |
             (std::min<std::uint64_t>(absorbs, 4095) << 32) |
             (std::min<std::uint64_t>(absorbed_by, 4095) << 20) | std::min<std::uint64_t>(orbit, 4095);
  }
  return sig;
}

namespace {

struct IsoSearch {
  const Semimodule& a;
  const Semimodule& b;
  std::vector<std::pair<std::size_t, std::size_t>> acts;
  std::vector<std::uint64_t> sa, sb;
  std::vector<Elem> gens;
  std::vector<Elem> phi, inv;
  static constexpr Elem kNone = UINT32_MAX;

  // Extends phi to everything reachable from the mapped set. Records newly
  // mapped elements in `trail` so the caller can undo; false on conflict.
  bool propagate(std::vector<Elem>& trail) {
    for (;;) {
      std::vector<Elem> mapped;
      for (Elem x = 0; x < a.size(); ++x)
        if (phi[x] != kNone) mapped.push_back(x);
      bool grew = false;
      auto assign = [&](Elem z, Elem w) {
        if (phi[z] != kNone) return phi[z] == w;
        if (inv[w] != kNone || sa[z] != sb[w]) return false;
        phi[z] = w;
        inv[w] = z;
        trail.push_back(z);
        grew = true;
        return true;
      };
      for (Elem x : mapped)
        for (Elem y : mapped)
          if (!assign(a.add(x, y), b.add(phi[x], phi[y]))) return false;
      for (auto [i, j] : acts)
        for (Elem x : mapped)
          for (Elem s = 0; s < a.actions()[i].ring->size(); ++s)
            if (!assign(a.act(i, x, s), b.act(j, phi[x], s))) return false;
      if (!grew) return true;
    }
  }

  void undo(const std::vector<Elem>& trail) {
    for (Elem z : trail) {
      inv[phi[z]] = kNone;
      phi[z] = kNone;
    }
  }

  bool run(std::size_t k) {
    if (k == gens.size()) return true;
    Elem g = gens[k];
    if (phi[g] != kNone) return run(k + 1);
    for (Elem h = 0; h < b.size(); ++h) {
      if (inv[h] != kNone || sa[g] != sb[h]) continue;
      std::vector<Elem> trail{g};
      phi[g] = h;
      inv[h] = g;
      if (propagate(trail) && run(k + 1)) return true;
      undo(trail);
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<Elem>> find_isomorphism(const Semimodule& a, const Semimodule& b,
                                                  bool with_actions) {
  if (a.size() != b.size()) return std::nullopt;
  IsoSearch s{a, b, {}, element_signatures(a), element_signatures(b), {}, {}, {}};
  if (with_actions) {
    if (a.actions().size() != b.actions().size()) return std::nullopt;
    s.acts = matched_actions(a, b);
    if (s.acts.size() != a.actions().size()) return std::nullopt;
  } else {
    // Signatures include the primary orbit size; recompute without it.
    auto strip = [](std::vector<std::uint64_t>& v) {
      for (auto& x : v) x &= ~std::uint64_t(4095);
    };
    strip(s.sa);
    strip(s.sb);
  }
  {
    auto x = s.sa, y = s.sb;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return std::nullopt;
  }
  s.gens = with_actions ? minimal_generating_set(a) : minimal_additive_generating_set(a);
  s.phi.assign(a.size(), IsoSearch::kNone);
  s.inv.assign(b.size(), IsoSearch::kNone);
  std::vector<Elem> trail{a.zero()};
  s.phi[a.zero()] = b.zero();
  s.inv[b.zero()] = a.zero();
  if (!s.propagate(trail) || !s.run(0)) return std::nullopt;
  for (Elem x = 0; x < a.size(); ++x)
    if (s.phi[x] == IsoSearch::kNone) return std::nullopt;
  return s.phi;
}

std::vector<Elem> canonical_form(const Semimodule& m) {
  const std::size_t n = m.size();
  auto sig = element_signatures(m);
  // order[pos] = element placed at pos; positions sorted by signature.
  std::vector<Elem> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(), [&](Elem x, Elem y) { return sig[x] < sig[y]; });
  std::vector<std::size_t> block_start(n);
  for (std::size_t i = 0; i < n; ++i)
    block_start[i] = (i > 0 && sig[order[i]] == sig[order[i - 1]]) ? block_start[i - 1] : i;

  std::uint64_t perms = 1;
  for (std::size_t i = 0; i < n; ++i) {
    perms *= (i - block_start[i] + 1);
    if (perms > 5'000'000)
      throw SizeBoundExceeded("canonical_form: too many relabelings for " + m.name());
  }

  auto encode = [&](const std::vector<Elem>& pos_to_elem) {
    std::vector<Elem> pos(n);
    for (Elem p = 0; p < n; ++p) pos[pos_to_elem[p]] = p;
    std::vector<Elem> code;
    code.push_back(static_cast<Elem>(n));
    for (Elem p = 0; p < n; ++p)
      for (Elem q = 0; q < n; ++q) code.push_back(pos[m.add(pos_to_elem[p], pos_to_elem[q])]);
    for (const Action& act : m.actions()) {
      code.push_back(act.side == Side::left ? 0 : 1);
      code.push_back(static_cast<Elem>(act.ring->size()));
      for (Elem p = 0; p < n; ++p)
        for (Elem s = 0; s < act.ring->size(); ++s)
          code.push_back(pos[act.table[pos_to_elem[p] * act.ring->size() + s]]);
    }
    return code;
  };

  // Enumerate permutations within each signature block.
  std::vector<Elem> cur = order;
  std::vector<Elem> best;
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && block_start[j] == i) ++j;
    blocks.emplace_back(i, j);
    std::sort(cur.begin() + i, cur.begin() + j);
    i = j;
  }
  auto step = [&](auto&& self, std::size_t bi) -> void {
    if (bi == blocks.size()) {
      auto code = encode(cur);
      if (best.empty() || code < best) best = std::move(code);
      return;
    }
    auto [lo, hi] = blocks[bi];
    do {
      self(self, bi + 1);
    } while (std::next_permutation(cur.begin() + lo, cur.begin() + hi));
  };
  step(step, 0);
  return best;
}

}  // namespace semiflat
