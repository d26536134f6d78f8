#pragma once

// Test-side reference computations. They work straight from the
// definitions on small carriers and share no code with the library beyond
// reading tables.

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "semiflat/morphism.hpp"
#include "semiflat/semimodule.hpp"

namespace oracle {

using semiflat::Elem;
using semiflat::Semimodule;

// Least congruence containing `pairs`, by iterating the closure rules on a
// relation matrix until nothing changes.
inline std::vector<std::vector<bool>> fixpoint_congruence(const Semimodule& m,
                                                          const std::vector<std::pair<Elem, Elem>>& pairs,
                                                          bool scalars) {
  const std::size_t n = m.size();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
  for (auto [a, b] : pairs) r[a][b] = r[b][a] = true;
  for (bool changed = true; changed;) {
    changed = false;
    auto set = [&](std::size_t a, std::size_t b) {
      if (!r[a][b]) r[a][b] = changed = true;
    };
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (!r[a][b]) continue;
        set(b, a);
        for (std::size_t c = 0; c < n; ++c) {
          if (r[b][c]) set(a, c);
          set(m.add(a, c), m.add(b, c));
        }
        if (scalars)
          for (std::size_t k = 0; k < m.actions().size(); ++k)
            for (Elem s = 0; s < m.actions()[k].ring->size(); ++s) set(m.act(k, a, s), m.act(k, b, s));
      }
  }
  return r;
}

struct OracleTensor {
  std::size_t classes = 0;
  std::vector<std::size_t> tau;  // class of m(x)n at m * |N| + n
  std::size_t tau_at(Elem m, Elem n, std::size_t right_size) const { return tau[m * right_size + n]; }
};

// The tensor as a quotient of the box with one cyclic coordinate per pair
// (m, n) of nonzero elements, the coordinate bounded by the additive order
// of m. Relations: additivity in each argument and balancing through the
// first action of each side. Both modules must act through the same
// commutative semiring, or not at all.
inline OracleTensor dense_tensor(const Semimodule& m, const Semimodule& n, std::uint64_t max_box = 1u << 21) {
  struct Coord {
    Elem a, b;
    std::uint32_t index, period;
  };
  auto order = [](const Semimodule& s, Elem x) {
    std::vector<Elem> seen{s.zero()};
    Elem cur = s.zero();
    for (;;) {
      cur = s.add(cur, x);
      for (std::uint32_t i = 0; i < seen.size(); ++i)
        if (seen[i] == cur) return std::pair<std::uint32_t, std::uint32_t>{i, static_cast<std::uint32_t>(seen.size() - i)};
      seen.push_back(cur);
    }
  };
  std::vector<Coord> coords;
  std::vector<std::int64_t> coord_of(m.size() * n.size(), -1);
  std::uint64_t box = 1;
  for (Elem a = 0; a < m.size(); ++a)
    for (Elem b = 0; b < n.size(); ++b) {
      if (a == m.zero() || b == n.zero()) continue;
      auto [i, p] = order(m, a);
      coord_of[a * n.size() + b] = static_cast<std::int64_t>(coords.size());
      coords.push_back({a, b, i, p});
      box *= i + p;
      if (box > max_box) throw std::length_error("oracle box too large");
    }
  const std::size_t d = coords.size();
  std::vector<std::uint64_t> stride(d);
  for (std::size_t c = 0, s = 1; c < d; ++c) {
    stride[c] = s;
    s *= coords[c].index + coords[c].period;
  }
  auto digit = [&](std::uint64_t code, std::size_t c) {
    return static_cast<std::uint32_t>(code / stride[c] % (coords[c].index + coords[c].period));
  };
  auto add_digit = [&](std::size_t c, std::uint32_t x, std::uint32_t y) {
    std::uint32_t s = x + y, i = coords[c].index, p = coords[c].period;
    return s < i + p ? s : i + (s - i) % p;
  };
  auto add = [&](std::uint64_t u, std::uint64_t v) {
    std::uint64_t out = 0;
    for (std::size_t c = 0; c < d; ++c) out += add_digit(c, digit(u, c), digit(v, c)) * stride[c];
    return out;
  };
  // The box element of the word a(x)b (zero when either side is zero).
  auto gen = [&](Elem a, Elem b) -> std::uint64_t {
    std::int64_t c = coord_of[a * n.size() + b];
    return c < 0 ? 0 : stride[static_cast<std::size_t>(c)];
  };

  std::vector<std::pair<std::uint64_t, std::uint64_t>> rel;
  for (Elem a = 0; a < m.size(); ++a)
    for (Elem a2 = 0; a2 < m.size(); ++a2)
      for (Elem b = 0; b < n.size(); ++b) rel.emplace_back(gen(m.add(a, a2), b), add(gen(a, b), gen(a2, b)));
  for (Elem a = 0; a < m.size(); ++a)
    for (Elem b = 0; b < n.size(); ++b)
      for (Elem b2 = 0; b2 < n.size(); ++b2) rel.emplace_back(gen(a, n.add(b, b2)), add(gen(a, b), gen(a, b2)));
  if (m.has_action() && n.has_action()) {
    const auto& ring = *m.actions()[0].ring;
    for (Elem a = 0; a < m.size(); ++a)
      for (Elem s = 0; s < ring.size(); ++s)
        for (Elem b = 0; b < n.size(); ++b) rel.emplace_back(gen(m.act(0, a, s), b), gen(a, n.act(0, b, s)));
  }

  // Congruence of a commutative monoid generated by rel: the equivalence
  // generated by all translates of rel.
  std::vector<std::uint64_t> parent(box);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::uint64_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : rel) {
    if (u == v) continue;
    for (std::uint64_t c = 0; c < box; ++c) {
      std::uint64_t x = find(add(u, c)), y = find(add(v, c));
      if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
  }
  std::vector<std::int64_t> id(box, -1);
  OracleTensor t;
  for (std::uint64_t x = 0; x < box; ++x) {
    std::uint64_t r = find(x);
    if (id[r] < 0) id[r] = static_cast<std::int64_t>(t.classes++);
  }
  t.tau.resize(m.size() * n.size());
  for (Elem a = 0; a < m.size(); ++a)
    for (Elem b = 0; b < n.size(); ++b) t.tau[a * n.size() + b] = static_cast<std::size_t>(id[find(gen(a, b))]);
  return t;
}

// The set form of masks, for exactness flags.
inline std::vector<bool> image_of(const semiflat::Morphism& f) {
  std::vector<bool> out(f.target()->size(), false);
  for (Elem x = 0; x < f.source()->size(); ++x) out[f(x)] = true;
  return out;
}

inline std::vector<bool> kernel_of(const semiflat::Morphism& g) {
  std::vector<bool> out(g.source()->size(), false);
  for (Elem x = 0; x < g.source()->size(); ++x) out[x] = g(x) == g.target()->zero();
  return out;
}

// Least superset closed under: y1 + x = y2 with y1, y2 inside puts x inside.
inline std::vector<bool> subtractive_closure(const Semimodule& m, std::vector<bool> y) {
  for (bool changed = true; changed;) {
    changed = false;
    for (Elem x = 0; x < m.size(); ++x) {
      if (y[x]) continue;
      for (Elem a = 0; a < m.size() && !y[x]; ++a)
        if (y[a] && y[m.add(a, x)]) y[x] = changed = true;
    }
  }
  return y;
}

// g(a) = g(b) implies a + k1 = b + k2 for kernel elements k1, k2.
inline bool k_uniform(const semiflat::Morphism& g) {
  const Semimodule& m = *g.source();
  auto ker = kernel_of(g);
  for (Elem a = 0; a < m.size(); ++a)
    for (Elem b = 0; b < m.size(); ++b) {
      if (g(a) != g(b)) continue;
      bool found = false;
      for (Elem k1 = 0; k1 < m.size() && !found; ++k1)
        for (Elem k2 = 0; k2 < m.size() && !found; ++k2)
          found = ker[k1] && ker[k2] && m.add(a, k1) == m.add(b, k2);
      if (!found) return false;
    }
  return true;
}

}  // namespace oracle
