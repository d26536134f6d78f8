#include "semiflat/hom.hpp"

#include <algorithm>
#include <map>

namespace semiflat {

namespace {

constexpr Elem kNone = UINT32_MAX;

using ActionPairs = std::vector<std::pair<std::size_t, std::size_t>>;

ActionPairs preserved_actions(const Semimodule& m, const Semimodule& n, const HomOptions& opt) {
  if (opt.linearity == Linearity::additive || !m.has_action()) return {};
  if (opt.source_action) {
    const Action& a = m.actions().at(*opt.source_action);
    auto j = n.action_on(*a.ring, a.side);
    if (!j)
      throw SideMismatch("no action of " + n.name() + " matches action " +
                         std::to_string(*opt.source_action) + " of " + m.name());
    return {{*opt.source_action, *j}};
  }
  auto pairs = matched_actions(m, n);
  if (pairs.empty())
    throw SideMismatch("no action of " + m.name() + " matches an action of " + n.name());
  return pairs;
}

// Greedy minimal generating set under addition and the preserved actions.
std::vector<Elem> generators(const Semimodule& m, const ActionPairs& acts) {
  auto generated = [&](const std::vector<Elem>& seed) {
    Mask mask(m.size(), false);
    std::vector<Elem> members;
    auto push = [&](Elem x) {
      if (!mask[x]) {
        mask[x] = true;
        members.push_back(x);
      }
    };
    push(m.zero());
    for (Elem x : seed) push(x);
    for (std::size_t i = 0; i < members.size(); ++i) {
      Elem x = members[i];
      for (std::size_t j = 0; j <= i; ++j) push(m.add(x, members[j]));
      for (auto [k, unused] : acts)
        for (Elem s = 0; s < m.actions()[k].ring->size(); ++s) push(m.act(k, x, s));
    }
    return mask;
  };
  std::vector<Elem> gens;
  for (Elem x = 0; x < m.size(); ++x)
    if (x != m.zero()) gens.push_back(x);
  for (std::size_t i = 0; i < gens.size();) {
    std::vector<Elem> rest;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i) rest.push_back(gens[j]);
    if (generated(rest)[gens[i]]) gens.erase(gens.begin() + i);
    else ++i;
  }
  return gens;
}

struct HomSearch {
  const Semimodule& m;
  const Semimodule& n;
  ActionPairs acts;
  std::vector<Elem> gens;
  const Limits& limits;
  std::vector<Elem> phi;
  std::vector<Elem> mapped;
  std::vector<std::vector<Elem>> found;
  std::uint64_t nodes = 0;

  // Maps z to w and closes the partial map; appends every new element to
  // mapped. False on a conflict.
  bool assign_and_close(Elem z, Elem w) {
    std::vector<Elem> queue;
    auto assign = [&](Elem x, Elem y) {
      if (phi[x] != kNone) return phi[x] == y;
      phi[x] = y;
      mapped.push_back(x);
      queue.push_back(x);
      return true;
    };
    if (!assign(z, w)) return false;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      Elem x = queue[q];
      for (std::size_t i = 0; i < mapped.size(); ++i) {
        Elem y = mapped[i];
        if (!assign(m.add(x, y), n.add(phi[x], phi[y]))) return false;
      }
      for (auto [i, j] : acts)
        for (Elem s = 0; s < m.actions()[i].ring->size(); ++s)
          if (!assign(m.act(i, x, s), n.act(j, phi[x], s))) return false;
    }
    return true;
  }

  void undo_to(std::size_t mark) {
    while (mapped.size() > mark) {
      phi[mapped.back()] = kNone;
      mapped.pop_back();
    }
  }

  void run(std::size_t k) {
    if (++nodes > limits.max_hom_candidates)
      throw SizeBoundExceeded("enumerate_homs: search for " + m.name() + " -> " + n.name() +
                              " exceeds " + std::to_string(limits.max_hom_candidates) + " nodes");
    if (k == gens.size()) {
      found.push_back(phi);
      if (found.size() > limits.max_hom_size)
        throw SizeBoundExceeded("enumerate_homs: more than " + std::to_string(limits.max_hom_size) +
                                " maps " + m.name() + " -> " + n.name());
      return;
    }
    Elem g = gens[k];
    if (phi[g] != kNone) {
      run(k + 1);
      return;
    }
    for (Elem h = 0; h < n.size(); ++h) {
      std::size_t mark = mapped.size();
      if (assign_and_close(g, h)) run(k + 1);
      undo_to(mark);
    }
  }
};

std::string map_label(const Semimodule& target, const std::vector<Elem>& map) {
  std::string out = "[";
  for (std::size_t i = 0; i < map.size(); ++i) out += (i ? "," : "") + target.label(map[i]);
  return out + "]";
}

}  // namespace

std::optional<Elem> HomMonoid::find(const std::vector<Elem>& map) const {
  auto it = std::lower_bound(maps.begin(), maps.end(), map,
                             [](const Morphism& f, const std::vector<Elem>& v) { return f.map() < v; });
  if (it == maps.end() || it->map() != map) return std::nullopt;
  return static_cast<Elem>(it - maps.begin());
}

Elem HomMonoid::index_of(const Morphism& f) const {
  auto i = find(f.map());
  if (!i) throw UnknownObject("map is not an element of " + module->name());
  return *i;
}

std::vector<std::vector<Elem>> enumerate_homs(const Semimodule& m, const Semimodule& n,
                                              const HomOptions& opt, const Limits& limits) {
  HomSearch s{m, n, preserved_actions(m, n, opt), {}, limits, {}, {}, {}, 0};
  s.gens = generators(m, s.acts);
  s.phi.assign(m.size(), kNone);
  if (s.assign_and_close(m.zero(), n.zero())) s.run(0);
  std::sort(s.found.begin(), s.found.end());
  return std::move(s.found);
}

HomMonoid hom_monoid(const ModulePtr& m, const ModulePtr& n, const HomOptions& opt,
                     const Limits& limits) {
  HomMonoid h;
  h.source = m;
  h.target = n;
  auto raw = enumerate_homs(*m, *n, opt, limits);
  for (auto& map : raw) h.maps.push_back(Morphism::trusted(m, n, map, opt.linearity));

  const std::size_t k = h.maps.size();
  std::map<std::vector<Elem>, Elem> index;
  for (Elem i = 0; i < k; ++i) index.emplace(h.maps[i].map(), i);
  auto lookup = [&](const std::vector<Elem>& map) {
    auto it = index.find(map);
    if (it == index.end())
      throw NotCommutative("induced action does not stay inside Hom(" + m->name() + ", " +
                           n->name() + ")");
    return it->second;
  };

  SemimoduleSpec s;
  s.name = "Hom(" + m->name() + "," + n->name() + ")";
  for (const auto& f : h.maps) s.labels.push_back(map_label(*n, f.map()));
  s.add.resize(k * k);
  for (Elem a = 0; a < k; ++a)
    for (Elem b = 0; b < k; ++b) {
      std::vector<Elem> sum(m->size());
      for (Elem x = 0; x < m->size(); ++x) sum[x] = n->add(h.maps[a](x), h.maps[b](x));
      s.add[a * k + b] = lookup(sum);
    }
  s.zero = lookup(std::vector<Elem>(m->size(), n->zero()));

  auto acts = preserved_actions(*m, *n, opt);
  std::vector<bool> src_used(m->actions().size(), false), tgt_used(n->actions().size(), false);
  for (auto [i, j] : acts) {
    src_used[i] = true;
    tgt_used[j] = true;
  }
  auto build_action = [&](const SemiringPtr& ring, Side side, auto&& apply) {
    Action act{ring, side, std::vector<Elem>(k * ring->size())};
    for (Elem f = 0; f < k; ++f)
      for (Elem t = 0; t < ring->size(); ++t) {
        std::vector<Elem> img(m->size());
        for (Elem x = 0; x < m->size(); ++x) img[x] = apply(h.maps[f], x, t);
        act.table[f * ring->size() + t] = lookup(img);
      }
    s.actions.push_back(std::move(act));
  };
  std::optional<std::size_t> src_other, tgt_other;
  for (std::size_t i = 0; i < src_used.size() && !src_other; ++i)
    if (!src_used[i]) src_other = i;
  for (std::size_t j = 0; j < tgt_used.size() && !tgt_other; ++j)
    if (!tgt_used[j]) tgt_other = j;
  if (src_other) {
    const Action& a = m->actions()[*src_other];
    std::size_t i = *src_other;
    build_action(a.ring, opposite(a.side),
                 [&](const Morphism& f, Elem x, Elem t) { return f(m->act(i, x, t)); });
  } else if (tgt_other) {
    const Action& a = n->actions()[*tgt_other];
    std::size_t j = *tgt_other;
    build_action(a.ring, a.side, [&](const Morphism& f, Elem x, Elem t) { return n->act(j, f(x), t); });
  } else if (!acts.empty() && n->actions()[acts.front().second].ring->is_commutative()) {
    const Action& a = n->actions()[acts.front().second];
    std::size_t j = acts.front().second;
    build_action(a.ring, a.side, [&](const Morphism& f, Elem x, Elem t) { return n->act(j, f(x), t); });
  }
  h.module = std::make_shared<const Semimodule>(std::move(s));
  return h;
}

Morphism hom_cov(const HomMonoid& from, const HomMonoid& to, const Morphism& f) {
  std::vector<Elem> map;
  for (const Morphism& phi : from.maps) map.push_back(to.index_of(compose(f, phi)));
  return Morphism::trusted(from.module, to.module, std::move(map));
}

Morphism hom_contra(const Morphism& f, const HomMonoid& from, const HomMonoid& to) {
  std::vector<Elem> map;
  for (const Morphism& phi : from.maps) map.push_back(to.index_of(compose(phi, f)));
  return Morphism::trusted(from.module, to.module, std::move(map));
}

Morphism evaluation_at_one(const HomMonoid& h) {
  const Semiring* ring = h.source->ring();
  if (!ring || h.source->size() != ring->size())
    throw ShapeMismatch("evaluation_at_one needs the regular module as source");
  std::vector<Elem> map;
  for (const Morphism& phi : h.maps) map.push_back(phi(ring->one()));
  return Morphism::trusted(h.module, h.target, std::move(map));
}

}  // namespace semiflat
