#include "permlab/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "permlab/error.hpp"

namespace permlab {

namespace {

MembershipAudit fail(std::string what, AtomId witness) {
  return MembershipAudit{false, std::move(what), witness};
}

void require_same_universe(const Universe& a, const Universe& b) {
  if (&a != &b) throw Error(ErrorCode::UniverseMismatch, "permutations over different universes");
}

bool is_stratum_prefix(const Universe& u, std::size_t prefix) {
  for (Level n = 0; n <= u.depth(); ++n)
    if (u.stratum_size(n) == prefix) return true;
  return prefix == 0;
}

}  // namespace

MembershipAudit audit_membership(const Universe& u, std::span<const AtomId> map) {
  return audit_membership(u, map, u.size());
}

MembershipAudit audit_membership(const Universe& u, std::span<const AtomId> map,
                                 std::size_t prefix) {
  if (map.size() != prefix || prefix > u.size() || !is_stratum_prefix(u, prefix))
    return fail("not a total map on a stratum", kNoAtom);
  std::vector<char> hit(prefix, 0);
  for (AtomId a = 0; a < prefix; ++a) {
    const AtomId image = map[a];
    if (image >= prefix) return fail("image outside the stratum", a);
    if (hit[image]) return fail("not injective", a);
    hit[image] = 1;
  }
  for (AtomId a = 0; a < prefix; ++a) {
    const Atom& x = u.atom(a);
    const Atom& y = u.atom(map[a]);
    if (x.level != y.level) return fail("stratum not preserved", a);
    if (x.element != y.element) return fail("pr1 not preserved", a);
    if (!x.is_base() && y.parent != map[x.parent]) return fail("pr2 not equivariant", a);
  }
  return {};
}

bool is_member(const Universe& u, std::span<const AtomId> map) {
  return audit_membership(u, map).member;
}

Permutation Permutation::identity(const Universe& u) {
  std::vector<AtomId> map(u.size());
  std::iota(map.begin(), map.end(), AtomId{0});
  return Permutation(u, std::move(map));
}

Permutation Permutation::from_map(const Universe& u, std::vector<AtomId> map) {
  if (auto audit = audit_membership(u, map); !audit) {
    std::string detail = audit.violation;
    if (audit.witness != kNoAtom) detail += " at atom " + std::to_string(audit.witness);
    throw Error(ErrorCode::NotAMember, detail);
  }
  return Permutation(u, std::move(map));
}

Permutation Permutation::from_cycles(const Universe& u, const Cycles& cycles) {
  std::vector<AtomId> map(u.size());
  std::iota(map.begin(), map.end(), AtomId{0});
  std::vector<char> seen(u.size(), 0);
  for (const auto& cycle : cycles)
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const AtomId a = cycle[i];
      if (a >= u.size()) throw Error(ErrorCode::UnknownAtom, std::to_string(a));
      if (seen[a]) throw Error(ErrorCode::PreconditionViolated, "cycles are not disjoint");
      seen[a] = 1;
      map[a] = cycle[(i + 1) % cycle.size()];
    }
  return from_map(u, std::move(map));
}

bool Permutation::fixes_pointwise(std::span<const AtomId> atoms) const {
  return std::all_of(atoms.begin(), atoms.end(), [this](AtomId a) { return map_[a] == a; });
}

bool Permutation::is_identity() const {
  for (AtomId a = 0; a < map_.size(); ++a)
    if (map_[a] != a) return false;
  return true;
}

Cycles Permutation::cycles() const {
  Cycles out;
  std::vector<char> seen(map_.size(), 0);
  for (AtomId start = 0; start < map_.size(); ++start) {
    if (seen[start] || map_[start] == start) continue;
    std::vector<AtomId> cycle;
    for (AtomId a = start; !seen[a]; a = map_[a]) {
      seen[a] = 1;
      cycle.push_back(a);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

Permutation compose(const Permutation& f, const Permutation& g) {
  require_same_universe(f.universe(), g.universe());
  std::vector<AtomId> map(g.map_.size());
  for (AtomId a = 0; a < map.size(); ++a) map[a] = f.map_[g.map_[a]];
  return Permutation(f.universe(), std::move(map));
}

Permutation inverse(const Permutation& f) {
  std::vector<AtomId> map(f.map_.size());
  for (AtomId a = 0; a < map.size(); ++a) map[f.map_[a]] = a;
  return Permutation(f.universe(), std::move(map));
}

Permutation equivariant_extension(const Universe& u, std::span<const AtomId> g, Level m,
                                  const AtomSet* closed) {
  if (m > u.depth())
    throw Error(ErrorCode::PreconditionViolated, "level " + std::to_string(m) + " above depth");
  const std::size_t prefix = u.stratum_size(m);
  if (auto audit = audit_membership(u, g, prefix); !audit)
    throw Error(ErrorCode::NotAMember, audit.violation);
  if (closed) {
    if (!is_closed(u, *closed)) throw Error(ErrorCode::PreconditionViolated, "set is not closed");
    for (AtomId a : *closed)
      if (a < prefix && g[a] != a)
        throw Error(ErrorCode::PreconditionViolated, "g moves closed atom " + std::to_string(a));
  }

  std::vector<AtomId> map(g.begin(), g.end());
  map.resize(u.size());
  for (AtomId a = static_cast<AtomId>(prefix); a < u.size(); ++a) {
    const Atom& x = u.atom(a);
    auto image = u.find(Atom{x.level, x.element, map[x.parent], x.index});
    if (!image) throw Error(ErrorCode::InvariantBreach, "no image for atom " + std::to_string(a));
    map[a] = *image;
  }

  Permutation pi(u, std::move(map));
  if (closed && !pi.fixes_pointwise(*closed))
    throw Error(ErrorCode::InvariantBreach, "extension moves a closed atom");
  return pi;
}

Permutation index_transposition(const Universe& u, const Family& family, Index k, Index l) {
  const auto& order = u.order();
  if (family.element >= order.size() || family.level > u.depth())
    throw Error(ErrorCode::NotAFamily, "no such family");
  if (family.parent == kNoAtom) {
    if (family.level != 0) throw Error(ErrorCode::NotAFamily, "base family above level 0");
  } else {
    if (family.parent >= u.size() || family.level == 0 ||
        u.level(family.parent) >= family.level)
      throw Error(ErrorCode::NotAFamily, "bad parent");
    const ElementId from = u.atom(family.parent).element;
    if (order.le(from, family.element) || !order.lestar(from, family.element))
      throw Error(ErrorCode::NotAFamily, "not a case-2 family");
  }
  if (k >= u.index_budget() || l >= u.index_budget())
    throw Error(ErrorCode::IndexOutOfRange,
                std::to_string(std::max(k, l)) + " >= " + std::to_string(u.index_budget()));
  if (k == l) throw Error(ErrorCode::PreconditionViolated, "k == l");

  const AtomId c = *u.find(family, k);
  const AtomId d = *u.find(family, l);
  std::vector<AtomId> g(u.stratum_size(family.level));
  std::iota(g.begin(), g.end(), AtomId{0});
  std::swap(g[c], g[d]);
  return equivariant_extension(u, g, family.level);
}

Permutation mover(const Universe& u, std::span<const AtomId> b, AtomId c) {
  const ClosureSet cl = closure(u, b);
  if (c >= u.size()) throw Error(ErrorCode::UnknownAtom, std::to_string(c));
  if (cl.contains(c)) throw Error(ErrorCode::InClosure, std::to_string(c));

  // Moving the parent of a case-1 atom moves the atom itself.
  AtomId target = c;
  while (u.kind(target) == AtomKind::case1) target = u.atom(target).parent;

  const Family family = u.family(target);
  std::vector<char> used(u.index_budget(), 0);
  used[u.atom(target).index] = 1;
  for (AtomId a : cl.members)
    if (u.family(a) == family) used[u.atom(a).index] = 1;
  auto fresh = std::find(used.begin(), used.end(), 0);
  if (fresh == used.end())
    throw Error(ErrorCode::IndexBudgetExhausted,
                "no free index below " + std::to_string(u.index_budget()) + " for atom " +
                    std::to_string(target),
                u.index_budget() + 1);

  Permutation pi = index_transposition(u, family, u.atom(target).index,
                                       static_cast<Index>(fresh - used.begin()));
  if (!pi.fixes_pointwise(cl.members) || !pi.moves(c))
    throw Error(ErrorCode::InvariantBreach, "mover contract failed for atom " + std::to_string(c));
  return pi;
}

std::vector<Permutation> fixing_generators(const Universe& u, std::span<const AtomId> b) {
  const ClosureSet cl = closure(u, b);
  std::vector<Permutation> gens;
  // Family members are consecutive ids starting at the index-0 atom.
  for (AtomId first = 0; first < u.size(); ++first) {
    const AtomKind kind = u.kind(first);
    if (kind == AtomKind::case1 || u.atom(first).index != 0) continue;
    std::vector<Index> free;
    for (Index k = 0; k < u.index_budget(); ++k)
      if (!cl.contains(first + k)) free.push_back(k);
    for (std::size_t i = 0; i + 1 < free.size(); ++i)
      gens.push_back(index_transposition(u, u.family(first), free[i], free[i + 1]));
  }
  return gens;
}

std::vector<AtomSet> orbits(const Universe& u, std::span<const Permutation> gens) {
  for (const auto& g : gens) require_same_universe(u, g.universe());
  std::vector<AtomId> parent(u.size());
  std::iota(parent.begin(), parent.end(), AtomId{0});
  auto find = [&](AtomId a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& g : gens)
    for (AtomId a = 0; a < u.size(); ++a) {
      AtomId x = find(a), y = find(g(a));
      if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }

  std::vector<AtomSet> blocks;
  std::vector<std::size_t> block_of(u.size(), SIZE_MAX);
  for (AtomId a = 0; a < u.size(); ++a) {
    const AtomId root = find(a);
    if (block_of[root] == SIZE_MAX) {
      block_of[root] = blocks.size();
      blocks.emplace_back();
    }
    blocks[block_of[root]].push_back(a);
  }
  return blocks;
}

AtomSet common_fixed_points(const Universe& u, std::span<const Permutation> gens) {
  for (const auto& g : gens) require_same_universe(u, g.universe());
  AtomSet out;
  for (AtomId a = 0; a < u.size(); ++a)
    if (std::none_of(gens.begin(), gens.end(), [a](const Permutation& g) { return g.moves(a); }))
      out.push_back(a);
  return out;
}

std::vector<AtomId> canonical_embedding(const Permutation& f, const Universe& larger) {
  const Universe& small = f.universe();
  if (!(small.order() == larger.order()) || larger.depth() < small.depth() ||
      larger.index_budget() < small.index_budget())
    throw Error(ErrorCode::PreconditionViolated, "target is not a larger truncation");

  std::vector<AtomId> small_of(larger.size(), kNoAtom);
  std::vector<AtomId> large_of(small.size(), kNoAtom);
  for (AtomId a = 0; a < larger.size(); ++a) {
    const Atom& x = larger.atom(a);
    std::optional<AtomId> s;
    if (x.is_base())
      s = small.find(x);
    else if (small_of[x.parent] != kNoAtom)
      s = small.find(Atom{x.level, x.element, small_of[x.parent], x.index});
    if (s) {
      small_of[a] = *s;
      large_of[*s] = a;
    }
  }

  std::vector<AtomId> map(larger.size());
  for (AtomId a = 0; a < larger.size(); ++a) {
    const Atom& x = larger.atom(a);
    if (small_of[a] != kNoAtom) {
      map[a] = large_of[f(small_of[a])];
    } else if (x.is_base()) {
      map[a] = a;
    } else {
      auto image = larger.find(Atom{x.level, x.element, map[x.parent], x.index});
      if (!image) throw Error(ErrorCode::InvariantBreach, "canonical image missing");
      map[a] = *image;
    }
  }
  return map;
}

}  // namespace permlab
