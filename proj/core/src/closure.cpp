#include "permlab/closure.hpp"

#include <algorithm>
#include <string>

#include "permlab/error.hpp"

namespace permlab {

bool ClosureSet::contains(AtomId a) const {
  return std::binary_search(members.begin(), members.end(), a);
}

AtomSet make_atom_set(std::vector<AtomId> atoms) {
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  return atoms;
}

AtomSet set_union(std::span<const AtomId> a, std::span<const AtomId> b) {
  AtomSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_closed(const Universe& u, std::span<const AtomId> c) {
  std::vector<char> in(u.size(), 0);
  for (AtomId a : c) in[a] = 1;
  for (AtomId a : c) {
    const Atom& x = u.atom(a);
    if (!x.is_base() && !in[x.parent]) return false;
    for (AtomId child : u.case1_children(a))
      if (!in[child]) return false;
  }
  return true;
}

ClosureSet closure(const Universe& u, std::span<const AtomId> base) {
  ClosureSet out;
  out.base = make_atom_set({base.begin(), base.end()});
  for (AtomId a : out.base)
    if (a >= u.size()) throw Error(ErrorCode::UnknownAtom, std::to_string(a));

  std::vector<char> in_x(u.size(), 0), in_y(u.size(), 0);
  // Semi-naive rounds: only atoms new in round m can contribute to round m+1.
  std::vector<AtomId> new_x, new_y(out.base);
  for (AtomId a : new_y) in_y[a] = 1;
  while (!new_x.empty() || !new_y.empty()) {
    std::vector<AtomId> next_x, next_y;
    for (AtomId b : new_y) {
      const Atom& x = u.atom(b);
      if (!x.is_base() && !in_y[x.parent]) {
        in_y[x.parent] = 1;
        next_y.push_back(x.parent);
      }
    }
    for (const auto* frontier : {&new_x, &new_y})
      for (AtomId a : *frontier)
        for (AtomId child : u.case1_children(a))
          if (!in_x[child]) {
            in_x[child] = 1;
            next_x.push_back(child);
          }
    new_x = std::move(next_x);
    new_y = std::move(next_y);
  }

  for (AtomId a = 0; a < u.size(); ++a) {
    if (in_x[a]) out.x_part.push_back(a);
    if (in_y[a]) out.y_part.push_back(a);
    if (in_x[a] || in_y[a]) out.members.push_back(a);
  }
  return out;
}

AtomSet nonzero_index_part(const Universe& u, std::span<const AtomId> base) {
  AtomSet out;
  for (AtomId a : closure(u, base).members)
    if (u.atom(a).index != 0) out.push_back(a);
  return out;
}

bool closure_shape_lestar(const Universe& u, AtomId b, ElementId q) {
  if (u.atom(b).element != q)
    throw Error(ErrorCode::PreconditionViolated, "atom not in sector");
  const AtomId single[] = {b};
  for (AtomId a : closure(u, single).members) {
    const Atom& x = u.atom(a);
    if (x.level == 0 && !u.order().lestar(x.element, q))
      throw Error(ErrorCode::ShapeViolation, std::to_string(a));
  }
  return true;
}

bool closure_shape_le(const Universe& u, AtomId c) {
  const Atom& base = u.atom(c);
  if (!base.is_base()) throw Error(ErrorCode::PreconditionViolated, "atom not in A_0");
  const AtomId single[] = {c};
  for (AtomId a : closure(u, single).members)
    if (!u.order().le(base.element, u.atom(a).element))
      throw Error(ErrorCode::ShapeViolation, std::to_string(a));
  return true;
}

}  // namespace permlab
