#pragma once

#include <span>

#include "permlab/universe.hpp"

namespace permlab {

/// Result of the X/Y closure recursion over a base set B.
///
/// y_part is the parent-descent chain from B (B included), x_part the
/// case-1 child saturation of x_part ∪ y_part. Every x_part atom has index
/// 0, which is what bounds the nonzero-index part of a closure.
struct ClosureSet {
  AtomSet base;
  AtomSet members;
  AtomSet x_part;
  AtomSet y_part;

  bool contains(AtomId a) const;
};

/// True iff `c` contains every case-1 child (inside the truncation) of each
/// member and the parent of each non-base member.
bool is_closed(const Universe& u, std::span<const AtomId> c);

/// Least closed superset of `base`. Atoms must belong to `u`.
ClosureSet closure(const Universe& u, std::span<const AtomId> base);

/// { a in Cl(base) : pr3(a) != 0 }.
AtomSet nonzero_index_part(const Universe& u, std::span<const AtomId> base);

/// Every a in Cl({b}) has level > 0 or pr1(a) lestar q, for b in S_q.
/// Returns true or throws ShapeViolation naming the offending atom id.
bool closure_shape_lestar(const Universe& u, AtomId b, ElementId q);

/// Every a in Cl({c}) satisfies pr1(c) le pr1(a), for base atoms c.
bool closure_shape_le(const Universe& u, AtomId c);

/// Sorts and deduplicates.
AtomSet make_atom_set(std::vector<AtomId> atoms);
AtomSet set_union(std::span<const AtomId> a, std::span<const AtomId> b);

}  // namespace permlab
