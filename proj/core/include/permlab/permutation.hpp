#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "permlab/closure.hpp"
#include "permlab/universe.hpp"

namespace permlab {

/// Disjoint-cycle form: non-trivial cycles only, each starting at its
/// smallest atom id, ordered by that id.
using Cycles = std::vector<std::vector<AtomId>>;

/// Outcome of a membership test against the truncated group. On failure,
/// `violation` names the first broken condition and `witness` the atom.
struct MembershipAudit {
  bool member = true;
  std::string violation;
  AtomId witness = kNoAtom;

  explicit operator bool() const noexcept { return member; }
};

/// Checks a total map on the first `prefix` atoms (a whole stratum A_m, or
/// the full universe when prefix == u.size()): bijective, level-preserving,
/// pr1-preserving and pr2-equivariant.
MembershipAudit audit_membership(const Universe& u, std::span<const AtomId> map);
MembershipAudit audit_membership(const Universe& u, std::span<const AtomId> map,
                                 std::size_t prefix);
bool is_member(const Universe& u, std::span<const AtomId> map);

/// A member of the truncated group, stored as a dense image array over atom
/// ids. Holds a non-owning pointer: the Universe must outlive it.
class Permutation {
 public:
  static Permutation identity(const Universe& u);
  /// Throws NotAMember with the audit's diagnostics.
  static Permutation from_map(const Universe& u, std::vector<AtomId> map);
  static Permutation from_cycles(const Universe& u, const Cycles& cycles);

  const Universe& universe() const noexcept { return *universe_; }
  AtomId operator()(AtomId a) const { return map_[a]; }
  std::span<const AtomId> map() const noexcept { return map_; }

  bool moves(AtomId a) const { return map_[a] != a; }
  bool fixes_pointwise(std::span<const AtomId> atoms) const;
  bool is_identity() const;
  Cycles cycles() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.universe_ == b.universe_ && a.map_ == b.map_;
  }

 private:
  Permutation(const Universe& u, std::vector<AtomId> map) : universe_(&u), map_(std::move(map)) {}
  friend Permutation equivariant_extension(const Universe&, std::span<const AtomId>, Level,
                                           const AtomSet*);
  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);

  const Universe* universe_;
  std::vector<AtomId> map_;
};

/// (f ∘ g)(a) = f(g(a)). Throws UniverseMismatch.
Permutation compose(const Permutation& f, const Permutation& g);
Permutation inverse(const Permutation& f);

/// Extends a member of the truncated group on A_m (given as an image array of
/// length |A_m|) to A_N by the level recursion
///   <n, q, a, k>  ->  <n, q, f(a), k>,
/// keeping every index. When `closed` is given it must be a closed set fixed
/// pointwise by `g` on A_m; the extension then fixes all of it.
/// Errors: NotAMember, PreconditionViolated.
Permutation equivariant_extension(const Universe& u, std::span<const AtomId> g, Level m,
                                  const AtomSet* closed = nullptr);

/// Swaps <family, k> and <family, l> and carries the swap up through their
/// descendants. Family must be a base family or a case-2 family.
/// Errors: NotAFamily, IndexOutOfRange, PreconditionViolated (k == l).
Permutation index_transposition(const Universe& u, const Family& family, Index k, Index l);

/// A member fixing Cl(b) pointwise and moving c. Case-1 atoms recurse to
/// their parent; base and case-2 atoms are swapped with the least index l
/// such that no closure member of the same family carries l.
/// Errors: InClosure, IndexBudgetExhausted.
Permutation mover(const Universe& u, std::span<const AtomId> b, AtomId c);

/// Transpositions generating the subgroup of family-index permutations that
/// fix Cl(b) pointwise: per family, adjacent pairs among the indices whose
/// atoms lie outside the closure.
std::vector<Permutation> fixing_generators(const Universe& u, std::span<const AtomId> b);

/// Orbit partition of A_N under the group generated by `gens`, blocks sorted
/// by least atom. Throws UniverseMismatch.
std::vector<AtomSet> orbits(const Universe& u, std::span<const Permutation> gens);

/// Atoms fixed by every generator.
AtomSet common_fixed_points(const Universe& u, std::span<const Permutation> gens);

/// Lifts f from T(N, K) to a larger truncation T(N', K') of the same order
/// (N' >= N, K' >= K): atoms outside the smaller universe are fixed at the
/// base level and follow their parent above it. Returns the raw image array
/// so callers can audit it against the larger universe.
/// Errors: PreconditionViolated.
std::vector<AtomId> canonical_embedding(const Permutation& f, const Universe& larger);

}  // namespace permlab
