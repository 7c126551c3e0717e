#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "permlab/order.hpp"

namespace permlab {

using AtomId = std::uint32_t;
using Level = std::uint32_t;
using Index = std::uint32_t;

inline constexpr AtomId kNoAtom = std::numeric_limits<AtomId>::max();
inline constexpr std::size_t kDefaultSizeCap = 1'000'000;

/// Sorted, duplicate-free list of atom ids.
using AtomSet = std::vector<AtomId>;

/// The quadruple <level, element, parent, index>. Base atoms have
/// parent == kNoAtom.
struct Atom {
  Level level = 0;
  ElementId element = 0;
  AtomId parent = kNoAtom;
  Index index = 0;

  bool is_base() const noexcept { return parent == kNoAtom; }
  friend bool operator==(const Atom&, const Atom&) = default;
};

enum class AtomKind {
  base,   // <0, p, {}, k>
  case1,  // <n+1, q, a, 0> with pr1(a) strictly below q
  case2,  // <n+1, q, a, k> with pr1(a) not le q but lestar q
};

/// Atoms sharing <level, element, parent>; only base and case-2 families
/// have more than one index.
struct Family {
  Level level = 0;
  ElementId element = 0;
  AtomId parent = kNoAtom;

  friend bool operator==(const Family&, const Family&) = default;
};

/// The truncated hierarchy T(N, K): strata A_0 .. A_N with indices below K.
///
/// Atoms are interned with dense ids assigned in (level, element, parent,
/// index) order, so every stratum A_n is the id prefix [0, stratum_size(n))
/// and a parent always has a smaller id than its children.
class Universe {
 public:
  Universe(const Universe&) = delete;
  Universe& operator=(const Universe&) = delete;

  const DoublyOrderedSet& order() const noexcept { return order_; }
  std::size_t depth() const noexcept { return depth_; }
  std::size_t index_budget() const noexcept { return index_budget_; }

  std::size_t size() const noexcept { return atoms_.size(); }
  const Atom& atom(AtomId a) const { return atoms_[a]; }
  std::span<const Atom> atoms() const noexcept { return atoms_; }
  AtomKind kind(AtomId a) const;
  Family family(AtomId a) const;

  /// |A_n| for n <= depth.
  std::size_t stratum_size(Level n) const { return stratum_end_.at(n); }
  /// Least n with a in A_n, i.e. pr0(a).
  Level level(AtomId a) const { return atoms_[a].level; }

  /// Every successor atom whose parent is `a`, in id order.
  std::span<const AtomId> children(AtomId a) const;
  /// The case-1 children of `a` (index 0, one per level and strict upper bound).
  std::span<const AtomId> case1_children(AtomId a) const;

  std::optional<AtomId> find(const Atom& key) const;
  std::optional<AtomId> find(const Family& family, Index k) const;

  /// S_p = { a : pr1(a) = p }, in id order.
  std::span<const AtomId> sector(ElementId p) const { return sectors_.at(p); }
  /// Name-based variant. Throws UnknownElement.
  std::span<const AtomId> sector(std::string_view p) const { return sector(order_.id(p)); }

 private:
  Universe() = default;
  friend std::shared_ptr<const Universe> build_universe(const DoublyOrderedSet&, std::size_t,
                                                        std::size_t, std::size_t);

  DoublyOrderedSet order_;
  std::size_t depth_ = 0;
  std::size_t index_budget_ = 1;
  std::vector<Atom> atoms_;
  std::vector<std::size_t> stratum_end_;
  // CSR adjacency: children of a are child_ids_[child_begin_[a] .. child_begin_[a+1]).
  std::vector<std::uint32_t> child_begin_;
  std::vector<AtomId> child_ids_;
  std::vector<std::uint32_t> case1_begin_;
  std::vector<AtomId> case1_ids_;
  std::vector<std::vector<AtomId>> sectors_;
};

/// Builds T(depth, index_budget). Errors: PreconditionViolated for
/// index_budget == 0, SizeBudgetExceeded past `size_cap` atoms.
std::shared_ptr<const Universe> build_universe(const DoublyOrderedSet& order, std::size_t depth,
                                               std::size_t index_budget,
                                               std::size_t size_cap = kDefaultSizeCap);

/// pr_i of the quadruple: level, element, parent (empty for base atoms), index.
using Projection = std::variant<Level, ElementId, std::optional<AtomId>, Index>;
Projection project(const Universe& u, AtomId a, int i);

}  // namespace permlab
