#include "permlab/universe.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "permlab/error.hpp"

namespace permlab {

AtomKind Universe::kind(AtomId a) const {
  const Atom& x = atoms_[a];
  if (x.is_base()) return AtomKind::base;
  return order_.strict_less(atoms_[x.parent].element, x.element) ? AtomKind::case1
                                                                 : AtomKind::case2;
}

Family Universe::family(AtomId a) const {
  const Atom& x = atoms_[a];
  return Family{x.level, x.element, x.parent};
}

std::span<const AtomId> Universe::children(AtomId a) const {
  return std::span<const AtomId>(child_ids_).subspan(child_begin_[a],
                                                     child_begin_[a + 1] - child_begin_[a]);
}

std::span<const AtomId> Universe::case1_children(AtomId a) const {
  return std::span<const AtomId>(case1_ids_).subspan(case1_begin_[a],
                                                     case1_begin_[a + 1] - case1_begin_[a]);
}

std::optional<AtomId> Universe::find(const Atom& key) const {
  if (key.element >= order_.size() || key.index >= index_budget_) return std::nullopt;
  if (key.is_base()) {
    if (key.level != 0) return std::nullopt;
    return static_cast<AtomId>(key.element * index_budget_ + key.index);
  }
  if (key.parent >= atoms_.size() || key.level > depth_) return std::nullopt;
  auto kids = children(key.parent);
  auto order_key = [this](AtomId id) {
    const Atom& x = atoms_[id];
    return std::tuple{x.level, x.element, x.index};
  };
  const auto want = std::tuple{key.level, key.element, key.index};
  auto it = std::lower_bound(kids.begin(), kids.end(), want,
                             [&](AtomId id, const auto& w) { return order_key(id) < w; });
  if (it == kids.end() || order_key(*it) != want) return std::nullopt;
  return *it;
}

std::optional<AtomId> Universe::find(const Family& family, Index k) const {
  return find(Atom{family.level, family.element, family.parent, k});
}

std::shared_ptr<const Universe> build_universe(const DoublyOrderedSet& order, std::size_t depth,
                                               std::size_t index_budget, std::size_t size_cap) {
  if (index_budget == 0) throw Error(ErrorCode::PreconditionViolated, "index_budget must be >= 1");
  if (size_cap == 0) throw Error(ErrorCode::PreconditionViolated, "size_cap must be >= 1");

  std::shared_ptr<Universe> u(new Universe());
  u->order_ = order;
  u->depth_ = depth;
  u->index_budget_ = index_budget;

  const auto n_elements = static_cast<ElementId>(order.size());
  auto grow = [&](std::size_t extra) {
    if (u->atoms_.size() + extra > size_cap)
      throw Error(ErrorCode::SizeBudgetExceeded,
                  "more than " + std::to_string(size_cap) + " atoms");
  };

  grow(std::size_t{n_elements} * index_budget);
  for (ElementId p = 0; p < n_elements; ++p)
    for (Index k = 0; k < index_budget; ++k) u->atoms_.push_back(Atom{0, p, kNoAtom, k});
  u->stratum_end_.push_back(u->atoms_.size());

  // A_{n+1} \ A_n, ordered by (q, parent, k).
  for (Level n = 0; n < depth; ++n) {
    const auto prefix = static_cast<AtomId>(u->atoms_.size());
    for (ElementId q = 0; q < n_elements; ++q)
      for (AtomId a = 0; a < prefix; ++a) {
        const ElementId from = u->atoms_[a].element;
        if (order.strict_less(from, q)) {
          grow(1);
          u->atoms_.push_back(Atom{n + 1, q, a, 0});
        } else if (!order.le(from, q) && order.lestar(from, q)) {
          grow(index_budget);
          for (Index k = 0; k < index_budget; ++k) u->atoms_.push_back(Atom{n + 1, q, a, k});
        }
      }
    u->stratum_end_.push_back(u->atoms_.size());
  }

  const std::size_t total = u->atoms_.size();
  std::vector<std::uint32_t> child_count(total, 0), case1_count(total, 0);
  for (AtomId a = 0; a < total; ++a) {
    const Atom& x = u->atoms_[a];
    if (x.is_base()) continue;
    ++child_count[x.parent];
    if (order.strict_less(u->atoms_[x.parent].element, x.element)) ++case1_count[x.parent];
  }
  auto offsets = [total](const std::vector<std::uint32_t>& count) {
    std::vector<std::uint32_t> begin(total + 1, 0);
    for (std::size_t a = 0; a < total; ++a) begin[a + 1] = begin[a] + count[a];
    return begin;
  };
  u->child_begin_ = offsets(child_count);
  u->case1_begin_ = offsets(case1_count);
  u->child_ids_.resize(u->child_begin_.back());
  u->case1_ids_.resize(u->case1_begin_.back());
  std::vector<std::uint32_t> child_fill(u->child_begin_.begin(), u->child_begin_.end() - 1);
  std::vector<std::uint32_t> case1_fill(u->case1_begin_.begin(), u->case1_begin_.end() - 1);
  // Ids are visited in increasing order, so each adjacency list is sorted.
  for (AtomId a = 0; a < total; ++a) {
    const Atom& x = u->atoms_[a];
    if (x.is_base()) continue;
    u->child_ids_[child_fill[x.parent]++] = a;
    if (order.strict_less(u->atoms_[x.parent].element, x.element))
      u->case1_ids_[case1_fill[x.parent]++] = a;
  }

  u->sectors_.assign(n_elements, {});
  for (AtomId a = 0; a < total; ++a) u->sectors_[u->atoms_[a].element].push_back(a);
  return u;
}

Projection project(const Universe& u, AtomId a, int i) {
  const Atom& x = u.atom(a);
  switch (i) {
    case 0: return Projection{std::in_place_index<0>, x.level};
    case 1: return Projection{std::in_place_index<1>, x.element};
    case 2:
      return Projection{std::in_place_index<2>,
                        x.is_base() ? std::optional<AtomId>{} : std::optional<AtomId>{x.parent}};
    case 3: return Projection{std::in_place_index<3>, x.index};
    default: throw Error(ErrorCode::PreconditionViolated, "projection index " + std::to_string(i));
  }
}

}  // namespace permlab
