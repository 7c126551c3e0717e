#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace permlab {

using ElementId = std::uint32_t;

/// Raw, unvalidated encoding of a doubly ordered set as it arrives from a
/// file: element names plus the two relations as literal pair sets.
struct OrderSpec {
  std::vector<std::string> elements;
  std::set<std::pair<std::string, std::string>> le;
  std::set<std::pair<std::string, std::string>> lestar;

  friend bool operator==(const OrderSpec&, const OrderSpec&) = default;
};

/// Dense square boolean matrix over a carrier indexed by ElementId.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n) : n_(n), bits_(n * n, 0) {}

  std::size_t size() const noexcept { return n_; }
  bool operator()(ElementId p, ElementId q) const { return bits_[p * n_ + q] != 0; }
  void set(ElementId p, ElementId q, bool value = true) { bits_[p * n_ + q] = value ? 1 : 0; }

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// Validated triple <P, le, lestar>: le is a partial order, lestar a preorder
/// and le is contained in lestar. The carrier is sorted lexicographically;
/// ElementId is the position in that order.
class DoublyOrderedSet {
 public:
  DoublyOrderedSet() = default;

  std::size_t size() const noexcept { return carrier_.size(); }
  const std::vector<std::string>& carrier() const noexcept { return carrier_; }
  const std::string& name(ElementId e) const { return carrier_.at(e); }

  /// Throws UnknownElement.
  ElementId id(std::string_view name) const;
  bool contains(std::string_view name) const;

  bool le(ElementId p, ElementId q) const { return le_(p, q); }
  bool lestar(ElementId p, ElementId q) const { return lestar_(p, q); }
  /// Strict part of le: p le q and p != q.
  bool strict_less(ElementId p, ElementId q) const { return p != q && le_(p, q); }

  const Relation& le_relation() const noexcept { return le_; }
  const Relation& lestar_relation() const noexcept { return lestar_; }

  OrderSpec to_spec() const;

  friend bool operator==(const DoublyOrderedSet&, const DoublyOrderedSet&) = default;

 private:
  friend DoublyOrderedSet validate_order(const OrderSpec& spec);
  friend void for_each_small_doubly_ordered(
      std::size_t n, const std::function<void(const DoublyOrderedSet&)>& visit);

  std::vector<std::string> carrier_;
  Relation le_;
  Relation lestar_;
};

/// Checks the three axiom groups by exhaustive pair and triple scans.
/// Errors: DuplicateElement, UnknownElement, NotReflexive(p),
/// NotAntisymmetric(p,q), NotTransitive(p,q,r), NotContained(p,q).
DoublyOrderedSet validate_order(const OrderSpec& spec);

/// Name-based strict comparison. Throws UnknownElement.
bool strict_less(const DoublyOrderedSet& d, std::string_view p, std::string_view q);

/// Replaces both relations by their reflexive-transitive closures and adds
/// the closed le to lestar. Antisymmetry is not repaired.
OrderSpec complete_relations(const OrderSpec& spec);

/// Every labeled doubly ordered set on {e1..en}: each labeled partial order
/// paired with each labeled preorder containing it, in a fixed order
/// (le bitmask ascending, then lestar bitmask ascending). n <= 3.
void for_each_small_doubly_ordered(
    std::size_t n, const std::function<void(const DoublyOrderedSet&)>& visit);
std::vector<DoublyOrderedSet> enumerate_small_doubly_ordered(std::size_t n);

inline constexpr std::size_t kMaxEnumerationSize = 3;

}  // namespace permlab
