#include "permlab/order.hpp"

#include <algorithm>
#include <map>

#include "permlab/error.hpp"

namespace permlab {

namespace {

std::string join(std::initializer_list<std::string_view> parts) {
  std::string out;
  for (auto part : parts) {
    if (!out.empty()) out += ',';
    out += part;
  }
  return out;
}

bool transitive(const Relation& r, ElementId* a, ElementId* b, ElementId* c) {
  const auto n = static_cast<ElementId>(r.size());
  for (ElementId x = 0; x < n; ++x)
    for (ElementId y = 0; y < n; ++y) {
      if (!r(x, y)) continue;
      for (ElementId z = 0; z < n; ++z)
        if (r(y, z) && !r(x, z)) {
          *a = x, *b = y, *c = z;
          return false;
        }
    }
  return true;
}

bool transitive(const Relation& r) {
  ElementId a, b, c;
  return transitive(r, &a, &b, &c);
}

bool antisymmetric(const Relation& r) {
  for (ElementId x = 0; x < r.size(); ++x)
    for (ElementId y = x + 1; y < r.size(); ++y)
      if (r(x, y) && r(y, x)) return false;
  return true;
}

}  // namespace

ElementId DoublyOrderedSet::id(std::string_view name) const {
  auto it = std::lower_bound(carrier_.begin(), carrier_.end(), name);
  if (it == carrier_.end() || *it != name)
    throw Error(ErrorCode::UnknownElement, std::string(name));
  return static_cast<ElementId>(it - carrier_.begin());
}

bool DoublyOrderedSet::contains(std::string_view name) const {
  return std::binary_search(carrier_.begin(), carrier_.end(), name);
}

OrderSpec DoublyOrderedSet::to_spec() const {
  OrderSpec spec;
  spec.elements = carrier_;
  for (ElementId p = 0; p < size(); ++p)
    for (ElementId q = 0; q < size(); ++q) {
      if (le_(p, q)) spec.le.emplace(carrier_[p], carrier_[q]);
      if (lestar_(p, q)) spec.lestar.emplace(carrier_[p], carrier_[q]);
    }
  return spec;
}

DoublyOrderedSet validate_order(const OrderSpec& spec) {
  DoublyOrderedSet d;
  d.carrier_ = spec.elements;
  std::sort(d.carrier_.begin(), d.carrier_.end());
  if (auto dup = std::adjacent_find(d.carrier_.begin(), d.carrier_.end()); dup != d.carrier_.end())
    throw Error(ErrorCode::DuplicateElement, *dup);

  const std::size_t n = d.carrier_.size();
  auto load = [&](const auto& pairs) {
    Relation r(n);
    for (const auto& [a, b] : pairs) r.set(d.id(a), d.id(b));
    return r;
  };
  d.le_ = load(spec.le);
  d.lestar_ = load(spec.lestar);

  const auto& names = d.carrier_;
  for (const Relation* r : {&d.le_, &d.lestar_})
    for (ElementId p = 0; p < n; ++p)
      if (!(*r)(p, p)) throw Error(ErrorCode::NotReflexive, names[p]);

  for (ElementId p = 0; p < n; ++p)
    for (ElementId q = p + 1; q < n; ++q)
      if (d.le_(p, q) && d.le_(q, p))
        throw Error(ErrorCode::NotAntisymmetric, join({names[p], names[q]}));

  for (const Relation* r : {&d.le_, &d.lestar_}) {
    ElementId a, b, c;
    if (!transitive(*r, &a, &b, &c))
      throw Error(ErrorCode::NotTransitive, join({names[a], names[b], names[c]}));
  }

  for (ElementId p = 0; p < n; ++p)
    for (ElementId q = 0; q < n; ++q)
      if (d.le_(p, q) && !d.lestar_(p, q))
        throw Error(ErrorCode::NotContained, join({names[p], names[q]}));

  return d;
}

bool strict_less(const DoublyOrderedSet& d, std::string_view p, std::string_view q) {
  return d.strict_less(d.id(p), d.id(q));
}

OrderSpec complete_relations(const OrderSpec& spec) {
  std::map<std::string, std::size_t> index;
  for (const auto& e : spec.elements) index.emplace(e, index.size());
  const std::size_t n = spec.elements.size();

  // Warshall over the input order; pairs naming unknown elements are kept
  // verbatim so validate_order can report them.
  auto close = [&](const std::set<std::pair<std::string, std::string>>& pairs) {
    std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
    std::set<std::pair<std::string, std::string>> foreign;
    for (const auto& pr : pairs) {
      auto a = index.find(pr.first), b = index.find(pr.second);
      if (a == index.end() || b == index.end()) {
        foreign.insert(pr);
        continue;
      }
      m[a->second][b->second] = true;
    }
    for (std::size_t i = 0; i < n; ++i) m[i][i] = true;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (m[i][k])
          for (std::size_t j = 0; j < n; ++j)
            if (m[k][j]) m[i][j] = true;
    return std::pair{m, foreign};
  };

  auto [le, le_foreign] = close(spec.le);
  std::set<std::pair<std::string, std::string>> star_input = spec.lestar;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (le[i][j]) star_input.emplace(spec.elements[i], spec.elements[j]);
  auto [lestar, lestar_foreign] = close(star_input);

  OrderSpec out;
  out.elements = spec.elements;
  out.le = std::move(le_foreign);
  out.lestar = std::move(lestar_foreign);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (le[i][j]) out.le.emplace(spec.elements[i], spec.elements[j]);
      if (lestar[i][j]) out.lestar.emplace(spec.elements[i], spec.elements[j]);
    }
  return out;
}

void for_each_small_doubly_ordered(
    std::size_t n, const std::function<void(const DoublyOrderedSet&)>& visit) {
  if (n > kMaxEnumerationSize)
    throw Error(ErrorCode::BudgetExceeded,
                "n=" + std::to_string(n) + " > " + std::to_string(kMaxEnumerationSize));

  std::vector<std::pair<ElementId, ElementId>> off_diagonal;
  for (ElementId p = 0; p < n; ++p)
    for (ElementId q = 0; q < n; ++q)
      if (p != q) off_diagonal.emplace_back(p, q);
  const std::uint32_t masks = 1u << off_diagonal.size();

  auto relation = [&](std::uint32_t mask) {
    Relation r(n);
    for (ElementId p = 0; p < n; ++p) r.set(p, p);
    for (std::size_t bit = 0; bit < off_diagonal.size(); ++bit)
      if (mask & (1u << bit)) r.set(off_diagonal[bit].first, off_diagonal[bit].second);
    return r;
  };

  DoublyOrderedSet d;
  for (std::size_t i = 1; i <= n; ++i) d.carrier_.push_back("e" + std::to_string(i));

  for (std::uint32_t le_mask = 0; le_mask < masks; ++le_mask) {
    Relation le = relation(le_mask);
    if (!antisymmetric(le) || !transitive(le)) continue;
    for (std::uint32_t star_mask = 0; star_mask < masks; ++star_mask) {
      if ((star_mask & le_mask) != le_mask) continue;
      Relation lestar = relation(star_mask);
      if (!transitive(lestar)) continue;
      d.le_ = le;
      d.lestar_ = std::move(lestar);
      visit(d);
    }
  }
}

std::vector<DoublyOrderedSet> enumerate_small_doubly_ordered(std::size_t n) {
  std::vector<DoublyOrderedSet> out;
  for_each_small_doubly_ordered(n, [&](const DoublyOrderedSet& d) { out.push_back(d); });
  return out;
}

}  // namespace permlab
