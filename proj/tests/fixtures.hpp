#pragma once

#include <memory>
#include <string>

#include "permlab/order.hpp"
#include "permlab/universe.hpp"

namespace fixture {

inline permlab::OrderSpec reflexive_spec(std::vector<std::string> elements) {
  permlab::OrderSpec s;
  s.elements = std::move(elements);
  for (const auto& e : s.elements) {
    s.le.insert({e, e});
    s.lestar.insert({e, e});
  }
  return s;
}

/// p strictly below q, lestar = le.
inline permlab::DoublyOrderedSet chain2() {
  auto s = reflexive_spec({"p", "q"});
  s.le.insert({"p", "q"});
  s.lestar.insert({"p", "q"});
  return permlab::validate_order(s);
}

/// le the identity, lestar adds p <=* q.
inline permlab::DoublyOrderedSet split2() {
  auto s = reflexive_spec({"p", "q"});
  s.lestar.insert({"p", "q"});
  return permlab::validate_order(s);
}

inline permlab::DoublyOrderedSet antichain2() {
  return permlab::validate_order(reflexive_spec({"p", "q"}));
}

inline permlab::DoublyOrderedSet singleton() {
  return permlab::validate_order(reflexive_spec({"p"}));
}

/// p < q < r.
inline permlab::DoublyOrderedSet chain3() {
  auto s = reflexive_spec({"p", "q", "r"});
  for (auto [a, b] : {std::pair{"p", "q"}, {"q", "r"}, {"p", "r"}}) {
    s.le.insert({a, b});
    s.lestar.insert({a, b});
  }
  return permlab::validate_order(s);
}

inline permlab::AtomId base(const permlab::Universe& u, const std::string& p, permlab::Index k) {
  return *u.find(permlab::Atom{0, u.order().id(p), permlab::kNoAtom, k});
}

inline permlab::AtomId succ(const permlab::Universe& u, permlab::Level n, const std::string& q,
                            permlab::AtomId parent, permlab::Index k) {
  return *u.find(permlab::Atom{n, u.order().id(q), parent, k});
}

}  // namespace fixture

#include <optional>

#include "permlab/error.hpp"

namespace fixture {

/// Code of the Error thrown by f, or nullopt if it returns normally.
template <typename F>
std::optional<permlab::ErrorCode> error_of(F&& f) {
  try {
    f();
  } catch (const permlab::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace fixture
