#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "permlab/closure.hpp"

using namespace permlab;
using fixture::base;
using fixture::error_of;
using fixture::succ;

namespace {

AtomSet cl(const Universe& u, std::vector<AtomId> b) { return closure(u, b).members; }

AtomSet naive(const Universe& u, const std::vector<AtomId>& b) {
  const auto s = oracle::naive_closure(u, b);
  return AtomSet(s.begin(), s.end());
}

}  // namespace

TEST(IsClosed, Examples) {
  const auto u = build_universe(fixture::chain2(), 1, 2);
  EXPECT_TRUE(is_closed(*u, AtomSet{}));
  AtomSet all(u->size());
  for (AtomId a = 0; a < all.size(); ++a) all[a] = a;
  EXPECT_TRUE(is_closed(*u, all));
  const AtomId child = succ(*u, 1, "q", base(*u, "p", 0), 0);
  EXPECT_FALSE(is_closed(*u, AtomSet{child}));
  EXPECT_FALSE(is_closed(*u, AtomSet{base(*u, "p", 0)}));
  EXPECT_TRUE(is_closed(*u, make_atom_set({child, base(*u, "p", 0)})));
}

TEST(Closure, ChainExamples) {
  const auto u = build_universe(fixture::chain2(), 1, 2);
  EXPECT_TRUE(cl(*u, {}).empty());
  const AtomId p0 = base(*u, "p", 0);
  const AtomId child = succ(*u, 1, "q", p0, 0);
  const AtomSet want = make_atom_set({p0, child});
  EXPECT_EQ(cl(*u, {child}), want);
  EXPECT_EQ(cl(*u, {p0}), want);
  const auto c = closure(*u, AtomSet{child});
  EXPECT_EQ(c.y_part, want);
  EXPECT_EQ(c.x_part, AtomSet{child});
}

TEST(Closure, NonzeroIndexPart) {
  const auto u = build_universe(fixture::split2(), 1, 2);
  EXPECT_TRUE(nonzero_index_part(*u, AtomSet{}).empty());
  const AtomId b = succ(*u, 1, "q", base(*u, "p", 0), 1);
  EXPECT_EQ(nonzero_index_part(*u, AtomSet{b}), AtomSet{b});
  EXPECT_TRUE(nonzero_index_part(*u, make_atom_set({base(*u, "p", 0), base(*u, "q", 0)})).empty());
}

TEST(Closure, AgreesWithNaiveSaturation) {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& d : enumerate_small_doubly_ordered(n)) {
      const auto u = build_universe(d, 2, 2);
      for (AtomId a = 0; a < u->size(); ++a) {
        const auto c = closure(*u, AtomSet{a});
        ASSERT_EQ(c.members, naive(*u, {a}));
        EXPECT_TRUE(is_closed(*u, c.members));
        EXPECT_EQ(c.members, set_union(c.x_part, c.y_part));
        for (AtomId x : c.x_part) EXPECT_EQ(u->atom(x).index, 0u);
      }
    }
}

TEST(Closure, LawsOnPairs) {
  for (const auto& d : enumerate_small_doubly_ordered(2)) {
    const auto u = build_universe(d, 2, 2);
    for (AtomId a = 0; a < u->size(); ++a)
      for (AtomId b = a; b < u->size(); ++b) {
        const AtomSet ab = make_atom_set({a, b});
        const AtomSet c = cl(*u, ab);
        EXPECT_EQ(cl(*u, c), c);
        EXPECT_EQ(c, set_union(cl(*u, {a}), cl(*u, {b})));
        EXPECT_EQ(c, naive(*u, ab));
      }
  }
}

TEST(ShapeChecks, Examples) {
  const auto split = build_universe(fixture::split2(), 1, 2);
  const ElementId q = split->order().id("q");
  EXPECT_TRUE(closure_shape_lestar(*split, base(*split, "q", 0), q));
  EXPECT_TRUE(closure_shape_lestar(*split, succ(*split, 1, "q", base(*split, "p", 0), 0), q));
  EXPECT_TRUE(closure_shape_le(*split, base(*split, "p", 0)));

  const auto chain = build_universe(fixture::chain2(), 1, 2);
  EXPECT_TRUE(closure_shape_lestar(*chain, base(*chain, "q", 1), chain->order().id("q")));
  EXPECT_TRUE(closure_shape_le(*chain, base(*chain, "p", 0)));

  const auto single = build_universe(fixture::singleton(), 1, 2);
  EXPECT_TRUE(closure_shape_le(*single, base(*single, "p", 0)));

  EXPECT_EQ(error_of([&] { closure_shape_lestar(*chain, base(*chain, "p", 0), 1); }),
            ErrorCode::PreconditionViolated);
  EXPECT_EQ(error_of([&] { closure_shape_le(*chain, succ(*chain, 1, "q", 0, 0)); }),
            ErrorCode::PreconditionViolated);
}

TEST(ShapeChecks, HoldEverywhereSmall) {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& d : enumerate_small_doubly_ordered(n)) {
      const auto u = build_universe(d, 2, 2);
      for (AtomId a = 0; a < u->size(); ++a) {
        EXPECT_NO_THROW(closure_shape_lestar(*u, a, u->atom(a).element));
        if (u->atom(a).is_base()) EXPECT_NO_THROW(closure_shape_le(*u, a));
      }
    }
}
