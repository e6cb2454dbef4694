#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "support.hpp"

using namespace orthokit;
using testing_support::boolean2;
using testing_support::boolean_power;
using testing_support::el;
using testing_support::load_groupoid;

namespace {

bool isomorphic(Groupoid const& a, Groupoid const& b) {
  return oracle::isomorphic(oracle::from_groupoid(a), oracle::from_groupoid(b));
}

std::vector<Groupoid> zc_models() { return testing_support::orthogroupoids_up_to(6, true); }

}  // namespace

TEST(Interval, TopGivesTheWholeAlgebra) {
  for (auto const& g : zc_models()) {
    IntervalAlgebra whole = interval_algebra(g, g.top());
    EXPECT_EQ(whole.algebra, g);
  }
}

TEST(Interval, ZeroGivesTheTrivialAlgebra) {
  for (auto const& g : zc_models()) {
    IntervalAlgebra z = interval_algebra(g, g.zero());
    EXPECT_EQ(z.algebra.size(), 1U);
    EXPECT_EQ(z.members, std::vector<Elem>{g.zero()});
    EXPECT_TRUE(check_orthogroupoid(z.algebra).holds());
  }
}

TEST(Interval, SquareSplitsIntoBooleanTwo) {
  Groupoid sq = boolean_power(2);
  IntervalAlgebra lo = interval_algebra(sq, el(sq.carrier, "(1,0)"));
  ASSERT_EQ(lo.algebra.size(), 2U);
  EXPECT_TRUE(isomorphic(lo.algebra, boolean2()));
  EXPECT_EQ(lo.algebra.carrier.names(), (std::vector<std::string>{"0", "1"}));
}

TEST(Interval, NonCentralElementIsRejected) {
  std::size_t rejected = 0;
  for (auto const& g : zc_models()) {
    for (Elem e = 0; e < g.size(); ++e) {
      if (is_central_equational(g, e).central) continue;
      EXPECT_THROW(interval_algebra(g, e), precondition_error);
      EXPECT_THROW(relative_algebra(g, e), precondition_error);
      EXPECT_THROW(binary_decompose(g, e), precondition_error);
      ++rejected;
    }
  }
  EXPECT_GT(rejected, 0U);
}

TEST(Relative, EqualsTheIntervalAsSetsAndOperations) {
  for (auto const& g : zc_models()) {
    ChurchAlgebra A(g);
    for (Elem e : center(A).elements) {
      IntervalAlgebra iv = interval_algebra(A, e);
      IntervalAlgebra rel = relative_algebra(A, e);
      EXPECT_EQ(iv.members, rel.members);
      EXPECT_EQ(iv.algebra, rel.algebra);
      // x +_e y = e /\ (x + y) = x + y, and x^e = e . x' = e /\ x'.
      for (Elem x : iv.members) {
        EXPECT_EQ(A.restrict(e, x), x);
        EXPECT_EQ(A.meet(e, g.prime(x)), A.restrict(e, g.prime(x)));
        for (Elem y : iv.members) EXPECT_EQ(A.restrict(e, g.sum(x, y)), g.sum(x, y));
      }
    }
  }
}

TEST(Binary, TopSplitsOffATrivialFactor) {
  Groupoid sq = boolean_power(2);
  Decomposition d = binary_decompose(sq, sq.top());
  ASSERT_EQ(d.factors.size(), 2U);
  EXPECT_EQ(d.factors[0], sq);
  EXPECT_EQ(d.factors[1].size(), 1U);
}

TEST(Binary, SquareGivesTwoBooleanFactors) {
  Groupoid sq = boolean_power(2);
  Decomposition d = binary_decompose(sq, el(sq.carrier, "(1,0)"));
  ASSERT_EQ(d.factors.size(), 2U);
  for (auto const& f : d.factors) EXPECT_TRUE(isomorphic(f, boolean2()));
  EXPECT_TRUE(verify_decomposition(sq, d));
}

TEST(Binary, VerifiedForEveryCentralElementOfEveryModel) {
  std::size_t splits = 0;
  for (auto const& g : zc_models()) {
    ChurchAlgebra A(g);
    for (Elem e : center(A).elements) {
      Decomposition d = binary_decompose(A, e);
      EXPECT_TRUE(verify_decomposition(g, d));
      EXPECT_EQ(d.factors[0].size() * d.factors[1].size(), g.size());
      // The product rebuilt from the factors is isomorphic to the original.
      EXPECT_TRUE(isomorphic(direct_product(d.factors[0], d.factors[1]), g));
      ++splits;
    }
  }
  EXPECT_GT(splits, 0U);
}

TEST(Binary, TamperedIsoFailsVerification) {
  Groupoid sq = boolean_power(2);
  Decomposition d = binary_decompose(sq, el(sq.carrier, "(1,0)"));
  std::swap(d.iso[0], d.iso[2]);
  EXPECT_FALSE(verify_decomposition(sq, d));
}

TEST(Full, IndecomposableModelIsItsOwnFactor) {
  std::size_t seen = 0;
  for (auto const& g : zc_models()) {
    if (g.size() < 2 || center(g).elements.size() != 2) continue;
    Decomposition d = full_decompose(g);
    ASSERT_EQ(d.factors.size(), 1U);
    EXPECT_EQ(d.factors[0], g);
    for (Elem e = 0; e < g.size(); ++e) {
      if (e != g.zero() && e != g.top()) {
        EXPECT_FALSE(is_central_equational(g, e).central);
      }
    }
    ++seen;
  }
  EXPECT_GT(seen, 0U);
}

TEST(Full, BooleanPowers) {
  for (std::size_t k = 1; k <= 4; ++k) {
    Groupoid p = boolean_power(k);
    Decomposition d = full_decompose(p);
    ASSERT_EQ(d.factors.size(), k);
    for (auto const& f : d.factors) EXPECT_TRUE(isomorphic(f, boolean2()));
    EXPECT_EQ(d.center_atoms.size(), k);
  }
}

TEST(Full, FactorsAreIndecomposableAndMultiplyOut) {
  for (auto const& g : zc_models()) {
    Decomposition d = full_decompose(g);
    std::size_t product = 1;
    for (auto const& f : d.factors) {
      product *= f.size();
      EXPECT_EQ(center(f).elements.size(), 2U);
    }
    EXPECT_EQ(product, g.size());
    EXPECT_EQ(d.factors.size(), atoms(center(g)).size());
    EXPECT_TRUE(verify_decomposition(g, d));
  }
}

TEST(Full, ProductOfEnumeratedModelsDecomposesBack) {
  auto small = testing_support::orthogroupoids_up_to(4, true);
  for (auto const& a : small) {
    for (auto const& b : small) {
      if (a.size() < 2 || b.size() < 2) continue;
      Groupoid p = direct_product(a, b);
      Decomposition d = full_decompose(p);
      EXPECT_EQ(d.factors.size(), full_decompose(a).factors.size() + full_decompose(b).factors.size());
    }
  }
}

TEST(Product, BasicShapes) {
  Groupoid sq = direct_product(boolean2(), boolean2());
  EXPECT_EQ(sq.size(), 4U);
  EXPECT_TRUE(check_orthogroupoid(sq).holds());
  EXPECT_TRUE(is_zero_commutative(sq).holds);
  EXPECT_EQ(sq.carrier.name(sq.top()), "1");
  EXPECT_EQ(sq.carrier.name(sq.zero()), "0");
  EXPECT_TRUE(isomorphic(sq, load_groupoid("square.txt")));

  Groupoid remark = load_groupoid("remark.txt");
  EXPECT_TRUE(isomorphic(direct_product(remark, testing_support::trivial()), remark));
  EXPECT_EQ(direct_product(std::span<Groupoid const>{}).size(), 1U);

  std::vector<Groupoid> seven(7, boolean2());
  EXPECT_THROW(direct_product(std::span<Groupoid const>(seven)), precondition_error);
  seven.pop_back();
  EXPECT_EQ(direct_product(std::span<Groupoid const>(seven)).size(), 64U);
}

TEST(Product, PreservesTheAxioms) {
  auto small = testing_support::orthogroupoids_up_to(4);
  small.push_back(load_groupoid("remark.txt"));
  for (auto const& a : small) {
    for (auto const& b : small) EXPECT_TRUE(check_orthogroupoid(direct_product(a, b)).holds());
  }
}

TEST(Transfer, CentralityMovesBetweenAAndTheRelativeAlgebra) {
  for (auto const& g : zc_models()) {
    ChurchAlgebra A(g);
    BooleanCenter ca = center(A);
    for (Elem e : ca.elements) {
      IntervalAlgebra ae = relative_algebra(A, e);
      BooleanCenter ce = center(ae.algebra);
      for (Elem i = 0; i < ae.members.size(); ++i) {
        EXPECT_EQ(ca.contains(ae.members[i]), ce.contains(i));
      }
    }
  }
}

TEST(Transfer, AtomLemma) {
  for (auto const& g : zc_models()) {
    ChurchAlgebra A(g);
    std::vector<Elem> at = atoms(center(A));
    for (Elem e : at) {
      IntervalAlgebra rest = relative_algebra(A, g.prime(e));
      std::vector<Elem> lifted;
      for (Elem x : atoms(center(rest.algebra))) lifted.push_back(rest.members[x]);
      std::vector<Elem> expected;
      std::copy_if(at.begin(), at.end(), std::back_inserter(expected), [&](Elem x) { return x != e; });
      EXPECT_EQ(lifted, expected);
    }
  }
}
