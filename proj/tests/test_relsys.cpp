#include <gtest/gtest.h>

#include "oracles.hpp"
#include "support.hpp"

using namespace orthokit;
using testing_support::el;
using testing_support::load_relsys;

namespace {

ElementSet names_to_set(Carrier const& c, std::initializer_list<char const*> names) {
  ElementSet s;
  for (auto n : names) s.insert(el(c, n));
  return s;
}

std::vector<RelationalSystem> systems_up_to(std::size_t max) {
  std::vector<RelationalSystem> out;
  for (std::size_t n = 1; n <= max; ++n) {
    SearchSpec spec;
    spec.size = n;
    auto v = enumerate_orthosystems(spec);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

}  // namespace

TEST(UpperCone, ExampleOne) {
  RelationalSystem s = load_relsys("example1.txt");
  auto const& c = s.carrier;
  Elem const a = el(c, "a"), ap = el(c, "a'");
  ConeResult aap = upper_cone(s, a, ap);
  EXPECT_EQ(aap.members, names_to_set(c, {"1"}));
  EXPECT_EQ(aap.supremals, names_to_set(c, {"1"}));
  ConeResult aa = upper_cone(s, a, a);
  EXPECT_EQ(aa.members, names_to_set(c, {"a'", "1"}));
  EXPECT_EQ(aa.supremals, names_to_set(c, {"a'"}));
  ConeResult tt = upper_cone(s, s.top(), s.top());
  EXPECT_TRUE(tt.members.contains(s.top()));
}

TEST(UpperCone, SupremalsFollowTheDefinitionLiterally) {
  // No self-condition: w need not be related to itself.
  RelationalSystem s = load_relsys("example1.txt");
  Elem const a = el(s.carrier, "a"), ap = el(s.carrier, "a'");
  EXPECT_FALSE(s.related(ap, ap));
  EXPECT_TRUE(upper_cone(s, a, a).supremals.contains(ap));
  for (auto const& sys : systems_up_to(5)) {
    for (Elem x = 0; x < sys.size(); ++x) {
      for (Elem y = 0; y < sys.size(); ++y) {
        ConeResult r = upper_cone(sys, x, y);
        EXPECT_TRUE(r.supremals.subset_of(r.members));
        for (Elem w : r.members.elements()) {
          bool sup = true;
          for (Elem z : r.members.elements()) sup = sup && (z == w || sys.related(w, z));
          EXPECT_EQ(sup, r.supremals.contains(w));
        }
      }
    }
  }
}

TEST(OrthogonalPairs, ExampleOne) {
  RelationalSystem s = load_relsys("example1.txt");
  OrthogonalPairs p = orthogonal_pairs(s);
  auto const& c = s.carrier;
  EXPECT_TRUE(p.contains(el(c, "a"), el(c, "a")));
  EXPECT_TRUE(p.contains(el(c, "a'"), el(c, "a'")));
  for (Elem x = 0; x < s.size(); ++x) EXPECT_TRUE(p.contains(s.zero(), x));
  EXPECT_FALSE(p.contains(el(c, "a"), el(c, "a'")));
  EXPECT_TRUE(p.inconsistent.empty());
}

TEST(OrthogonalPairs, ExampleTwo) {
  RelationalSystem s = load_relsys("example2.txt");
  OrthogonalPairs p = orthogonal_pairs(s);
  auto const& c = s.carrier;
  EXPECT_TRUE(p.contains(el(c, "a"), el(c, "c")));
  EXPECT_TRUE(p.contains(el(c, "c'"), el(c, "b")));
  EXPECT_TRUE(p.contains(el(c, "b'"), el(c, "a")));
  EXPECT_TRUE(p.contains(el(c, "c"), el(c, "a")));
  // Apart from pairs with 0 these are the only ones, each in both orders.
  std::size_t nonzero = 0;
  for (auto [x, y] : p.pairs) nonzero += (x != s.zero() && y != s.zero());
  EXPECT_EQ(nonzero, 6U);
  for (auto [x, y] : {std::pair{"a", "c"}, {"c'", "b"}, {"b'", "a"}}) {
    EXPECT_EQ(upper_cone(s, el(c, x), el(c, y)).members, names_to_set(c, {"1"}));
  }
}

TEST(OrthogonalPairs, InconsistencyIsReported) {
  RelationalSystem s = load_relsys("example1.txt");
  s.relate(el(s.carrier, "a"), el(s.carrier, "a"));  // a orthogonal to a', but not a' to a
  OrthogonalPairs p = orthogonal_pairs(s);
  EXPECT_FALSE(p.inconsistent.empty());
}

TEST(OrthogonalPairs, SymmetricOnValidSystems) {
  for (auto const& s : systems_up_to(5)) {
    OrthogonalPairs p = orthogonal_pairs(s);
    EXPECT_TRUE(p.inconsistent.empty());
    for (Elem x = 0; x < s.size(); ++x) {
      for (Elem y = 0; y < s.size(); ++y) EXPECT_EQ(p.contains(x, y), p.contains(y, x));
    }
  }
}

TEST(OrthogonalSystem, ExampleSystemsPass) {
  EXPECT_TRUE(check_orthogonal_system(load_relsys("example1.txt")).passed());
  EXPECT_TRUE(check_orthogonal_system(load_relsys("example2.txt")).passed());
}

// (a,a') is its own mirror under (x,y) -> (y',x'), so removing it keeps the
// system valid. a is no longer orthogonal to itself, a' still is, and the
// system stays orthogonal.
TEST(OrthogonalSystem, ExampleOneWithoutAPrimePair) {
  RelationalSystem s = load_relsys("example1.txt");
  Elem const a = el(s.carrier, "a"), ap = el(s.carrier, "a'");
  s.relate(a, ap, false);
  OrthogonalPairs p = orthogonal_pairs(s);
  EXPECT_FALSE(p.contains(a, a));
  EXPECT_TRUE(p.contains(ap, ap));
  EXPECT_TRUE(p.inconsistent.empty());
  EXPECT_TRUE(validate(s).passed());
  CheckReport r = check_orthogonal_system(s);
  EXPECT_TRUE(r.find("orthogonal_a")->pass);
  EXPECT_TRUE(r.find("orthogonal_b")->pass);
  EXPECT_TRUE(upper_cone(s, ap, ap).supremals.contains(a));
}

TEST(OrthogonalSystem, FailuresCarryWitnesses) {
  RelationalSystem s = load_relsys("example1.txt");
  Elem const a = el(s.carrier, "a"), ap = el(s.carrier, "a'");
  s.relate(a, a);  // now a' is in U(a,a')
  s.relate(ap, ap);
  Check const* ca = check_orthogonal_system(s).find("orthogonal_a");
  EXPECT_FALSE(ca->pass);
  EXPECT_TRUE(ca->has_witness({{"x", a}, {"c", a}}));

  // Two incomparable upper bounds above an orthogonal pair.
  Carrier c({"0", "1", "a", "a'", "b", "b'"}, 1);
  RelationalSystem t(c, Involution{{1, 0, 3, 2, 5, 4}});
  for (Elem x = 0; x < 6; ++x) {
    t.relate(x, 1);
    t.relate(0, x);
  }
  auto both = [&](char const* x, char const* y) {
    t.relate(el(c, x), el(c, y));
    t.relate(t.prime(el(c, y)), t.prime(el(c, x)));
  };
  both("a", "b'");  // a orthogonal to b
  both("a", "a'");
  both("b", "a'");
  both("b", "b'");
  CheckReport r = check_orthogonal_system(t);
  EXPECT_FALSE(r.find("orthogonal_b")->pass);
  EXPECT_FALSE(r.find("orthogonal_b")->witnesses.empty());
}

TEST(OrthogonalSystem, OneInEveryComplementCone) {
  for (auto const& s : systems_up_to(5)) {
    for (Elem x = 0; x < s.size(); ++x) EXPECT_TRUE(upper_cone(s, x, s.prime(x)).members.contains(s.top()));
  }
}

TEST(OrthogonalSystem, AgreesWithNaiveCheckOnAllSmallRelations) {
  // Every relation on the 4-element carrier with 0 <-> 1 and a <-> a'.
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << 16); ++bits) {
    oracle::System o{4, {3, 2, 1, 0}, std::vector<bool>(16)};
    for (int i = 0; i < 16; ++i) o.rel[i] = (bits >> i) & 1U;
    RelationalSystem s(Carrier({"0", "a", "a'", "1"}, 3), Involution{{3, 2, 1, 0}});
    for (Elem x = 0; x < 4; ++x) {
      for (Elem y = 0; y < 4; ++y) s.relate(x, y, o.r(static_cast<int>(x), static_cast<int>(y)));
    }
    bool const lib = validate(s).passed() && check_orthogonal_system(s).passed();
    EXPECT_EQ(lib, oracle::is_orthosystem(o, false, false)) << bits;
  }
}

TEST(Flags, ExampleSystems) {
  RelationalSystem e1 = load_relsys("example1.txt");
  RelationFlags f1 = relation_flags(e1);
  EXPECT_FALSE(f1.reflexive.pass);
  EXPECT_EQ(f1.reflexive.witnesses.front(), (Witness{{"x", el(e1.carrier, "a")}}));
  EXPECT_FALSE(f1.transitive.pass);
  RelationFlags f2 = relation_flags(load_relsys("example2.txt"));
  EXPECT_TRUE(f2.reflexive.pass);
  EXPECT_FALSE(f2.transitive.pass);
  EXPECT_FALSE(f2.symmetric.pass);
  EXPECT_TRUE(f2.antisymmetric.pass);
}

TEST(Flags, AgreeWithExhaustiveScan) {
  for (auto const& s : systems_up_to(5)) {
    RelationFlags f = relation_flags(s);
    std::size_t const n = s.size();
    bool refl = true, sym = true, trans = true, anti = true;
    for (Elem x = 0; x < n; ++x) {
      refl = refl && s.related(x, x);
      for (Elem y = 0; y < n; ++y) {
        if (s.related(x, y) && !s.related(y, x)) sym = false;
        if (x != y && s.related(x, y) && s.related(y, x)) anti = false;
        for (Elem z = 0; z < n; ++z) {
          if (s.related(x, y) && s.related(y, z) && !s.related(x, z)) trans = false;
        }
      }
    }
    EXPECT_EQ(f.reflexive.pass, refl);
    EXPECT_EQ(f.symmetric.pass, sym);
    EXPECT_EQ(f.transitive.pass, trans);
    EXPECT_EQ(f.antisymmetric.pass, anti);
  }
}

// Reflexive orthogonal systems never relate a nonzero orthogonal pair.
TEST(Flags, ReflexiveOrthogonalPairsAreUnrelated) {
  std::size_t checked = 0;
  for (auto const& s : systems_up_to(6)) {
    if (!relation_flags(s).reflexive.pass) continue;
    for (auto [x, y] : orthogonal_pairs(s).pairs) {
      if (x == s.zero() || y == s.zero()) continue;
      EXPECT_FALSE(s.related(x, y));
      EXPECT_FALSE(s.related(y, x));
      ++checked;
    }
  }
  EXPECT_GT(checked, 0U);
}
