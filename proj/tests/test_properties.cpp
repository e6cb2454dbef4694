// Cross-module invariants swept over every enumerated model of small size.

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "support.hpp"

using namespace orthokit;

namespace {

std::vector<RelationalSystem> systems_up_to(std::size_t max, bool refl = false, bool trans = false) {
  std::vector<RelationalSystem> out;
  for (std::size_t n = 1; n <= max; ++n) {
    SearchSpec s;
    s.size = n;
    s.reflexive = refl;
    s.transitive = trans;
    auto v = enumerate_orthosystems(s);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

bool every_failure_has_a_witness(CheckReport const& r) {
  for (auto const& c : r.checks) {
    if (c.pass != (c.failures == 0)) return false;
    if (!c.pass && c.witnesses.empty()) return false;
    if (c.witnesses.size() > Check::max_witnesses) return false;
  }
  return true;
}

}  // namespace

TEST(Properties, SerializeThenParseIsIdentity) {
  for (auto const& g : testing_support::orthogroupoids_up_to(6)) {
    std::string text = serialize(g);
    Groupoid back = parse_groupoid(text);
    ASSERT_EQ(back, g);
    ASSERT_EQ(serialize(back), text);
  }
  for (auto const& s : systems_up_to(6)) {
    std::string text = serialize(s);
    ASSERT_EQ(parse_relsys(text), s);
    ASSERT_EQ(serialize(parse_relsys(text)), text);
  }
}

TEST(Properties, ZeroIsThePrimeOfTop) {
  for (auto const& g : testing_support::orthogroupoids_up_to(6)) {
    ASSERT_EQ(g.prime(zero_of(Structure{g})), g.top());
  }
  for (auto const& s : systems_up_to(6)) ASSERT_EQ(s.prime(zero_of(Structure{s})), s.top());
}

TEST(Properties, ValidateIsPure) {
  for (auto const& s : systems_up_to(5)) {
    RelationalSystem copy = s;
    CheckReport a = validate(s);
    CheckReport b = validate(s);
    ASSERT_EQ(copy, s);
    ASSERT_EQ(format_report(a, s.carrier), format_report(b, s.carrier));
  }
}

TEST(Properties, FailingChecksAlwaysCarryWitnesses) {
  oracle::for_each_bounded_table(3, [&](oracle::Table const& t) {
    Groupoid g = oracle::to_groupoid(t);
    ASSERT_TRUE(every_failure_has_a_witness(validate(g)));
    ASSERT_TRUE(every_failure_has_a_witness(check_orthogroupoid(g).report()));
    ASSERT_TRUE(every_failure_has_a_witness(lemma_suite(g)));
    ASSERT_TRUE(every_failure_has_a_witness(check_orthogonal_system(induced_relation(g))));
  });
  for (auto const& s : systems_up_to(4)) ASSERT_TRUE(every_failure_has_a_witness(relation_flags(s).report()));
}

TEST(Properties, TopAbsorbsAndInvolutionHasNoFixpoints) {
  for (auto const& g : testing_support::orthogroupoids_up_to(6)) {
    for (Elem x = 0; x < g.size(); ++x) {
      ASSERT_EQ(g.sum(g.top(), x), g.top());
      if (g.size() > 1) {
        ASSERT_NE(g.prime(x), x);
      }
    }
    ASSERT_TRUE(g.size() == 1 || g.size() % 2 == 0);
  }
}

TEST(Properties, RoundTripsOverTheWholeStream) {
  for (auto const& g : testing_support::orthogroupoids_up_to(5)) {
    RelationalSystem r = induced_relation(g);
    ASSERT_TRUE(check_orthogonal_system(r).passed());
    ASSERT_TRUE(relation_flags(r).reflexive.pass);
  }
  for (auto const& s : systems_up_to(5, true, true)) {
    for (auto const& ig : induce_groupoids(s, ChoicePolicy::enumerate_all).groupoids) {
      ASSERT_TRUE(check_orthogroupoid(ig.groupoid).holds()) << serialize(s);
    }
  }
}

TEST(Properties, InducedGroupoidsOfOrthogonalSystemsFixZero) {
  for (auto const& s : systems_up_to(5)) {
    for (auto const& ig : induce_groupoids(s, ChoicePolicy::enumerate_all).groupoids) {
      Groupoid const& g = ig.groupoid;
      for (Elem x = 0; x < g.size(); ++x) ASSERT_EQ(g.sum(x, g.zero()), x);
    }
  }
}

TEST(Properties, AmalgamRestrictsToEachPart) {
  auto models = testing_support::orthogroupoids_up_to(4);
  models.push_back(testing_support::load_groupoid("remark.txt"));
  for (auto const& b1 : models) {
    for (auto const& b2 : models) {
      for (auto const& j : embeddings(testing_support::boolean2(), b2)) {
        if (b1.size() == 1) continue;
        VFormation v{testing_support::boolean2(), b1, b2, {b1.zero(), b1.top()}, j};
        Amalgam m = amalgamate(v);
        for (Elem x = 0; x < b1.size(); ++x) {
          for (Elem y = 0; y < b1.size(); ++y) ASSERT_EQ(m.d.sum(m.h[x], m.h[y]), m.h[b1.sum(x, y)]);
        }
        for (Elem x = 0; x < b2.size(); ++x) {
          for (Elem y = 0; y < b2.size(); ++y) ASSERT_EQ(m.d.sum(m.k[x], m.k[y]), m.k[b2.sum(x, y)]);
        }
        ASSERT_TRUE(relation_embeds(b1, m.d, m.h));
        ASSERT_TRUE(relation_embeds(b2, m.d, m.k));
      }
    }
  }
}
