#pragma once

// Relational-side computations on <A, R, ', 1>: upper cones, supremal
// elements, orthogonality and the orthogonal-system conditions.

#include <utility>
#include <vector>

#include "orthokit/core.hpp"

namespace orthokit {

struct ConeResult {
  ElementSet members;
  ElementSet supremals;
};

/// U_R(a,b) = {c : (a,c) in R and (b,c) in R}, with its supremal elements:
/// w is supremal iff (w,z) in R for every other member z.
inline ConeResult upper_cone(RelationalSystem const& s, Elem a, Elem b) {
  ConeResult r;
  r.members = s.successors(a) & s.successors(b);
  for (Elem w : r.members.elements()) {
    ElementSet others = r.members;
    others.erase(w);
    if (others.subset_of(s.successors(w))) r.supremals.insert(w);
  }
  return r;
}

/// a is orthogonal to b iff (a, b') in R.
inline bool orthogonal(RelationalSystem const& s, Elem a, Elem b) { return s.related(a, s.prime(b)); }

struct OrthogonalPairs {
  std::vector<std::pair<Elem, Elem>> pairs;  // a <= b
  // Unordered pairs where (a,b') and (b,a') disagree.
  std::vector<std::pair<Elem, Elem>> inconsistent;

  bool contains(Elem a, Elem b) const {
    if (a > b) std::swap(a, b);
    return std::find(pairs.begin(), pairs.end(), std::pair{a, b}) != pairs.end();
  }
};

inline OrthogonalPairs orthogonal_pairs(RelationalSystem const& s) {
  OrthogonalPairs out;
  for (Elem a = 0; a < s.size(); ++a) {
    for (Elem b = a; b < s.size(); ++b) {
      bool const ab = orthogonal(s, a, b);
      bool const ba = orthogonal(s, b, a);
      if (ab || ba) out.pairs.emplace_back(a, b);
      if (ab != ba) out.inconsistent.emplace_back(a, b);
    }
  }
  return out;
}

/// Conditions (a) U_R(x,x') = {1} and (b) every orthogonal pair x,y with
/// x != 0 != y has a supremal element.
inline CheckReport check_orthogonal_system(RelationalSystem const& s) {
  Check a("orthogonal_a");
  Check b("orthogonal_b");
  Elem const zero = s.zero();
  ElementSet const only_top = ElementSet::singleton(s.top());
  for (Elem x = 0; x < s.size(); ++x) {
    ElementSet cone = upper_cone(s, x, s.prime(x)).members;
    if (cone != only_top) {
      ElementSet extra = cone;
      extra.erase(s.top());
      if (extra.empty()) {
        a.fail({{"x", x}});  // 1 missing from the cone
      } else {
        a.fail({{"x", x}, {"c", extra.front()}});
      }
    }
  }
  for (Elem x = 0; x < s.size(); ++x) {
    if (x == zero) continue;
    for (Elem y = 0; y < s.size(); ++y) {
      if (y == zero || !orthogonal(s, x, y)) continue;
      if (upper_cone(s, x, y).supremals.empty()) b.fail({{"x", x}, {"y", y}});
    }
  }
  CheckReport r;
  r.checks.push_back(std::move(a));
  r.checks.push_back(std::move(b));
  return r;
}

struct RelationFlags {
  Check reflexive{"reflexive"};
  Check symmetric{"symmetric"};
  Check transitive{"transitive"};
  Check antisymmetric{"antisymmetric"};

  CheckReport report() const { return {{reflexive, symmetric, transitive, antisymmetric}}; }
};

inline RelationFlags relation_flags(RelationalSystem const& s) {
  RelationFlags f;
  std::size_t const n = s.size();
  for (Elem x = 0; x < n; ++x) {
    if (!s.related(x, x)) f.reflexive.fail({{"x", x}});
    for (Elem y = 0; y < n; ++y) {
      if (!s.related(x, y)) continue;
      if (!s.related(y, x)) {
        f.symmetric.fail({{"x", x}, {"y", y}});
      } else if (x != y) {
        f.antisymmetric.fail({{"x", x}, {"y", y}});
      }
      ElementSet missing(s.rows[y] & ~s.rows[x]);
      if (!missing.empty()) f.transitive.fail({{"x", x}, {"y", y}, {"z", missing.front()}});
    }
  }
  return f;
}

}  // namespace orthokit
