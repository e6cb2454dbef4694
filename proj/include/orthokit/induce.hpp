#pragma once

// Bridges between the relational and algebraic sides:
//   relational system -> induced groupoid(s)   (non-deterministic in general)
//   groupoid          -> induced relation       (a,b) in R iff a + b = b

#include <cstdint>
#include <string>
#include <vector>

#include "orthokit/relsys.hpp"

namespace orthokit {

enum class ChoicePolicy { min_index, enumerate_all };

enum class ChoiceRule {
  cone,      // x + y = y + x chosen in U_R(x,y)
  supremal,  // x + y = y + x chosen among the supremal elements of U_R(x,y)
};

struct ChoicePoint {
  Elem x;  // x <= y
  Elem y;
  std::vector<Elem> candidates;  // ascending index order
  ChoiceRule rule;
};

/// Pair where x is orthogonal to y with x != 0 != y, but (x,y) or (y,x) is
/// already in R, so the relational rules fixed the sum instead.
struct RuleOverlap {
  Elem x;
  Elem y;
};

struct InducedGroupoid {
  Groupoid groupoid;
  std::vector<std::size_t> choice;  // candidate index per choice point
};

struct Induction {
  std::vector<ChoicePoint> choice_points;
  std::vector<InducedGroupoid> groupoids;
  std::vector<RuleOverlap> overlaps;
};

/// Upper bound on the number of groupoids produced by enumerate_all.
inline constexpr std::uint64_t max_induced_groupoids = std::uint64_t{1} << 20;

/// Precedence: (x,y) in R gives y; else (y,x) in R gives x; else x orthogonal
/// to y with x != 0 != y picks a supremal element; else pick from the cone.
/// The last two write one shared value to both (x,y) and (y,x).
inline Induction induce_groupoids(RelationalSystem const& s, ChoicePolicy policy) {
  std::size_t const n = s.size();
  Elem const zero = s.zero();
  Induction out;

  Groupoid base(s.carrier, std::vector<Elem>(n * n, 0), s.involution);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = x; y < n; ++y) {
      bool const xy = s.related(x, y);
      bool const yx = s.related(y, x);
      bool const orth = x != zero && y != zero && orthogonal(s, x, y);
      if (xy || yx) {
        base.set_sum(x, y, xy ? y : x);
        base.set_sum(y, x, yx ? x : y);
        if (orth) out.overlaps.push_back({x, y});
        continue;
      }
      ConeResult cone = upper_cone(s, x, y);
      ChoicePoint cp{x, y, {}, orth ? ChoiceRule::supremal : ChoiceRule::cone};
      cp.candidates = orth ? cone.supremals.elements() : cone.members.elements();
      if (cp.candidates.empty()) {
        throw precondition_error(std::string(orth ? "no supremal element" : "empty upper cone") + " for " +
                                 s.carrier.name(x) + ", " + s.carrier.name(y));
      }
      out.choice_points.push_back(std::move(cp));
    }
  }

  std::uint64_t total = 1;
  if (policy == ChoicePolicy::enumerate_all) {
    for (auto const& cp : out.choice_points) {
      total *= cp.candidates.size();
      if (total > max_induced_groupoids) {
        throw precondition_error("more than " + std::to_string(max_induced_groupoids) + " induced groupoids");
      }
    }
  }

  std::vector<std::size_t> choice(out.choice_points.size(), 0);
  for (std::uint64_t k = 0; k < total; ++k) {
    Groupoid g = base;
    for (std::size_t i = 0; i < choice.size(); ++i) {
      auto const& cp = out.choice_points[i];
      Elem const w = cp.candidates[choice[i]];
      g.set_sum(cp.x, cp.y, w);
      g.set_sum(cp.y, cp.x, w);
    }
    out.groupoids.push_back({std::move(g), choice});
    // Odometer, last choice point varies fastest.
    for (std::size_t i = choice.size(); i-- > 0;) {
      if (++choice[i] < out.choice_points[i].candidates.size()) break;
      choice[i] = 0;
    }
  }
  return out;
}

/// R_G: (a,b) in R iff a + b = b. Carrier and involution carry over.
inline RelationalSystem induced_relation(Groupoid const& g) {
  RelationalSystem s(g.carrier, g.involution);
  for (Elem a = 0; a < g.size(); ++a) {
    for (Elem b = 0; b < g.size(); ++b) {
      if (g.sum(a, b) == b) s.relate(a, b);
    }
  }
  return s;
}

}  // namespace orthokit
