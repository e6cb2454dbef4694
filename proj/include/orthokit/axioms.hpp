#pragma once

// Orthogroupoid axioms (a)-(f), the 1 + x = 1 replacement for the
// quasi-identity (d), and the derived lemma suite. All checks are exhaustive
// scans over variable assignments.

#include <optional>

#include "orthokit/core.hpp"

namespace orthokit {

/// Left side of axiom (e) with the outer variable first:
///   (((x+z)' + (x+y))' + (x+z)') + x'   which must equal x'.
inline Elem axiom_e_lhs(Groupoid const& g, Elem x, Elem y, Elem z) {
  Elem const xz_ = g.prime(g.sum(x, z));
  Elem const inner = g.prime(g.sum(xz_, g.sum(x, y)));
  return g.sum(g.sum(inner, xz_), g.prime(x));
}

/// x . y = (x' + y')'
inline Elem demorgan_product(Groupoid const& g, Elem x, Elem y) {
  return g.prime(g.sum(g.prime(x), g.prime(y)));
}

struct AxiomVerdict {
  Check a{"axiom_a"};
  Check b{"axiom_b"};
  Check c{"axiom_c"};
  Check d{"axiom_d"};
  Check e{"axiom_e"};
  Check f{"axiom_f"};
  Check one_top{"one_top"};

  /// Equational presentation: (a), (b), (c), (e), (f) and 1 + x = 1.
  /// The quasi-identity (d) is reported but not part of the verdict.
  bool holds() const { return a.pass && b.pass && c.pass && e.pass && f.pass && one_top.pass; }

  bool equations_without_d_hold() const { return a.pass && b.pass && c.pass && e.pass && f.pass; }

  CheckReport report() const { return {{a, b, c, d, e, f, one_top}}; }
};

inline AxiomVerdict check_orthogroupoid(Groupoid const& g) {
  AxiomVerdict v;
  std::size_t const n = g.size();
  Elem const one = g.top();
  Elem const zero = g.zero();

  for (Elem x = 0; x < n; ++x) {
    if (g.prime(g.prime(x)) != x) v.a.fail({{"x", x}});
    if (g.sum(zero, x) != x || g.sum(x, one) != one) v.b.fail({{"x", x}});
    if (g.sum(x, g.prime(x)) != one) v.c.fail({{"x", x}});
    if (g.sum(one, x) != one) v.one_top.fail({{"x", x}});
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem z = 0; z < n; ++z) {
      if (g.sum(x, z) == z && g.sum(g.prime(x), z) == z && z != one) v.d.fail({{"x", x}, {"z", z}});
    }
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      Elem const s = g.sum(x, y);
      if (g.sum(x, s) != s || g.sum(y, s) != s) v.f.fail({{"x", x}, {"y", y}});
      for (Elem z = 0; z < n; ++z) {
        if (axiom_e_lhs(g, x, y, z) != g.prime(x)) v.e.fail({{"x", x}, {"y", y}, {"z", z}});
      }
    }
  }
  return v;
}

struct QuasiIdentityEquivalence {
  bool d_holds = false;
  bool one_top_holds = false;
  /// False when (a), (b), (c), (e), (f) do not all hold; the two flags are
  /// then not guaranteed to agree.
  bool precondition_met = false;
};

inline QuasiIdentityEquivalence check_d_iff_one_top(Groupoid const& g) {
  AxiomVerdict v = check_orthogroupoid(g);
  return {v.d.pass, v.one_top.pass, v.equations_without_d_hold()};
}

/// Consequences of the axioms. Meaningful on orthogroupoids (the first four
/// need only (a), (b), (c), (e)).
inline CheckReport lemma_suite(Groupoid const& g) {
  std::size_t const n = g.size();
  Elem const one = g.top();
  Elem const zero = g.zero();
  auto related = [&](Elem x, Elem y) { return g.sum(x, y) == y; };

  Check zero_prime("zero_prime_is_top");
  if (g.prime(zero) != one) zero_prime.fail({{"x", zero}});

  Check absorb("prime_sum_absorption");  // (x' + y)' + x = x
  Check bounds("bounds");                // (0,x) and (x,1) in R
  Check compat("relation_involution_compat");
  Check idem("idempotent");
  Check fix("fixpoint_free");
  for (Elem x = 0; x < n; ++x) {
    if (!related(zero, x) || !related(x, one)) bounds.fail({{"x", x}});
    if (g.sum(x, x) != x) idem.fail({{"x", x}});
    if (n > 1 && g.prime(x) == x) fix.fail({{"x", x}});
    for (Elem y = 0; y < n; ++y) {
      if (g.sum(g.prime(g.sum(g.prime(x), y)), x) != x) absorb.fail({{"x", x}, {"y", y}});
      if (related(x, y) && !related(g.prime(y), g.prime(x))) compat.fail({{"x", x}, {"y", y}});
    }
  }
  return {{zero_prime, absorb, bounds, compat, idem, fix}};
}

struct ZeroCommutativity {
  bool holds = true;
  std::optional<Elem> witness;
};

/// x + 0 = 0 + x for all x.
inline ZeroCommutativity is_zero_commutative(Groupoid const& g) {
  Elem const zero = g.zero();
  for (Elem x = 0; x < g.size(); ++x) {
    if (g.sum(x, zero) != g.sum(zero, x)) return {false, x};
  }
  return {};
}

}  // namespace orthokit
