#pragma once

// Church-variety machinery for 0-commutative orthogroupoids.
//
//   x . y    = (x' + y')'
//   q(x,y,z) = (x + z) . (x' + y)        q(1,a,b) = a, q(0,a,b) = b
//
// Central elements are computed two independent ways: by the equational
// conditions on q, and by testing whether theta(e,0), theta(e,1) are a pair
// of factor congruences.

#include <numeric>
#include <string>
#include <vector>

#include "orthokit/axioms.hpp"

namespace orthokit {

/// A 0-commutative orthogroupoid viewed as a Church algebra. Construction
/// verifies the precondition once; term evaluation is then unchecked.
class ChurchAlgebra {
 public:
  explicit ChurchAlgebra(Groupoid g) : g_(std::move(g)) {
    if (auto zc = is_zero_commutative(g_); !zc.holds) {
      throw precondition_error("not 0-commutative: x + 0 != 0 + x at x = " + g_.carrier.name(*zc.witness));
    }
    if (!check_orthogroupoid(g_).holds()) throw precondition_error("not an orthogroupoid");
  }

  Groupoid const& algebra() const { return g_; }
  std::size_t size() const { return g_.size(); }

  Elem join(Elem x, Elem y) const { return g_.sum(x, y); }
  Elem meet(Elem x, Elem y) const { return demorgan_product(g_, x, y); }
  Elem prime(Elem x) const { return g_.prime(x); }

  Elem q(Elem x, Elem y, Elem z) const { return meet(g_.sum(x, z), g_.sum(g_.prime(x), y)); }

  /// e /\ b = q(e, b, 0)
  Elem restrict(Elem e, Elem b) const { return q(e, b, g_.zero()); }

 private:
  Groupoid g_;
};

inline Elem q(Groupoid const& g, Elem x, Elem y, Elem z) { return ChurchAlgebra(g).q(x, y, z); }

struct CentralityResult {
  bool central = true;
  std::string failed_condition;  // empty when central
  Witness witness;
};

/// Conditions on q(e,-,-):
///   a   q(e,a,a) = a
///   b   q(e,q(e,a,b),c) = q(e,a,c) = q(e,a,q(e,b,c))
///   c   q(e,-,-) commutes with ', with +, and with the constant 1
///   d   q(e,1,0) = e
inline CentralityResult is_central_equational(ChurchAlgebra const& A, Elem e) {
  Groupoid const& g = A.algebra();
  std::size_t const n = g.size();
  Elem const one = g.top();
  Elem const zero = g.zero();
  auto fail = [](std::string cond, Witness w) { return CentralityResult{false, std::move(cond), std::move(w)}; };

  for (Elem a = 0; a < n; ++a) {
    if (A.q(e, a, a) != a) return fail("a", {{"a", a}});
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      for (Elem c = 0; c < n; ++c) {
        Elem const mid = A.q(e, a, c);
        if (A.q(e, A.q(e, a, b), c) != mid) return fail("b1", {{"a", a}, {"b", b}, {"c", c}});
        if (A.q(e, a, A.q(e, b, c)) != mid) return fail("b2", {{"a", a}, {"b", b}, {"c", c}});
      }
    }
  }
  if (A.q(e, one, one) != one) return fail("c_one", {});
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (A.q(e, g.prime(a), g.prime(b)) != g.prime(A.q(e, a, b))) return fail("c_prime", {{"a", a}, {"b", b}});
    }
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      for (Elem c = 0; c < n; ++c) {
        for (Elem d = 0; d < n; ++d) {
          if (A.q(e, g.sum(a, b), g.sum(c, d)) != g.sum(A.q(e, a, c), A.q(e, b, d))) {
            return fail("c_plus", {{"a", a}, {"b", b}, {"c", c}, {"d", d}});
          }
        }
      }
    }
  }
  if (A.q(e, one, zero) != e) return fail("d", {});
  return {};
}

inline CentralityResult is_central_equational(Groupoid const& g, Elem e) {
  return is_central_equational(ChurchAlgebra(g), e);
}

/// Equivalence relation on a carrier, stored as normalized block ids
/// (blocks numbered by first occurrence), so equal partitions compare equal.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<Elem> block_of) : block_(std::move(block_of)) { normalize(); }

  static Partition identity(std::size_t n) {
    std::vector<Elem> b(n);
    std::iota(b.begin(), b.end(), Elem{0});
    return Partition(std::move(b));
  }
  static Partition total(std::size_t n) { return Partition(std::vector<Elem>(n, 0)); }

  std::size_t size() const { return block_.size(); }
  Elem block(Elem x) const { return block_[x]; }
  bool same(Elem x, Elem y) const { return block_[x] == block_[y]; }
  std::size_t block_count() const {
    return block_.empty() ? 0 : *std::max_element(block_.begin(), block_.end()) + 1;
  }

  std::vector<std::vector<Elem>> blocks() const {
    std::vector<std::vector<Elem>> out(block_count());
    for (Elem x = 0; x < block_.size(); ++x) out[block_[x]].push_back(x);
    return out;
  }

  friend bool operator==(Partition const&, Partition const&) = default;

 private:
  void normalize() {
    std::vector<Elem> remap(block_.size(), static_cast<Elem>(-1));
    Elem next = 0;
    for (auto& b : block_) {
      if (remap[b] == static_cast<Elem>(-1)) remap[b] = next++;
      b = remap[b];
    }
  }

  std::vector<Elem> block_;
};

/// Is the partition compatible with + and '?
inline bool is_congruence(Groupoid const& g, Partition const& p) {
  std::size_t const n = g.size();
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (!p.same(x, y)) continue;
      if (!p.same(g.prime(x), g.prime(y))) return false;
      for (Elem c = 0; c < n; ++c) {
        if (!p.same(g.sum(x, c), g.sum(y, c)) || !p.same(g.sum(c, x), g.sum(c, y))) return false;
      }
    }
  }
  return true;
}

/// Smallest congruence of <G, +, '> identifying a and b: union-find with a
/// worklist of pairs; every merged pair pushes its translations.
inline Partition principal_congruence(Groupoid const& g, Elem a, Elem b) {
  std::size_t const n = g.size();
  std::vector<Elem> parent(n);
  std::iota(parent.begin(), parent.end(), Elem{0});
  auto find = [&](Elem x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::vector<std::pair<Elem, Elem>> work{{a, b}};
  while (!work.empty()) {
    auto [u, v] = work.back();
    work.pop_back();
    Elem ru = find(u), rv = find(v);
    if (ru == rv) continue;
    parent[std::max(ru, rv)] = std::min(ru, rv);
    work.emplace_back(g.prime(u), g.prime(v));
    for (Elem c = 0; c < n; ++c) {
      work.emplace_back(g.sum(u, c), g.sum(v, c));
      work.emplace_back(g.sum(c, u), g.sum(c, v));
    }
  }
  std::vector<Elem> block(n);
  for (Elem x = 0; x < n; ++x) block[x] = find(x);
  return Partition(std::move(block));
}

namespace detail {

/// theta1 o theta2 is total: every (x,y) has a z with x theta1 z theta2 y.
inline bool composition_total(Partition const& t1, Partition const& t2) {
  std::size_t const n = t1.size();
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      bool found = false;
      for (Elem z = 0; z < n && !found; ++z) found = t1.same(x, z) && t2.same(z, y);
      if (!found) return false;
    }
  }
  return true;
}

}  // namespace detail

struct FactorPairResult {
  bool central = false;
  bool intersection_trivial = false;
  bool composition_total = false;          // theta(e,0) o theta(e,1)
  bool reverse_composition_total = false;  // theta(e,1) o theta(e,0)
  /// The two compositions disagree.
  bool asymmetric() const { return composition_total != reverse_composition_total; }
};

/// Factor-congruence test: theta(e,0) meet theta(e,1) is the identity and
/// theta(e,0) o theta(e,1) is the total relation.
inline FactorPairResult factor_pair(Groupoid const& g, Elem e) {
  Partition const t0 = principal_congruence(g, e, g.zero());
  Partition const t1 = principal_congruence(g, e, g.top());
  FactorPairResult r;
  r.intersection_trivial = true;
  for (Elem x = 0; x < g.size(); ++x) {
    for (Elem y = x + 1; y < g.size(); ++y) {
      if (t0.same(x, y) && t1.same(x, y)) r.intersection_trivial = false;
    }
  }
  r.composition_total = detail::composition_total(t0, t1);
  r.reverse_composition_total = detail::composition_total(t1, t0);
  r.central = r.intersection_trivial && r.composition_total;
  return r;
}

inline bool is_central_congruence(Groupoid const& g, Elem e) { return factor_pair(g, e).central; }

/// Ce(A) with join +, meet ., complement ', bounds 0 and 1.
struct BooleanCenter {
  Groupoid algebra;
  std::vector<Elem> elements;  // ascending index order

  bool contains(Elem x) const { return std::find(elements.begin(), elements.end(), x) != elements.end(); }
  Elem join(Elem x, Elem y) const { return algebra.sum(x, y); }
  Elem meet(Elem x, Elem y) const { return demorgan_product(algebra, x, y); }
  Elem complement(Elem x) const { return algebra.prime(x); }
};

namespace detail {

/// Exhaustive Boolean-algebra identities on the center; returns the name of
/// the first failing law, or empty.
inline std::string boolean_failure(BooleanCenter const& c) {
  Elem const one = c.algebra.top();
  Elem const zero = c.algebra.zero();
  if (!c.contains(zero) || !c.contains(one)) return "bounds";
  for (Elem x : c.elements) {
    if (!c.contains(c.complement(x))) return "closure";
    if (c.join(x, c.complement(x)) != one || c.meet(x, c.complement(x)) != zero) return "complementation";
    if (c.join(x, zero) != x || c.meet(x, one) != x) return "identity";
    if (c.join(x, x) != x || c.meet(x, x) != x) return "idempotence";
    for (Elem y : c.elements) {
      if (!c.contains(c.join(x, y)) || !c.contains(c.meet(x, y))) return "closure";
      if (c.join(x, y) != c.join(y, x) || c.meet(x, y) != c.meet(y, x)) return "commutativity";
      if (c.join(x, c.meet(x, y)) != x || c.meet(x, c.join(x, y)) != x) return "absorption";
      for (Elem z : c.elements) {
        if (c.join(x, c.join(y, z)) != c.join(c.join(x, y), z)) return "associativity";
        if (c.meet(x, c.meet(y, z)) != c.meet(c.meet(x, y), z)) return "associativity";
        if (c.meet(x, c.join(y, z)) != c.join(c.meet(x, y), c.meet(x, z))) return "distributivity";
        if (c.join(x, c.meet(y, z)) != c.meet(c.join(x, y), c.join(x, z))) return "distributivity";
      }
    }
  }
  return {};
}

}  // namespace detail

inline BooleanCenter center(ChurchAlgebra const& A) {
  BooleanCenter c{A.algebra(), {}};
  for (Elem e = 0; e < A.size(); ++e) {
    if (is_central_equational(A, e).central) c.elements.push_back(e);
  }
  if (auto law = detail::boolean_failure(c); !law.empty()) {
    throw internal_error("center is not a Boolean algebra: " + law + " fails");
  }
  return c;
}

inline BooleanCenter center(Groupoid const& g) { return center(ChurchAlgebra(g)); }

/// Minimal nonzero central elements under e <= f iff e . f = e.
inline std::vector<Elem> atoms(BooleanCenter const& c) {
  Elem const zero = c.algebra.zero();
  std::vector<Elem> out;
  for (Elem e : c.elements) {
    if (e == zero) continue;
    bool minimal = true;
    for (Elem f : c.elements) {
      if (f != zero && f != e && c.meet(f, e) == f) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(e);
  }
  return out;
}

}  // namespace orthokit
