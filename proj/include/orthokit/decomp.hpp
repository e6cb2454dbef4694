#pragma once

// Interval algebras [0,e], relative algebras A_e, direct products and the
// decomposition of a 0-commutative orthogroupoid along its central elements.

#include <span>
#include <string>
#include <vector>

#include "orthokit/church.hpp"

namespace orthokit {

/// A derived algebra on a subset of a parent carrier.
struct IntervalAlgebra {
  Groupoid algebra;
  std::vector<Elem> members;  // members[i] = parent index of local element i

  std::optional<Elem> local(Elem parent) const {
    auto it = std::find(members.begin(), members.end(), parent);
    if (it == members.end()) return std::nullopt;
    return static_cast<Elem>(it - members.begin());
  }
};

namespace detail {

inline void require_central(ChurchAlgebra const& A, Elem e) {
  if (!is_central_equational(A, e).central) {
    throw precondition_error("element " + A.algebra().carrier.name(e) + " is not central");
  }
}

/// Builds a groupoid on `members` (parent order) whose top is `top`; the top
/// is renamed "1" so that every derived algebra is itself serializable.
template <typename Sum, typename Unary>
IntervalAlgebra derived_algebra(Groupoid const& parent, std::vector<Elem> members, Elem top, Sum sum,
                                Unary unary) {
  std::size_t const m = members.size();
  std::vector<Elem> local(parent.size(), static_cast<Elem>(-1));
  for (Elem i = 0; i < m; ++i) local[members[i]] = i;
  auto to_local = [&](Elem x) {
    if (local[x] == static_cast<Elem>(-1)) {
      throw internal_error("derived algebra not closed: " + parent.carrier.name(x) + " escapes");
    }
    return local[x];
  };

  std::vector<std::string> names;
  for (Elem x : members) names.push_back(x == top ? "1" : parent.carrier.name(x));
  Involution inv;
  std::vector<Elem> table(m * m);
  for (Elem i = 0; i < m; ++i) {
    inv.image.push_back(to_local(unary(members[i])));
    for (Elem j = 0; j < m; ++j) table[i * m + j] = to_local(sum(members[i], members[j]));
  }
  return {Groupoid(Carrier(std::move(names), to_local(top)), std::move(table), std::move(inv)), std::move(members)};
}

}  // namespace detail

/// [0,e] = {x : x + e = e = e + x} with + restricted, x |-> e . x' and top e.
inline IntervalAlgebra interval_algebra(ChurchAlgebra const& A, Elem e) {
  detail::require_central(A, e);
  Groupoid const& g = A.algebra();
  std::vector<Elem> members;
  for (Elem x = 0; x < g.size(); ++x) {
    if (g.sum(x, e) == e && g.sum(e, x) == e) members.push_back(x);
  }
  return detail::derived_algebra(
      g, std::move(members), e, [&](Elem x, Elem y) { return g.sum(x, y); },
      [&](Elem x) { return A.meet(e, g.prime(x)); });
}

inline IntervalAlgebra interval_algebra(Groupoid const& g, Elem e) { return interval_algebra(ChurchAlgebra(g), e); }

/// A_e = {e /\ b : b}, every operation followed by e /\ -.
inline IntervalAlgebra relative_algebra(ChurchAlgebra const& A, Elem e) {
  detail::require_central(A, e);
  Groupoid const& g = A.algebra();
  std::vector<bool> in(g.size(), false);
  for (Elem b = 0; b < g.size(); ++b) in[A.restrict(e, b)] = true;
  std::vector<Elem> members;
  for (Elem x = 0; x < g.size(); ++x) {
    if (in[x]) members.push_back(x);
  }
  Elem const top = A.restrict(e, g.top());
  return detail::derived_algebra(
      g, std::move(members), top, [&](Elem x, Elem y) { return A.restrict(e, g.sum(x, y)); },
      [&](Elem x) { return A.restrict(e, g.prime(x)); });
}

inline IntervalAlgebra relative_algebra(Groupoid const& g, Elem e) { return relative_algebra(ChurchAlgebra(g), e); }

/// Componentwise product. Tuples are named "(x,y,...)" except the top and
/// zero tuples, which are named "1" and "0". The empty product is trivial.
inline Groupoid direct_product(std::span<Groupoid const> factors) {
  std::size_t n = 1;
  for (auto const& f : factors) {
    n *= f.size();
    if (n > max_carrier_size) throw precondition_error("direct product exceeds 64 elements");
  }
  // Mixed radix, first factor most significant.
  auto digits = [&](std::size_t idx) {
    std::vector<Elem> t(factors.size());
    for (std::size_t k = factors.size(); k-- > 0;) {
      t[k] = static_cast<Elem>(idx % factors[k].size());
      idx /= factors[k].size();
    }
    return t;
  };
  auto index = [&](std::vector<Elem> const& t) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < factors.size(); ++k) idx = idx * factors[k].size() + t[k];
    return static_cast<Elem>(idx);
  };

  std::vector<Elem> top_t, zero_t;
  for (auto const& f : factors) {
    top_t.push_back(f.top());
    zero_t.push_back(f.zero());
  }
  Elem const top = index(top_t);
  Elem const zero = index(zero_t);

  std::vector<std::string> names(n);
  Involution inv;
  std::vector<Elem> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    auto ti = digits(i);
    if (i == top) {
      names[i] = "1";
    } else if (i == zero) {
      names[i] = "0";
    } else {
      std::string s = "(";
      for (std::size_t k = 0; k < factors.size(); ++k) s += (k ? "," : "") + factors[k].carrier.name(ti[k]);
      names[i] = s + ")";
    }
    std::vector<Elem> p(factors.size());
    for (std::size_t k = 0; k < factors.size(); ++k) p[k] = factors[k].prime(ti[k]);
    inv.image.push_back(index(p));
    for (std::size_t j = 0; j < n; ++j) {
      auto tj = digits(j);
      std::vector<Elem> s(factors.size());
      for (std::size_t k = 0; k < factors.size(); ++k) s[k] = factors[k].sum(ti[k], tj[k]);
      table[i * n + j] = index(s);
    }
  }
  return Groupoid(Carrier(std::move(names), top), std::move(table), std::move(inv));
}

inline Groupoid direct_product(Groupoid const& a, Groupoid const& b) {
  Groupoid const fs[] = {a, b};
  return direct_product(std::span<Groupoid const>(fs));
}

struct Decomposition {
  std::vector<Groupoid> factors;
  std::vector<std::vector<Elem>> factor_members;  // parent indices of each factor's elements
  std::vector<std::vector<Elem>> iso;             // iso[b][k] = image of b in factor k
  std::vector<Elem> center_atoms;                 // atoms used, parent indices
};

/// Is `iso` a bijection onto the product of the factors preserving +, ' and 1?
inline bool verify_decomposition(Groupoid const& g, Decomposition const& d) {
  std::size_t product = 1;
  for (auto const& f : d.factors) product *= f.size();
  if (product != g.size() || d.iso.size() != g.size()) return false;
  std::vector<bool> hit(product, false);
  for (Elem b = 0; b < g.size(); ++b) {
    auto const& t = d.iso[b];
    if (t.size() != d.factors.size()) return false;
    std::size_t idx = 0;
    for (std::size_t k = 0; k < t.size(); ++k) {
      if (t[k] >= d.factors[k].size()) return false;
      idx = idx * d.factors[k].size() + t[k];
    }
    if (hit[idx]) return false;
    hit[idx] = true;
  }
  for (std::size_t k = 0; k < d.factors.size(); ++k) {
    Groupoid const& f = d.factors[k];
    if (d.iso[g.top()][k] != f.top()) return false;
    for (Elem x = 0; x < g.size(); ++x) {
      if (d.iso[g.prime(x)][k] != f.prime(d.iso[x][k])) return false;
      for (Elem y = 0; y < g.size(); ++y) {
        if (d.iso[g.sum(x, y)][k] != f.sum(d.iso[x][k], d.iso[y][k])) return false;
      }
    }
  }
  return true;
}

/// A = [0,e] x [0,e'] via b |-> (e /\ b, e' /\ b).
inline Decomposition binary_decompose(ChurchAlgebra const& A, Elem e) {
  Groupoid const& g = A.algebra();
  Elem const ep = g.prime(e);
  IntervalAlgebra lo = interval_algebra(A, e);
  IntervalAlgebra hi = interval_algebra(A, ep);
  Decomposition d;
  for (Elem b = 0; b < g.size(); ++b) {
    auto i = lo.local(A.restrict(e, b));
    auto j = hi.local(A.restrict(ep, b));
    if (!i || !j) throw internal_error("e /\\ b outside [0,e] for b = " + g.carrier.name(b));
    d.iso.push_back({*i, *j});
  }
  d.factors = {lo.algebra, hi.algebra};
  d.factor_members = {lo.members, hi.members};
  if (!verify_decomposition(g, d)) throw internal_error("binary decomposition is not an isomorphism");
  return d;
}

inline Decomposition binary_decompose(Groupoid const& g, Elem e) { return binary_decompose(ChurchAlgebra(g), e); }

/// Product of the [0,e] over the atoms e of the center, peeling one atom at
/// a time: A = [0,e] x A_{e'}, then recursing into A_{e'} whose atoms are the
/// remaining ones.
inline Decomposition full_decompose(ChurchAlgebra const& A) {
  Groupoid const& g = A.algebra();
  Decomposition d;
  d.center_atoms = atoms(center(A));
  d.iso.assign(g.size(), {});

  std::vector<Elem> remaining = d.center_atoms;  // parent indices
  ChurchAlgebra current = A;
  std::vector<Elem> members(g.size());           // parent index of current's elements
  std::iota(members.begin(), members.end(), Elem{0});
  std::vector<Elem> rest(g.size());              // b |-> its image in current
  std::iota(rest.begin(), rest.end(), Elem{0});

  auto to_local = [&](Elem parent) {
    auto it = std::find(members.begin(), members.end(), parent);
    if (it == members.end()) throw internal_error("atom outside the current factor");
    return static_cast<Elem>(it - members.begin());
  };
  auto lift = [&](std::vector<Elem> const& local_members) {
    std::vector<Elem> out;
    for (Elem x : local_members) out.push_back(members[x]);
    return out;
  };

  while (!remaining.empty()) {
    Groupoid const& cur = current.algebra();
    BooleanCenter cc = center(current);
    std::vector<Elem> cur_atoms = lift(atoms(cc));
    if (cur_atoms != remaining) throw internal_error("atoms of the remaining factor do not match");
    if (remaining.size() == 1) {
      if (cc.elements.size() != 2 || cur.top() != to_local(remaining.front())) {
        throw internal_error("last factor is not directly indecomposable");
      }
      d.factors.push_back(cur);
      d.factor_members.push_back(members);
      for (Elem b = 0; b < g.size(); ++b) d.iso[b].push_back(rest[b]);
      break;
    }
    Elem const e = to_local(remaining.front());
    Elem const ep = cur.prime(e);
    IntervalAlgebra lo = interval_algebra(current, e);
    IntervalAlgebra hi = interval_algebra(current, ep);
    if (center(lo.algebra).elements.size() != 2) throw internal_error("factor is not directly indecomposable");
    for (Elem b = 0; b < g.size(); ++b) {
      auto i = lo.local(current.restrict(e, rest[b]));
      auto j = hi.local(current.restrict(ep, rest[b]));
      if (!i || !j) throw internal_error("restriction escapes its interval");
      d.iso[b].push_back(*i);
      rest[b] = *j;
    }
    d.factors.push_back(lo.algebra);
    d.factor_members.push_back(lift(lo.members));
    members = lift(hi.members);
    current = ChurchAlgebra(hi.algebra);
    remaining.erase(remaining.begin());
  }
  if (!verify_decomposition(g, d)) throw internal_error("full decomposition is not an isomorphism");
  return d;
}

inline Decomposition full_decompose(Groupoid const& g) { return full_decompose(ChurchAlgebra(g)); }

}  // namespace orthokit
