#pragma once

// Exhaustive enumeration of orthogroupoids and orthogonal relational systems
// on the standard carrier {0, 1, a, a', b, b', ...}, plus canonical forms for
// isomorphism-invariant deduplication.
//
// Orthogroupoid search: the involution ranges over fixpoint-free pairings of
// the elements other than 0 and 1; every cell forced by the axioms is filled
// first (0+x = x, x+1 = 1, 1+x = 1, x+x' = 1, x+x = x, and x+0 = x when
// 0-commutativity is requested); the remaining cells are filled depth-first
// in row-major order. Instances of axioms (e) and (f) are watched: each sits
// on the first undefined cell its evaluation hits and is re-evaluated when
// that cell is assigned, so an instance is checked exactly when it becomes
// fully determined.

#include <algorithm>
#include <atomic>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "orthokit/core.hpp"

namespace orthokit {

enum class Dedup { labelled, up_to_iso };

struct SearchSpec {
  std::size_t size = 0;
  bool zero_commutative = false;  // groupoid search only
  bool reflexive = false;         // relational-system search only
  bool transitive = false;        // relational-system search only
  Dedup dedup = Dedup::labelled;
  unsigned jobs = 1;
  /// Restrict the search to one involution of the standard carrier
  /// (index 0 = 0, index 1 = 1).
  std::optional<Involution> involution;
};

/// Soft limit for full table enumeration.
inline constexpr std::size_t enumeration_soft_limit = 8;

// ---------------------------------------------------------------------------
// Canonical forms
// ---------------------------------------------------------------------------

struct CanonicalForm {
  std::vector<std::uint8_t> bytes;
  friend auto operator<=>(CanonicalForm const&, CanonicalForm const&) = default;
};

namespace detail {

/// Minimizes `encode(order)` over all relabellings that send 1 to position
/// 0 and 0 to position 1; order[new] = old.
template <typename Encode>
CanonicalForm minimize_over_relabellings(std::size_t n, Elem top, Elem zero, Encode encode) {
  std::vector<Elem> rest;
  for (Elem x = 0; x < n; ++x) {
    if (x != top && x != zero) rest.push_back(x);
  }
  std::vector<Elem> order;
  CanonicalForm best;
  bool first = true;
  do {
    order.assign({top});
    if (zero != top) order.push_back(zero);
    order.insert(order.end(), rest.begin(), rest.end());
    std::vector<std::uint8_t> bytes = encode(order);
    if (first || bytes < best.bytes) {
      best.bytes = std::move(bytes);
      first = false;
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  return best;
}

inline std::vector<Elem> inverse_order(std::vector<Elem> const& order) {
  std::vector<Elem> pos(order.size());
  for (Elem i = 0; i < order.size(); ++i) pos[order[i]] = i;
  return pos;
}

}  // namespace detail

/// Lexicographically minimal encoding of (involution, table) over all
/// relabellings fixing 1 (and hence 0). Equal iff isomorphic.
inline CanonicalForm canonical_form(Groupoid const& g) {
  std::size_t const n = g.size();
  return detail::minimize_over_relabellings(n, g.top(), g.zero(), [&](std::vector<Elem> const& order) {
    std::vector<Elem> pos = detail::inverse_order(order);
    std::vector<std::uint8_t> bytes;
    bytes.reserve(2 + n + n * n);
    bytes.push_back('G');
    bytes.push_back(static_cast<std::uint8_t>(n));
    for (Elem i = 0; i < n; ++i) bytes.push_back(static_cast<std::uint8_t>(pos[g.prime(order[i])]));
    for (Elem i = 0; i < n; ++i) {
      for (Elem j = 0; j < n; ++j) bytes.push_back(static_cast<std::uint8_t>(pos[g.sum(order[i], order[j])]));
    }
    return bytes;
  });
}

inline CanonicalForm canonical_form(RelationalSystem const& s) {
  std::size_t const n = s.size();
  return detail::minimize_over_relabellings(n, s.top(), s.zero(), [&](std::vector<Elem> const& order) {
    std::vector<Elem> pos = detail::inverse_order(order);
    std::vector<std::uint8_t> bytes;
    bytes.reserve(2 + n + n * n);
    bytes.push_back('R');
    bytes.push_back(static_cast<std::uint8_t>(n));
    for (Elem i = 0; i < n; ++i) bytes.push_back(static_cast<std::uint8_t>(pos[s.prime(order[i])]));
    for (Elem i = 0; i < n; ++i) {
      for (Elem j = 0; j < n; ++j) bytes.push_back(s.related(order[i], order[j]) ? 1 : 0);
    }
    return bytes;
  });
}

// ---------------------------------------------------------------------------
// Standard carrier and involutions
// ---------------------------------------------------------------------------

/// Names 0, 1, then a, a', b, b', ... for pairs and c, d, ... for fixpoints,
/// in index order. Index 1 is the top.
inline Carrier standard_carrier(Involution const& inv) {
  std::size_t const n = inv.size();
  if (n == 1) return Carrier({"1"}, 0);
  std::vector<std::string> names(n);
  names[0] = "0";
  names[1] = "1";
  std::size_t letter = 0;
  auto next_name = [&] {
    std::string s(1, static_cast<char>('a' + letter % 26));
    if (letter >= 26) s += std::to_string(letter / 26 + 1);
    ++letter;
    return s;
  };
  for (Elem x = 2; x < n; ++x) {
    if (!names[x].empty()) continue;
    names[x] = next_name();
    if (inv(x) != x) names[inv(x)] = names[x] + "'";
  }
  return Carrier(std::move(names), 1);
}

/// Involutions of {0..n-1} swapping 0 and 1, in lexicographic order of the
/// choice sequence (the smallest free element is either fixed, when allowed,
/// or paired with each larger free element in turn).
inline std::vector<Involution> standard_involutions(std::size_t n, bool allow_fixpoints) {
  std::vector<Involution> out;
  if (n == 0) return out;
  if (n == 1) {
    out.push_back(Involution::identity(1));
    return out;
  }
  Involution inv;
  inv.image.assign(n, static_cast<Elem>(-1));
  inv.image[0] = 1;
  inv.image[1] = 0;
  auto rec = [&](auto& self) -> void {
    Elem x = 2;
    while (x < n && inv.image[x] != static_cast<Elem>(-1)) ++x;
    if (x == n) {
      out.push_back(inv);
      return;
    }
    if (allow_fixpoints) {
      inv.image[x] = x;
      self(self);
      inv.image[x] = static_cast<Elem>(-1);
    }
    for (Elem y = x + 1; y < n; ++y) {
      if (inv.image[y] != static_cast<Elem>(-1)) continue;
      inv.image[x] = y;
      inv.image[y] = x;
      self(self);
      inv.image[x] = inv.image[y] = static_cast<Elem>(-1);
    }
  };
  rec(rec);
  return out;
}

// ---------------------------------------------------------------------------
// Orthogroupoid search kernel
// ---------------------------------------------------------------------------

namespace detail {

class GroupoidSearch {
 public:
  static constexpr Elem undefined = static_cast<Elem>(-1);

  GroupoidSearch(Involution inv, bool zero_commutative) : n_(inv.size()), inv_(std::move(inv)) {
    table_.assign(n_ * n_, undefined);
    consistent_ = force_cells(zero_commutative);
    if (!consistent_) return;
    for (std::uint32_t c = 0; c < n_ * n_; ++c) {
      if (table_[c] == undefined) free_.push_back(c);
    }
    watch_.resize(n_ * n_);
    for (Elem x = 0; x < n_ && consistent_; ++x) {
      for (Elem y = 0; y < n_ && consistent_; ++y) {
        add_instance({Kind::f_left, x, y, 0});
        add_instance({Kind::f_right, x, y, 0});
        for (Elem z = 0; z < n_ && consistent_; ++z) add_instance({Kind::e, x, y, z});
      }
    }
  }

  bool consistent() const { return consistent_; }
  std::vector<std::uint32_t> const& free_cells() const { return free_; }

  /// Depth-first search; the first prefix.size() free cells are pinned to
  /// the given values. emit receives the completed table.
  void run(std::span<Elem const> prefix, std::function<void(std::vector<Elem> const&)> const& emit) {
    if (!consistent_) return;
    prefix_ = prefix;
    emit_ = &emit;
    dfs(0);
    emit_ = nullptr;
  }

 private:
  enum class Kind : std::uint8_t { e, f_left, f_right };
  struct Instance {
    Kind kind;
    Elem x, y, z;
  };
  enum class Status { ok, fail, blocked };
  struct Eval {
    Status status;
    std::uint32_t cell = 0;
  };

  bool force(Elem x, Elem y, Elem v) {
    Elem& cell = table_[x * n_ + y];
    if (cell != undefined && cell != v) return false;
    cell = v;
    return true;
  }

  bool force_cells(bool zero_commutative) {
    Elem const one = n_ == 1 ? 0 : 1;
    Elem const zero = inv_(one);
    bool ok = true;
    for (Elem x = 0; x < n_; ++x) {
      ok = ok && force(zero, x, x) && force(x, one, one) && force(one, x, one) && force(x, inv_(x), one) &&
           force(x, x, x);
      if (zero_commutative) ok = ok && force(x, zero, x);
    }
    return ok;
  }

  Eval eval(Instance const& in) const {
    Elem v = 0;
    std::uint32_t blocked = 0;
    auto get = [&](Elem a, Elem b) {
      blocked = a * n_ + b;
      v = table_[blocked];
      return v != undefined;
    };
    switch (in.kind) {
      case Kind::f_left:
      case Kind::f_right: {
        if (!get(in.x, in.y)) return {Status::blocked, blocked};
        Elem const s = v;
        if (!get(in.kind == Kind::f_left ? in.x : in.y, s)) return {Status::blocked, blocked};
        return {v == s ? Status::ok : Status::fail};
      }
      case Kind::e: {
        // (((x+z)' + (x+y))' + (x+z)') + x' = x'
        if (!get(in.x, in.z)) return {Status::blocked, blocked};
        Elem const xz_ = inv_(v);
        if (!get(in.x, in.y)) return {Status::blocked, blocked};
        Elem const xy = v;
        if (!get(xz_, xy)) return {Status::blocked, blocked};
        Elem const inner = inv_(v);
        if (!get(inner, xz_)) return {Status::blocked, blocked};
        Elem const x_ = inv_(in.x);
        if (!get(v, x_)) return {Status::blocked, blocked};
        return {v == x_ ? Status::ok : Status::fail};
      }
    }
    return {Status::fail};
  }

  void add_instance(Instance in) {
    Eval r = eval(in);
    if (r.status == Status::fail) {
      consistent_ = false;
    } else if (r.status == Status::blocked) {
      auto id = static_cast<std::uint32_t>(instances_.size());
      instances_.push_back(in);
      watch_[r.cell].push_back(id);
    }
  }

  /// Re-evaluates the instances watching `cell`. Blocked instances move to
  /// their new blocking cell; every move is recorded on the trail.
  bool propagate(std::uint32_t cell) {
    auto const& w = watch_[cell];
    for (std::uint32_t id : w) {
      Eval r = eval(instances_[id]);
      if (r.status == Status::fail) return false;
      if (r.status == Status::blocked) {
        watch_[r.cell].push_back(id);
        trail_.push_back(r.cell);
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      watch_[trail_.back()].pop_back();
      trail_.pop_back();
    }
  }

  void dfs(std::size_t depth) {
    if (depth == free_.size()) {
      (*emit_)(table_);
      return;
    }
    std::uint32_t const cell = free_[depth];
    Elem lo = 0, hi = static_cast<Elem>(n_);
    if (depth < prefix_.size()) {
      lo = prefix_[depth];
      hi = lo + 1;
    }
    for (Elem v = lo; v < hi; ++v) {
      table_[cell] = v;
      std::size_t const mark = trail_.size();
      if (propagate(cell)) dfs(depth + 1);
      undo(mark);
    }
    table_[cell] = undefined;
  }

  std::size_t n_;
  Involution inv_;
  std::vector<Elem> table_;
  bool consistent_ = true;
  std::vector<std::uint32_t> free_;
  std::vector<Instance> instances_;
  std::vector<std::vector<std::uint32_t>> watch_;
  std::vector<std::uint32_t> trail_;
  std::span<Elem const> prefix_;
  std::function<void(std::vector<Elem> const&)> const* emit_ = nullptr;
};

/// Runs `work(p)` for p in [0, count) on `jobs` threads.
inline void parallel_for(std::size_t count, unsigned jobs, std::function<void(std::size_t)> const& work) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t p = 0; p < count; ++p) work(p);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(jobs, count); ++t) {
    pool.emplace_back([&] {
      for (std::size_t p; (p = next.fetch_add(1)) < count;) work(p);
    });
  }
}

template <typename T, typename Key>
void emit_deduplicated(std::vector<T>& models, Dedup dedup, Key key, std::function<void(T const&)> const& fn) {
  if (dedup == Dedup::labelled) {
    for (auto const& m : models) fn(m);
    return;
  }
  std::set<CanonicalForm> seen;
  for (auto const& m : models) {
    if (seen.insert(key(m)).second) fn(m);
  }
}

}  // namespace detail

/// Streams every orthogroupoid of the given size on the standard carrier.
/// Order is deterministic: involution, then search partition, then
/// discovery order; `jobs` does not change it.
inline void for_each_orthogroupoid(SearchSpec const& spec, std::function<void(Groupoid const&)> const& fn) {
  std::size_t const n = spec.size;
  if (n == 0) return;
  std::vector<Involution> invs =
      spec.involution ? std::vector<Involution>{*spec.involution} : standard_involutions(n, false);

  std::vector<Groupoid> models;
  for (auto const& inv : invs) {
    Carrier carrier = standard_carrier(inv);
    detail::GroupoidSearch probe(inv, spec.zero_commutative);
    if (!probe.consistent()) continue;

    // Partition by the values of the first k free cells.
    std::size_t const k = spec.jobs > 1 ? std::min<std::size_t>(2, probe.free_cells().size()) : 0;
    std::size_t partitions = 1;
    for (std::size_t i = 0; i < k; ++i) partitions *= n;
    std::vector<std::vector<Groupoid>> found(partitions);
    detail::parallel_for(partitions, spec.jobs, [&](std::size_t p) {
      std::vector<Elem> prefix(k);
      for (std::size_t i = k, q = p; i-- > 0; q /= n) prefix[i] = static_cast<Elem>(q % n);
      detail::GroupoidSearch search(inv, spec.zero_commutative);
      search.run(prefix, [&](std::vector<Elem> const& table) { found[p].emplace_back(carrier, table, inv); });
    });
    for (auto& part : found) {
      for (auto& g : part) models.push_back(std::move(g));
    }
  }
  detail::emit_deduplicated<Groupoid>(models, spec.dedup, [](Groupoid const& g) { return canonical_form(g); }, fn);
}

inline std::vector<Groupoid> enumerate_orthogroupoids(SearchSpec const& spec) {
  std::vector<Groupoid> out;
  for_each_orthogroupoid(spec, [&](Groupoid const& g) { out.push_back(g); });
  return out;
}

// ---------------------------------------------------------------------------
// Orthogonal relational systems
// ---------------------------------------------------------------------------

namespace detail {

/// Relations containing (x,1), (0,x) (and (x,x) if reflexive), closed under
/// (x,y) -> (y',x'). Cells are decided per orbit of that map, "absent"
/// before "present". Condition (a) only gets harder as pairs are added, so it
/// prunes eagerly; condition (b) and transitivity are checked on leaves.
class SystemSearch {
 public:
  SystemSearch(Involution inv, bool reflexive, bool transitive)
      : n_(inv.size()), inv_(std::move(inv)), transitive_(transitive), rows_(n_, 0) {
    one_ = n_ == 1 ? 0 : 1;
    zero_ = inv_(one_);
    for (Elem x = 0; x < n_; ++x) {
      set(x, one_);
      set(zero_, x);
      if (reflexive) set(x, x);
    }
    for (Elem x = 0; x < n_; ++x) {
      for (Elem y = 0; y < n_; ++y) {
        if (get(x, y)) continue;
        Elem const px = inv_(y), py = inv_(x);
        if (px * n_ + py < x * n_ + y) continue;  // orbit already listed
        orbits_.push_back({x, y, px, py});
      }
    }
  }

  std::size_t orbit_count() const { return orbits_.size(); }

  void run(std::function<void(std::vector<std::uint64_t> const&)> const& emit) {
    emit_ = &emit;
    if (condition_a_possible()) dfs(0);
    emit_ = nullptr;
  }

 private:
  struct Orbit {
    Elem x, y, px, py;  // (x,y) and (px,py) = (y',x')
  };

  bool get(Elem x, Elem y) const { return (rows_[x] >> y) & 1U; }
  void set(Elem x, Elem y) { rows_[x] |= std::uint64_t{1} << y; }
  void clear(Elem x, Elem y) { rows_[x] &= ~(std::uint64_t{1} << y); }

  bool condition_a_possible() const {
    std::uint64_t const top = std::uint64_t{1} << one_;
    for (Elem x = 0; x < n_; ++x) {
      if ((rows_[x] & rows_[inv_(x)]) != top) return false;
    }
    return true;
  }

  bool has_supremal(std::uint64_t cone) const {
    for (std::uint64_t b = cone; b != 0; b &= b - 1) {
      auto w = static_cast<Elem>(std::countr_zero(b));
      std::uint64_t const others = cone & ~(std::uint64_t{1} << w);
      if ((others & ~rows_[w]) == 0) return true;
    }
    return false;
  }

  bool leaf_ok() const {
    for (Elem x = 0; x < n_; ++x) {
      if (x == zero_) continue;
      for (Elem y = 0; y < n_; ++y) {
        if (y == zero_ || !get(x, inv_(y))) continue;
        if (!has_supremal(rows_[x] & rows_[y])) return false;
      }
    }
    if (transitive_) {
      for (Elem x = 0; x < n_; ++x) {
        for (std::uint64_t b = rows_[x]; b != 0; b &= b - 1) {
          auto y = static_cast<Elem>(std::countr_zero(b));
          if ((rows_[y] & ~rows_[x]) != 0) return false;
        }
      }
    }
    return true;
  }

  void dfs(std::size_t depth) {
    if (depth == orbits_.size()) {
      if (leaf_ok()) (*emit_)(rows_);
      return;
    }
    dfs(depth + 1);
    Orbit const& o = orbits_[depth];
    set(o.x, o.y);
    set(o.px, o.py);
    if (condition_a_possible()) dfs(depth + 1);
    clear(o.x, o.y);
    clear(o.px, o.py);
  }

  std::size_t n_;
  Involution inv_;
  bool transitive_;
  Elem one_ = 0, zero_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<Orbit> orbits_;
  std::function<void(std::vector<std::uint64_t> const&)> const* emit_ = nullptr;
};

}  // namespace detail

/// Streams every orthogonal relational system of the given size on the
/// standard carrier (involutions may have fixpoints here).
inline void for_each_orthosystem(SearchSpec const& spec, std::function<void(RelationalSystem const&)> const& fn) {
  std::size_t const n = spec.size;
  if (n == 0) return;
  std::vector<Involution> invs =
      spec.involution ? std::vector<Involution>{*spec.involution} : standard_involutions(n, true);
  std::vector<std::vector<RelationalSystem>> found(invs.size());
  detail::parallel_for(invs.size(), spec.jobs, [&](std::size_t p) {
    Carrier carrier = standard_carrier(invs[p]);
    detail::SystemSearch search(invs[p], spec.reflexive, spec.transitive);
    search.run([&](std::vector<std::uint64_t> const& rows) {
      RelationalSystem s(carrier, invs[p]);
      s.rows = rows;
      found[p].push_back(std::move(s));
    });
  });
  std::vector<RelationalSystem> models;
  for (auto& part : found) {
    for (auto& s : part) models.push_back(std::move(s));
  }
  detail::emit_deduplicated<RelationalSystem>(
      models, spec.dedup, [](RelationalSystem const& s) { return canonical_form(s); }, fn);
}

inline std::vector<RelationalSystem> enumerate_orthosystems(SearchSpec const& spec) {
  std::vector<RelationalSystem> out;
  for_each_orthosystem(spec, [&](RelationalSystem const& s) { out.push_back(s); });
  return out;
}

}  // namespace orthokit
