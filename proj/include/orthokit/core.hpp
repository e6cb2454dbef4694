#pragma once

// Core value types shared by every orthokit module: carriers, involutions,
// relational systems, groupoids and check reports.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace orthokit {

/// Index of an element in its carrier.
using Elem = std::uint32_t;

/// Relation rows are single machine words, so carriers are capped at 64.
inline constexpr std::size_t max_carrier_size = 64;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

/// Malformed or inconsistent input (CLI exit code 2).
class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class parse_error : public input_error {
 public:
  parse_error(std::size_t line, std::string const& what)
      : input_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class semantic_error : public input_error {
 public:
  using input_error::input_error;
};

/// A well-formed input that an operation refuses (non-central element,
/// non-0-commutative algebra, non-orthogonal system, ...).
class precondition_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A verification that must hold on valid input failed.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// ---------------------------------------------------------------------------
// ElementSet
// ---------------------------------------------------------------------------

/// Subset of a carrier of at most 64 elements.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr ElementSet singleton(Elem x) { return ElementSet(bit(x)); }
  static constexpr ElementSet all(std::size_t n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr bool contains(Elem x) const { return (bits_ >> x) & 1U; }
  constexpr void insert(Elem x) { bits_ |= bit(x); }
  constexpr void erase(Elem x) { bits_ &= ~bit(x); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr std::uint64_t bits() const { return bits_; }

  /// Smallest member; the set must be nonempty.
  constexpr Elem front() const { return static_cast<Elem>(std::countr_zero(bits_)); }

  constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }

  std::vector<Elem> elements() const {
    std::vector<Elem> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(static_cast<Elem>(std::countr_zero(b)));
    }
    return out;
  }

  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
  friend constexpr bool operator==(ElementSet, ElementSet) = default;

 private:
  static constexpr std::uint64_t bit(Elem x) { return std::uint64_t{1} << x; }
  std::uint64_t bits_ = 0;
};

// ---------------------------------------------------------------------------
// Carrier and involution
// ---------------------------------------------------------------------------

/// Ordered list of distinct element names. The distinguished top element is
/// always named "1"; every other name is free-form.
class Carrier {
 public:
  Carrier() = default;

  Carrier(std::vector<std::string> names, Elem top) : names_(std::move(names)), top_(top) {
    if (names_.empty()) throw std::invalid_argument("carrier must be nonempty");
    if (names_.size() > max_carrier_size) {
      throw std::invalid_argument("carrier exceeds " + std::to_string(max_carrier_size) + " elements");
    }
    if (top_ >= names_.size()) throw std::invalid_argument("top index out of range");
    if (names_[top_] != "1") throw std::invalid_argument("top element must be named \"1\"");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].empty()) throw std::invalid_argument("empty element name");
      for (std::size_t j = 0; j < i; ++j) {
        if (names_[i] == names_[j]) throw std::invalid_argument("duplicate element name " + names_[i]);
      }
    }
  }

  std::size_t size() const { return names_.size(); }
  Elem top() const { return top_; }
  std::string const& name(Elem x) const { return names_.at(x); }
  std::vector<std::string> const& names() const { return names_; }

  std::optional<Elem> find(std::string const& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<Elem>(it - names_.begin());
  }

  friend bool operator==(Carrier const&, Carrier const&) = default;

 private:
  std::vector<std::string> names_;
  Elem top_ = 0;
};

/// Unary map x -> x'. Involutivity is a checked property, not a
/// construction invariant, so that malformed values can be reported.
struct Involution {
  std::vector<Elem> image;

  Elem operator()(Elem x) const { return image[x]; }
  std::size_t size() const { return image.size(); }

  static Involution identity(std::size_t n) {
    Involution inv;
    inv.image.resize(n);
    for (std::size_t i = 0; i < n; ++i) inv.image[i] = static_cast<Elem>(i);
    return inv;
  }

  friend bool operator==(Involution const&, Involution const&) = default;
};

// ---------------------------------------------------------------------------
// Structures
// ---------------------------------------------------------------------------

/// <A, R, ', 1>: row x of the relation holds bit y iff (x,y) in R.
struct RelationalSystem {
  Carrier carrier;
  std::vector<std::uint64_t> rows;
  Involution involution;

  RelationalSystem() = default;
  RelationalSystem(Carrier c, Involution inv)
      : carrier(std::move(c)), rows(carrier.size(), 0), involution(std::move(inv)) {}

  std::size_t size() const { return carrier.size(); }
  Elem top() const { return carrier.top(); }
  Elem zero() const { return involution(carrier.top()); }
  Elem prime(Elem x) const { return involution(x); }

  bool related(Elem x, Elem y) const { return (rows[x] >> y) & 1U; }
  void relate(Elem x, Elem y, bool value = true) {
    if (value) {
      rows[x] |= std::uint64_t{1} << y;
    } else {
      rows[x] &= ~(std::uint64_t{1} << y);
    }
  }
  ElementSet successors(Elem x) const { return ElementSet(rows[x]); }

  std::size_t pair_count() const {
    std::size_t total = 0;
    for (auto r : rows) total += static_cast<std::size_t>(std::popcount(r));
    return total;
  }

  friend bool operator==(RelationalSystem const&, RelationalSystem const&) = default;
};

/// <D, +, ', 1>: table[x * n + y] = x + y.
struct Groupoid {
  Carrier carrier;
  std::vector<Elem> table;
  Involution involution;

  Groupoid() = default;
  Groupoid(Carrier c, std::vector<Elem> t, Involution inv)
      : carrier(std::move(c)), table(std::move(t)), involution(std::move(inv)) {}

  std::size_t size() const { return carrier.size(); }
  Elem top() const { return carrier.top(); }
  Elem zero() const { return involution(carrier.top()); }
  Elem prime(Elem x) const { return involution(x); }
  Elem sum(Elem x, Elem y) const { return table[x * size() + y]; }
  void set_sum(Elem x, Elem y, Elem v) { table[x * size() + y] = v; }

  friend bool operator==(Groupoid const&, Groupoid const&) = default;
};

using Structure = std::variant<RelationalSystem, Groupoid>;

/// 0 := 1'.
template <typename S>
Elem zero_of(S const& s) {
  return s.zero();
}

inline Elem zero_of(Structure const& s) {
  return std::visit([](auto const& v) { return v.zero(); }, s);
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

struct Binding {
  std::string var;
  Elem value;
  friend bool operator==(Binding const&, Binding const&) = default;
};

/// Assignment of variables to elements that falsifies a check.
using Witness = std::vector<Binding>;

struct Check {
  static constexpr std::size_t max_witnesses = 16;

  std::string name;
  bool pass = true;
  std::size_t failures = 0;  // total failing assignments, witnesses is a prefix
  std::vector<Witness> witnesses;

  Check() = default;
  explicit Check(std::string n) : name(std::move(n)) {}

  void fail(Witness w) {
    pass = false;
    ++failures;
    if (witnesses.size() < max_witnesses) witnesses.push_back(std::move(w));
  }

  bool has_witness(Witness const& w) const {
    return std::find(witnesses.begin(), witnesses.end(), w) != witnesses.end();
  }
};

struct CheckReport {
  std::vector<Check> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](Check const& c) { return c.pass; });
  }

  Check const* find(std::string const& name) const {
    for (auto const& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }

  void append(CheckReport const& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }
};

// ---------------------------------------------------------------------------
// Structural validation
// ---------------------------------------------------------------------------

namespace detail {

inline Check involution_law(Involution const& inv) {
  Check c("involution_law");
  for (Elem x = 0; x < inv.size(); ++x) {
    Elem y = inv(x);
    if (y >= inv.size() || inv(y) != x) c.fail({{"x", x}});
  }
  return c;
}

inline Check involution_bijective(Involution const& inv) {
  Check c("involution_bijective");
  std::vector<bool> hit(inv.size(), false);
  for (Elem x = 0; x < inv.size(); ++x) {
    if (inv(x) >= inv.size()) {
      c.fail({{"x", x}});
      continue;
    }
    hit[inv(x)] = true;
  }
  for (Elem y = 0; y < inv.size(); ++y) {
    if (!hit[y]) c.fail({{"y", y}});
  }
  return c;
}

}  // namespace detail

inline CheckReport validate(RelationalSystem const& s) {
  CheckReport r;
  r.checks.push_back(detail::involution_law(s.involution));
  r.checks.push_back(detail::involution_bijective(s.involution));
  Check top("top_law");
  for (Elem x = 0; x < s.size(); ++x) {
    if (!s.related(x, s.top())) top.fail({{"x", x}});
  }
  r.checks.push_back(std::move(top));
  Check compat("involution_compat");
  for (Elem x = 0; x < s.size(); ++x) {
    for (Elem y = 0; y < s.size(); ++y) {
      if (!s.related(x, y)) continue;
      Elem const px = s.prime(x), py = s.prime(y);
      if (px >= s.size() || py >= s.size() || !s.related(py, px)) compat.fail({{"x", x}, {"y", y}});
    }
  }
  r.checks.push_back(std::move(compat));
  return r;
}

inline CheckReport validate(Groupoid const& g) {
  CheckReport r;
  r.checks.push_back(detail::involution_law(g.involution));
  r.checks.push_back(detail::involution_bijective(g.involution));
  Check closed("table_closed");
  std::size_t const n = g.size();
  if (g.table.size() != n * n) {
    closed.fail({{"x", static_cast<Elem>(g.table.size() / std::max<std::size_t>(n, 1))}});
  } else {
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (g.sum(x, y) >= n) closed.fail({{"x", x}, {"y", y}});
      }
    }
  }
  r.checks.push_back(std::move(closed));
  return r;
}

inline CheckReport validate(Structure const& s) {
  return std::visit([](auto const& v) { return validate(v); }, s);
}

}  // namespace orthokit
