#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "orthokit.hpp"

namespace testing_support {

inline std::string read_text(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline std::string data_path(std::string const& name) { return std::string(ORTHOKIT_DATA_DIR) + "/" + name; }

inline orthokit::Groupoid load_groupoid(std::string const& name) {
  return orthokit::parse_groupoid(read_text(data_path(name)));
}

inline orthokit::RelationalSystem load_relsys(std::string const& name) {
  return orthokit::parse_relsys(read_text(data_path(name)));
}

inline orthokit::Elem el(orthokit::Carrier const& c, std::string const& name) { return c.find(name).value(); }

/// The two-element Boolean algebra and its powers.
inline orthokit::Groupoid boolean2() { return load_groupoid("boolean2.txt"); }

inline orthokit::Groupoid boolean_power(std::size_t k) {
  std::vector<orthokit::Groupoid> fs(k, boolean2());
  return orthokit::direct_product(std::span<orthokit::Groupoid const>(fs));
}

inline orthokit::Groupoid trivial() {
  return orthokit::Groupoid(orthokit::Carrier({"1"}, 0), {0}, orthokit::Involution::identity(1));
}

/// Labelled orthogroupoids of sizes 1..max on the standard carrier.
inline std::vector<orthokit::Groupoid> orthogroupoids_up_to(std::size_t max, bool zero_commutative = false) {
  std::vector<orthokit::Groupoid> out;
  for (std::size_t n = 1; n <= max; ++n) {
    orthokit::SearchSpec s;
    s.size = n;
    s.zero_commutative = zero_commutative;
    auto v = orthokit::enumerate_orthogroupoids(s);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

inline std::vector<orthokit::Elem> perm_inverse(std::vector<orthokit::Elem> const& p) {
  std::vector<orthokit::Elem> q(p.size());
  for (orthokit::Elem i = 0; i < p.size(); ++i) q[p[i]] = i;
  return q;
}

/// The same algebra with element x moved to position p[x].
inline orthokit::Groupoid relabel(orthokit::Groupoid const& g, std::vector<orthokit::Elem> const& p) {
  std::size_t const n = g.size();
  std::vector<std::string> names(n);
  orthokit::Involution inv;
  inv.image.resize(n);
  std::vector<orthokit::Elem> table(n * n);
  for (orthokit::Elem x = 0; x < n; ++x) {
    names[p[x]] = g.carrier.name(x);
    inv.image[p[x]] = p[g.prime(x)];
    for (orthokit::Elem y = 0; y < n; ++y) table[p[x] * n + p[y]] = p[g.sum(x, y)];
  }
  return {orthokit::Carrier(names, p[g.top()]), table, inv};
}

}  // namespace testing_support
