// Glue two copies of the four-element Boolean algebra along {0,1}, then take
// the result apart again through its center.

#include <iostream>
#include <vector>

#include "orthokit.hpp"

using namespace orthokit;

int main() {
  Groupoid two = parse_groupoid(
      "%orthokit v1\nkind groupoid\nelements 0 1\ninvolution 1 0\ntable\n0 1\n1 1\n");
  Groupoid square = direct_product(two, two);

  VFormation v{two, square, square, {square.zero(), square.top()}, {square.zero(), square.top()}};
  Amalgam m = amalgamate(v);
  std::cout << serialize(m.d);
  std::cout << "orthogroupoid " << (check_orthogroupoid(m.d).holds() ? "yes" : "no") << '\n';
  std::cout << "strong " << (verify_strong(v, m) ? "yes" : "no") << '\n';
  std::cout << "proof cases";
  for (auto c : m.proof_cases) std::cout << ' ' << c;
  std::cout << '\n';

  BooleanCenter c = center(m.d);
  std::cout << "central";
  for (Elem e : c.elements) std::cout << ' ' << m.d.carrier.name(e);
  std::cout << '\n';

  Decomposition d = full_decompose(m.d);
  std::cout << d.factors.size() << " factor(s):";
  for (auto const& f : d.factors) std::cout << ' ' << f.size();
  std::cout << '\n';
}
