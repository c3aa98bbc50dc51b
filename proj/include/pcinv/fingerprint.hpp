#pragma once

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "pcinv/group_algos.hpp"

namespace pcinv {

// Isomorphism invariants used in place of a group library lookup. Besides
// the usual counts it records the element-order profile, |Frattini| and the
// number of distinct squares; without the order profile D8 and Q8 collide.
struct Fingerprint {
  std::size_t order = 0;
  std::vector<int> abelian_invariants;  // exponents, A = prod Z/2^a
  std::size_t center_order = 0;
  std::size_t derived_order = 0;
  std::size_t exponent = 0;
  std::vector<std::size_t> class_sizes;  // sorted
  std::size_t conjugate_to_inverse = 0;
  std::vector<std::pair<std::size_t, std::size_t>> order_profile;  // (element order, count)
  std::size_t frattini_order = 0;
  std::size_t distinct_squares = 0;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

template <FiniteGroup G>
Fingerprint fingerprint(const G& g) {
  Fingerprint f;
  f.order = g.order();
  Subgroup all = whole_group(g);
  Subgroup der = derived_subgroup(g);
  f.abelian_invariants = section_invariants(g, all, der);
  f.center_order = center(g).order();
  f.derived_order = der.order();
  f.frattini_order = frattini_subgroup(g).order();
  ClassData cls = conjugacy_classes(g);
  for (const auto& c : cls.classes) f.class_sizes.push_back(c.size());
  std::sort(f.class_sizes.begin(), f.class_sizes.end());
  std::vector<std::size_t> by_order;
  std::set<std::size_t> squares;
  for (std::size_t i = 0; i < g.order(); ++i) {
    Element a = g.element(i);
    if (cls.class_of[i] == cls.class_of[g.index(g.inv(a))]) ++f.conjugate_to_inverse;
    std::size_t o = element_order(g, a);
    by_order.push_back(o);
    f.exponent = std::max(f.exponent, o);
    squares.insert(g.index(g.mul(a, a)));
  }
  std::sort(by_order.begin(), by_order.end());
  for (std::size_t o : by_order) {
    if (f.order_profile.empty() || f.order_profile.back().first != o)
      f.order_profile.push_back({o, 0});
    ++f.order_profile.back().second;
  }
  f.distinct_squares = squares.size();
  return f;
}

}  // namespace pcinv
