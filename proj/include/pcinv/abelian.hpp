#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "pcinv/hom.hpp"

namespace pcinv {

// G^{ab} as an explicit abelian pc group: factor f is Z/2^{a_f}, given by a
// chain of generators c, c^2, c^4, ... so that a factor coordinate is read
// off its bits.
struct Abelianization {
  std::vector<std::int64_t> invariants;  // cyclic orders, ascending
  std::vector<int> factor_offset;        // first target generator of each factor
  std::vector<int> factor_bits;          // a_f
  PcGroupPtr target;
  std::shared_ptr<const GroupHom<PcGroup>> projection;

  std::vector<std::int64_t> coords(Element target_element) const;
  Element from_coords(const std::vector<std::int64_t>& c) const;
  std::vector<std::int64_t> coords_of_source(Element g) const { return coords(projection->apply(g)); }
};

Abelianization abelianization(const PcGroupPtr& g);

struct StandardSubgroups {
  Subgroup center;
  Subgroup derived;
  Subgroup center_derived;
};

template <FiniteGroup G>
StandardSubgroups standard_subgroups(const G& g) {
  StandardSubgroups s{center(g), derived_subgroup(g), {}};
  s.center_derived = intersect(g, s.center, s.derived);
  return s;
}

// Closure of gens, or its normal closure.
template <FiniteGroup G>
Subgroup make_subgroup(const G& g, const std::vector<Element>& gens, bool normal) {
  return normal ? normal_closure(g, gens) : closure(g, gens);
}

}  // namespace pcinv
