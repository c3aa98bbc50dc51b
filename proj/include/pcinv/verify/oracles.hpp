#pragma once

// Reference computations that share no code path with the production
// algorithms beyond group multiplication.

#include <cstdint>
#include <vector>

#include "pcinv/f2poly.hpp"
#include "pcinv/group_algos.hpp"

namespace pcinv::oracle {

// H_2(G; Z) for a 2-group from the normalized bar resolution: the torsion
// of coker(d_3 : C_3 -> C_2), computed 2-adically. Invariants ascending.
// Intended for |G| <= 16.
std::vector<std::int64_t> h2_bar_resolution(const PcGroup& g);

// H_2 of a product of cyclic groups Z/m_i: the sum over i < j of Z/gcd.
std::vector<std::int64_t> h2_kunneth(const std::vector<std::int64_t>& cyclic_orders);

// Number of conjugacy classes from all conjugates h^-1 g h.
template <FiniteGroup G>
std::size_t class_count_exhaustive(const G& g) {
  std::vector<bool> seen(g.order(), false);
  std::size_t classes = 0;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (seen[i]) continue;
    ++classes;
    for (std::size_t j = 0; j < g.order(); ++j) seen[g.index(conjugate(g, g.element(i), g.element(j)))] = true;
  }
  return classes;
}

// Abelian invariants of G by brute force: exponents of G/[G,G] from
// element counts, with [G,G] generated by every commutator of every pair.
std::vector<std::int64_t> abelian_invariants_exhaustive(const PcGroup& g);

// d2 of each zeta_i by interpolating the quadratic function
// w -> zeta_i(w^2) on W, where w is the product of the lifts it selects.
// Throws when that function has a term of degree three or more.
std::vector<F2Poly> d2_by_interpolation(const PcGroup& g, const std::vector<Element>& v_basis,
                                        const std::vector<Element>& lifts);

}  // namespace pcinv::oracle
