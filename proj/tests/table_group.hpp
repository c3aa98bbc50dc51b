#pragma once

// Groups given by an explicit multiplication function on concrete objects
// (matrices, permutations), materialized into a Cayley table. Used as
// independent references for the pc machinery.

#include <algorithm>
#include <map>
#include <vector>

#include "pcinv/group_algos.hpp"

namespace pcinv::testing {

class TableGroup {
 public:
  template <class T, class Mul>
  TableGroup(const std::vector<T>& gens, T id, Mul mul) {
    std::vector<T> elems{id};
    std::map<T, std::size_t> idx{{id, 0}};
    for (std::size_t p = 0; p < elems.size(); ++p)
      for (const T& g : gens) {
        T e = mul(elems[p], g);
        if (!idx.count(e)) {
          idx[e] = elems.size();
          elems.push_back(e);
        }
      }
    const std::size_t n = elems.size();
    table_.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) table_[a * n + b] = idx.at(mul(elems[a], elems[b]));
    inv_.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (table_[a * n + b] == 0) inv_[a] = b;
    for (const T& g : gens) gens_.push_back(Element{static_cast<std::uint32_t>(idx.at(g))});
  }

  std::size_t order() const { return inv_.size(); }
  Element element(std::size_t i) const { return {static_cast<std::uint32_t>(i)}; }
  std::size_t index(Element e) const { return e.bits; }
  Element identity() const { return {}; }
  Element mul(Element a, Element b) const {
    return {static_cast<std::uint32_t>(table_[a.bits * order() + b.bits])};
  }
  Element inv(Element a) const { return {static_cast<std::uint32_t>(inv_[a.bits])}; }
  std::vector<Element> generators() const { return gens_; }

 private:
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inv_;
  std::vector<Element> gens_;
};

static_assert(FiniteGroup<TableGroup>);

// Quaternion units as (sign, unit) with unit 0..3 = 1, i, j, k.
inline TableGroup quaternion_group() {
  using Q = std::pair<int, int>;
  auto mul = [](Q a, Q b) {
    static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    return Q{a.first * b.first * sign[a.second][b.second], unit[a.second][b.second]};
  };
  return TableGroup(std::vector<Q>{{1, 1}, {1, 2}}, Q{1, 0}, mul);
}

// Symmetries of a square as permutations of its corners; generators are a
// reflection and the quarter turn.
inline TableGroup dihedral_group_8() {
  using P = std::vector<int>;
  auto mul = [](const P& a, const P& b) {  // apply a, then b
    P r(4);
    for (int i = 0; i < 4; ++i) r[static_cast<std::size_t>(i)] = b[static_cast<std::size_t>(a[static_cast<std::size_t>(i)])];
    return r;
  };
  return TableGroup(std::vector<P>{{0, 3, 2, 1}, {1, 2, 3, 0}}, P{0, 1, 2, 3}, mul);
}

// Z/m1 x Z/m2 x ... as coordinate vectors.
inline TableGroup abelian_group(const std::vector<int>& moduli) {
  using V = std::vector<int>;
  auto mul = [moduli](const V& a, const V& b) {
    V r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % moduli[i];
    return r;
  };
  std::vector<V> gens;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    V g(moduli.size(), 0);
    g[i] = 1;
    gens.push_back(g);
  }
  return TableGroup(gens, V(moduli.size(), 0), mul);
}

}  // namespace pcinv::testing
