#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "pcinv/pcgroup.hpp"

namespace pcinv {

// Subgroup of a concrete group, stored as its elements together with a
// membership mask indexed by the group's element index.
struct Subgroup {
  std::vector<Element> generators;
  std::vector<Element> elements;
  std::vector<bool> mask;

  std::size_t order() const { return elements.size(); }
  bool contains_index(std::size_t i) const { return i < mask.size() && mask[i]; }
  template <FiniteGroup G>
  bool contains(const G& g, Element e) const {
    return contains_index(g.index(e));
  }
};

inline int log2_exact(std::size_t n) {
  if (n == 0 || (n & (n - 1))) throw std::logic_error("order is not a power of two");
  return std::countr_zero(n);
}

template <FiniteGroup G>
Subgroup closure(const G& g, const std::vector<Element>& gens) {
  Subgroup h;
  h.generators = gens;
  h.mask.assign(g.order(), false);
  Element id = g.identity();
  h.mask[g.index(id)] = true;
  h.elements.push_back(id);
  for (std::size_t pos = 0; pos < h.elements.size(); ++pos) {
    Element a = h.elements[pos];
    for (Element s : gens) {
      Element b = g.mul(a, s);
      std::size_t i = g.index(b);
      if (!h.mask[i]) {
        h.mask[i] = true;
        h.elements.push_back(b);
      }
    }
  }
  std::sort(h.elements.begin(), h.elements.end(),
            [&](Element a, Element b) { return g.index(a) < g.index(b); });
  return h;
}

// Subgroup given by its full element set; a small generating set is picked
// greedily in index order.
template <FiniteGroup G>
Subgroup subgroup_from_elements(const G& g, std::vector<Element> elems) {
  std::sort(elems.begin(), elems.end(), [&](Element a, Element b) { return g.index(a) < g.index(b); });
  Subgroup h = closure(g, {});
  std::vector<Element> gens;
  for (Element e : elems)
    if (!h.contains(g, e)) {
      gens.push_back(e);
      h = closure(g, gens);
    }
  if (h.order() != elems.size()) throw std::logic_error("element set is not a subgroup");
  return h;
}

template <FiniteGroup G>
Element commutator(const G& g, Element a, Element b) {
  return g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
}

template <FiniteGroup G>
Element conjugate(const G& g, Element a, Element by) {
  return g.mul(g.mul(g.inv(by), a), by);
}

template <FiniteGroup G>
Subgroup whole_group(const G& g) {
  return closure(g, g.generators());
}

template <FiniteGroup G>
Subgroup normal_closure(const G& g, std::vector<Element> gens) {
  Subgroup h = closure(g, gens);
  for (bool grown = true; grown;) {
    grown = false;
    for (std::size_t i = 0; i < h.generators.size() && !grown; ++i)
      for (Element x : g.generators()) {
        Element c = conjugate(g, h.generators[i], x);
        if (!h.contains(g, c)) {
          gens.push_back(c);
          h = closure(g, gens);
          grown = true;
          break;
        }
      }
  }
  return h;
}

template <FiniteGroup G>
bool is_normal(const G& g, const Subgroup& h) {
  for (Element a : h.generators)
    for (Element x : g.generators())
      if (!h.contains(g, conjugate(g, a, x))) return false;
  return true;
}

template <FiniteGroup G>
bool commutes_with_generators(const G& g, Element a) {
  for (Element x : g.generators())
    if (g.mul(a, x) != g.mul(x, a)) return false;
  return true;
}

template <FiniteGroup G>
bool is_central(const G& g, const Subgroup& h) {
  for (Element a : h.generators)
    if (!commutes_with_generators(g, a)) return false;
  return true;
}

template <FiniteGroup G>
Subgroup center(const G& g) {
  std::vector<Element> z;
  for (std::size_t i = 0; i < g.order(); ++i) {
    Element a = g.element(i);
    if (commutes_with_generators(g, a)) z.push_back(a);
  }
  return subgroup_from_elements(g, std::move(z));
}

template <FiniteGroup G>
Subgroup derived_subgroup(const G& g) {
  auto gens = g.generators();
  std::vector<Element> c;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) c.push_back(commutator(g, gens[i], gens[j]));
  return normal_closure(g, c);
}

// Frattini subgroup of a finite 2-group: generated as a normal subgroup by
// the squares and commutators of the generators.
template <FiniteGroup G>
Subgroup frattini_subgroup(const G& g) {
  auto gens = g.generators();
  std::vector<Element> c;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    c.push_back(g.mul(gens[i], gens[i]));
    for (std::size_t j = i + 1; j < gens.size(); ++j) c.push_back(commutator(g, gens[i], gens[j]));
  }
  return normal_closure(g, c);
}

template <FiniteGroup G>
Subgroup intersect(const G& g, const Subgroup& a, const Subgroup& b) {
  std::vector<Element> e;
  for (Element x : a.elements)
    if (b.contains(g, x)) e.push_back(x);
  return subgroup_from_elements(g, std::move(e));
}

template <FiniteGroup G>
Subgroup join(const G& g, const Subgroup& a, const Subgroup& b) {
  auto gens = a.generators;
  gens.insert(gens.end(), b.generators.begin(), b.generators.end());
  return closure(g, gens);
}

template <FiniteGroup G>
std::size_t element_order(const G& g, Element a) {
  std::size_t k = 1;
  Element p = a;
  while (p != g.identity()) {
    p = g.mul(p, a);
    ++k;
  }
  return k;
}

template <FiniteGroup G>
std::size_t exponent(const G& g) {
  std::size_t e = 1;
  for (std::size_t i = 0; i < g.order(); ++i) e = std::max(e, element_order(g, g.element(i)));
  return e;
}

template <FiniteGroup G>
bool is_abelian(const G& g) {
  auto gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i])) return false;
  return true;
}

// Conjugacy classes, computed as orbits under conjugation by generators.
struct ClassData {
  std::vector<std::uint32_t> class_of;  // by element index
  std::vector<std::vector<Element>> classes;
};

template <FiniteGroup G>
ClassData conjugacy_classes(const G& g) {
  constexpr std::uint32_t none = UINT32_MAX;
  ClassData d;
  d.class_of.assign(g.order(), none);
  auto gens = g.generators();
  std::vector<Element> ginv;
  for (Element x : gens) ginv.push_back(g.inv(x));
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (d.class_of[i] != none) continue;
    auto id = static_cast<std::uint32_t>(d.classes.size());
    std::vector<Element> orbit{g.element(i)};
    d.class_of[i] = id;
    for (std::size_t p = 0; p < orbit.size(); ++p)
      for (std::size_t k = 0; k < gens.size(); ++k) {
        Element c = g.mul(g.mul(ginv[k], orbit[p]), gens[k]);
        std::size_t ci = g.index(c);
        if (d.class_of[ci] == none) {
          d.class_of[ci] = id;
          orbit.push_back(c);
        }
      }
    d.classes.push_back(std::move(orbit));
  }
  return d;
}

// Invariants of the abelian 2-group section A/B as exponents a_1 <= a_2 <= ...
// with A/B the product of the Z/2^{a_i}, read off from how many x in A have
// x^{2^k} in B.
template <FiniteGroup G>
std::vector<int> section_invariants(const G& g, const Subgroup& a, const Subgroup& b) {
  std::vector<std::size_t> counts;  // counts[k] = |{x in A/B : x^{2^k} = 1}|
  std::vector<Element> powers = a.elements;
  counts.push_back(1);
  const std::size_t quotient = a.order() / b.order();
  while (counts.back() < quotient) {
    std::size_t c = 0;
    for (auto& x : powers) {
      x = g.mul(x, x);
      if (b.contains(g, x)) ++c;
    }
    counts.push_back(c / b.order());
    if (counts.size() > 64) throw std::logic_error("section is not a 2-group");
  }
  std::vector<int> ge;  // ge[k-1] = #{i : a_i >= k}
  for (std::size_t k = 1; k < counts.size(); ++k)
    ge.push_back(log2_exact(counts[k]) - log2_exact(counts[k - 1]));
  std::vector<int> out;
  for (std::size_t k = 0; k < ge.size(); ++k) {
    int exactly = ge[k] - (k + 1 < ge.size() ? ge[k + 1] : 0);
    for (int r = 0; r < exactly; ++r) out.push_back(static_cast<int>(k + 1));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Coordinates on an elementary abelian subgroup with respect to a basis.
template <FiniteGroup G>
class LinearCoords {
 public:
  // Basis chosen greedily through the subgroup's elements in index order
  // unless one is supplied.
  LinearCoords(const G& g, const Subgroup& v, std::vector<Element> basis = {}) : g_(&g) {
    for (Element a : v.elements)
      if (g.mul(a, a) != g.identity()) throw std::invalid_argument("subgroup is not elementary abelian");
    for (Element a : v.generators)
      for (Element b : v.generators)
        if (g.mul(a, b) != g.mul(b, a)) throw std::invalid_argument("subgroup is not elementary abelian");
    int dim = log2_exact(v.order());
    if (dim > 63) throw std::invalid_argument("elementary abelian subgroup too large");
    coords_.reserve(v.order() * 2);
    coords_[g.index(g.identity())] = 0;
    span_.push_back(g.identity());
    auto add = [&](Element b) {
      auto bit = std::uint64_t{1} << basis_.size();
      basis_.push_back(b);
      std::size_t cur = span_.size();
      for (std::size_t i = 0; i < cur; ++i) {
        Element e = g.mul(span_[i], b);
        coords_[g.index(e)] = coords_[g.index(span_[i])] | bit;
        span_.push_back(e);
      }
    };
    if (basis.empty()) {
      for (Element a : v.elements)
        if (!coords_.count(g.index(a))) add(a);
    } else {
      for (Element b : basis) {
        if (!v.contains(g, b)) throw std::invalid_argument("basis element outside the subgroup");
        if (coords_.count(g.index(b))) throw std::invalid_argument("basis is linearly dependent");
        add(b);
      }
      if (static_cast<int>(basis_.size()) != dim) throw std::invalid_argument("basis does not span the subgroup");
    }
  }

  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Element>& basis() const { return basis_; }
  std::optional<std::uint64_t> coords(Element e) const {
    auto it = coords_.find(g_->index(e));
    if (it == coords_.end()) return std::nullopt;
    return it->second;
  }
  std::uint64_t coords_or_throw(Element e) const {
    auto c = coords(e);
    if (!c) throw std::logic_error("element outside the elementary abelian subgroup");
    return *c;
  }
  Element element(std::uint64_t c) const {
    Element e = g_->identity();
    for (int i = 0; i < dim(); ++i)
      if ((c >> i) & 1U) e = g_->mul(e, basis_[static_cast<std::size_t>(i)]);
    return e;
  }

 private:
  const G* g_;
  std::vector<Element> basis_;
  std::vector<Element> span_;
  std::unordered_map<std::size_t, std::uint64_t> coords_;
};

}  // namespace pcinv
