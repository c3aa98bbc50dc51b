#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pcinv/collect.hpp"

namespace pcinv {

// Normal form x_1^{e_1} ... x_n^{e_n}; bit i of `bits` is e_{i+1}.
struct Element {
  std::uint32_t bits = 0;
  friend auto operator<=>(const Element&, const Element&) = default;
};

// Generator index (0-based) raised to an integer power.
struct Letter {
  int gen;
  int exp = 1;
};
using Word = std::vector<Letter>;

class PresentationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input shape for a power-commutator presentation: x_i^2 = pow[i] and
// [x_i, x_j] = comm[{i, j}] for i < j, with [a, b] = a^-1 b^-1 a b. Missing
// entries are trivial.
struct PcRelations {
  int n = 0;
  std::vector<Word> pow;
  std::map<std::pair<int, int>, Word> comm;
};

inline constexpr int kMaxGenerators = 30;

class PcGroup {
 public:
  static PcGroup from_relations(std::string name, const PcRelations& rel, std::vector<std::string> names = {});
  // Tables already in normal form; validated for shape and consistency.
  static PcGroup from_tables(std::string name, detail::PcTables tables, std::vector<std::string> names = {});

  const std::string& name() const { return name_; }
  int ngens() const { return t_.n; }
  std::size_t order() const { return std::size_t{1} << t_.n; }

  Element identity() const { return {}; }
  Element gen(int i) const { return {1U << i}; }
  std::vector<Element> generators() const;
  Element element(std::size_t i) const { return {static_cast<std::uint32_t>(i)}; }
  std::size_t index(Element e) const { return e.bits; }

  Element mul(Element a, Element b) const {
    detail::NullSink s;
    detail::mul_word(t_, a.bits, b.bits, s);
    return a;
  }
  Element inv(Element a) const { return {detail::inverse(t_, a.bits)}; }
  Element pow(Element a, long long k) const;
  Element comm(Element a, Element b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  // b^-1 a b
  Element conj(Element a, Element b) const { return mul(mul(inv(b), a), b); }
  Element collect(const Word& w) const;

  // Normal forms of the defining relations.
  Element power_relation(int i) const { return {t_.pow[static_cast<std::size_t>(i)]}; }
  Element comm_relation(int i, int j) const { return comm(gen(i), gen(j)); }

  const std::vector<std::string>& gen_names() const { return names_; }
  std::string to_string(Element e) const;
  // Word of ascending generator indices for the normal form.
  static std::vector<int> support(Element e);

  const detail::PcTables& tables() const { return t_; }

 private:
  PcGroup(std::string name, detail::PcTables t, std::vector<std::string> names);
  void check_consistency() const;

  std::string name_;
  detail::PcTables t_;
  std::vector<std::string> names_;
};

using PcGroupPtr = std::shared_ptr<const PcGroup>;

template <class G>
concept FiniteGroup = requires(const G& g, Element a, std::size_t i) {
  { g.order() } -> std::convertible_to<std::size_t>;
  { g.element(i) } -> std::same_as<Element>;
  { g.index(a) } -> std::convertible_to<std::size_t>;
  { g.mul(a, a) } -> std::same_as<Element>;
  { g.inv(a) } -> std::same_as<Element>;
  { g.identity() } -> std::same_as<Element>;
  { g.generators() } -> std::convertible_to<std::vector<Element>>;
};

static_assert(FiniteGroup<PcGroup>);

}  // namespace pcinv
