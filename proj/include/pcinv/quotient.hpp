#pragma once

#include <memory>
#include <vector>

#include "pcinv/group_algos.hpp"

namespace pcinv {

// G/N for a normal subgroup N of a pc group. Elements are coset
// representatives: the lexicographically least normal form in each coset,
// reading exponents from x_1.
class QuotientGroup {
 public:
  QuotientGroup(PcGroupPtr base, Subgroup normal);

  std::size_t order() const { return reps_.size(); }
  Element element(std::size_t i) const { return reps_[i]; }
  std::size_t index(Element e) const { return coset_of_[e.bits]; }
  Element identity() const { return {}; }
  Element mul(Element a, Element b) const { return canonical(base_->mul(a, b)); }
  Element inv(Element a) const { return canonical(base_->inv(a)); }
  std::vector<Element> generators() const;

  Element canonical(Element e) const { return reps_[coset_of_[e.bits]]; }
  const PcGroup& base() const { return *base_; }
  const PcGroupPtr& base_ptr() const { return base_; }
  const Subgroup& kernel() const { return normal_; }

 private:
  PcGroupPtr base_;
  Subgroup normal_;
  std::vector<std::uint32_t> coset_of_;
  std::vector<Element> reps_;
};

static_assert(FiniteGroup<QuotientGroup>);

}  // namespace pcinv
