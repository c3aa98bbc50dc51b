#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcinv/group_algos.hpp"

namespace pcinv {

class HomomorphismError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Homomorphism out of a pc group, given by the images of its generators.
// Construction checks every defining relation.
template <FiniteGroup Target>
class GroupHom {
 public:
  GroupHom(PcGroupPtr source, std::shared_ptr<const Target> target, std::vector<Element> images)
      : src_(std::move(source)), tgt_(std::move(target)), img_(std::move(images)) {
    const PcGroup& s = *src_;
    const Target& t = *tgt_;
    if (static_cast<int>(img_.size()) != s.ngens())
      throw HomomorphismError("expected " + std::to_string(s.ngens()) + " generator images, got " +
                              std::to_string(img_.size()));
    for (auto& e : img_)
      if (t.index(e) >= t.order()) throw HomomorphismError("image outside the target group");
    for (int i = 0; i < s.ngens(); ++i) {
      Element a = img_[static_cast<std::size_t>(i)];
      if (t.index(t.mul(a, a)) != t.index(apply(s.power_relation(i))))
        throw HomomorphismError("relation x" + std::to_string(i + 1) + "^2 = " + s.to_string(s.power_relation(i)) +
                                " is not respected");
      for (int j = i + 1; j < s.ngens(); ++j) {
        Element b = img_[static_cast<std::size_t>(j)];
        Element lhs = conjugate(t, b, a);
        Element rhs = apply(Element{s.tables().conj_of(i, j)});
        if (t.index(lhs) != t.index(rhs))
          throw HomomorphismError("relation [x" + std::to_string(i + 1) + ",x" + std::to_string(j + 1) +
                                  "] = " + s.to_string(s.comm_relation(i, j)) + " is not respected");
      }
    }
  }

  Element apply(Element e) const {
    const Target& t = *tgt_;
    Element r = t.identity();
    for (int i : PcGroup::support(e)) r = t.mul(r, img_[static_cast<std::size_t>(i)]);
    return r;
  }

  Subgroup kernel() const {
    std::vector<Element> k;
    const std::size_t id = tgt_->index(tgt_->identity());
    for (std::size_t i = 0; i < src_->order(); ++i)
      if (tgt_->index(apply(src_->element(i))) == id) k.push_back(src_->element(i));
    return subgroup_from_elements(*src_, std::move(k));
  }

  Subgroup image() const { return closure(*tgt_, img_); }
  bool is_surjective() const { return image().order() == tgt_->order(); }

  const PcGroupPtr& source() const { return src_; }
  const std::shared_ptr<const Target>& target() const { return tgt_; }
  const std::vector<Element>& images() const { return img_; }

 private:
  PcGroupPtr src_;
  std::shared_ptr<const Target> tgt_;
  std::vector<Element> img_;
};

}  // namespace pcinv
