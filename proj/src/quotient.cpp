#include "pcinv/quotient.hpp"

namespace pcinv {

namespace {

// Lexicographic order on exponent vectors with x_1 most significant.
std::uint32_t lex_key(Element e, int n) {
  std::uint32_t r = 0;
  for (int i = 0; i < n; ++i)
    if ((e.bits >> i) & 1U) r |= 1U << (n - 1 - i);
  return r;
}

}  // namespace

QuotientGroup::QuotientGroup(PcGroupPtr base, Subgroup normal) : base_(std::move(base)), normal_(std::move(normal)) {
  if (!is_normal(*base_, normal_)) throw std::invalid_argument("quotient by a subgroup that is not normal");
  const int n = base_->ngens();
  constexpr std::uint32_t none = UINT32_MAX;
  coset_of_.assign(base_->order(), none);
  for (std::size_t i = 0; i < base_->order(); ++i) {
    if (coset_of_[i] != none) continue;
    auto id = static_cast<std::uint32_t>(reps_.size());
    Element g = base_->element(i);
    Element best = g;
    for (Element k : normal_.elements) {
      Element c = base_->mul(g, k);
      coset_of_[c.bits] = id;
      if (lex_key(c, n) < lex_key(best, n)) best = c;
    }
    reps_.push_back(best);
  }
}

std::vector<Element> QuotientGroup::generators() const {
  std::vector<Element> r;
  for (Element x : base_->generators()) r.push_back(canonical(x));
  return r;
}

}  // namespace pcinv
