#include "pcinv/abelian.hpp"

#include "pcinv/snf.hpp"

namespace pcinv {

std::vector<std::int64_t> Abelianization::coords(Element e) const {
  std::vector<std::int64_t> c;
  for (std::size_t f = 0; f < invariants.size(); ++f) {
    std::int64_t v = (e.bits >> factor_offset[f]) & ((1U << factor_bits[f]) - 1U);
    c.push_back(v);
  }
  return c;
}

Element Abelianization::from_coords(const std::vector<std::int64_t>& c) const {
  Element e;
  for (std::size_t f = 0; f < invariants.size(); ++f) {
    std::int64_t v = c[f] % invariants[f];
    if (v < 0) v += invariants[f];
    e.bits |= static_cast<std::uint32_t>(v) << factor_offset[f];
  }
  return e;
}

Abelianization abelianization(const PcGroupPtr& gp) {
  const PcGroup& g = *gp;
  const int n = g.ngens();
  IntMatrix rel;
  auto row_of = [&](Element w) {
    std::vector<std::int64_t> r(static_cast<std::size_t>(n), 0);
    for (int l : PcGroup::support(w)) r[static_cast<std::size_t>(l)] -= 1;
    return r;
  };
  for (int i = 0; i < n; ++i) {
    auto r = row_of(g.power_relation(i));
    r[static_cast<std::size_t>(i)] += 2;
    rel.push_back(std::move(r));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Element c = g.comm_relation(i, j);
      if (c.bits) rel.push_back(row_of(c));
    }
  AbelianQuotient q = abelian_quotient(rel, static_cast<std::size_t>(n));
  if (!q.free.empty()) throw std::logic_error("abelianization of a finite group has free rank");

  Abelianization a;
  a.invariants = q.torsion_orders();
  PcRelations tr;
  int off = 0;
  for (auto d : a.invariants) {
    int bits = log2_exact(static_cast<std::size_t>(d));
    a.factor_offset.push_back(off);
    a.factor_bits.push_back(bits);
    off += bits;
  }
  tr.n = off;
  tr.pow.assign(static_cast<std::size_t>(off), {});
  for (std::size_t f = 0; f < a.invariants.size(); ++f)
    for (int b = 0; b + 1 < a.factor_bits[f]; ++b)
      tr.pow[static_cast<std::size_t>(a.factor_offset[f] + b)] = {{a.factor_offset[f] + b + 1, 1}};
  a.target = std::make_shared<const PcGroup>(PcGroup::from_relations(g.name() + "^ab", tr));
  std::vector<Element> images;
  for (int i = 0; i < n; ++i) images.push_back(a.from_coords(q.torsion_coords(static_cast<std::size_t>(i))));
  a.projection = std::make_shared<const GroupHom<PcGroup>>(gp, a.target, std::move(images));
  return a;
}

}  // namespace pcinv
