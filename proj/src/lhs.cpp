#include "pcinv/lhs.hpp"

#include <functional>
#include <unordered_map>


namespace pcinv {

namespace {

// Greedy independent set among candidates, growing from start.
std::vector<Element> greedy_basis(const PcGroup& g, Subgroup start, const std::vector<Element>& candidates,
                                  std::size_t target_order) {
  std::vector<Element> chosen;
  std::vector<Element> gens = start.generators;
  for (Element c : candidates) {
    if (start.order() == target_order) break;
    if (start.contains(g, c)) continue;
    chosen.push_back(c);
    gens.push_back(c);
    start = closure(g, gens);
  }
  return chosen;
}

std::vector<Element> pc_generators_in(const PcGroup& g, const Subgroup& s) {
  std::vector<Element> out;
  for (Element x : g.generators())
    if (s.contains(g, x)) out.push_back(x);
  for (Element x : s.elements) out.push_back(x);
  return out;
}

F2Poly quadratic_from(int r, const std::function<bool(int)>& sq, const std::function<bool(int, int)>& cm) {
  std::vector<Monomial> terms;
  for (int a = 0; a < r; ++a)
    if (sq(a)) terms.push_back(Monomial::var(a, 2));
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b)
      if (cm(a, b)) terms.push_back(Monomial::var(a) * Monomial::var(b));
  return F2Poly(r, std::move(terms));
}

void check_extension(const PcGroup& g, const Subgroup& v, const std::vector<Element>& lifts) {
  if (!is_central(g, v)) throw PreconditionError("kernel V is not central");
  for (Element a : v.generators)
    if (g.mul(a, a) != g.identity()) throw PreconditionError("kernel V is not elementary abelian");
  for (std::size_t a = 0; a < lifts.size(); ++a) {
    if (!v.contains(g, g.mul(lifts[a], lifts[a]))) throw PreconditionError("quotient G/V is not elementary abelian");
    for (std::size_t b = a + 1; b < lifts.size(); ++b)
      if (!v.contains(g, g.comm(lifts[a], lifts[b]))) throw PreconditionError("quotient G/V is not elementary abelian");
  }
  if (lifts.size() > static_cast<std::size_t>(kMaxVars)) throw PreconditionError("G/V has too many generators");
}

}  // namespace

WCoordinates::WCoordinates(const LhsData& l) : q_(l.group, l.v) {
  const std::size_t n = std::size_t{1} << l.lifts.size();
  for (std::size_t w = 0; w < n; ++w) {
    Element e = l.group->identity();
    for (std::size_t a = 0; a < l.lifts.size(); ++a)
      if ((w >> a) & 1U) e = l.group->mul(e, l.lifts[a]);
    map_[q_.canonical(e).bits] = w;
  }
}

std::uint64_t WCoordinates::operator()(Element e) const { return map_.at(q_.canonical(e).bits); }

std::string LhsData::zeta_label(std::size_t i) const { return group->to_string(v_basis.at(i)); }

std::string to_string(Survival s) {
  switch (s) {
    case Survival::survives_page4: return "survives_page4";
    case Survival::dies: return "dies";
    case Survival::undecided: return "undecided";
  }
  return "undecided";
}

LhsData d2_table(const PcGroupPtr& gp, const Subgroup& v, const LhsOptions& opts) {
  const PcGroup& g = *gp;
  LhsData l;
  l.group = gp;
  l.v = v;
  l.lifts = greedy_basis(g, v, g.generators(), g.order());
  check_extension(g, v, l.lifts);
  if (opts.v_basis.empty())
    l.v_basis = greedy_basis(g, closure(g, {}), pc_generators_in(g, v), v.order());
  else
    l.v_basis = opts.v_basis;
  LinearCoords<PcGroup> vc(g, v, l.v_basis);

  const int r = l.r();
  for (int i = 0; i < vc.dim(); ++i) {
    auto bit = [&](Element e) { return (vc.coords_or_throw(e) >> i) & 1U; };
    l.d2.push_back(quadratic_from(
        r, [&](int a) { return bit(g.mul(l.lifts[a], l.lifts[a])) != 0; },
        [&](int a, int b) { return bit(g.comm(l.lifts[a], l.lifts[b])) != 0; }));
  }
  if (opts.mutate_d2 && !l.d2.empty()) {
    F2Poly& f = l.d2.front();
    if (!f.is_zero())
      f += F2Poly::monomial(r, f.leading());
    else if (r >= 2)
      f += F2Poly::monomial(r, Monomial::var(0) * Monomial::var(1));
  }
  for (const auto& f : l.d2)
    if (!f.is_zero()) l.i2.push_back(f);
  l.d3 = d3_table(l);
  l.i_closed = l.i2;
  for (const auto& e : l.d3) {
    if (e.raw.is_zero()) continue;
    bool dup = false;
    for (const auto& h : l.i_closed) dup = dup || h == e.raw;
    if (!dup) l.i_closed.push_back(e.raw);
  }
  return l;
}

LhsData lhs_data(const PcGroupPtr& g, const LhsOptions& opts) { return d2_table(g, frattini_subgroup(*g), opts); }

std::vector<D3Entry> d3_table(const LhsData& l) {
  std::vector<D3Entry> out;
  for (const auto& f : l.d2) {
    D3Entry e;
    e.raw = sq1(f);
    MembershipCertificate c = degree_membership(e.raw, l.i2, 3);
    e.in_i2 = c.member;
    e.normal_form = c.member ? F2Poly(l.r()) : *c.residual;
    out.push_back(std::move(e));
  }
  return out;
}

bool d3_matches(const LhsData& l, std::size_t i, const F2Poly& literal) {
  const D3Entry& e = l.d3.at(i);
  if (literal.is_zero()) return e.in_i2;
  return e.raw == literal;
}

SurvivalVerdict survives_deg4(const LhsData& l, const F2Poly& f) {
  if (f.nvars() != l.r()) throw VariableMismatch("class lives in a different ring");
  SurvivalVerdict s;
  s.f = f;
  s.certificate = degree_membership(f, l.i_closed, 4);
  s.verdict = s.certificate.member ? Survival::dies : Survival::survives_page4;
  return s;
}

bool in_closed_ideal(const LhsData& l, const F2Poly& f) {
  if (f.is_zero()) return true;
  return degree_membership(f, l.i_closed, f.degree()).member;
}

bool same_h2_class(const LhsData& l, const F2Poly& a, const F2Poly& b) {
  F2Poly d = a + b;
  if (d.is_zero()) return true;
  if (d.degree() != 2 || !d.is_homogeneous()) return false;
  return degree_membership(d, l.i2, 2).member;
}

ExtensionClassRep extension_class_rep(const CentralExtensionData& e, std::vector<Element> complement) {
  if (!e.alpha || !e.base) throw std::invalid_argument("extension has no explicit base map");
  const PcGroup& cg = *e.cover;
  const PcGroup& bg = *e.base;
  LhsData lc = lhs_data(e.cover);
  LhsData lb = lhs_data(e.base);
  if (!lc.v.contains(cg, e.t)) throw PreconditionError("sigma does not lie in the Frattini subgroup of the cover");
  if (lc.r() != lb.r()) throw PreconditionError("cover and base have different Frattini quotients");

  // complement of <t> in V~ mapping isomorphically onto V
  const std::size_t vdim = static_cast<std::size_t>(log2_exact(lb.v.order()));
  if (complement.empty()) {
    Subgroup img = closure(bg, {});
    for (Element c : pc_generators_in(cg, lc.v)) {
      if (img.order() == lb.v.order()) break;
      Element a = e.alpha->apply(c);
      if (img.contains(bg, a)) continue;
      complement.push_back(c);
      std::vector<Element> gens = img.generators;
      gens.push_back(a);
      img = closure(bg, gens);
    }
  }
  std::vector<Element> imgs;
  for (Element c : complement) {
    if (!lc.v.contains(cg, c)) throw PreconditionError("complement element outside V~");
    imgs.push_back(e.alpha->apply(c));
  }
  Subgroup img = closure(bg, imgs);
  if (complement.size() != vdim || img.order() != lb.v.order() || img.elements != lb.v.elements)
    throw PreconditionError("no complement of sigma in V~ maps isomorphically onto V");
  std::vector<Element> basis{e.t};
  basis.insert(basis.end(), complement.begin(), complement.end());
  LinearCoords<PcGroup> vc(cg, lc.v, basis);

  const int r = lc.r();
  auto sig = [&](Element x) { return (vc.coords_or_throw(x) & 1U) != 0; };
  F2Poly theta = quadratic_from(
      r, [&](int a) { return sig(cg.mul(lc.lifts[a], lc.lifts[a])); },
      [&](int a, int b) { return sig(cg.comm(lc.lifts[a], lc.lifts[b])); });

  // express in the base variables: X~_a = sum_b (M^-1)[b][a] X_b
  WCoordinates wb(lb);
  std::vector<std::uint64_t> m(r);
  for (int a = 0; a < r; ++a) m[a] = wb(e.alpha->apply(lc.lifts[a]));
  bool identity = true;
  for (int a = 0; a < r; ++a) identity = identity && m[a] == (std::uint64_t{1} << a);
  if (!identity) {
    // Gauss-Jordan on [M | I]
    std::vector<std::uint64_t> inv(r);
    for (int a = 0; a < r; ++a) inv[a] = std::uint64_t{1} << a;
    for (int c = 0; c < r; ++c) {
      int p = c;
      while (p < r && !((m[p] >> c) & 1U)) ++p;
      if (p == r) throw PreconditionError("base map is not an isomorphism on Frattini quotients");
      std::swap(m[p], m[c]);
      std::swap(inv[p], inv[c]);
      for (int k = 0; k < r; ++k)
        if (k != c && ((m[k] >> c) & 1U)) {
          m[k] ^= m[c];
          inv[k] ^= inv[c];
        }
    }
    std::vector<std::vector<bool>> sub(r, std::vector<bool>(r));
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b) sub[a][b] = (inv[b] >> a) & 1U;
    theta = substitute_linear(theta, sub);
  }
  return {theta, complement, lc.lifts};
}

}  // namespace pcinv
