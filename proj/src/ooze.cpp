#include "pcinv/ooze.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace pcinv {

std::uint64_t DeltaMap::apply(Element g) const {
  if (!h1.S.contains(quotient->base(), g)) throw std::invalid_argument("element does not lie over H0(G^ab)");
  return sc_coords->coords_or_throw(quotient->canonical(g));
}

Element DeltaMap::lift(const std::vector<std::int64_t>& coords) const {
  return {lift_table.at(ab.from_coords(coords).bits)};
}

DeltaMap delta_map(const PcGroupPtr& gp) {
  const PcGroup& g = *gp;
  DeltaMap d;
  d.ab = abelianization(gp);
  d.h1 = h1_wh_prime(gp);
  d.lift_table.assign(d.ab.target->order(), UINT32_MAX);
  for (std::size_t i = 0; i < g.order(); ++i) {
    auto& slot = d.lift_table[d.ab.projection->apply(g.element(i)).bits];
    if (slot == UINT32_MAX) slot = static_cast<std::uint32_t>(i);
  }
  const std::size_t n = d.ab.invariants.size();
  for (std::size_t f = 0; f < n; ++f) {
    std::vector<std::int64_t> c(n, 0);
    c[f] = 1;
    d.factor_lifts.push_back(d.lift(c));
    c[f] = d.ab.invariants[f] / 2;
    d.h0_basis.push_back(d.lift(c));
  }

  d.quotient = std::make_shared<const QuotientGroup>(gp, d.h1.C);
  std::vector<Element> sgens;
  for (Element s : d.h1.S.generators) sgens.push_back(d.quotient->canonical(s));
  Subgroup sbar = closure(*d.quotient, sgens);
  d.sc_coords = std::make_shared<const LinearCoords<QuotientGroup>>(*d.quotient, sbar);
  d.target_basis = d.sc_coords->basis();

  const std::size_t k = static_cast<std::size_t>(d.sc_coords->dim());
  std::vector<BitVec> imgs;
  for (Element v : d.h0_basis) {
    std::uint64_t c = d.apply(v);
    d.images.push_back(c);
    BitVec b(k);
    for (std::size_t i = 0; i < k; ++i) b.set(i, (c >> i) & 1U);
    imgs.push_back(std::move(b));
  }
  d.rank = static_cast<int>(gf2_rank(imgs, k));
  if (d.rank != d.h1.rank) throw std::logic_error("delta is not surjective onto H1(Wh')");
  d.kernel = gf2_kernel(imgs, k);
  return d;
}

namespace {

std::vector<std::int64_t> scaled(const std::vector<std::int64_t>& c, std::int64_t s, const std::vector<std::int64_t>& m) {
  std::vector<std::int64_t> r(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) r[i] = (c[i] * s) % m[i];
  return r;
}

}  // namespace

AdaptedDecomposition adapted_decomposition(const DeltaMap& d) {
  if (d.rank == 0) throw PreconditionError("H1(Wh') is trivial, no adapted decomposition");
  const auto& m = d.ab.invariants;
  const std::size_t n = m.size();
  if (n > 64) throw ScaleError("too many cyclic factors");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return m[a] > m[b]; });

  // rows of the delta matrix with columns in factor order
  const int k = d.rank;
  std::vector<std::uint64_t> rows(static_cast<std::size_t>(d.sc_coords->dim()), 0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t r = 0; r < rows.size(); ++r)
      if ((d.images[order[j]] >> r) & 1U) rows[r] |= std::uint64_t{1} << j;
  std::vector<std::size_t> pivots;
  std::size_t cur = 0;
  for (std::size_t j = 0; j < n && cur < rows.size(); ++j) {
    std::size_t p = cur;
    while (p < rows.size() && !((rows[p] >> j) & 1U)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[cur]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != cur && ((rows[r] >> j) & 1U)) rows[r] ^= rows[cur];
    pivots.push_back(j);
    ++cur;
  }
  if (static_cast<int>(pivots.size()) != k) throw std::logic_error("delta matrix rank mismatch");

  AdaptedDecomposition a;
  a.k = k;
  auto emit = [&](std::size_t j, bool pivot) {
    std::vector<std::int64_t> c(n, 0);
    const std::size_t f = order[j];
    c[f] = 1;
    if (!pivot) {
      // cancel delta(v_j) with the pivot columns to its left, whose orders are
      // at least m_j
      for (std::size_t i = 0; i < pivots.size(); ++i)
        if ((rows[i] >> j) & 1U) {
          std::size_t pf = order[pivots[i]];
          c[pf] = (c[pf] + m[pf] / m[f]) % m[pf];
        }
    }
    a.generators.push_back(c);
    a.orders.push_back(m[f]);
  };
  for (std::size_t j : pivots) emit(j, true);
  for (std::size_t j = 0; j < n; ++j)
    if (std::find(pivots.begin(), pivots.end(), j) == pivots.end()) emit(j, false);
  for (std::size_t i = 0; i < n; ++i) {
    a.lifts.push_back(d.lift(a.generators[i]));
    a.v.push_back(d.lift(scaled(a.generators[i], a.orders[i] / 2, m)));
  }
  verify_adapted(d, a);
  return a;
}

AdaptedDecomposition adapted_decomposition(const PcGroupPtr& g) { return adapted_decomposition(delta_map(g)); }

void verify_adapted(const DeltaMap& d, const AdaptedDecomposition& a) {
  const PcGroup& t = *d.ab.target;
  std::vector<Element> gens;
  std::size_t prod = 1;
  for (std::size_t i = 0; i < a.generators.size(); ++i) {
    Element e = d.ab.from_coords(a.generators[i]);
    if (static_cast<std::int64_t>(element_order(t, e)) != a.orders[i])
      throw std::logic_error("adapted factor has the wrong order");
    gens.push_back(e);
    prod *= static_cast<std::size_t>(a.orders[i]);
  }
  if (prod != t.order() || closure(t, gens).order() != t.order())
    throw std::logic_error("adapted factors do not decompose G^ab");
  const std::size_t kdim = static_cast<std::size_t>(d.sc_coords->dim());
  std::vector<BitVec> first;
  for (std::size_t i = 0; i < a.v.size(); ++i) {
    const PcGroup& g = d.quotient->base();
    if (!d.h1.derived.contains(g, g.mul(a.v[i], a.v[i])))
      throw std::logic_error("v_i does not have order two in G^ab");
    std::uint64_t c = d.apply(a.v[i]);
    if (static_cast<int>(i) < a.k) {
      BitVec b(kdim);
      for (std::size_t r = 0; r < kdim; ++r) b.set(r, (c >> r) & 1U);
      first.push_back(std::move(b));
    } else if (c != 0) {
      throw std::logic_error("v_i outside the kernel of delta");
    }
  }
  if (static_cast<int>(gf2_rank(first, kdim)) != a.k || static_cast<int>(kdim) != a.k)
    throw std::logic_error("delta(v_1..v_k) is not a basis");
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::nonzero: return "nonzero";
    case Verdict::zero: return "zero";
    case Verdict::undecided: return "undecided";
  }
  return "undecided";
}

namespace {

F2Poly linear_form(int r, std::uint64_t bits) {
  F2Poly p(r);
  for (int a = 0; a < r; ++a)
    if ((bits >> a) & 1U) p += F2Poly::var(r, a);
  return p;
}

// Certificate for p : G -> Z/2 with kernel n_elems, phi its class.
bool certify(const PcGroup& g, const LhsData& l, std::uint64_t phi_bits, std::uint64_t delta_v1,
             Lambda4Report& rep) {
  F2Poly phi = linear_form(l.r(), phi_bits);
  SurvivalVerdict s = survives_deg4(l, phi.pow(4));
  if (s.verdict != Survival::survives_page4 || delta_v1 == 0) return false;
  WCoordinates wc(l);
  std::vector<Element> ker;
  for (std::size_t i = 0; i < g.order(); ++i)
    if (std::popcount(wc(g.element(i)) & phi_bits) % 2 == 0) ker.push_back(g.element(i));
  Subgroup n = subgroup_from_elements(g, ker);
  if (n.order() * 2 != g.order()) throw std::logic_error("projection kernel has the wrong index");
  // independent re-check of the survival claim
  if (degree_membership(phi.pow(4), l.i_closed, 4).member) throw std::logic_error("survivor certificate failed");
  rep.verdict = Verdict::nonzero;
  rep.phi = phi;
  rep.kernel_gens = n.generators;
  rep.kernel_order = n.order();
  rep.survivor = std::move(s);
  rep.delta_v1 = delta_v1;
  return true;
}

}  // namespace

Lambda4Report lambda4_detect(const PcGroupPtr& gp) {
  const PcGroup& g = *gp;
  Lambda4Report rep;
  DeltaMap d = delta_map(gp);
  if (d.rank == 0) {
    rep.verdict = Verdict::zero;
    rep.reason = "H1(Wh') = 0";
    return rep;
  }
  LhsData l;
  try {
    l = lhs_data(gp);
  } catch (const PreconditionError& e) {
    rep.reason = std::string("not LHS computable: ") + e.what();
    return rep;
  }
  const int r = l.r();
  WCoordinates wc(l);
  bool elementary = std::all_of(d.ab.invariants.begin(), d.ab.invariants.end(), [](auto m) { return m == 2; });

  if (elementary) {
    // phi vanishing on K = ker delta, as vectors over the lifts
    std::vector<std::uint64_t> kw;
    for (const auto& kv : d.kernel) {
      Element e = g.identity();
      for (auto f : kv.ones()) e = g.mul(e, d.h0_basis[f]);
      kw.push_back(wc(e));
    }
    std::vector<BitVec> cols;
    for (int a = 0; a < r; ++a) {
      BitVec b(kw.size());
      for (std::size_t i = 0; i < kw.size(); ++i) b.set(i, (kw[i] >> a) & 1U);
      cols.push_back(std::move(b));
    }
    for (const auto& phi : gf2_kernel(cols, kw.size())) {
      std::uint64_t bits = 0;
      for (auto a : phi.ones()) bits |= std::uint64_t{1} << a;
      int a1 = std::countr_zero(bits);
      if (certify(g, l, bits, d.apply(l.lifts[a1]), rep)) {
        rep.reason = "phi^4 survives page 4 for a projection with delta(v_1) != 0";
        return rep;
      }
      rep.vanishing.push_back(survives_deg4(l, linear_form(r, bits).pow(4)));
    }
    rep.verdict = Verdict::zero;
    rep.reason = "phi^4 lies in I for every phi vanishing on ker delta";
    return rep;
  }

  AdaptedDecomposition a = adapted_decomposition(d);
  for (int i = 0; i < a.k; ++i) {
    if (a.orders[i] != 2) continue;
    std::vector<Element> gens = d.h1.derived.generators;
    for (std::size_t j = 0; j < a.lifts.size(); ++j)
      if (static_cast<int>(j) != i) gens.push_back(a.lifts[j]);
    Subgroup n = closure(g, gens);
    std::uint64_t bits = 0;
    for (int b = 0; b < r; ++b)
      if (!n.contains(g, l.lifts[b])) bits |= std::uint64_t{1} << b;
    if (certify(g, l, bits, d.apply(a.v[i]), rep)) {
      rep.reason = "phi^4 survives page 4 for a factor projection with delta(v_1) != 0";
      if (rep.kernel_order != n.order()) throw std::logic_error("projection kernel mismatch");
      return rep;
    }
  }
  rep.reason = a.orders[0] >= 4 ? "first adapted factor is cyclic of order >= 4" : "no page-4 survivor among order-two factors";
  return rep;
}

CompatiblePairReport compatible_pair_check(const PcGroupPtr& pip, const CentralExtensionData& cover,
                                           const F2Poly& theta, const F2Poly& z) {
  const PcGroup& pi = *pip;
  CompatiblePairReport rep;
  rep.conditions.resize(7);
  auto& c = rep.conditions;
  LhsData l = lhs_data(pip);
  const int r = l.r();
  if (theta.nvars() != r || z.nvars() != r) throw VariableMismatch("theta and z must use the G^ab variables");
  if (!cover.base || (cover.base != pip && cover.base->name() != pi.name())) throw std::invalid_argument("cover does not map onto pi");
  for (const F2Poly* p : {&theta, &z})
    if (!p->is_zero() && (p->degree() != 2 || !p->is_homogeneous()))
      throw std::invalid_argument("theta and z must be homogeneous of degree two");

  Abelianization ab = abelianization(pip);
  c[0].pass = std::all_of(ab.invariants.begin(), ab.invariants.end(), [](auto m) { return m == 2; });
  c[0].detail = "G^ab exponent " + std::string(c[0].pass ? "2" : "> 2");

  try {
    ExtensionClassRep er = extension_class_rep(cover);
    rep.theta_computed = er.theta;
    bool same = same_h2_class(l, theta, er.theta);
    c[1].pass = cover.sigma_in_derived && same;
    c[1].detail = std::string(cover.sigma_in_derived ? "t in [G~,G~]" : "t not in [G~,G~]") + ", computed theta " +
                  er.theta.to_string() + (same ? " matches" : " differs");
  } catch (const std::exception& e) {
    c[1].detail = std::string("no class representative: ") + e.what();
  }

  WhPrimeData h = h1_wh_prime(cover.cover);
  c[2].pass = h.rank == 0;
  c[2].detail = "H1(Wh') of the cover has rank " + std::to_string(h.rank);

  SK1Data s = sk1(pip);
  Thm41Result t41 = thm41_check(cover);
  c[3].pass = t41.holds && s.order() == 2;
  c[3].inconclusive = t41.holds && s.order() > 2;
  c[3].detail = std::string(t41.holds ? "sigma is not a commutator" : "sigma criterion fails") + ", |SK1| = " +
                std::to_string(s.order());
  Thm42Result t42 = thm42_check(cover);
  c[4].pass = t42.holds && s.order() == 2;
  c[4].inconclusive = t42.holds && s.order() > 2;
  c[4].detail = std::string(t42.holds ? "self-inverse classes lift" : "a self-inverse class does not lift") +
                (s.order() == 2 ? ", H1(SK1) = Z/2" : "");

  SurvivalVerdict tz = survives_deg4(l, theta * z);
  bool sq = !in_closed_ideal(l, sq1(z));
  auto h2 = h2_integral(pip);
  bool exp2 = !h2.empty() && std::all_of(h2.begin(), h2.end(), [](auto m) { return m == 2; });
  c[5].pass = tz.verdict == Survival::survives_page4 && sq && exp2;
  c[5].detail = "theta*z " + to_string(tz.verdict) + ", Sq1(z) " + (sq ? "not in I" : "in I") + ", H2 exponent " +
                (exp2 ? "2" : "not 2");

  try {
    GaneaKernel gk = ganea_kernel(pip);
    if (gk.space.lifts != l.lifts) throw std::logic_error("wedge lifts differ from the spectral sequence lifts");
    AbelianCoords coords(pip, gk.space.lifts);
    Gf2Echelon span(gk.space.pairs.size(), false);
    std::vector<BitVec> basis;
    for (std::size_t i = 0; i < pi.order() && span.rank() < gk.basis.size(); ++i)
      for (std::size_t j = i + 1; j < pi.order(); ++j) {
        Element x = pi.element(i), y = pi.element(j);
        if (pi.mul(x, y) != pi.mul(y, x)) continue;
        BitVec w = gk.space.wedge(coords(x), coords(y));
        if (w.any() && span.insert(w)) basis.push_back(w);
      }
    bool vanish = true;
    for (const auto& w : basis) {
      rep.commuting_wedges.push_back(gk.space.label(w));
      if (!gk.contains(w)) throw std::logic_error("commuting wedge outside the Ganea kernel");
      int val = 0;
      for (auto p : w.ones()) {
        auto [a, b] = gk.space.pairs[p];
        val ^= z.contains(Monomial::var(a) * Monomial::var(b)) ? 1 : 0;
      }
      vanish = vanish && val == 0;
    }
    c[6].pass = vanish;
    c[6].detail = std::string("z ") + (vanish ? "vanishes" : "does not vanish") + " on the commuting wedges";
  } catch (const PreconditionError& e) {
    c[6].detail = std::string("commuting wedges not computable: ") + e.what();
  }
  c[6].inconclusive = !c[6].pass;

  bool all = std::all_of(c.begin(), c.end(), [](const ConditionResult& x) { return x.pass; });
  bool hard = std::any_of(c.begin(), c.end(), [](const ConditionResult& x) { return !x.pass && !x.inconclusive; });
  rep.verdict = all ? "compatible" : hard ? "not compatible" : "inconclusive";
  return rep;
}

ConjectureScan conjecture62_scan(const PcGroupPtr& gp) {
  const PcGroup& g = *gp;
  Abelianization ab = abelianization(gp);
  const auto& m = ab.invariants;
  const std::size_t nf = m.size();
  std::vector<std::vector<std::int64_t>> coord(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) coord[i] = ab.coords_of_source(g.element(i));
  ClassData cls = conjugacy_classes(g);

  ConjectureScan out;
  std::int64_t maxm = nf ? *std::max_element(m.begin(), m.end()) : 1;
  for (std::int64_t mod = 4; mod <= maxm; mod *= 2) {
    // u_f ranges over multiples of mod / gcd(m_f, mod)
    std::vector<std::int64_t> step(nf);
    double count = 1;
    for (std::size_t f = 0; f < nf; ++f) {
      step[f] = mod / std::gcd(m[f], mod);
      count *= static_cast<double>(mod / step[f]);
    }
    if (count > 1e6) throw ScaleError("too many cyclic quotients to scan");
    std::vector<std::int64_t> u(nf, 0);
    while (true) {
      std::size_t first_odd = nf;
      for (std::size_t f = 0; f < nf && first_odd == nf; ++f)
        if (u[f] % 2) first_odd = f;
      if (first_odd < nf && u[first_odd] == 1) {
        ConjectureSequence s;
        s.quotient_order = static_cast<std::uint64_t>(mod);
        s.hom = u;
        std::vector<Element> ne, te, we;
        std::vector<std::int64_t> val(g.order());
        for (std::size_t i = 0; i < g.order(); ++i) {
          std::int64_t v = 0;
          for (std::size_t f = 0; f < nf; ++f) v = (v + u[f] * coord[i][f]) % mod;
          val[i] = v;
          if (v == 0) ne.push_back(g.element(i));
          if (v == 0 || v == mod / 2) te.push_back(g.element(i));
          if (v % 2 == 0) we.push_back(g.element(i));
        }
        s.n = subgroup_from_elements(g, ne);
        s.t = subgroup_from_elements(g, te);
        s.w = subgroup_from_elements(g, we);
        if (s.t.order() != 2 * s.n.order() || 2 * s.w.order() != g.order())
          throw std::logic_error("subgroup sequence has the wrong indices");
        std::vector<std::uint32_t> ids;
        std::size_t members = 0;
        for (std::size_t i = 0; i < g.order(); ++i)
          if (val[i] == mod / 2) {
            ids.push_back(cls.class_of[i]);
            ++members;
          }
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        std::size_t total = 0;
        for (auto id : ids) total += cls.classes[id].size();
        if (total != members) throw std::logic_error("T - N is not a union of conjugacy classes");
        for (auto id : ids) {
          auto inv_id = cls.class_of[g.index(g.inv(cls.classes[id].front()))];
          if (!std::binary_search(ids.begin(), ids.end(), inv_id)) throw std::logic_error("inversion leaves T - N");
          if (inv_id == id) ++s.inversion_fixed;
        }
        s.class_count = ids.size();
        s.odd = s.class_count % 2 == 1;
        if (s.odd && s.inversion_fixed == 0) throw std::logic_error("odd class count without an inversion-fixed class");
        out.sequences.push_back(std::move(s));
      }
      std::size_t f = 0;
      while (f < nf) {
        u[f] += step[f];
        if (u[f] < mod) break;
        u[f] = 0;
        ++f;
      }
      if (f == nf) break;
    }
  }
  return out;
}

}  // namespace pcinv
