#include "pcinv/homology.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <random>
#include <set>

#include "pcinv/parallel.hpp"
#include "pcinv/quotient.hpp"
#include "pcinv/snf.hpp"

namespace pcinv {

namespace {

// Collector state in the extension of G by free central tails: a normal form
// of G times a tail vector.
struct TailState {
  std::uint32_t bits = 0;
  std::vector<std::int64_t> tails;
};

struct TailSink {
  std::vector<std::int64_t>* tails;
  const std::vector<std::size_t>* column;  // relation -> tail column
  int n;
  void power(int k) { (*tails)[(*column)[static_cast<std::size_t>(k)]] += 1; }
  void conj(int k, int j) { (*tails)[(*column)[pair_slot(k, j)]] += 1; }
  std::size_t pair_slot(int k, int j) const {
    // n power relations first, then pairs k < j in lexicographic order
    auto kk = static_cast<std::size_t>(k), nn = static_cast<std::size_t>(n);
    return nn + kk * nn - kk * (kk + 1) / 2 + static_cast<std::size_t>(j - k - 1);
  }
};

struct TailMachine {
  using State = TailState;
  const detail::PcTables* t;
  std::size_t m;
  const std::vector<std::size_t>* column;
  State identity() const { return {0, std::vector<std::int64_t>(m, 0)}; }
  void gen(State& s, int k) const {
    TailSink sink{&s.tails, column, t->n};
    detail::mul_gen(*t, s.bits, k, sink);
  }
  void word(State& s, const State& w) const {
    TailSink sink{&s.tails, column, t->n};
    detail::mul_word(*t, s.bits, w.bits, sink);
    for (std::size_t i = 0; i < m; ++i) s.tails[i] += w.tails[i];
  }
};

}  // namespace

CoverData schur_cover(const PcGroupPtr& gp, const CoverOptions& opts) {
  const PcGroup& g = *gp;
  const int n = g.ngens();
  if (n > kMaxCoverGenerators)
    throw ScaleError("schur cover: |G| = 2^" + std::to_string(n) + " exceeds the 2^" +
                     std::to_string(kMaxCoverGenerators) + " bound");
  const auto nn = static_cast<std::size_t>(n);
  const std::size_t m = nn + nn * (nn - (n > 0 ? 1 : 0)) / 2;
  std::vector<std::size_t> column(m);
  std::iota(column.begin(), column.end(), std::size_t{0});
  std::mt19937_64 rng(opts.shuffle_seed);
  if (opts.shuffle_seed) std::shuffle(column.begin(), column.end(), rng);

  IntMatrix rows;
  TailMachine mach{&g.tables(), m, &column};
  detail::consistency_tests(mach, n, [&](const TailState& a, const TailState& b, const std::string& label) {
    if (a.bits != b.bits) throw ConsistencyError(g.name() + ": overlap " + label + " is inconsistent");
    std::vector<std::int64_t> r(m);
    bool nonzero = false;
    for (std::size_t i = 0; i < m; ++i) {
      r[i] = a.tails[i] - b.tails[i];
      nonzero |= r[i] != 0;
    }
    if (nonzero) rows.push_back(std::move(r));
  });
  if (opts.shuffle_seed) std::shuffle(rows.begin(), rows.end(), rng);
  AbelianQuotient q = abelian_quotient(rows, m);
  if (q.free.size() != nn)
    throw std::logic_error("schur cover: tail lattice has free rank " + std::to_string(q.free.size()) + ", expected " +
                           std::to_string(n));

  CoverData c;
  c.group = gp;
  c.multiplier = q.torsion_orders();
  std::vector<int> off, width;
  int kn = n;
  for (auto d : c.multiplier) {
    off.push_back(kn);
    width.push_back(log2_exact(static_cast<std::size_t>(d)));
    kn += width.back();
  }
  if (kn > kMaxGenerators) throw ScaleError("schur cover: cover needs more than 30 pc generators");

  // tail column -> K-part of the normal form
  auto tail_bits = [&](std::size_t col) {
    auto coords = q.torsion_coords(col);
    std::uint32_t b = 0;
    for (std::size_t f = 0; f < coords.size(); ++f) b |= static_cast<std::uint32_t>(coords[f]) << off[f];
    return b;
  };
  TailSink slots{nullptr, &column, n};
  detail::PcTables t;
  t.n = kn;
  t.pow.assign(static_cast<std::size_t>(kn), 0);
  t.conj.assign(static_cast<std::size_t>(kn * kn), 0);
  const auto& gt = g.tables();
  for (int k = 0; k < n; ++k) {
    t.pow[static_cast<std::size_t>(k)] = gt.pow[static_cast<std::size_t>(k)] | tail_bits(column[static_cast<std::size_t>(k)]);
    for (int j = k + 1; j < n; ++j) t.conj_of(k, j) = gt.conj_of(k, j) | tail_bits(column[slots.pair_slot(k, j)]);
  }
  for (std::size_t f = 0; f < off.size(); ++f)
    for (int b = 0; b + 1 < width[f]; ++b) t.pow[static_cast<std::size_t>(off[f] + b)] = 1U << (off[f] + b + 1);
  for (int k = 0; k < kn; ++k)
    for (int j = std::max(k + 1, n); j < kn; ++j) t.conj_of(k, j) = 1U << j;

  std::vector<std::string> names = g.gen_names();
  for (std::size_t f = 0; f < off.size(); ++f)
    for (int b = 0; b < width[f]; ++b) names.push_back("k" + std::to_string(f + 1) + "_" + std::to_string(b));
  c.sc = std::make_shared<const PcGroup>(PcGroup::from_tables(g.name() + "_cover", std::move(t), names));

  std::vector<Element> images = g.generators();
  images.resize(static_cast<std::size_t>(kn), g.identity());
  c.epi = std::make_shared<const GroupHom<PcGroup>>(c.sc, gp, images);
  std::vector<Element> kgens;
  for (int i = n; i < kn; ++i) kgens.push_back(c.sc->gen(i));
  c.kernel = closure(*c.sc, kgens);
  if (c.kernel.order() * g.order() != c.sc->order() || !is_central(*c.sc, c.kernel))
    throw std::logic_error("schur cover: kernel is not central of the expected order");
  c.stem = intersect(*c.sc, c.kernel, derived_subgroup(*c.sc));
  return c;
}

std::vector<std::int64_t> stem_invariants(const CoverData& c) {
  std::vector<std::int64_t> out;
  for (int a : section_invariants(*c.sc, c.stem, closure(*c.sc, {}))) out.push_back(std::int64_t{1} << a);
  return out;
}

std::vector<std::int64_t> h2_integral(const PcGroupPtr& g) {
  CoverData c = schur_cover(g);
  auto inv = stem_invariants(c);
  if (inv != c.multiplier) throw std::logic_error("h2: stem part disagrees with the tail lattice torsion");
  return inv;
}

Subgroup commuting_wedges(const CoverData& c) {
  const PcGroup& g = *c.group;
  const PcGroup& sc = *c.sc;
  std::set<std::uint32_t> found;
  std::mutex mu;
  parallel_chunks(g.order(), [&](std::size_t b, std::size_t e, unsigned) {
    std::set<std::uint32_t> local;
    for (std::size_t i = b; i < e; ++i) {
      Element x = g.element(i);
      for (std::size_t j = i + 1; j < g.order(); ++j) {
        Element y = g.element(j);
        if (g.mul(x, y) != g.mul(y, x)) continue;
        Element w = sc.comm(c.lift(x), c.lift(y));
        if (w.bits) local.insert(w.bits);
      }
    }
    std::lock_guard lk(mu);
    found.insert(local.begin(), local.end());
  });
  std::vector<Element> gens;
  for (auto v : found) gens.push_back(Element{v});
  Subgroup w = closure(sc, gens);
  for (Element a : w.generators)
    if (!c.stem.contains(sc, a)) throw std::logic_error("commuting wedge outside the stem part");
  // keep a small generating set
  return subgroup_from_elements(sc, w.elements);
}

std::size_t WedgeSpace::pair_index(int i, int j) const {
  if (i > j) std::swap(i, j);
  auto ii = static_cast<std::size_t>(i), rr = static_cast<std::size_t>(r);
  return ii * rr - ii * (ii + 1) / 2 + static_cast<std::size_t>(j - i - 1);
}

std::string WedgeSpace::label(const BitVec& v) const {
  std::string s;
  for (auto p : v.ones()) {
    if (!s.empty()) s += "+";
    auto [i, j] = pairs[p];
    s += "e" + std::to_string(i + 1) + std::to_string(j + 1);
  }
  return s.empty() ? "0" : s;
}

BitVec WedgeSpace::wedge(std::uint64_t a, std::uint64_t b) const {
  BitVec v(pairs.size());
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    auto [i, j] = pairs[p];
    bool c = (((a >> i) & 1U) && ((b >> j) & 1U)) != (((a >> j) & 1U) && ((b >> i) & 1U));
    if (c) v.set(p);
  }
  return v;
}

AbelianCoords::AbelianCoords(const PcGroupPtr& g, const std::vector<Element>& lifts) {
  QuotientGroup q(g, derived_subgroup(*g));
  std::vector<Element> basis;
  for (Element l : lifts) basis.push_back(q.canonical(l));
  LinearCoords<QuotientGroup> lc(q, whole_group(q), basis);
  table_.resize(g->order());
  for (std::size_t i = 0; i < g->order(); ++i) table_[i] = lc.coords_or_throw(q.canonical(g->element(i)));
}

std::uint64_t AbelianCoords::operator()(Element e) const { return table_[e.bits]; }

WedgeSpace wedge_space(const PcGroupPtr& gp) {
  const PcGroup& g = *gp;
  Subgroup der = derived_subgroup(g);
  QuotientGroup q(gp, der);
  for (std::size_t i = 0; i < q.order(); ++i) {
    Element a = q.element(i);
    if (q.mul(a, a) != q.identity()) throw PreconditionError("abelianization does not have exponent 2");
  }
  if (!is_central(g, der)) throw PreconditionError("derived subgroup is not central");

  WedgeSpace w;
  // pc generators independent modulo [G, G], in order
  std::vector<Element> chosen;
  Subgroup span = closure(q, {});
  for (Element x : g.generators()) {
    Element cx = q.canonical(x);
    if (!span.contains(q, cx)) {
      w.lifts.push_back(x);
      chosen.push_back(cx);
      span = closure(q, chosen);
    }
  }
  w.r = static_cast<int>(w.lifts.size());
  for (int i = 0; i < w.r; ++i)
    for (int j = i + 1; j < w.r; ++j) w.pairs.push_back({i, j});
  LinearCoords<PcGroup> dc(g, der);
  w.derived_basis = dc.basis();
  for (auto [i, j] : w.pairs) {
    std::uint64_t c = dc.coords_or_throw(g.comm(w.lifts[static_cast<std::size_t>(i)], w.lifts[static_cast<std::size_t>(j)]));
    BitVec v(static_cast<std::size_t>(dc.dim()));
    for (int b = 0; b < dc.dim(); ++b)
      if ((c >> b) & 1U) v.set(static_cast<std::size_t>(b));
    w.images.push_back(std::move(v));
  }
  return w;
}

namespace {

// Reduced echelon form of a list of vectors (pivot = lowest set bit).
std::vector<BitVec> reduced_basis(std::vector<BitVec> vs) {
  std::vector<BitVec> out;
  for (auto& v : vs) {
    for (auto& b : out)
      if (v.get(b.first())) v ^= b;
    if (!v.any()) continue;
    for (auto& b : out)
      if (b.get(v.first())) b ^= v;
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end(), [](const BitVec& a, const BitVec& b) { return a.first() < b.first(); });
  return out;
}

}  // namespace

GaneaKernel ganea_kernel(const PcGroupPtr& g) {
  GaneaKernel k;
  k.space = wedge_space(g);
  std::size_t dim = k.space.derived_basis.size();
  k.basis = reduced_basis(gf2_kernel(k.space.images, dim));
  k.commutator_rank = gf2_rank(k.space.images, dim);
  return k;
}

std::vector<std::string> GaneaKernel::labels() const {
  std::vector<std::string> out;
  for (const auto& v : basis) out.push_back(space.label(v));
  return out;
}

bool GaneaKernel::contains(const BitVec& v) const {
  Gf2Echelon e(space.pairs.size(), false);
  for (const auto& b : basis) e.insert(b);
  return e.contains(v);
}

}  // namespace pcinv
