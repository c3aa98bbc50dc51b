#include "pcinv/verify/oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace pcinv::oracle {

namespace {

// Inverse of an odd number modulo 2^64 by Newton iteration.
std::uint64_t inverse_odd(std::uint64_t a) {
  std::uint64_t x = a;  // correct to 3 bits
  for (int i = 0; i < 6; ++i) x *= 2 - a * x;
  return x;
}

int valuation(std::uint64_t x) { return x == 0 ? 64 : std::countr_zero(x); }

}  // namespace

std::vector<std::int64_t> h2_bar_resolution(const PcGroup& g) {
  const std::size_t n = g.order();
  if (n > 16) throw std::invalid_argument("bar resolution oracle is limited to tiny groups");
  std::vector<Element> nonid;
  for (std::size_t i = 1; i < n; ++i) nonid.push_back(g.element(i));
  const std::size_t m = nonid.size();
  // C_2 basis [a|b], index a*m + b over nontrivial elements.
  std::unordered_map<std::uint32_t, std::size_t> pos;
  for (std::size_t i = 0; i < m; ++i) pos[nonid[i].bits] = i;
  auto idx2 = [&](Element a, Element b) -> long long {
    if (a.bits == 0 || b.bits == 0) return -1;
    return static_cast<long long>(pos.at(a.bits) * m + pos.at(b.bits));
  };
  const std::size_t cols = m * m;
  std::vector<std::vector<std::uint64_t>> rows;
  rows.reserve(m * m * m);
  for (Element a : nonid)
    for (Element b : nonid)
      for (Element c : nonid) {
        // d[a|b|c] = [b|c] - [ab|c] + [a|bc] - [a|b]
        std::vector<std::uint64_t> r(cols, 0);
        auto add = [&](long long i, std::uint64_t s) {
          if (i >= 0) r[static_cast<std::size_t>(i)] += s;
        };
        add(idx2(b, c), 1);
        add(idx2(g.mul(a, b), c), ~std::uint64_t{0});
        add(idx2(a, g.mul(b, c)), 1);
        add(idx2(a, b), ~std::uint64_t{0});
        rows.push_back(std::move(r));
      }
  // Elimination modulo 2^64 with a pivot of least valuation each round.
  std::vector<int> vals;
  std::vector<bool> row_used(rows.size(), false), col_used(cols, false);
  for (;;) {
    int best = 64;
    std::size_t pr = 0, pc = 0;
    for (std::size_t i = 0; i < rows.size() && best > 0; ++i) {
      if (row_used[i]) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        if (col_used[j]) continue;
        int v = valuation(rows[i][j]);
        if (v < best) {
          best = v;
          pr = i;
          pc = j;
          if (v == 0) break;
        }
      }
    }
    if (best == 64) break;
    vals.push_back(best);
    row_used[pr] = true;
    col_used[pc] = true;
    const auto& p = rows[pr];
    const std::uint64_t unit_inv = inverse_odd(p[pc] >> best);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (row_used[i] || rows[i][pc] == 0) continue;
      std::uint64_t f = (rows[i][pc] >> best) * unit_inv;
      auto& r = rows[i];
      for (std::size_t j = 0; j < cols; ++j) r[j] -= f * p[j];
    }
  }
  std::vector<std::int64_t> out;
  for (int v : vals)
    if (v > 0) out.push_back(std::int64_t{1} << v);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::int64_t> h2_kunneth(const std::vector<std::int64_t>& cyclic_orders) {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < cyclic_orders.size(); ++i)
    for (std::size_t j = i + 1; j < cyclic_orders.size(); ++j) {
      std::int64_t d = std::gcd(cyclic_orders[i], cyclic_orders[j]);
      if (d > 1) out.push_back(d);
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::int64_t> abelian_invariants_exhaustive(const PcGroup& g) {
  std::vector<Element> comms;
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = 0; j < g.order(); ++j) comms.push_back(g.comm(g.element(i), g.element(j)));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  Subgroup d = closure(g, comms);
  std::vector<std::int64_t> out;
  for (int a : section_invariants(g, whole_group(g), d)) out.push_back(std::int64_t{1} << a);
  return out;
}

std::vector<F2Poly> d2_by_interpolation(const PcGroup& g, const std::vector<Element>& v_basis,
                                        const std::vector<Element>& lifts) {
  const std::size_t dim = v_basis.size();
  const int r = static_cast<int>(lifts.size());
  if (dim > 20 || r > 16) throw std::invalid_argument("interpolation oracle is limited to small extensions");
  std::unordered_map<std::uint32_t, std::uint32_t> vcoord;
  for (std::uint32_t c = 0; c < (1U << dim); ++c) {
    Element e = g.identity();
    for (std::size_t i = 0; i < dim; ++i)
      if ((c >> i) & 1U) e = g.mul(e, v_basis[i]);
    vcoord[e.bits] = c;
  }
  const std::size_t npts = std::size_t{1} << r;
  std::vector<std::uint32_t> q(npts);
  for (std::size_t w = 0; w < npts; ++w) {
    Element e = g.identity();
    for (int a = 0; a < r; ++a)
      if ((w >> a) & 1U) e = g.mul(e, lifts[a]);
    auto it = vcoord.find(g.mul(e, e).bits);
    if (it == vcoord.end()) throw std::invalid_argument("square of a lift product leaves V");
    q[w] = it->second;
  }
  // Moebius transform: coefficient of the squarefree monomial on subset S
  for (int a = 0; a < r; ++a)
    for (std::size_t w = 0; w < npts; ++w)
      if ((w >> a) & 1U) q[w] ^= q[w ^ (std::size_t{1} << a)];
  std::vector<F2Poly> out;
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<Monomial> terms;
    for (std::size_t w = 1; w < npts; ++w) {
      if (!((q[w] >> i) & 1U)) continue;
      int k = std::popcount(w);
      if (k > 2) throw std::invalid_argument("square map is not quadratic");
      if (k == 1) {
        terms.push_back(Monomial::var(std::countr_zero(w), 2));  // X^2 restricts to X on F_2
      } else {
        int a = std::countr_zero(w);
        int b = std::countr_zero(w & (w - 1));
        terms.push_back(Monomial::var(a) * Monomial::var(b));
      }
    }
    out.emplace_back(r, std::move(terms));
  }
  return out;
}

}  // namespace pcinv::oracle
