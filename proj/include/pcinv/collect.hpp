#pragma once

// Collection from the left for pc presentations in which every relative
// order is 2. Exposed separately from PcGroup so the Schur cover code can
// run the same collector while recording which relations were used.

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace pcinv::detail {

struct PcTables {
  int n = 0;
  std::vector<std::uint32_t> pow;   // normal form of x_k^2
  std::vector<std::uint32_t> conj;  // n*n; entry k*n+j is x_j^{x_k}, j > k

  std::uint32_t conj_of(int k, int j) const { return conj[static_cast<std::size_t>(k * n + j)]; }
  std::uint32_t& conj_of(int k, int j) { return conj[static_cast<std::size_t>(k * n + j)]; }
};

struct NullSink {
  void power(int) {}
  void conj(int, int) {}
};

inline std::uint32_t bits_above(int k) { return k >= 31 ? 0U : ~((2U << k) - 1U); }

template <class Sink>
void mul_gen(const PcTables& t, std::uint32_t& e, int k, Sink& sink);

// e <- e * h where h is a normal form.
template <class Sink>
void mul_word(const PcTables& t, std::uint32_t& e, std::uint32_t h, Sink& sink) {
  while (h) {
    int j = std::countr_zero(h);
    h &= h - 1;
    mul_gen(t, e, j, sink);
  }
}

// e <- e * x_k. Writing e = p x_k^s u with p below k and u above k, the
// result is p x_k^{s+1} u^{x_k}.
template <class Sink>
void mul_gen(const PcTables& t, std::uint32_t& e, int k, Sink& sink) {
  const std::uint32_t hi = bits_above(k);
  const std::uint32_t bit = 1U << k;
  std::uint32_t u = e & hi;
  e &= ~hi;
  if (e & bit) {
    e &= ~bit;
    sink.power(k);
    e |= t.pow[static_cast<std::size_t>(k)];
  } else {
    e |= bit;
  }
  while (u) {
    int j = std::countr_zero(u);
    u &= u - 1;
    sink.conj(k, j);
    mul_word(t, e, t.conj_of(k, j), sink);
  }
}

inline std::uint32_t inverse(const PcTables& t, std::uint32_t g) {
  NullSink s;
  std::uint32_t r = 0;
  while (g) {
    int i = std::countr_zero(g);
    r |= 1U << i;
    mul_gen(t, g, i, s);
  }
  return r;
}

// Runs the standard overlap tests. M supplies State, identity(), gen(State&,k)
// and word(State&, const State&); `report` is called with both sides and a
// label for every test.
template <class M, class Report>
void consistency_tests(const M& m, int n, Report&& report) {
  using S = typename M::State;
  auto lhs = [&](std::initializer_list<int> gens) {
    S s = m.identity();
    for (int g : gens) m.gen(s, g);
    return s;
  };
  auto rhs = [&](int first, std::initializer_list<int> rest) {
    S w = m.identity();
    for (int g : rest) m.gen(w, g);
    S r = m.identity();
    m.gen(r, first);
    m.word(r, w);
    return r;
  };
  auto label = [](const char* kind, int a, int b, int c) {
    std::string s = kind;
    s += " ";
    s += std::to_string(a + 1);
    if (b >= 0) s += " " + std::to_string(b + 1);
    if (c >= 0) s += " " + std::to_string(c + 1);
    return s;
  };
  for (int k = n - 1; k >= 0; --k)
    for (int j = k - 1; j >= 0; --j)
      for (int i = j - 1; i >= 0; --i)
        report(lhs({k, j, i}), rhs(k, {j, i}), label("xk xj xi", k, j, i));
  for (int j = n - 1; j >= 0; --j)
    for (int i = j - 1; i >= 0; --i) {
      report(lhs({j, j, i}), rhs(j, {j, i}), label("xj xj xi", j, i, -1));
      report(lhs({j, i, i}), rhs(j, {i, i}), label("xj xi xi", j, i, -1));
    }
  for (int i = n - 1; i >= 0; --i) report(lhs({i, i, i}), rhs(i, {i, i}), label("xi xi xi", i, -1, -1));
}

}  // namespace pcinv::detail
