#include "pcinv/pcgroup.hpp"

#include <bit>

namespace pcinv {

namespace {

std::uint32_t mask_upto(int k) { return (2U << k) - 1U; }

struct PlainMachine {
  using State = std::uint32_t;
  const detail::PcTables* t;
  State identity() const { return 0; }
  void gen(State& s, int k) const {
    detail::NullSink n;
    detail::mul_gen(*t, s, k, n);
  }
  void word(State& s, const State& w) const {
    detail::NullSink n;
    detail::mul_word(*t, s, w, n);
  }
};

std::uint32_t collect_in(const detail::PcTables& t, const Word& w) {
  detail::NullSink s;
  std::uint32_t e = 0;
  for (const auto& l : w) {
    if (l.gen < 0 || l.gen >= t.n) throw PresentationError("word mentions generator " + std::to_string(l.gen + 1));
    long long k = l.exp;
    if (k >= 0) {
      for (long long r = 0; r < k; ++r) detail::mul_gen(t, e, l.gen, s);
    } else {
      std::uint32_t gi = detail::inverse(t, 1U << l.gen);
      for (long long r = 0; r < -k; ++r) detail::mul_word(t, e, gi, s);
    }
  }
  return e;
}

void require_above(const Word& w, int bound, const std::string& what) {
  for (const auto& l : w)
    if (l.gen <= bound)
      throw PresentationError(what + " involves generator " + std::to_string(l.gen + 1) +
                              ", which is not above generator " + std::to_string(bound + 1));
}

}  // namespace

PcGroup::PcGroup(std::string name, detail::PcTables t, std::vector<std::string> names)
    : name_(std::move(name)), t_(std::move(t)), names_(std::move(names)) {
  if (names_.empty())
    for (int i = 0; i < t_.n; ++i) names_.push_back("x" + std::to_string(i + 1));
  if (static_cast<int>(names_.size()) != t_.n) throw PresentationError("generator name count does not match ngens");
}

PcGroup PcGroup::from_relations(std::string name, const PcRelations& rel, std::vector<std::string> names) {
  const int n = rel.n;
  if (n < 0 || n > kMaxGenerators) throw PresentationError("unsupported number of generators " + std::to_string(n));
  if (static_cast<int>(rel.pow.size()) > n) throw PresentationError("more power relations than generators");
  for (const auto& [key, w] : rel.comm) {
    auto [i, j] = key;
    if (!(0 <= i && i < j && j < n))
      throw PresentationError("commutator relation for invalid pair " + std::to_string(i + 1) + " " +
                              std::to_string(j + 1));
    require_above(w, j, "commutator [x" + std::to_string(i + 1) + ",x" + std::to_string(j + 1) + "]");
  }
  for (int i = 0; i < static_cast<int>(rel.pow.size()); ++i)
    require_above(rel.pow[static_cast<std::size_t>(i)], i, "power x" + std::to_string(i + 1) + "^2");

  detail::PcTables t;
  t.n = n;
  t.pow.assign(static_cast<std::size_t>(n), 0);
  t.conj.assign(static_cast<std::size_t>(n * n), 0);
  for (int k = n - 1; k >= 0; --k) {
    if (k < static_cast<int>(rel.pow.size())) t.pow[static_cast<std::size_t>(k)] = collect_in(t, rel.pow[static_cast<std::size_t>(k)]);
    for (int j = k + 1; j < n; ++j) {
      std::uint32_t c = 0;
      if (auto it = rel.comm.find({k, j}); it != rel.comm.end()) c = collect_in(t, it->second);
      // x_j^{x_k} = x_j [x_k, x_j]^{-1}
      std::uint32_t e = 1U << j;
      detail::NullSink s;
      detail::mul_word(t, e, detail::inverse(t, c), s);
      t.conj_of(k, j) = e;
    }
  }
  PcGroup g(std::move(name), std::move(t), std::move(names));
  g.check_consistency();
  return g;
}

PcGroup PcGroup::from_tables(std::string name, detail::PcTables t, std::vector<std::string> names) {
  if (t.n < 0 || t.n > kMaxGenerators) throw PresentationError("unsupported number of generators");
  if (t.pow.size() != static_cast<std::size_t>(t.n) || t.conj.size() != static_cast<std::size_t>(t.n * t.n))
    throw PresentationError("table sizes do not match ngens");
  for (int k = 0; k < t.n; ++k) {
    if (t.pow[static_cast<std::size_t>(k)] & mask_upto(k)) throw PresentationError("power relation out of pc shape");
    for (int j = k + 1; j < t.n; ++j)
      if ((t.conj_of(k, j) & mask_upto(j)) != (1U << j)) throw PresentationError("conjugate relation out of pc shape");
  }
  PcGroup g(std::move(name), std::move(t), std::move(names));
  g.check_consistency();
  return g;
}

void PcGroup::check_consistency() const {
  PlainMachine m{&t_};
  detail::consistency_tests(m, t_.n, [&](std::uint32_t a, std::uint32_t b, const std::string& label) {
    if (a != b) throw ConsistencyError(name_ + ": overlap " + label + " collects to two different normal forms");
  });
}

std::vector<Element> PcGroup::generators() const {
  std::vector<Element> r;
  for (int i = 0; i < t_.n; ++i) r.push_back(gen(i));
  return r;
}

Element PcGroup::pow(Element a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Element r = identity();
  while (k) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

Element PcGroup::collect(const Word& w) const { return {collect_in(t_, w)}; }

std::string PcGroup::to_string(Element e) const {
  if (e.bits == 0) return "1";
  std::string s;
  for (int i : support(e)) {
    if (!s.empty()) s += "*";
    s += names_[static_cast<std::size_t>(i)];
  }
  return s;
}

std::vector<int> PcGroup::support(Element e) {
  std::vector<int> r;
  std::uint32_t b = e.bits;
  while (b) {
    r.push_back(std::countr_zero(b));
    b &= b - 1;
  }
  return r;
}

}  // namespace pcinv
