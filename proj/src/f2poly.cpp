#include "pcinv/f2poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <functional>
#include <unordered_map>

#include "pcinv/gf2.hpp"

namespace pcinv {

Monomial Monomial::var(int i, int e) {
  if (i < 0 || i >= kMaxVars) throw std::out_of_range("variable index out of range");
  if (e < 0 || e > kMaxExponent) throw std::overflow_error("exponent out of range");
  return from_packed(static_cast<std::uint64_t>(e) << shift(i));
}

int Monomial::degree() const {
  int d = 0;
  for (std::uint64_t p = p_; p; p >>= 4) d += static_cast<int>(p & 0xF);
  return d;
}

bool Monomial::divides(Monomial o) const {
  for (int i = 0; i < kMaxVars; ++i)
    if (exponent(i) > o.exponent(i)) return false;
  return true;
}

Monomial Monomial::operator*(Monomial o) const {
  if ((p_ | o.p_) & 0x8888888888888888ULL) {
    for (int i = 0; i < kMaxVars; ++i)
      if (exponent(i) + o.exponent(i) > kMaxExponent) throw std::overflow_error("monomial exponent overflow");
  }
  return from_packed(p_ + o.p_);
}

Monomial Monomial::operator/(Monomial o) const {
  if (!o.divides(*this)) throw std::invalid_argument("monomial does not divide");
  return from_packed(p_ - o.p_);
}

Monomial Monomial::lcm(Monomial o) const {
  std::uint64_t r = 0;
  for (int i = 0; i < kMaxVars; ++i)
    r |= static_cast<std::uint64_t>(std::max(exponent(i), o.exponent(i))) << shift(i);
  return from_packed(r);
}

bool Monomial::coprime(Monomial o) const {
  for (int i = 0; i < kMaxVars; ++i)
    if (exponent(i) && o.exponent(i)) return false;
  return true;
}

std::string Monomial::to_string(std::string_view prefix) const {
  if (is_one()) return "1";
  std::string s;
  for (int i = 0; i < kMaxVars; ++i) {
    int e = exponent(i);
    if (!e) continue;
    if (!s.empty()) s += '*';
    s += prefix;
    s += std::to_string(i + 1);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

F2Poly::F2Poly(int nvars) : nvars_(nvars) {
  if (nvars < 0 || nvars > kMaxVars) throw std::invalid_argument("unsupported number of variables");
}

F2Poly::F2Poly(int nvars, std::vector<Monomial> terms) : F2Poly(nvars) {
  terms_ = std::move(terms);
  for (Monomial m : terms_)
    for (int i = nvars_; i < kMaxVars; ++i)
      if (m.exponent(i)) throw VariableMismatch("monomial uses a variable outside the ring");
  normalize();
}

F2Poly F2Poly::one(int nvars) { return F2Poly(nvars, {Monomial{}}); }
F2Poly F2Poly::var(int nvars, int i) {
  if (i < 0 || i >= nvars) throw VariableMismatch("variable index outside the ring");
  return F2Poly(nvars, {Monomial::var(i)});
}
F2Poly F2Poly::monomial(int nvars, Monomial m) { return F2Poly(nvars, {m}); }

void F2Poly::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](Monomial a, Monomial b) { return b < a; });
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < terms_.size();) {
    std::size_t j = i;
    while (j < terms_.size() && terms_[j] == terms_[i]) ++j;
    if ((j - i) % 2) out.push_back(terms_[i]);
    i = j;
  }
  terms_ = std::move(out);
}

void F2Poly::check(const F2Poly& o) const {
  if (nvars_ != o.nvars_) throw VariableMismatch("polynomials live in different rings");
}

bool F2Poly::contains(Monomial m) const {
  return std::binary_search(terms_.begin(), terms_.end(), m, [](Monomial a, Monomial b) { return b < a; });
}

Monomial F2Poly::leading() const {
  if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
  return terms_.front();
}

int F2Poly::degree() const { return terms_.empty() ? -1 : terms_.front().degree(); }

bool F2Poly::is_homogeneous() const {
  for (Monomial m : terms_)
    if (m.degree() != terms_.front().degree()) return false;
  return true;
}

F2Poly F2Poly::homogeneous_part(int d) const {
  F2Poly r(nvars_);
  for (Monomial m : terms_)
    if (m.degree() == d) r.terms_.push_back(m);
  return r;
}

F2Poly F2Poly::operator+(const F2Poly& o) const {
  check(o);
  F2Poly r(nvars_);
  auto gt = [](Monomial a, Monomial b) { return b < a; };
  std::set_symmetric_difference(terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
                                std::back_inserter(r.terms_), gt);
  return r;
}

F2Poly& F2Poly::operator+=(const F2Poly& o) { return *this = *this + o; }

F2Poly F2Poly::operator*(Monomial m) const {
  for (int i = nvars_; i < kMaxVars; ++i)
    if (m.exponent(i)) throw VariableMismatch("monomial uses a variable outside the ring");
  F2Poly r(nvars_);
  r.terms_.reserve(terms_.size());
  for (Monomial t : terms_) r.terms_.push_back(t * m);
  return r;  // multiplication by a monomial preserves the order
}

F2Poly F2Poly::operator*(const F2Poly& o) const {
  check(o);
  std::vector<Monomial> all;
  all.reserve(terms_.size() * o.terms_.size());
  for (Monomial a : terms_)
    for (Monomial b : o.terms_) all.push_back(a * b);
  return F2Poly(nvars_, std::move(all));
}

F2Poly F2Poly::square() const {
  F2Poly r(nvars_);
  for (Monomial m : terms_) r.terms_.push_back(m * m);
  return r;
}

F2Poly F2Poly::pow(unsigned e) const {
  F2Poly r = one(nvars_), b = *this;
  while (e) {
    if (e & 1U) r = r * b;
    e >>= 1;
    if (e) b = b.square();
  }
  return r;
}

F2Poly F2Poly::substitute(const std::vector<F2Poly>& images) const {
  if (static_cast<int>(images.size()) != nvars_) throw VariableMismatch("substitution needs one image per variable");
  int target = images.empty() ? 0 : images.front().nvars();
  for (const auto& p : images)
    if (p.nvars() != target) throw VariableMismatch("substitution images live in different rings");
  F2Poly r(target);
  for (Monomial m : terms_) {
    F2Poly t = one(target);
    for (int i = 0; i < nvars_; ++i)
      if (m.exponent(i)) t = t * images[i].pow(static_cast<unsigned>(m.exponent(i)));
    r += t;
  }
  return r;
}

std::string F2Poly::to_string(std::string_view prefix) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (Monomial m : terms_) {
    if (!s.empty()) s += '+';
    s += m.to_string(prefix);
  }
  return s;
}

F2Poly F2Poly::parse(std::string_view text, int nvars) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw PolyParseError("empty polynomial literal");
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) -> PolyParseError {
    return PolyParseError(msg + " at offset " + std::to_string(pos) + " in '" + std::string(text) + "'");
  };
  auto number = [&]() {
    std::size_t start = pos;
    while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) ++pos;
    if (start == pos) throw fail("expected a number");
    if (pos - start > 3) throw fail("number too large");
    return std::stoi(t.substr(start, pos - start));
  };
  std::vector<Monomial> terms;
  while (true) {
    Monomial m;
    bool any = false, zero = false;
    while (pos < t.size() && t[pos] != '+') {
      if (any && t[pos] == '*') ++pos;
      if (pos < t.size() && (t[pos] == 'X' || t[pos] == 'x')) {
        ++pos;
        int i = number();
        if (i < 1 || i > nvars) throw VariableMismatch("variable X" + std::to_string(i) + " outside the ring");
        int e = 1;
        if (pos < t.size() && t[pos] == '^') {
          ++pos;
          e = number();
        }
        m = m * Monomial::var(i - 1, e);
      } else if (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) {
        int c = number();
        if (c > 1) throw fail("coefficients must be 0 or 1");
        if (c == 0) zero = true;
      } else {
        throw fail("unexpected character");
      }
      any = true;
    }
    if (!any) throw fail("empty term");
    if (!zero) terms.push_back(m);
    if (pos == t.size()) break;
    ++pos;
  }
  return F2Poly(nvars, std::move(terms));
}

F2Poly sq1(const F2Poly& f) {
  std::vector<Monomial> out;
  for (Monomial m : f.terms())
    for (int i = 0; i < f.nvars(); ++i)
      if (m.exponent(i) % 2) out.push_back(m * Monomial::var(i));
  return F2Poly(f.nvars(), std::move(out));
}

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
  std::vector<Monomial> out;
  std::function<void(int, int, Monomial)> rec = [&](int i, int left, Monomial m) {
    if (i == nvars - 1) {
      if (left <= kMaxExponent) out.push_back(m * Monomial::var(i, left));
      return;
    }
    for (int e = std::min(left, kMaxExponent); e >= 0; --e) rec(i + 1, left - e, m * Monomial::var(i, e));
  };
  if (nvars == 0) {
    if (d == 0) out.push_back(Monomial{});
    return out;
  }
  rec(0, d, Monomial{});
  return out;
}

F2Poly substitute_linear(const F2Poly& f, const std::vector<std::vector<bool>>& m) {
  std::vector<F2Poly> images;
  for (int i = 0; i < f.nvars(); ++i) {
    if (static_cast<int>(m.at(i).size()) != f.nvars()) throw VariableMismatch("substitution matrix has the wrong shape");
    F2Poly p(f.nvars());
    for (int j = 0; j < f.nvars(); ++j)
      if (m[i][j]) p += F2Poly::var(f.nvars(), j);
    images.push_back(std::move(p));
  }
  return f.substitute(images);
}

bool verify_certificate(const F2Poly& f, const std::vector<F2Poly>& gens, const MembershipCertificate& c) {
  if (!c.member) return false;
  if (c.coefficients.size() != gens.size()) return false;
  F2Poly sum(f.nvars());
  for (std::size_t i = 0; i < gens.size(); ++i) sum += c.coefficients[i] * gens[i];
  return sum == f;
}

MembershipCertificate degree_membership(const F2Poly& f, const std::vector<F2Poly>& gens, int d) {
  if (!f.is_zero() && (!f.is_homogeneous() || f.degree() != d))
    throw std::invalid_argument("f is not homogeneous of the requested degree");
  for (const auto& g : gens) {
    if (g.nvars() != f.nvars()) throw VariableMismatch("generators live in a different ring");
    if (!g.is_homogeneous()) throw std::invalid_argument("generators must be homogeneous");
  }
  const int n = f.nvars();
  std::vector<Monomial> cols = monomials_of_degree(n, d);
  std::unordered_map<std::uint64_t, std::size_t> col;
  for (std::size_t i = 0; i < cols.size(); ++i) col[cols[i].packed()] = i;
  auto vec = [&](const F2Poly& p) {
    BitVec v(cols.size());
    for (Monomial m : p.terms()) v.flip(col.at(m.packed()));
    return v;
  };

  struct Product {
    std::size_t gen;
    Monomial m;
  };
  std::vector<Product> prods;
  Gf2Echelon ech(cols.size(), true);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].is_zero() || gens[i].degree() > d) continue;
    for (Monomial m : monomials_of_degree(n, d - gens[i].degree())) {
      prods.push_back({i, m});
      ech.insert(vec(gens[i] * m));
    }
  }

  MembershipCertificate c;
  c.degree = d;
  c.products = prods.size();
  c.monomials = cols.size();
  c.span_rank = ech.rank();
  BitVec target = vec(f);
  if (auto comb = ech.express(target)) {
    c.member = true;
    std::vector<std::vector<Monomial>> coef(gens.size());
    for (auto id : comb->ones()) coef[prods[id].gen].push_back(prods[id].m);
    for (std::size_t i = 0; i < gens.size(); ++i) c.coefficients.emplace_back(n, std::move(coef[i]));
    if (!verify_certificate(f, gens, c)) throw std::logic_error("membership certificate failed to verify");
  } else {
    ech.reduce_in_place(target, nullptr);
    std::vector<Monomial> rest;
    for (auto i : target.ones()) rest.push_back(cols[i]);
    c.residual = F2Poly(n, std::move(rest));
  }
  return c;
}

namespace {

// Reduces f by basis until no term is divisible by a leading term.
F2Poly reduce_full(F2Poly f, const std::vector<F2Poly>& basis) {
  const int n = f.nvars();
  std::vector<Monomial> done;
  while (!f.is_zero()) {
    Monomial lt = f.leading();
    bool hit = false;
    for (const auto& g : basis) {
      if (g.is_zero()) continue;
      Monomial gl = g.leading();
      if (gl.divides(lt)) {
        f += g * (lt / gl);
        hit = true;
        break;
      }
    }
    if (!hit) {
      done.push_back(lt);
      f += F2Poly::monomial(f.nvars(), lt);
    }
  }
  return F2Poly(n, std::move(done));
}

}  // namespace

F2Poly normal_form(const F2Poly& f, const std::vector<F2Poly>& basis) { return reduce_full(f, basis); }

std::vector<F2Poly> groebner(const std::vector<F2Poly>& gens, std::optional<int> max_degree) {
  std::vector<F2Poly> g;
  for (const auto& p : gens)
    if (!p.is_zero()) g.push_back(p);
  if (g.empty()) return {};
  const int n = g.front().nvars();
  for (const auto& p : g)
    if (p.nvars() != n) throw VariableMismatch("generators live in different rings");

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    auto [i, j] = pairs.back();
    pairs.pop_back();
    Monomial a = g[i].leading(), b = g[j].leading();
    if (a.coprime(b)) continue;  // Buchberger's first criterion
    Monomial l = a.lcm(b);
    if (max_degree && l.degree() > *max_degree) continue;
    F2Poly s = g[i] * (l / a) + g[j] * (l / b);
    F2Poly r = reduce_full(s, g);
    if (r.is_zero()) continue;
    g.push_back(std::move(r));
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
  }

  // minimise, then reduce
  std::vector<F2Poly> min;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      Monomial a = g[j].leading(), b = g[i].leading();
      if (a.divides(b) && (a != b || j < i)) redundant = true;
    }
    if (!redundant) min.push_back(g[i]);
  }
  for (std::size_t i = 0; i < min.size(); ++i) {
    std::vector<F2Poly> others;
    for (std::size_t j = 0; j < min.size(); ++j)
      if (j != i) others.push_back(min[j]);
    min[i] = reduce_full(min[i], others);
  }
  std::sort(min.begin(), min.end(), [](const F2Poly& a, const F2Poly& b) { return b.leading() < a.leading(); });
  return min;
}

}  // namespace pcinv
