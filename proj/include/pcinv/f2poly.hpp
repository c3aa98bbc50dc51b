#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pcinv {

// Up to 16 variables with exponents below 16, packed four bits each. The
// first variable sits in the top nibble, so for equal degree the packed
// value orders monomials lexicographically with X1 largest.
inline constexpr int kMaxVars = 16;
inline constexpr int kMaxExponent = 15;

class Monomial {
 public:
  constexpr Monomial() = default;
  static Monomial var(int i, int e = 1);
  static constexpr Monomial from_packed(std::uint64_t p) {
    Monomial m;
    m.p_ = p;
    return m;
  }

  int exponent(int i) const { return static_cast<int>((p_ >> shift(i)) & 0xF); }
  int degree() const;
  std::uint64_t packed() const { return p_; }
  bool is_one() const { return p_ == 0; }

  bool divides(Monomial o) const;
  Monomial operator*(Monomial o) const;    // throws std::overflow_error past kMaxExponent
  Monomial operator/(Monomial o) const;    // requires o.divides(*this)
  Monomial lcm(Monomial o) const;
  bool coprime(Monomial o) const;

  bool operator==(const Monomial&) const = default;
  // Graded lexicographic: degree first, then X1 > X2 > ...
  bool operator<(Monomial o) const {
    int a = degree(), b = o.degree();
    return a != b ? a < b : p_ < o.p_;
  }

  std::string to_string(std::string_view prefix = "X") const;

 private:
  static constexpr int shift(int i) { return 60 - 4 * i; }
  std::uint64_t p_ = 0;
};

class VariableMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PolyParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Polynomial over GF(2) in a fixed number of degree-one variables. Terms are
// kept sorted in decreasing graded-lex order without repeats.
class F2Poly {
 public:
  explicit F2Poly(int nvars = 0);
  F2Poly(int nvars, std::vector<Monomial> terms);  // repeated terms cancel
  static F2Poly one(int nvars);
  static F2Poly var(int nvars, int i);
  static F2Poly monomial(int nvars, Monomial m);
  // "X1^2+X2*X3", "X1X4", "0", "1". Variables beyond nvars are rejected.
  static F2Poly parse(std::string_view text, int nvars);

  int nvars() const { return nvars_; }
  const std::vector<Monomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool contains(Monomial m) const;
  Monomial leading() const;  // requires nonzero
  int degree() const;        // -1 for zero
  bool is_homogeneous() const;
  F2Poly homogeneous_part(int d) const;

  F2Poly operator+(const F2Poly& o) const;
  F2Poly& operator+=(const F2Poly& o);
  F2Poly operator*(const F2Poly& o) const;
  F2Poly operator*(Monomial m) const;
  F2Poly pow(unsigned e) const;
  F2Poly square() const;  // Frobenius

  // Substitution X_i -> images[i]; images share a variable count.
  F2Poly substitute(const std::vector<F2Poly>& images) const;

  bool operator==(const F2Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  std::string to_string(std::string_view prefix = "X") const;

 private:
  void check(const F2Poly& o) const;
  void normalize();
  int nvars_;
  std::vector<Monomial> terms_;
};

// Derivation with Sq1(X) = X^2.
F2Poly sq1(const F2Poly& f);

// All monomials of degree d in nvars variables, in decreasing order.
std::vector<Monomial> monomials_of_degree(int nvars, int d);

// Linear substitution X_i -> sum_j m[i][j] X_j.
F2Poly substitute_linear(const F2Poly& f, const std::vector<std::vector<bool>>& m);

struct MembershipCertificate {
  bool member = false;
  int degree = 0;
  // member: coefficients[i] * gens[i] summed equals f
  std::vector<F2Poly> coefficients;
  // non-member: size of the degree-d system and f reduced modulo the span
  std::size_t products = 0;
  std::size_t monomials = 0;
  std::size_t span_rank = 0;
  std::optional<F2Poly> residual;
};

// Exact recombination check for a membership certificate.
bool verify_certificate(const F2Poly& f, const std::vector<F2Poly>& gens, const MembershipCertificate& c);

// Decides whether the homogeneous f of degree d lies in the degree-d part of
// the ideal generated by the homogeneous gens.
MembershipCertificate degree_membership(const F2Poly& f, const std::vector<F2Poly>& gens, int d);

// Reduced Buchberger basis in graded-lex order. With max_degree set the
// computation drops S-polynomials above that degree, which is exact up to that
// degree for homogeneous input.
std::vector<F2Poly> groebner(const std::vector<F2Poly>& gens, std::optional<int> max_degree = std::nullopt);
F2Poly normal_form(const F2Poly& f, const std::vector<F2Poly>& basis);

}  // namespace pcinv
