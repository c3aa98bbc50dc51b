#include "doctest.h"

#include "pcinv/f2poly.hpp"

using namespace pcinv;

namespace {

F2Poly P(const char* s, int n = 7) { return F2Poly::parse(s, n); }

std::vector<F2Poly> edge_gens() {
  return {P("X1^2+X2*X3"),       P("X2^2+X4*X5"), P("X3^2+X6*X7"), P("X2^2*X3+X2*X3^2"),
          P("X4^2"),             P("X5^2"),       P("X6^2"),       P("X7^2"),
          P("X4^2*X5+X4*X5^2"), P("X6^2*X7+X6*X7^2")};
}

}  // namespace

TEST_CASE("parse and print") {
  CHECK(P("X1^2+X2*X3").to_string() == "X1^2+X2*X3");
  CHECK(P("X2X3 + X1^2").to_string() == "X1^2+X2*X3");
  CHECK(P("X4^2+X1^2+X2*X4+X3^2+X1*X2").to_string() == "X1^2+X1*X2+X2*X4+X3^2+X4^2");
  CHECK(P("0").is_zero());
  CHECK(P("1") == F2Poly::one(7));
  CHECK(P("X1+X1").is_zero());
  CHECK(P("X1*1") == P("X1"));
  CHECK_THROWS_AS(P("X8", 7), VariableMismatch);
  CHECK_THROWS_AS(P("X1+"), PolyParseError);
  CHECK_THROWS_AS(P("2*X1"), PolyParseError);
  CHECK_THROWS_AS(P("X1 ? X2"), PolyParseError);
}

TEST_CASE("ring operations") {
  CHECK((P("X1+X2")).pow(2) == P("X1^2+X2^2"));
  CHECK((P("X1^2+X2*X3") + P("X1^2+X2*X3")).is_zero());
  CHECK(P("X1^2+X2*X3") * P("X5^2") == P("X1^2*X5^2+X2*X3*X5^2"));
  CHECK(P("X1+X2").pow(4) == P("X1^4+X2^4"));
  CHECK(P("X1+X2").pow(3) == P("X1^3+X1^2*X2+X1*X2^2+X2^3"));
  CHECK_THROWS_AS(P("X1", 3) + P("X1", 4), VariableMismatch);
  CHECK_THROWS_AS(P("X1^15") * P("X1"), std::overflow_error);
  CHECK(P("X1^2*X2").degree() == 3);
  CHECK(P("X1^2+X2").homogeneous_part(1) == P("X2"));
}

TEST_CASE("Sq1") {
  CHECK(sq1(P("X1^2+X2*X3")) == P("X2^2*X3+X2*X3^2"));
  CHECK(sq1(P("X4^2")).is_zero());
  CHECK(sq1(P("X1^2+X1*X2+X2*X4+X3^2+X4^2")) == P("X1^2*X2+X1*X2^2+X2^2*X4+X2*X4^2"));
  CHECK(sq1(P("X1")) == P("X1^2"));
  CHECK(sq1(sq1(P("X1*X2*X3"))).is_zero());
}

TEST_CASE("linear substitution") {
  // X1 -> X1 + X2, X2 -> X2
  std::vector<std::vector<bool>> m{{true, true}, {false, true}};
  CHECK(substitute_linear(P("X1*X2", 2), m) == P("X1*X2+X2^2", 2));
  CHECK(monomials_of_degree(7, 4).size() == 210);
  CHECK(monomials_of_degree(3, 0).size() == 1);
}

TEST_CASE("degree four membership in the G16384 edge ideal") {
  auto gens = edge_gens();
  MembershipCertificate c = degree_membership(P("X1^4"), gens, 4);
  CHECK(!c.member);
  REQUIRE(c.residual);
  CHECK(!c.residual->is_zero());
  CHECK(c.monomials == 210);

  for (const char* f : {"X2^4", "X3^4"}) {
    CAPTURE(f);
    MembershipCertificate m = degree_membership(P(f), gens, 4);
    CHECK(m.member);
    CHECK(verify_certificate(P(f), gens, m));
  }

  // the explicit combinations
  MembershipCertificate x2;
  x2.member = true;
  x2.coefficients.assign(gens.size(), F2Poly(7));
  x2.coefficients[1] = P("X2^2+X4*X5");
  x2.coefficients[4] = P("X5^2");
  CHECK(verify_certificate(P("X2^4"), gens, x2));
  MembershipCertificate x3 = x2;
  x3.coefficients.assign(gens.size(), F2Poly(7));
  x3.coefficients[2] = P("X3^2+X6*X7");
  x3.coefficients[7] = P("X6^2");
  CHECK(verify_certificate(P("X3^4"), gens, x3));

  MembershipCertificate z = degree_membership(F2Poly(7), gens, 4);
  CHECK(z.member);
  for (const auto& k : z.coefficients) CHECK(k.is_zero());
  CHECK_THROWS_AS(degree_membership(P("X1^3"), gens, 4), std::invalid_argument);
}

TEST_CASE("groebner") {
  auto b = groebner({P("X1")});
  REQUIRE(b.size() == 1);
  CHECK(b[0] == P("X1"));
  CHECK(normal_form(P("X1*X2"), b).is_zero());

  auto lem = groebner(edge_gens(), 4);
  CHECK(!normal_form(P("X1^4"), lem).is_zero());
  CHECK(normal_form(P("X2^4"), lem).is_zero());
  CHECK(normal_form(P("X3^4"), lem).is_zero());

  std::vector<F2Poly> g{P("X1^2+X2*X3", 3), P("X2^2", 3)};
  auto gb = groebner(g);
  for (const char* f : {"X2*X3^2", "X1^2*X2", "X2^2*X3", "X1*X2*X3"}) {
    CAPTURE(f);
    CHECK(normal_form(P(f, 3), gb).is_zero() == degree_membership(P(f, 3), g, 3).member);
  }
  // full and truncated bases agree on low degrees
  auto full = groebner(g);
  auto trunc = groebner(g, 3);
  for (Monomial m : monomials_of_degree(3, 3))
    CHECK(normal_form(F2Poly::monomial(3, m), full) == normal_form(F2Poly::monomial(3, m), trunc));
}
