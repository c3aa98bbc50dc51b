#include "doctest.h"

#include "pcinv/catalog.hpp"
#include "pcinv/lhs.hpp"
#include "pcinv/verify/oracles.hpp"
#include "support.hpp"

using namespace pcinv;
using pcinv::testing::el;
using pcinv::testing::shipped;

namespace {

std::vector<std::string> strings(const std::vector<F2Poly>& v) {
  std::vector<std::string> out;
  for (const auto& f : v) out.push_back(f.to_string());
  return out;
}

bool d3_all_match(const LhsData& l, const std::vector<std::string>& lits) {
  if (lits.size() != l.d3.size()) return false;
  for (std::size_t i = 0; i < lits.size(); ++i)
    if (!d3_matches(l, i, F2Poly::parse(lits[i], l.r()))) return false;
  return true;
}

using S = std::vector<std::string>;

CentralExtensionData tower(const std::string& cover_name) {
  const TowerSpec* t = find_tower(cover_name);
  REQUIRE(t != nullptr);
  auto cover = shipped(t->cover);
  auto base = shipped(t->base);
  std::vector<Element> images;
  for (const auto& w : t->images) images.push_back(el(*base, w));
  return make_central_extension(cover, base, images);
}

}  // namespace

TEST_CASE("d2 and d3 for G16384") {
  LhsData l = lhs_data(shipped("G16384"));
  CHECK(l.r() == 7);
  CHECK(l.zeta_label(0) == "z1");
  CHECK(strings(l.d2) == S{"X1^2+X2*X3", "X2^2+X4*X5", "X3^2+X6*X7", "X4^2", "X5^2", "X6^2", "X7^2"});
  CHECK(d3_all_match(l, {"X2^2*X3+X2*X3^2", "0", "0", "0", "0", "0", "0"}));
  CHECK(!l.d3[0].in_i2);
  CHECK(l.d3[1].raw.to_string() == "X4^2*X5+X4*X5^2");
  CHECK(l.i_closed.size() == 10);
  CHECK(survives_deg4(l, F2Poly::parse("X1^4", 7)).verdict == Survival::survives_page4);
  for (int i = 2; i <= 7; ++i) {
    SurvivalVerdict v = survives_deg4(l, F2Poly::var(7, i - 1).pow(4));
    CHECK(v.verdict == Survival::dies);
    CHECK(verify_certificate(v.f, l.i_closed, v.certificate));
  }
  SurvivalVerdict z = survives_deg4(l, F2Poly(7));
  CHECK(z.verdict == Survival::dies);
}

TEST_CASE("d2 and d3 for SG256_9039") {
  LhsData l = lhs_data(shipped("SG256_9039"));
  CHECK(l.r() == 4);
  CHECK(l.zeta_label(0) == "x5");
  CHECK(strings(l.d2) == S{"X1^2+X1*X2+X2*X4+X3^2+X4^2", "X1*X3+X2^2+X3^2+X4^2", "X1^2+X2*X3", "X1^2+X1*X4"});
  CHECK(d3_all_match(l, {"X1^2*X2+X1*X2^2+X2^2*X4+X2*X4^2", "X1^2*X3+X1*X3^2", "X2^2*X3+X2*X3^2", "X1^2*X4+X1*X4^2"}));
  // all four representatives already lie in the degree-3 part of I_2
  for (const auto& e : l.d3) CHECK(e.in_i2);
  CHECK(verify_certificate(l.d3[3].raw, l.i2, degree_membership(l.d3[3].raw, l.i2, 3)));
  auto P = [](const char* s) { return F2Poly::parse(s, 4); };
  CHECK(survives_deg4(l, P("X1^4")).verdict == Survival::dies);
  CHECK(survives_deg4(l, P("X2^4+X3^4+X4^4")).verdict == Survival::dies);
  CHECK(survives_deg4(l, P("X2^4+X3^4")).verdict == Survival::survives_page4);
  CHECK(survives_deg4(l, P("X3^4+X4^4")).verdict == Survival::survives_page4);
}

TEST_CASE("d2 for the order 128 and 256 tower") {
  LhsData c = lhs_data(shipped("SG256_8129"));
  CHECK(strings(c.d2) == S{"X1*X3+X3*X4+X4^2", "X1^2+X1*X3+X2^2", "X1^2+X2*X3", "X1*X2+X1*X3"});
  LhsData b = lhs_data(shipped("SG128_1376"));
  CHECK(strings(b.d2) == S{"X1*X2+X3*X4+X4^2", "X1^2+X1*X3+X2^2", "X1^2+X2*X3"});
  // pulling back zeta(x5) along x5~ -> x5, x8~ -> x5
  CHECK(b.d2[0] == c.d2[0] + c.d2[3]);
  CHECK(b.d2[1] == c.d2[1]);
  CHECK(b.d2[2] == c.d2[2]);
}

TEST_CASE("d2 naturality along the tower maps") {
  for (const char* name : {"SG256_8129", "SG256_8177"}) {
    CAPTURE(name);
    CentralExtensionData e = tower(name);
    LhsData c = lhs_data(e.cover);
    LhsData b = lhs_data(e.base);
    REQUIRE(c.r() == b.r());
    LinearCoords<PcGroup> bv(*e.base, b.v, b.v_basis);
    for (std::size_t j = 0; j < b.d2.size(); ++j) {
      F2Poly pulled(c.r());
      for (std::size_t i = 0; i < c.v_basis.size(); ++i)
        if ((bv.coords_or_throw(e.alpha->apply(c.v_basis[i])) >> j) & 1U) pulled += c.d2[i];
      CHECK(pulled == b.d2[j]);
    }
  }
}

TEST_CASE("extension class representative") {
  CentralExtensionData a = tower("SG256_8129");
  ExtensionClassRep r = extension_class_rep(a);
  CHECK(r.theta.to_string() == "X1*X2+X1*X3");

  CentralExtensionData b = tower("SG256_8177");
  ExtensionClassRep s = extension_class_rep(b);
  const PcGroup& g = *b.cover;
  CHECK(s.complement == std::vector<Element>{el(g, "x5"), el(g, "x6"), el(g, "x7")});
  CHECK(s.theta.to_string() == "X1^2+X1*X4+X4^2");
  ExtensionClassRep s2 = extension_class_rep(b, {el(g, "x5"), el(g, "x6"), el(g, "x8")});
  CHECK(s2.theta.to_string() == "X2*X3");
  LhsData base = lhs_data(b.base);
  CHECK(same_h2_class(base, s.theta, s2.theta));
  CHECK(!same_h2_class(base, s.theta, F2Poly::parse("X1*X4+X2*X3", 4)));

  // split extension
  PcRelations rel;
  rel.n = 4;
  rel.pow = {{}, {{2, 1}}, {}, {}};
  rel.comm[{0, 1}] = {{2, 1}};
  auto split = std::make_shared<const PcGroup>(PcGroup::from_relations("D8xC2", rel));
  auto d8 = shipped("D8");
  CentralExtensionData sp = make_central_extension(split, d8, {d8->gen(0), d8->gen(1), d8->gen(2), d8->identity()});
  CHECK_THROWS_AS(extension_class_rep(sp), PreconditionError);  // x4 is not in the Frattini subgroup
  CHECK_THROWS_AS(extension_class_rep(make_central_extension(split, split->gen(3))), std::invalid_argument);
}

TEST_CASE("extension class through a nontrivial base map") {
  // C4 x C4 -> C2 x C4 swapping the roles of the first two generators
  auto c44 = shipped("C4xC4");
  auto c24 = shipped("C2xC4");
  CentralExtensionData e = make_central_extension(c44, c24, {c24->gen(1), c24->gen(0), c24->gen(2), c24->identity()});
  ExtensionClassRep r = extension_class_rep(e);
  CHECK(r.theta.to_string() == "X1^2");
}

TEST_CASE("d2 interpolation oracle and the d3 identity") {
  for (const char* name : {"G16384", "SG256_9039", "SG256_8129", "SG256_8177", "SG128_1376", "SG128_1377", "D8", "Q8",
                           "C4xC4", "C2^3"}) {
    CAPTURE(name);
    LhsData l = lhs_data(shipped(name));
    CHECK(oracle::d2_by_interpolation(*l.group, l.v_basis, l.lifts) == l.d2);
    for (std::size_t i = 0; i < l.d2.size(); ++i) {
      F2Poly diff = l.d3[i].raw + sq1(l.d2[i]);
      CHECK(degree_membership(diff, l.i2, 3).member);
    }
  }
  LhsData bad = lhs_data(shipped("SG256_9039"), {true, {}});
  CHECK(oracle::d2_by_interpolation(*bad.group, bad.v_basis, bad.lifts) != bad.d2);
}

TEST_CASE("direct products have vanishing d2") {
  LhsData l = d2_table(shipped("C2^3"), closure(*shipped("C2^3"), {shipped("C2^3")->gen(2)}));
  for (const auto& f : l.d2) CHECK(f.is_zero());
  CHECK_THROWS_AS(d2_table(shipped("D8"), closure(*shipped("D8"), {shipped("D8")->gen(1)})), PreconditionError);
}
