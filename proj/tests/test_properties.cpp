#include "doctest.h"

#include "pcinv/verify/properties.hpp"

using namespace pcinv::verify;

namespace {

void expect_ok(const PropertyReport& r) {
  INFO(r.name << ": " << r.failures << " of " << r.instances << " failed; first: " << r.first_failure);
  CHECK(r.ok());
}

constexpr std::size_t kN = 1000;

}  // namespace

TEST_CASE("pc consistency") { expect_ok(prop_pc_consistency(kDefaultSeed, kN)); }
TEST_CASE("associativity") { expect_ok(prop_associativity(kDefaultSeed, 10 * kN)); }
TEST_CASE("class equation") { expect_ok(prop_class_equation(kDefaultSeed, kN)); }
TEST_CASE("quotient homomorphisms") { expect_ok(prop_quotient_hom(kDefaultSeed, kN)); }
TEST_CASE("Sq1 derivation") { expect_ok(prop_sq1_derivation(kDefaultSeed, 10 * kN)); }
TEST_CASE("groebner against linear algebra") { expect_ok(prop_groebner_vs_linear(kDefaultSeed, kN)); }
TEST_CASE("membership certificates") { expect_ok(prop_certificates(kDefaultSeed, kN)); }
TEST_CASE("adapted decompositions") { expect_ok(prop_adapted(kDefaultSeed, kN)); }
TEST_CASE("cyclic quotient scan recount") { expect_ok(prop_conjecture_scan(kDefaultSeed, kN)); }
TEST_CASE("d2 against oracle") { expect_ok(prop_d2_oracle(kDefaultSeed, kN)); }

TEST_CASE("random class-2 groups are reproducible") {
  std::mt19937_64 a(7), b(7);
  auto g = random_class2_group(a, 3, 3);
  auto h = random_class2_group(b, 3, 3);
  CHECK(g->ngens() == 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      pcinv::Element x = g->gen(i), y = g->gen(j);
      CHECK(g->mul(x, y) == h->mul(h->gen(i), h->gen(j)));
    }
}
