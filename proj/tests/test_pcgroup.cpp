#include "doctest.h"

#include <set>

#include "pcinv/abelian.hpp"
#include "pcinv/quotient.hpp"
#include "support.hpp"
#include "table_group.hpp"

using namespace pcinv;
using pcinv::testing::el;
using pcinv::testing::shipped;

namespace {

// Class count straight from a Cayley table: orbits of g under all h^-1 g h.
template <FiniteGroup G>
std::size_t class_count_by_table(const G& g) {
  std::vector<bool> seen(g.order(), false);
  std::size_t classes = 0;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (seen[i]) continue;
    ++classes;
    for (std::size_t j = 0; j < g.order(); ++j)
      seen[g.index(conjugate(g, g.element(i), g.element(j)))] = true;
  }
  return classes;
}

}  // namespace

TEST_CASE("collect: words to normal form") {
  auto g = shipped("SG256_8177");
  const PcGroup& G = *g;
  CHECK(G.collect({{0, -1}, {1, -1}, {0, 1}, {1, 1}}) == el(G, "x5"));
  CHECK(G.collect({}) == G.identity());
  CHECK(G.collect({{1, 1}, {1, 1}}) == el(G, "x5*x6"));
  CHECK(G.collect({{1, 2}}) == el(G, "x5*x6"));
  CHECK_THROWS_AS(G.collect({{8, 1}}), PresentationError);
}

TEST_CASE("collect agrees with the quaternion and dihedral tables") {
  auto q = shipped("Q8");
  auto qt = std::make_shared<const pcinv::testing::TableGroup>(pcinv::testing::quaternion_group());
  // x1 -> i, x2 -> j, x3 -> -1
  auto qi = qt->generators();
  Element minus_one = qt->mul(qi[0], qi[0]);
  GroupHom<pcinv::testing::TableGroup> fq(q, qt, {qi[0], qi[1], minus_one});
  CHECK(fq.kernel().order() == 1);
  CHECK(fq.is_surjective());

  auto d = shipped("D8");
  auto dt = std::make_shared<const pcinv::testing::TableGroup>(pcinv::testing::dihedral_group_8());
  auto dg = dt->generators();
  GroupHom<pcinv::testing::TableGroup> fd(d, dt, {dg[0], dg[1], dt->mul(dg[1], dg[1])});
  CHECK(fd.kernel().order() == 1);
  CHECK(fd.is_surjective());
}

TEST_CASE("conjugacy classes") {
  auto q = shipped("Q8");
  auto qt = pcinv::testing::quaternion_group();
  CHECK(class_count_by_table(qt) == 5);
  CHECK(conjugacy_classes(*q).classes.size() == 5);

  for (const char* name : {"C4xC4", "C2^3", "C8"}) {
    auto a = shipped(name);
    CHECK(conjugacy_classes(*a).classes.size() == a->order());
  }

  auto g = shipped("SG128_1377");
  auto cls = conjugacy_classes(*g);
  Element x1 = el(*g, "x1");
  CHECK(cls.class_of[g->index(x1)] == cls.class_of[g->index(g->inv(x1))]);
  Element w = el(*g, "x2*x3*x4");
  CHECK(g->mul(g->mul(w, x1), g->inv(w)) == g->inv(x1));

  for (const char* name : {"D8", "SG256_9039", "SG128_1376"}) {
    auto h = shipped(name);
    auto c = conjugacy_classes(*h);
    CHECK(c.classes.size() == class_count_by_table(*h));
  }
}

TEST_CASE("subgroups") {
  auto g = shipped("SG256_8177");
  CHECK(make_subgroup(*g, {g->identity()}, false).order() == 1);
  Subgroup s = make_subgroup(*g, {el(*g, "x7*x8")}, false);
  CHECK(s.order() == 2);
  CHECK(is_central(*g, s));

  auto q = shipped("Q8");
  Subgroup n = make_subgroup(*q, {el(*q, "x1")}, true);
  CHECK(n.order() == 4);
  CHECK(n.contains(*q, el(*q, "x3")));
}

TEST_CASE("standard subgroups") {
  auto g = shipped("SG256_8177");
  auto st = standard_subgroups(*g);
  Subgroup v = closure(*g, {el(*g, "x5"), el(*g, "x6"), el(*g, "x7"), el(*g, "x8")});
  CHECK(st.center.elements == v.elements);
  CHECK(st.derived.elements == v.elements);
  CHECK(st.center_derived.order() == 16);

  auto a = shipped("C2xC4");
  auto sa = standard_subgroups(*a);
  CHECK(sa.derived.order() == 1);
  CHECK(sa.center.order() == a->order());

  // Every commutator of G16384 is one between elements with trivial z-part,
  // the z_i being central.
  auto h = shipped("G16384");
  std::set<std::uint32_t> comms;
  for (std::uint32_t a1 = 0; a1 < 128; ++a1)
    for (std::uint32_t b1 = 0; b1 < 128; ++b1) comms.insert(h->comm(Element{a1}, Element{b1}).bits);
  std::vector<Element> ce;
  for (auto c : comms) ce.push_back(Element{c});
  Subgroup brute = closure(*h, ce);
  Subgroup der = derived_subgroup(*h);
  CHECK(der.order() == 8);
  CHECK(der.elements == brute.elements);
  CHECK(der.elements == closure(*h, {el(*h, "z1"), el(*h, "z2"), el(*h, "z3")}).elements);
}

TEST_CASE("quotients") {
  auto g = shipped("SG256_8177");
  QuotientGroup triv(g, closure(*g, {}));
  CHECK(triv.order() == 256);
  for (std::size_t i = 0; i < g->order(); ++i) CHECK(triv.canonical(g->element(i)) == g->element(i));

  QuotientGroup pi(g, closure(*g, {el(*g, "x7*x8")}));
  CHECK(pi.order() == 128);
  // lex-least representatives never use x7, the more significant of x7, x8
  for (std::size_t i = 0; i < pi.order(); ++i) CHECK((pi.element(i).bits & (1U << 6)) == 0);

  QuotientGroup one(g, whole_group(*g));
  CHECK(one.order() == 1);

  auto base = shipped("SG128_1377");
  std::vector<Element> images;
  for (const char* w : {"x1", "x2", "x3", "x4", "x5", "x6", "x7", "x7"}) images.push_back(el(*base, w));
  GroupHom<PcGroup> alpha(g, base, images);
  CHECK(alpha.is_surjective());
  CHECK(alpha.kernel().elements == closure(*g, {el(*g, "x7*x8")}).elements);

  CHECK_THROWS_AS(QuotientGroup(g, closure(*g, {el(*g, "x1")})), std::invalid_argument);
}

TEST_CASE("abelianization") {
  auto g = shipped("SG128_1377");
  auto ab = abelianization(g);
  CHECK(ab.invariants == std::vector<std::int64_t>{2, 2, 2, 2});
  CHECK(ab.projection->is_surjective());

  auto h = shipped("G16384");
  auto abh = abelianization(h);
  CHECK(abh.invariants == std::vector<std::int64_t>{2, 2, 2, 4, 4, 4, 4});
  // counting route
  CHECK(section_invariants(*h, whole_group(*h), derived_subgroup(*h)) == std::vector<int>{1, 1, 1, 2, 2, 2, 2});
  CHECK(abh.projection->kernel().elements == derived_subgroup(*h).elements);

  auto e = shipped("C2^3");
  CHECK(abelianization(e).invariants == std::vector<std::int64_t>{2, 2, 2});
  auto c = shipped("C4xC4");
  CHECK(abelianization(c).invariants == std::vector<std::int64_t>{4, 4});
}

TEST_CASE("homomorphisms") {
  auto g = shipped("SG256_8129");
  GroupHom<PcGroup> id(g, g, g->generators());
  CHECK(id.kernel().order() == 1);
  CHECK(id.is_surjective());

  auto base = shipped("SG128_1376");
  std::vector<Element> images;
  for (const char* w : {"x1", "x2", "x3", "x4", "x5", "x6", "x7", "x5"}) images.push_back(el(*base, w));
  GroupHom<PcGroup> alpha(g, base, images);
  CHECK(alpha.is_surjective());
  CHECK(alpha.kernel().elements == closure(*g, {el(*g, "x5*x8")}).elements);

  auto c4 = shipped("C4");
  auto c2 = shipped("C2");
  GroupHom<PcGroup> f(c4, c2, {c2->gen(0), c2->identity()});
  CHECK(f.is_surjective());
  CHECK(f.kernel().order() == 2);

  images.back() = el(*base, "x6");
  CHECK_THROWS_WITH_AS(GroupHom<PcGroup>(g, base, images), doctest::Contains("relation"), HomomorphismError);
  CHECK_THROWS_AS(GroupHom<PcGroup>(c4, c2, {c2->gen(0)}), HomomorphismError);
}

TEST_CASE("inconsistent presentations are rejected") {
  PcRelations r;
  r.n = 3;
  r.pow = {{{1, 1}}, {}, {}};
  r.comm[{0, 1}] = {{2, 1}};
  CHECK_THROWS_AS(PcGroup::from_relations("bad", r), ConsistencyError);

  PcRelations s;
  s.n = 2;
  s.pow = {{}, {{0, 1}}};
  CHECK_THROWS_AS(PcGroup::from_relations("shape", s), PresentationError);
}
