#include "doctest.h"

#include "pcinv/catalog.hpp"
#include "pcinv/ktheory.hpp"
#include "support.hpp"

using namespace pcinv;
using pcinv::testing::el;
using pcinv::testing::shipped;

namespace {

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

TEST_CASE("H1 of Wh'") {
  CHECK(h1_wh_prime(shipped("SG128_1377")).rank == 0);
  CHECK(h1_wh_prime(shipped("SG256_9039")).rank == 1);
  WhPrimeData big = h1_wh_prime(shipped("G16384"));
  CHECK(big.class2_path);
  CHECK(big.rank == 3);
  for (const char* name : {"C2", "C4", "C8", "C2xC2", "C2^3", "C2xC4", "C4xC4", "D8", "Q8"}) {
    CAPTURE(name);
    CHECK(h1_wh_prime(shipped(name)).rank == 0);
  }
}

TEST_CASE("H1 of Wh' structure and witnesses") {
  for (const char* name : {"SG128_1376", "SG128_1377", "SG256_9039", "SG256_8129", "D8"}) {
    CAPTURE(name);
    auto g = shipped(name);
    WhPrimeData d = h1_wh_prime(g);
    CHECK(is_normal(*g, d.C));
    for (Element x : d.derived.elements) CHECK(d.C.contains(*g, x));
    for (Element x : d.C.elements) CHECK(d.S.contains(*g, x));
    for (Element x : d.S.elements) CHECK(d.C.contains(*g, g->mul(x, x)));
    for (const auto& w : d.witnesses) CHECK(g->conj(w.g, w.w) == g->inv(w.g));
  }
}

TEST_CASE("class-2 shortcut agrees with the orbit search") {
  for (const char* name : {"SG128_1377", "SG256_9039", "D8", "Q8"}) {
    auto g = shipped(name);
    for (std::size_t i = 0; i < g->order(); ++i) {
      Element x = g->element(i);
      CHECK(inverse_conjugator(*g, x, true).has_value() == inverse_conjugator(*g, x, false).has_value());
    }
  }
}

TEST_CASE("SK1") {
  using V = std::vector<std::int64_t>;
  CHECK(sk1(shipped("SG128_1376")).invariants == V{2});
  CHECK(sk1(shipped("SG128_1377")).invariants == V{2});
  for (const char* name : {"C2", "C4", "C8", "C2xC2", "C2^3", "C2xC4", "C4xC4"}) {
    CAPTURE(name);
    CHECK(sk1(shipped(name)).invariants.empty());
  }
  SK1Data d = sk1(shipped("SG128_1376"));
  std::size_t non_wedge = 0;
  for (Element s : d.cover->stem.elements) non_wedge += d.is_wedge(s) ? 0 : 1;
  CHECK(non_wedge * 2 == d.stem_order);
}

TEST_CASE("SK1 does not depend on the cover") {
  for (const char* name : {"SG128_1376", "SG128_1377", "D8"}) {
    auto g = shipped(name);
    auto base = sk1(g).invariants;
    for (std::uint64_t seed : {3ULL, 99ULL}) CHECK(sk1(std::make_shared<const CoverData>(schur_cover(g, {seed}))).invariants == base);
  }
}

TEST_CASE("sigma is not a commutator") {
  CentralExtensionData a = tower("SG256_8177");
  CHECK(a.t == el(*a.cover, "x7*x8"));
  CHECK(thm41_check(a).holds);
  CentralExtensionData b = tower("SG256_8129");
  CHECK(b.t == el(*b.cover, "x5*x8"));
  CHECK(thm41_check(b).holds);

  auto g = shipped("SG256_8177");
  CentralExtensionData c = make_central_extension(g, el(*g, "x5"));
  Thm41Result r = thm41_check(c);
  CHECK(!r.holds);
  REQUIRE(r.commutator_witness);
  CHECK(g->comm(r.commutator_witness->first, r.commutator_witness->second) == el(*g, "x5"));

  // sigma outside the derived subgroup
  auto p = shipped("C2xC2");
  CHECK(!thm41_check(make_central_extension(p, p->gen(1))).holds);
}

TEST_CASE("self-inverse classes lift") {
  CHECK(thm42_check(tower("SG256_8177")).holds);
  CHECK(thm42_check(tower("SG256_8129")).holds);

  // D8 x C2 over D8 splits
  PcRelations r;
  r.n = 4;
  r.pow = {{}, {{2, 1}}, {}, {}};
  r.comm[{0, 1}] = {{2, 1}};
  auto split = std::make_shared<const PcGroup>(PcGroup::from_relations("D8xC2", r));
  CHECK(thm42_check(make_central_extension(split, split->gen(3))).holds);
}

TEST_CASE("search for quotients with nonzero SK1") {
  CHECK(search_central_extensions(shipped("C4xC4")).empty());
  CHECK(search_central_extensions(shipped("C2^3")).empty());

  for (auto [cover, base] : {std::pair{"SG256_8177", "SG128_1377"}, std::pair{"SG256_8129", "SG128_1376"}}) {
    CAPTURE(cover);
    auto found = search_central_extensions(shipped(cover));
    Fingerprint want = fingerprint(*shipped(base));
    bool hit = false;
    for (const auto& c : found)
      if (c.quotient_fingerprint == want) {
        hit = true;
        CHECK(c.thm42);
      }
    CHECK(hit);
    MESSAGE(std::string(cover) << ": " << found.size() << " fingerprint classes");
  }
}

TEST_CASE("fingerprints") {
  CHECK(fingerprint(*shipped("C4")) != fingerprint(*shipped("C2xC2")));
  CHECK(fingerprint(*shipped("D8")) != fingerprint(*shipped("Q8")));
  CentralExtensionData a = tower("SG256_8177");
  CHECK(fingerprint(*a.quotient) == fingerprint(*shipped("SG128_1377")));
  // all shipped groups are pairwise separated
  const auto& names = shipped_catalog().names();
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      CHECK(fingerprint(*shipped(names[i])) != fingerprint(*shipped(names[j])));
}
