#include "doctest.h"

#include "pcinv/catalog.hpp"
#include "support.hpp"

using namespace pcinv;
using pcinv::testing::shipped;

TEST_CASE("shipped catalog orders") {
  const std::pair<const char*, std::size_t> expect[] = {
      {"C2", 2},           {"C8", 8},           {"C4xC4", 16},      {"D8", 8},
      {"Q8", 8},           {"SG128_1376", 128}, {"SG128_1377", 128}, {"SG256_8129", 256},
      {"SG256_8177", 256}, {"SG256_9039", 256}, {"G16384", 16384}};
  for (const auto& [name, order] : expect) {
    CAPTURE(name);
    REQUIRE(shipped_catalog().contains(name));
    CHECK(shipped(name)->order() == order);
  }
}

TEST_CASE("serialize round trips") {
  for (const auto& name : shipped_catalog().names()) {
    CAPTURE(name);
    auto g = shipped(name);
    Catalog c = parse_catalog(serialize(*g), "roundtrip");
    auto h = c.get(name);
    REQUIRE(h->ngens() == g->ngens());
    CHECK(serialize(*h) == serialize(*g));
  }
}

TEST_CASE("parse errors carry line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      parse_catalog(text, "t");
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("group A\nngens 2\npow 1 = 1\nend\n") == 3);
  CHECK(line_of("group A\nngens 2\nfrob 1\nend\n") == 3);
  CHECK(line_of("group A\nngens 2\ncomm 2 1 = 1\nend\n") == 3);
  CHECK(line_of("group A\nngens 1\nend\ngroup A\nngens 1\nend\n") == 4);
  CHECK(line_of("group A\nngens 2\n") > 0);
  CHECK(line_of("ngens 2\n") == 1);
}

TEST_CASE("inconsistent presentations are rejected") {
  // x1^2 = x2 with x2 central of order 2 but [x1, x2] = x3 breaks the overlap x1 x1 x2.
  CHECK_THROWS_AS(parse_catalog("group B\nngens 3\npow 1 = 2\ncomm 1 2 = 3\nend\n", "t"), ParseError);
}

TEST_CASE("parse_element") {
  auto g = shipped("G16384");
  Element a = parse_element(*g, "x1*z2");
  CHECK(g->to_string(a) == "x1*z2");
  CHECK(parse_element(*g, "1") == g->identity());
  CHECK(parse_element(*g, "x1^-1*x1") == g->identity());
  CHECK_THROWS_AS(parse_element(*g, "x9"), std::invalid_argument);
  CHECK_THROWS_AS(parse_element(*g, "x1^"), std::invalid_argument);
}

TEST_CASE("unknown group") {
  CHECK_THROWS_AS(shipped_catalog().get("NOSUCH"), UnknownGroup);
}

TEST_CASE("towers link shipped groups") {
  for (const auto& t : shipped_towers()) {
    CAPTURE(t.cover);
    REQUIRE(shipped_catalog().contains(t.cover));
    REQUIRE(shipped_catalog().contains(t.base));
    auto c = shipped(t.cover);
    auto b = shipped(t.base);
    CHECK(static_cast<int>(t.images.size()) == c->ngens());
    CHECK(c->order() == 2 * b->order());
  }
}
