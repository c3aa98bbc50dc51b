#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "pcinv/cli.hpp"

using namespace pcinv;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream o, e;
  int code = run_cli(args, o, e);
  return {code, o.str(), e.str()};
}

nlohmann::json json_of(const Run& r) {
  REQUIRE(r.code == 0);
  return nlohmann::json::parse(r.out);
}

std::string temp_file(const std::string& name, const std::string& text) {
  std::string path = std::string(PCINV_TEST_TMP) + "/" + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("sha256") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("h1whp report") {
  auto j = json_of(run({"h1whp", "SG128_1377", "--json"}));
  CHECK(j["tool"] == "pcinv");
  CHECK(j["invariant"] == "h1whp");
  CHECK(j["groups"][0] == "SG128_1377");
  CHECK(j["value"]["rank"] == 0);
  CHECK(j["input_digest"].get<std::string>().size() == 64);
  CHECK(j["timing"]["seconds"].is_number());

  auto k = json_of(run({"--json", "h1whp", "SG256_9039"}));
  CHECK(k["value"]["rank"] == 1);
}

TEST_CASE("reports are deterministic apart from timing") {
  for (const char* cmd : {"info", "h1whp", "sk1", "lambda4", "lhs-report"}) {
    CAPTURE(cmd);
    auto a = json_of(run({cmd, "SG256_9039", "--json"}));
    auto b = json_of(run({cmd, "SG256_9039", "--json"}));
    a.erase("timing");
    b.erase("timing");
    CHECK(a == b);
  }
  auto x = json_of(run({"info", "SG128_1376", "--json"}));
  auto y = json_of(run({"info", "SG128_1377", "--json"}));
  CHECK(x["input_digest"] != y["input_digest"]);
}

TEST_CASE("lambda4 on the tower top") {
  auto j = json_of(run({"lambda4", "G16384", "--json"}));
  CHECK(j["value"]["verdict"] == "nonzero");
}

TEST_CASE("text output") {
  Run r = run({"h1whp", "SG256_9039"});
  CHECK(r.code == 0);
  CHECK(r.out.find("rank: 1") != std::string::npos);
}

TEST_CASE("compat on the shipped tower") {
  auto j = json_of(run({"compat", "SG128_1376", "SG256_8129", "--theta", "X1X2+X1X3", "--z", "X3X4", "--json"}));
  CHECK(j["value"]["verdict"] == "compatible");
  Run bad = run({"compat", "SG128_1376", "SG256_8129", "--theta", "X1X2+", "--z", "X3X4"});
  CHECK(bad.code == 2);
  Run cubic = run({"compat", "SG128_1376", "SG256_8129", "--theta", "X1X2X3", "--z", "X3X4"});
  CHECK(cubic.code == 2);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({"h1whp", "NOSUCH"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"h1whp"}).code == 2);
  CHECK(run({"search-ext", "SG256_8129", "--sigma", "x99"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("precondition failures exit 1") {
  // No central extension data for the abelian group's adapted decomposition is
  // needed; sigma outside the center is a precondition failure.
  Run r = run({"search-ext", "D8", "--sigma", "x1"});
  CHECK(r.code == 1);
  CHECK(!r.err.empty());
}

TEST_CASE("extra catalogs") {
  std::string good = temp_file("extra.cat", "group MyC4\nngens 2\npow 1 = 2\nend\n");
  auto j = json_of(run({"--catalog", good, "info", "MyC4", "--json"}));
  CHECK(j["groups"][0] == "MyC4");
  auto k = json_of(run({"info", good + ":MyC4", "--json"}));
  CHECK(k["input_digest"] == j["input_digest"]);

  std::string broken = temp_file("broken.cat", "group Bad\nngens 2\npow 1 = 1\nend\n");
  Run r = run({"--catalog", broken, "info", "C2"});
  CHECK(r.code == 1);
  CHECK(r.err.find("broken.cat:3") != std::string::npos);
}

TEST_CASE("selftest stops at a corrupted catalog") {
  std::string broken = temp_file("broken2.cat", "group Bad\nngens 2\ncomm 2 1 = 1\nend\n");
  Run r = run({"selftest", "--catalog", broken});
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL catalog parse") != std::string::npos);
  CHECK(r.out.find("PASS") == std::string::npos);
}
