#include "pcinv/verify/acceptance.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>

#include "pcinv/catalog.hpp"
#include "pcinv/fingerprint.hpp"
#include "pcinv/homology.hpp"
#include "pcinv/ktheory.hpp"
#include "pcinv/lhs.hpp"
#include "pcinv/ooze.hpp"
#include "pcinv/verify/oracles.hpp"
#include "pcinv/verify/properties.hpp"

namespace pcinv::verify {

namespace {

using Clock = std::chrono::steady_clock;
using V = std::vector<std::int64_t>;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Collects failed expectations of one criterion.
class Expect {
 public:
  void operator()(bool ok, const std::string& what) {
    if (ok) return;
    if (!msg_.empty()) msg_ += "; ";
    msg_ += what;
  }
  void within(double seconds, double limit, const std::string& what) {
    std::ostringstream s;
    s << what << " took " << std::fixed << std::setprecision(1) << seconds << " s (limit " << limit << " s)";
    (*this)(seconds < limit, s.str());
  }
  const std::string& failures() const { return msg_; }

 private:
  std::string msg_;
};

PcGroupPtr shipped(const std::string& name) { return shipped_catalog().get(name); }

std::vector<std::string> shipped_abelian() {
  std::vector<std::string> out;
  for (const auto& n : shipped_catalog().names())
    if (is_abelian(*shipped(n))) out.push_back(n);
  return out;
}

CentralExtensionData tower(const std::string& cover_name) {
  const TowerSpec* t = find_tower(cover_name);
  if (!t) throw std::logic_error("no shipped tower for " + cover_name);
  auto cover = shipped(t->cover);
  auto base = shipped(t->base);
  std::vector<Element> images;
  for (const auto& w : t->images) images.push_back(parse_element(*base, w));
  return make_central_extension(cover, base, images);
}

std::vector<std::string> strings(const std::vector<F2Poly>& v) {
  std::vector<std::string> out;
  for (const auto& f : v) out.push_back(f.to_string());
  return out;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
  return s;
}

bool d3_all_match(const LhsData& l, const std::vector<std::string>& lits) {
  if (lits.size() != l.d3.size()) return false;
  for (std::size_t i = 0; i < lits.size(); ++i)
    if (!d3_matches(l, i, F2Poly::parse(lits[i], l.r()))) return false;
  return true;
}

void c1(Expect& e) {
  auto t0 = Clock::now();
  WhPrimeData big = h1_wh_prime(shipped("G16384"));
  double t = since(t0);
  e(big.rank == 3, "G16384 rank " + std::to_string(big.rank));
  e(big.class2_path, "G16384 did not use the class-2 path");
  e.within(t, 60, "G16384");
  e(h1_wh_prime(shipped("SG128_1377")).rank == 0, "SG128_1377 rank nonzero");
  e(h1_wh_prime(shipped("SG256_9039")).rank == 1, "SG256_9039 rank not 1");
  auto names = shipped_abelian();
  for (const char* n : {"D8", "Q8", "C8"}) names.push_back(n);
  for (const auto& n : names) e(h1_wh_prime(shipped(n)).rank == 0, n + " rank nonzero");
}

void c2(Expect& e) {
  for (const char* n : {"SG128_1376", "SG128_1377"}) e(sk1(shipped(n)).invariants == V{2}, std::string(n) + " SK1 not Z/2");
  for (const auto& n : shipped_abelian()) e(sk1(shipped(n)).order() == 1, n + " SK1 nontrivial");
  for (const auto& n : shipped_catalog().names()) {
    auto g = shipped(n);
    if (g->order() > 16) continue;
    e(stem_invariants(schur_cover(g)) == oracle::h2_bar_resolution(*g), n + " stem differs from bar resolution");
  }
  e(h2_integral(shipped("C2xC2")) == V{2} && oracle::h2_kunneth({2, 2}) == V{2}, "C2xC2 multiplier");
  e(h2_integral(shipped("C2^3")) == V{2, 2, 2} && oracle::h2_kunneth({2, 2, 2}) == V{2, 2, 2}, "C2^3 multiplier");
  e(h2_integral(shipped("C4xC4")) == V{4} && oracle::h2_kunneth({4, 4}) == V{4}, "C4xC4 multiplier");
}

void c3(Expect& e) {
  auto t0 = Clock::now();
  for (auto [cover, base, sigma] : {std::tuple{"SG256_8177", "SG128_1377", "x7*x8"},
                                    std::tuple{"SG256_8129", "SG128_1376", "x5*x8"}}) {
    std::string c = cover;
    CentralExtensionData x = tower(c);
    e(x.t == parse_element(*x.cover, sigma), c + " tower sigma is not " + sigma);
    e(thm41_check(x).holds, c + " sigma criterion fails");
    e(thm42_check(x).holds, c + " lifting criterion fails");
    auto found = search_central_extensions(shipped(c));
    Fingerprint want = fingerprint(*shipped(base));
    e(found.size() == 1, c + " search found " + std::to_string(found.size()) + " quotient classes");
    for (const auto& f : found) e(f.quotient_fingerprint == want && f.thm42, c + " search quotient is not " + base);
  }
  e.within(since(t0), 30, "extension criteria");
}

void c4(Expect& e) {
  auto t0 = Clock::now();
  auto P = [](const char* s) { return F2Poly::parse(s, 7); };
  std::vector<F2Poly> gens{P("X1^2+X2*X3"),       P("X2^2+X4*X5"), P("X3^2+X6*X7"), P("X2^2*X3+X2*X3^2"),
                           P("X4^2"),             P("X5^2"),       P("X6^2"),       P("X7^2"),
                           P("X4^2*X5+X4*X5^2"), P("X6^2*X7+X6*X7^2")};
  MembershipCertificate c = degree_membership(P("X1^4"), gens, 4);
  e(!c.member && c.residual && !c.residual->is_zero(), "X1^4 reported in the ideal");
  for (const char* f : {"X2^4", "X3^4"}) {
    MembershipCertificate m = degree_membership(P(f), gens, 4);
    e(m.member && verify_certificate(P(f), gens, m), std::string(f) + " has no verified certificate");
  }
  MembershipCertificate x2;
  x2.member = true;
  x2.coefficients.assign(gens.size(), F2Poly(7));
  x2.coefficients[1] = P("X2^2+X4*X5");
  x2.coefficients[4] = P("X5^2");
  e(verify_certificate(P("X2^4"), gens, x2), "explicit X2^4 combination");
  MembershipCertificate x3 = x2;
  x3.coefficients.assign(gens.size(), F2Poly(7));
  x3.coefficients[2] = P("X3^2+X6*X7");
  x3.coefficients[7] = P("X6^2");
  e(verify_certificate(P("X3^4"), gens, x3), "explicit X3^4 combination");
  e.within(since(t0), 1, "membership");
}

void c5(Expect& e, bool mutate) {
  using S = std::vector<std::string>;
  LhsData a = lhs_data(shipped("G16384"));
  e(strings(a.d2) == S{"X1^2+X2*X3", "X2^2+X4*X5", "X3^2+X6*X7", "X4^2", "X5^2", "X6^2", "X7^2"},
    "G16384 d2: " + join(strings(a.d2)));
  e(d3_all_match(a, {"X2^2*X3+X2*X3^2", "0", "0", "0", "0", "0", "0"}), "G16384 d3");
  LhsData b = lhs_data(shipped("SG256_9039"));
  e(strings(b.d2) == S{"X1^2+X1*X2+X2*X4+X3^2+X4^2", "X1*X3+X2^2+X3^2+X4^2", "X1^2+X2*X3", "X1^2+X1*X4"},
    "SG256_9039 d2: " + join(strings(b.d2)));
  e(d3_all_match(b, {"X1^2*X2+X1*X2^2+X2^2*X4+X2*X4^2", "X1^2*X3+X1*X3^2", "X2^2*X3+X2*X3^2", "X1^2*X4+X1*X4^2"}),
    "SG256_9039 d3");
  LhsData c = lhs_data(shipped("SG256_8129"));
  e(strings(c.d2) == S{"X1*X3+X3*X4+X4^2", "X1^2+X1*X3+X2^2", "X1^2+X2*X3", "X1*X2+X1*X3"},
    "SG256_8129 d2: " + join(strings(c.d2)));
  LhsData d = lhs_data(shipped("SG128_1376"));
  e(strings(d.d2) == S{"X1*X2+X3*X4+X4^2", "X1^2+X1*X3+X2^2", "X1^2+X2*X3"}, "SG128_1376 d2: " + join(strings(d.d2)));

  // Kudo identity against d2 recomputed by interpolation
  LhsOptions opts;
  opts.mutate_d2 = mutate;
  for (const auto& n : shipped_catalog().names()) {
    LhsData l;
    try {
      l = lhs_data(shipped(n), opts);
    } catch (const PreconditionError&) {
      continue;
    }
    if (l.d2.empty()) continue;
    std::vector<F2Poly> ref = oracle::d2_by_interpolation(*l.group, l.v_basis, l.lifts);
    e(ref == l.d2, n + " d2 disagrees with interpolation");
    std::vector<F2Poly> ref_i2;
    for (const auto& f : ref)
      if (!f.is_zero()) ref_i2.push_back(f);
    for (std::size_t i = 0; i < l.d3.size() && i < ref.size(); ++i)
      e(degree_membership(l.d3[i].raw + sq1(ref[i]), ref_i2, 3).member, n + " d3 is not Sq1 d2 modulo I2");
  }
}

void c6(Expect& e) {
  LhsData a = lhs_data(shipped("G16384"));
  e(survives_deg4(a, F2Poly::parse("X1^4", 7)).verdict == Survival::survives_page4, "G16384 X1^4 does not survive");
  LhsData b = lhs_data(shipped("SG256_9039"));
  e(survives_deg4(b, F2Poly::parse("X1^4", 4)).verdict == Survival::dies, "SG256_9039 X1^4 survives");
  for (const char* f : {"X2^4+X3^4", "X3^4+X4^4"})
    e(survives_deg4(b, F2Poly::parse(f, 4)).verdict == Survival::survives_page4, std::string(f) + " dies");
}

void c7(Expect& e) {
  ExtensionClassRep r = extension_class_rep(tower("SG256_8129"));
  e(r.theta.to_string() == "X1*X2+X1*X3", "theta = " + r.theta.to_string());
}

void c8(Expect& e) {
  GaneaKernel k = ganea_kernel(shipped("SG128_1376"));
  std::vector<BitVec> want;
  for (auto ps : {std::vector<std::pair<int, int>>{{0, 1}, {2, 3}}, {{0, 3}}, {{1, 3}}}) {
    BitVec v(k.space.pairs.size());
    for (auto [i, j] : ps) v.flip(k.space.pair_index(i, j));
    want.push_back(v);
    e(k.contains(v), k.space.label(v) + " not in the kernel");
  }
  e(k.basis.size() == 3 && gf2_rank(want, k.space.pairs.size()) == 3, "kernel is not 3-dimensional: " + join(k.labels()));
}

void c9(Expect& e) {
  auto t0 = Clock::now();
  CentralExtensionData x = tower("SG256_8129");
  auto P = [](const char* s) { return F2Poly::parse(s, 4); };
  CompatiblePairReport r = compatible_pair_check(x.base, x, P("X1*X2+X1*X3"), P("X3*X4"));
  for (std::size_t i = 0; i < r.conditions.size(); ++i)
    e(r.conditions[i].pass, "condition " + std::to_string(i + 1) + ": " + r.conditions[i].detail);
  e(r.conditions.size() == 7 && r.verdict == "compatible", "verdict " + r.verdict);
  e.within(since(t0), 120, "compatible pair");
}

void c10(Expect& e) {
  auto t0 = Clock::now();
  Lambda4Report a = lambda4_detect(shipped("G16384"));
  double t = since(t0);
  e(a.verdict == Verdict::nonzero && a.phi && a.survivor && a.delta_v1 != 0, "G16384: " + to_string(a.verdict));
  e(a.survivor && a.survivor->verdict == Survival::survives_page4, "G16384 certificate lacks a survivor");
  e.within(t, 300, "G16384");
  e(lambda4_detect(shipped("SG256_9039")).verdict == Verdict::zero, "SG256_9039 not zero");
  for (const auto& n : shipped_abelian()) e(lambda4_detect(shipped(n)).verdict == Verdict::zero, n + " not zero");
}

void c11(Expect& e, const AcceptanceOptions& o) {
  for (const auto& p : run_properties(o.seed, o.property_scale)) {
    e(p.ok(), p.name + " failed " + std::to_string(p.failures) + "/" + std::to_string(p.instances) + " (" +
                  p.first_failure + ")");
    if (o.progress) *o.progress << "  " << p.name << ": " << p.instances << " instances\n";
  }
}

}  // namespace

bool AcceptanceResult::all_pass() const {
  if (!catalog_ok) return false;
  for (const auto& c : criteria)
    if (!c.pass) return false;
  return !criteria.empty();
}

AcceptanceResult run_acceptance(const AcceptanceOptions& o) {
  AcceptanceResult out;
  try {
    parse_catalog(shipped_catalog_text(), "shipped");
    for (const auto& f : o.catalog_files) load_catalog_file(f);
    out.catalog_ok = true;
  } catch (const std::exception& e) {
    out.catalog_detail = e.what();
    return out;
  }

  const std::vector<std::pair<std::string, std::function<void(Expect&)>>> all = {
      {"H1(Wh') reproduction", c1},
      {"SK1 and Schur covers", c2},
      {"extension criteria and search", c3},
      {"degree-4 ideal membership", c4},
      {"spectral sequence tables", [&](Expect& e) { c5(e, o.mutate_d2); }},
      {"page-4 survival", c6},
      {"extension class representative", c7},
      {"Ganea kernel", c8},
      {"compatible pair", c9},
      {"lambda4 detector", c10},
      {"property suites", [&](Expect& e) { c11(e, o); }},
  };
  for (std::size_t i = 0; i < all.size(); ++i) {
    CriterionResult r;
    r.id = static_cast<int>(i + 1);
    r.title = all[i].first;
    if (o.progress) *o.progress << "running " << r.id << " " << r.title << "\n";
    auto t0 = Clock::now();
    Expect e;
    try {
      all[i].second(e);
    } catch (const std::exception& x) {
      e(false, std::string("exception: ") + x.what());
    }
    r.seconds = since(t0);
    r.detail = e.failures();
    r.pass = r.detail.empty();
    out.criteria.push_back(std::move(r));
  }
  return out;
}

std::string format_line(const CriterionResult& c) {
  std::ostringstream s;
  s << (c.pass ? "PASS " : "FAIL ") << std::setw(2) << c.id << " " << c.title << " (" << std::fixed
    << std::setprecision(2) << c.seconds << " s)";
  if (!c.pass) s << ": " << c.detail;
  return s.str();
}

void print(std::ostream& out, const AcceptanceResult& r) {
  if (!r.catalog_ok) {
    out << "FAIL catalog parse: " << r.catalog_detail << "\n";
    return;
  }
  for (const auto& c : r.criteria) out << format_line(c) << "\n";
}

}  // namespace pcinv::verify
