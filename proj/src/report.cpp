#include "pcinv/report.hpp"

#include "pcinv/abelian.hpp"
#include "pcinv/fingerprint.hpp"

namespace pcinv {

namespace {

std::vector<std::string> matching_names(const Fingerprint& f, const Catalog& known) {
  std::vector<std::string> out;
  for (const auto& name : known.names()) {
    const PcGroup& h = *known.get(name);
    if (h.order() == f.order && fingerprint(h) == f) out.push_back(name);
  }
  return out;
}

}  // namespace

Json words(const PcGroup& g, const std::vector<Element>& elems) {
  Json a = Json::array();
  for (Element e : elems) a.push_back(g.to_string(e));
  return a;
}

Json polys(const std::vector<F2Poly>& fs) {
  Json a = Json::array();
  for (const auto& f : fs) a.push_back(f.to_string());
  return a;
}

Json to_json(const MembershipCertificate& c) {
  Json j;
  j["member"] = c.member;
  j["degree"] = c.degree;
  j["span_rank"] = c.span_rank;
  if (c.member) {
    Json terms = Json::array();
    for (std::size_t i = 0; i < c.coefficients.size(); ++i) {
      if (c.coefficients[i].is_zero()) continue;
      terms.push_back({{"generator", i}, {"coefficient", c.coefficients[i].to_string()}});
    }
    j["combination"] = terms;
  } else if (c.residual) {
    j["residual"] = c.residual->to_string();
  }
  return j;
}

Json to_json(const SurvivalVerdict& s) {
  Json j;
  j["class"] = s.f.to_string();
  j["verdict"] = to_string(s.verdict);
  j["certificate"] = to_json(s.certificate);
  return j;
}

Payload info_payload(const PcGroupPtr& gp) {
  const PcGroup& g = *gp;
  Payload p;
  StandardSubgroups s = standard_subgroups(g);
  Abelianization ab = abelianization(gp);
  p.value["name"] = g.name();
  p.value["order"] = g.order();
  p.value["ngens"] = g.ngens();
  p.value["abelian_invariants"] = ab.invariants;
  p.value["center_order"] = s.center.order();
  p.value["derived_order"] = s.derived.order();
  p.value["frattini_order"] = frattini_subgroup(g).order();
  p.value["exponent"] = exponent(g);
  p.value["derived_central"] = is_central(g, s.derived);
  p.certificate["presentation"] = serialize(g);
  return p;
}

Payload h1whp_payload(const PcGroup& g, const WhPrimeData& h) {
  Payload p;
  p.value["rank"] = h.rank;
  p.certificate["derived_order"] = h.derived.order();
  p.certificate["S_order"] = h.S.order();
  p.certificate["C_order"] = h.C.order();
  p.certificate["class2_path"] = h.class2_path;
  Json w = Json::array();
  for (const auto& x : h.witnesses) w.push_back({{"g", g.to_string(x.g)}, {"w", g.to_string(x.w)}});
  p.certificate["witnesses"] = w;
  return p;
}

Payload sk1_payload(const SK1Data& s) {
  Payload p;
  p.value["invariants"] = s.invariants;
  p.value["order"] = s.order();
  p.certificate["stem_order"] = s.stem_order;
  p.certificate["commuting_wedge_order"] = s.wedges.order();
  if (s.cover) {
    p.certificate["multiplier"] = s.cover->multiplier;
    p.certificate["stem_generators"] = words(*s.cover->sc, s.stem_generators);
  }
  return p;
}

Payload cover_payload(const CoverData& c) {
  Payload p;
  p.value["multiplier"] = c.multiplier;
  p.value["stem_invariants"] = stem_invariants(c);
  p.value["cover_order"] = c.sc->order();
  p.certificate["kernel"] = words(*c.sc, c.kernel.generators);
  p.certificate["stem"] = words(*c.sc, c.stem.generators);
  p.certificate["presentation"] = serialize(*c.sc);
  return p;
}

Payload search_payload(const PcGroup& g, const std::vector<ExtensionCandidate>& cands, const Catalog& known) {
  Payload p;
  Json a = Json::array();
  Json certs = Json::array();
  for (const auto& c : cands) {
    Json j;
    j["sigma"] = g.to_string(c.t);
    j["quotient_order"] = c.quotient_fingerprint.order;
    j["matches"] = matching_names(c.quotient_fingerprint, known);
    j["thm42"] = c.thm42;
    a.push_back(j);
    certs.push_back({{"sigma", g.to_string(c.t)}, {"same_fingerprint", words(g, c.same_fingerprint)}});
  }
  p.value["quotients"] = a;
  p.certificate["candidates"] = certs;
  return p;
}

Payload extension_payload(const CentralExtensionData& e, const Catalog& known) {
  Payload p;
  const PcGroup& g = *e.cover;
  Thm41Result a = thm41_check(e);
  Thm42Result b = thm42_check(e);
  p.value["sigma"] = g.to_string(e.t);
  p.value["thm41"] = a.holds;
  p.value["thm42"] = b.holds;
  p.value["sigma_in_derived"] = e.sigma_in_derived;
  p.value["matches"] = matching_names(fingerprint(*e.quotient), known);
  if (a.commutator_witness)
    p.certificate["commutator"] = {g.to_string(a.commutator_witness->first), g.to_string(a.commutator_witness->second)};
  p.certificate["self_inverse_classes_checked"] = b.self_inverse_classes_checked;
  if (b.counterexample) p.certificate["counterexample"] = g.to_string(*b.counterexample);
  return p;
}

Payload lhs_payload(const LhsData& l, bool page4) {
  Payload p;
  const PcGroup& g = *l.group;
  Json d2 = Json::array(), d3 = Json::array();
  for (std::size_t i = 0; i < l.d2.size(); ++i) {
    d2.push_back({{"zeta", l.zeta_label(i)}, {"d2", l.d2[i].to_string()}});
    d3.push_back({{"zeta", l.zeta_label(i)},
                  {"d3", l.d3[i].raw.to_string()},
                  {"in_I2", l.d3[i].in_i2},
                  {"normal_form", l.d3[i].normal_form.to_string()}});
  }
  p.value["r"] = l.r();
  p.value["d2"] = d2;
  p.value["d3"] = d3;
  p.certificate["V"] = words(g, l.v_basis);
  p.certificate["lifts"] = words(g, l.lifts);
  p.certificate["I2"] = polys(l.i2);
  p.certificate["I"] = polys(l.i_closed);
  if (page4) {
    // X_a^4 sums over nonempty subsets of the variables
    Json s = Json::array();
    const int r = l.r();
    if (r > 12) throw ScaleError("too many variables for the page-4 list");
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << r); ++m) {
      F2Poly f(r);
      for (int a = 0; a < r; ++a)
        if ((m >> a) & 1U) f += F2Poly::var(r, a).pow(4);
      SurvivalVerdict v = survives_deg4(l, f);
      s.push_back({{"class", f.to_string()}, {"verdict", to_string(v.verdict)}});
    }
    p.value["page4"] = s;
  }
  return p;
}

Payload lambda4_payload(const PcGroup& g, const Lambda4Report& r) {
  Payload p;
  p.value["verdict"] = to_string(r.verdict);
  p.value["reason"] = r.reason;
  if (r.verdict == Verdict::nonzero) {
    p.certificate["projection"] = r.phi->to_string();
    p.certificate["kernel"] = words(g, r.kernel_gens);
    p.certificate["kernel_order"] = r.kernel_order;
    p.certificate["survivor"] = to_json(*r.survivor);
    p.certificate["delta_v1"] = r.delta_v1;
  }
  Json v = Json::array();
  for (const auto& s : r.vanishing) v.push_back(to_json(s));
  if (!v.empty()) p.certificate["vanishing"] = v;
  return p;
}

Payload compat_payload(const CompatiblePairReport& r) {
  static const char* names[] = {"i", "ii", "iii", "iv", "v", "vi", "vii"};
  Payload p;
  Json c = Json::array();
  for (std::size_t i = 0; i < r.conditions.size(); ++i) {
    const auto& x = r.conditions[i];
    c.push_back({{"condition", names[i]}, {"pass", x.pass}, {"inconclusive", x.inconclusive}, {"detail", x.detail}});
  }
  p.value["verdict"] = r.verdict;
  p.value["conditions"] = c;
  p.certificate["theta_computed"] = r.theta_computed.to_string();
  p.certificate["commuting_wedges"] = r.commuting_wedges;
  return p;
}

Payload conj62_payload(const PcGroup& g, const ConjectureScan& s) {
  Payload p;
  Json a = Json::array();
  Json certs = Json::array();
  for (const auto& q : s.sequences) {
    a.push_back({{"quotient_order", q.quotient_order},
                 {"hom", q.hom},
                 {"class_count", q.class_count},
                 {"parity", q.odd ? "odd" : "even"},
                 {"inversion_fixed", q.inversion_fixed}});
    certs.push_back({{"N", words(g, q.n.generators)},
                     {"T", words(g, q.t.generators)},
                     {"W", words(g, q.w.generators)},
                     {"orders", {q.n.order(), q.t.order(), q.w.order()}}});
  }
  p.value["sequences"] = a;
  p.value["filters_applied"] = s.filters_applied;
  p.certificate["subgroups"] = certs;
  return p;
}

}  // namespace pcinv
