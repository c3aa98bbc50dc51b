#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "pcinv/catalog.hpp"
#include "pcinv/homology.hpp"
#include "pcinv/ktheory.hpp"
#include "pcinv/lhs.hpp"
#include "pcinv/ooze.hpp"

namespace pcinv {

using Json = nlohmann::ordered_json;

// Value and certificate halves of a report. Neither carries timing, so
// identical inputs serialize identically.
struct Payload {
  Json value = Json::object();
  Json certificate = Json::object();
};

Json words(const PcGroup& g, const std::vector<Element>& elems);
Json polys(const std::vector<F2Poly>& fs);
Json to_json(const MembershipCertificate& c);
Json to_json(const SurvivalVerdict& s);

Payload info_payload(const PcGroupPtr& g);
Payload h1whp_payload(const PcGroup& g, const WhPrimeData& h);
Payload sk1_payload(const SK1Data& s);
Payload cover_payload(const CoverData& c);
// Candidate quotients are named by fingerprint against `known` when possible.
Payload search_payload(const PcGroup& g, const std::vector<ExtensionCandidate>& cands, const Catalog& known);
Payload extension_payload(const CentralExtensionData& e, const Catalog& known);
Payload lhs_payload(const LhsData& l, bool page4);
Payload lambda4_payload(const PcGroup& g, const Lambda4Report& r);
Payload compat_payload(const CompatiblePairReport& r);
Payload conj62_payload(const PcGroup& g, const ConjectureScan& s);

}  // namespace pcinv
