#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "pcinv/fingerprint.hpp"
#include "pcinv/homology.hpp"
#include "pcinv/quotient.hpp"

namespace pcinv {

// An element g together with w satisfying w^-1 g w = g^-1.
struct InverseWitness {
  Element g;
  Element w;
};

// S = {g : g^2 in [G,G]}, C generated by [G,G] and the g in S conjugate to
// their inverse; rank = dim S/C.
struct WhPrimeData {
  Subgroup derived;
  Subgroup S;
  Subgroup C;
  int rank = 0;
  std::vector<InverseWitness> witnesses;  // generators of C modulo [G,G]
  bool class2_path = false;
};

WhPrimeData h1_wh_prime(const PcGroupPtr& g);

// w with w^-1 g w = g^-1, if any. Uses the class-2 shortcut when [G,G] is
// central, otherwise an orbit search.
std::optional<Element> inverse_conjugator(const PcGroup& g, Element x, bool derived_central);

struct SK1Data {
  std::vector<std::int64_t> invariants;  // of stem / wedges, ascending
  std::size_t stem_order = 0;
  Subgroup wedges;
  std::vector<Element> stem_generators;
  std::shared_ptr<const CoverData> cover;

  std::size_t order() const;
  // Whether an element of the stem part lies in the commuting-wedge subgroup.
  bool is_wedge(Element stem_element) const;
};

SK1Data sk1(std::shared_ptr<const CoverData> cover);
SK1Data sk1(const PcGroupPtr& g);

// Central extension sigma = <t> of order 2 in cover, pi = cover / sigma.
// Optionally carries an explicit base group with alpha : cover ->> base.
struct CentralExtensionData {
  PcGroupPtr cover;
  Element t;
  Subgroup sigma;
  std::shared_ptr<const QuotientGroup> quotient;
  PcGroupPtr base;
  std::shared_ptr<const GroupHom<PcGroup>> alpha;
  bool sigma_in_derived = false;
};

CentralExtensionData make_central_extension(const PcGroupPtr& cover, Element t);
CentralExtensionData make_central_extension(const PcGroupPtr& cover, const PcGroupPtr& base,
                                            std::vector<Element> images);

struct Thm41Result {
  bool holds = false;
  bool sigma_in_derived = false;
  std::optional<std::pair<Element, Element>> commutator_witness;  // t = [a, b]
};

struct Thm42Result {
  bool holds = false;
  std::size_t self_inverse_classes_checked = 0;  // cosets h with h ~ h^-1 in pi
  std::optional<Element> counterexample;          // a lift of an offending h
};

Thm41Result thm41_check(const CentralExtensionData& e);
Thm42Result thm42_check(const CentralExtensionData& e);

struct ExtensionCandidate {
  Element t;
  std::vector<Element> same_fingerprint;  // further t giving the same quotient fingerprint
  Fingerprint quotient_fingerprint;
  bool thm42 = false;
  CentralExtensionData extension;
};

std::vector<ExtensionCandidate> search_central_extensions(const PcGroupPtr& g);

}  // namespace pcinv
