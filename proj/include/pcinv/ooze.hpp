#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcinv/abelian.hpp"
#include "pcinv/gf2.hpp"
#include "pcinv/ktheory.hpp"
#include "pcinv/lhs.hpp"
#include "pcinv/quotient.hpp"

namespace pcinv {

// delta : H^0(G^ab) -> H^1(Wh') = S/C on the basis v_f = g_f^{m_f/2} of the
// order-two part of G^ab, one v_f per cyclic factor.
struct DeltaMap {
  Abelianization ab;
  WhPrimeData h1;
  std::vector<Element> factor_lifts;    // g_f in G
  std::vector<Element> h0_basis;        // v_f in G
  std::vector<std::uint64_t> images;    // delta(v_f) over target_basis
  std::vector<Element> target_basis;    // basis of S/C as elements of S
  std::vector<BitVec> kernel;           // basis of K over the factors
  int rank = 0;

  // delta of an element of order at most two in G, over target_basis.
  std::uint64_t apply(Element g) const;
  // Element of G lying over target coordinates of G^ab.
  Element lift(const std::vector<std::int64_t>& coords) const;

  std::vector<std::uint32_t> lift_table;  // G^ab element bits -> G element bits
  std::shared_ptr<const QuotientGroup> quotient;  // G / C
  std::shared_ptr<const LinearCoords<QuotientGroup>> sc_coords;
};

DeltaMap delta_map(const PcGroupPtr& g);

// Cyclic decomposition of G^ab with delta(v_1..v_k) a basis of H^1(Wh') and
// v_{k+1}..v_n a basis of K.
struct AdaptedDecomposition {
  std::vector<std::vector<std::int64_t>> generators;  // factor generators in G^ab coordinates
  std::vector<std::int64_t> orders;
  std::vector<Element> lifts;                          // generators lifted to G
  std::vector<Element> v;                              // order-two elements of each factor, in G
  int k = 0;
};

AdaptedDecomposition adapted_decomposition(const DeltaMap& d);
AdaptedDecomposition adapted_decomposition(const PcGroupPtr& g);
// Independent re-check of the two defining conditions; throws on failure.
void verify_adapted(const DeltaMap& d, const AdaptedDecomposition& a);

enum class Verdict { nonzero, zero, undecided };
std::string to_string(Verdict v);

struct Lambda4Report {
  Verdict verdict = Verdict::undecided;
  std::string reason;
  // nonzero certificate
  std::optional<F2Poly> phi;           // class pulled back from H^1(C_1)
  std::vector<Element> kernel_gens;    // N = ker p
  std::size_t kernel_order = 0;
  std::optional<SurvivalVerdict> survivor;
  std::uint64_t delta_v1 = 0;
  // zero certificate for elementary abelian G^ab: phi^4 in I for a basis of
  // the annihilator of K
  std::vector<SurvivalVerdict> vanishing;
};

Lambda4Report lambda4_detect(const PcGroupPtr& g);

struct ConditionResult {
  bool pass = false;
  bool inconclusive = false;
  std::string detail;
};

struct CompatiblePairReport {
  std::vector<ConditionResult> conditions;  // (i) .. (vii)
  std::string verdict;                      // compatible | inconclusive | not compatible
  F2Poly theta_computed;
  std::vector<std::string> commuting_wedges;  // basis of the commuting-wedge span
};

CompatiblePairReport compatible_pair_check(const PcGroupPtr& pi, const CentralExtensionData& cover,
                                           const F2Poly& theta, const F2Poly& z);

struct ConjectureSequence {
  std::uint64_t quotient_order = 0;  // |G/N|
  std::vector<std::int64_t> hom;     // images of the G^ab factor generators in Z/|G/N|
  Subgroup n, t, w;
  std::size_t class_count = 0;       // classes of G inside T - N
  bool odd = false;
  std::size_t inversion_fixed = 0;   // classes in T - N closed under inversion
};

struct ConjectureScan {
  std::vector<ConjectureSequence> sequences;
  bool filters_applied = false;
};

// Every N >= [G,G] with G/N cyclic of order at least 4, with the structural
// assertions checked on each result.
ConjectureScan conjecture62_scan(const PcGroupPtr& g);

}  // namespace pcinv
