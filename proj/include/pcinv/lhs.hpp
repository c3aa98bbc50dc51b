#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pcinv/f2poly.hpp"
#include "pcinv/homology.hpp"
#include "pcinv/ktheory.hpp"
#include "pcinv/quotient.hpp"

namespace pcinv {

// d3(zeta^2) as Sq1(d2(zeta)) together with its class modulo the degree-3
// part of I_2.
struct D3Entry {
  F2Poly raw;
  bool in_i2 = false;
  F2Poly normal_form;  // canonical representative modulo I_2 in degree 3
};

// Central extension V >-> G ->> W with V and W elementary abelian. X_a is
// dual to the image of lifts[a] in W, zeta_i dual to v_basis[i].
struct LhsData {
  PcGroupPtr group;
  Subgroup v;
  std::vector<Element> v_basis;
  std::vector<Element> lifts;
  std::vector<F2Poly> d2;
  std::vector<D3Entry> d3;
  std::vector<F2Poly> i2;        // nonzero d2 values
  std::vector<F2Poly> i_closed;  // i2 and the nonzero Sq1 images

  int r() const { return static_cast<int>(lifts.size()); }
  std::string zeta_label(std::size_t i) const;  // generator name of v_basis[i] or a word
};

// W-coordinates of elements of G over the lifts, ignoring the V-part.
class WCoordinates {
 public:
  explicit WCoordinates(const LhsData& l);
  std::uint64_t operator()(Element e) const;

 private:
  QuotientGroup q_;
  std::unordered_map<std::uint32_t, std::uint64_t> map_;
};

struct LhsOptions {
  // Test hook: flip the coefficient of the first term of d2(zeta_1) or add
  // X_1X_2 when it is zero.
  bool mutate_d2 = false;
  std::vector<Element> v_basis;  // default: pc generators inside V, then greedy
};

// Tables for the extension with kernel V (default: the Frattini subgroup).
LhsData d2_table(const PcGroupPtr& g, const Subgroup& v, const LhsOptions& opts = {});
LhsData lhs_data(const PcGroupPtr& g, const LhsOptions& opts = {});
std::vector<D3Entry> d3_table(const LhsData& l);

// Whether a d3 entry represents the class literal + I_2. A literal "0" asks
// for membership in I_2; any other literal must equal the raw Sq1 value.
bool d3_matches(const LhsData& l, std::size_t i, const F2Poly& literal);

enum class Survival { survives_page4, dies, undecided };
std::string to_string(Survival s);

struct SurvivalVerdict {
  F2Poly f;
  Survival verdict = Survival::undecided;
  MembershipCertificate certificate;
};

SurvivalVerdict survives_deg4(const LhsData& l, const F2Poly& f);

// Degree-3 classes modulo the closed ideal.
bool in_closed_ideal(const LhsData& l, const F2Poly& f);

// Class of a degree-2 polynomial modulo the span of the d2 values.
bool same_h2_class(const LhsData& l, const F2Poly& a, const F2Poly& b);

struct ExtensionClassRep {
  F2Poly theta;                    // in the variables of lhs_data(base)
  std::vector<Element> complement;  // complement of <t> inside V~ mapping onto V
  std::vector<Element> cover_lifts;
};

// sigma-coordinate rule on the cover's V~ = Frattini(cover). The complement
// is chosen greedily among the pc generators of V~ unless supplied.
ExtensionClassRep extension_class_rep(const CentralExtensionData& e, std::vector<Element> complement = {});

}  // namespace pcinv
