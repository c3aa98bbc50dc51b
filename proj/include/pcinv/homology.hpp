#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcinv/gf2.hpp"
#include "pcinv/hom.hpp"

namespace pcinv {

class ScaleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Schur cover SC ->> G with central kernel K. The generators of SC are
// x_1..x_n lifted, followed by generators of K; an element of G lifts to the
// SC element with the same x-exponents and trivial K-part.
struct CoverData {
  PcGroupPtr group;
  PcGroupPtr sc;
  std::shared_ptr<const GroupHom<PcGroup>> epi;
  Subgroup kernel;
  Subgroup stem;                        // K intersected with [SC, SC]
  std::vector<std::int64_t> multiplier;  // torsion invariants from the tail lattice

  Element lift(Element g) const { return g; }
};

struct CoverOptions {
  // Nonzero: shuffle tail columns and relation rows with this seed before
  // the Smith form. The resulting cover is isomorphic.
  std::uint64_t shuffle_seed = 0;
};

inline constexpr int kMaxCoverGenerators = 10;

CoverData schur_cover(const PcGroupPtr& g, const CoverOptions& opts = {});

// Abelian invariants of H_2(G; Z), ascending.
std::vector<std::int64_t> h2_integral(const PcGroupPtr& g);
std::vector<std::int64_t> stem_invariants(const CoverData& c);

// Subgroup of the stem part generated by [g^, h^] over commuting g, h.
Subgroup commuting_wedges(const CoverData& c);

// Lambda^2 of G^{ab} = F_2^r with basis e_ij, i < j, for chosen lifts g_i,
// and the commutator map into [G, G].
struct WedgeSpace {
  int r = 0;
  std::vector<Element> lifts;                // g_1 .. g_r
  std::vector<std::pair<int, int>> pairs;    // (i, j) for column index
  std::vector<Element> derived_basis;        // basis of [G, G]
  std::vector<BitVec> images;                // [g_i, g_j] in derived coordinates

  std::size_t pair_index(int i, int j) const;
  std::string label(const BitVec& v) const;  // "e12+e34"
  // Wedge of two classes given by coordinates over the lifts.
  BitVec wedge(std::uint64_t a, std::uint64_t b) const;
};

struct GaneaKernel {
  WedgeSpace space;
  std::vector<BitVec> basis;  // reduced echelon basis of the kernel
  std::size_t commutator_rank = 0;
  std::vector<std::string> labels() const;
  bool contains(const BitVec& v) const;
};

// Coordinates of elements of G over the lifts of a WedgeSpace, i.e. in G^{ab}.
class AbelianCoords {
 public:
  explicit AbelianCoords(const PcGroupPtr& g, const std::vector<Element>& lifts);
  std::uint64_t operator()(Element e) const;

 private:
  std::vector<std::uint64_t> table_;
};

WedgeSpace wedge_space(const PcGroupPtr& g);
GaneaKernel ganea_kernel(const PcGroupPtr& g);

}  // namespace pcinv
