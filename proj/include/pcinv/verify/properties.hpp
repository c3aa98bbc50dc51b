#pragma once

// Randomized property suites with a fixed seed. Each returns how many
// instances were checked and the first failing instance, if any.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pcinv/pcgroup.hpp"

namespace pcinv::verify {

struct PropertyReport {
  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && instances > 0; }
};

inline constexpr std::uint64_t kDefaultSeed = 20240917;

// Class-2 group with top generators x_1..x_k and central elementary abelian
// x_{k+1}..x_{k+m}; squares and commutators of the top generators are random
// words in the central ones, each central letter in a commutator with
// probability comm_density.
PcGroupPtr random_class2_group(std::mt19937_64& rng, int k, int m, double comm_density = 0.5);

PropertyReport prop_pc_consistency(std::uint64_t seed, std::size_t n);
PropertyReport prop_associativity(std::uint64_t seed, std::size_t n);
PropertyReport prop_class_equation(std::uint64_t seed, std::size_t n);
PropertyReport prop_quotient_hom(std::uint64_t seed, std::size_t n);
PropertyReport prop_sq1_derivation(std::uint64_t seed, std::size_t n);
PropertyReport prop_groebner_vs_linear(std::uint64_t seed, std::size_t n);
PropertyReport prop_certificates(std::uint64_t seed, std::size_t n);
PropertyReport prop_adapted(std::uint64_t seed, std::size_t n);
PropertyReport prop_conjecture_scan(std::uint64_t seed, std::size_t n);
PropertyReport prop_d2_oracle(std::uint64_t seed, std::size_t n);

// All suites; Sq1 runs on 10 * scale pairs, the rest on scale instances.
std::vector<PropertyReport> run_properties(std::uint64_t seed, std::size_t scale);

}  // namespace pcinv::verify
