#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace pcinv::verify {

struct AcceptanceOptions {
  // Flip one d2 coefficient before the Kudo identity check (criterion 5).
  bool mutate_d2 = false;
  // Extra catalog files that must parse before anything else runs.
  std::vector<std::string> catalog_files;
  std::uint64_t seed = 20240917;
  std::size_t property_scale = 1000;
  std::ostream* progress = nullptr;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceResult {
  bool catalog_ok = false;
  std::string catalog_detail;
  std::vector<CriterionResult> criteria;

  bool all_pass() const;
};

AcceptanceResult run_acceptance(const AcceptanceOptions& opts = {});

// "PASS  5 spectral sequence tables (0.41 s)" with the detail on failure.
std::string format_line(const CriterionResult& c);
void print(std::ostream& out, const AcceptanceResult& r);

}  // namespace pcinv::verify
