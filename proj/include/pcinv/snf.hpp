#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pcinv {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

// Smith form of an r x m integer matrix L: U L V = diag(d_0, d_1, ...).
// `diag` has m entries; positions past the rank are 0. Only the column
// transform V is kept since that is what coordinates on Z^m / rowspace(L)
// need: e_j maps to row j of V.
struct SmithForm {
  std::vector<std::int64_t> diag;
  IntMatrix v;
};

SmithForm smith_normal_form(const IntMatrix& rows, std::size_t ncols);

// Abelian group Z^m / rowspace(L) expressed through its Smith form.
struct AbelianQuotient {
  SmithForm snf;
  // Indices into snf.diag with d != 1, in order.
  std::vector<std::size_t> torsion;  // d > 1
  std::vector<std::size_t> free;     // d == 0
  std::vector<std::int64_t> torsion_orders() const;
  // Torsion coordinates of e_j, each reduced into [0, d).
  std::vector<std::int64_t> torsion_coords(std::size_t j) const;
};

AbelianQuotient abelian_quotient(const IntMatrix& rows, std::size_t ncols);

}  // namespace pcinv
