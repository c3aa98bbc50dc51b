#include "pcinv/snf.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <utility>

namespace pcinv {
namespace {

using Big = boost::multiprecision::cpp_int;

struct OverflowError {};

inline std::int64_t mul_sub(std::int64_t a, std::int64_t q, std::int64_t b) {
  std::int64_t p = 0;
  std::int64_t r = 0;
  if (__builtin_mul_overflow(q, b, &p) || __builtin_sub_overflow(a, p, &r)) throw OverflowError{};
  return r;
}
inline Big mul_sub(const Big& a, const Big& q, const Big& b) { return a - q * b; }

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError{};
  return r;
}
inline Big add(const Big& a, const Big& b) { return a + b; }

template <class T>
T absval(const T& x) {
  return x < 0 ? T(-x) : x;
}

template <class T>
struct Snf {
  std::vector<std::vector<T>> a;
  std::vector<std::vector<T>> v;
  std::size_t nr, nc;

  Snf(const IntMatrix& rows, std::size_t ncols) : nr(rows.size()), nc(ncols) {
    a.assign(nr, std::vector<T>(nc, T(0)));
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) a[i][j] = T(rows[i][j]);
    v.assign(nc, std::vector<T>(nc, T(0)));
    for (std::size_t j = 0; j < nc; ++j) v[j][j] = T(1);
  }

  void swap_cols(std::size_t p, std::size_t q) {
    if (p == q) return;
    for (auto& row : a) std::swap(row[p], row[q]);
    for (auto& row : v) std::swap(row[p], row[q]);
  }
  // col_q -= k * col_p
  void col_sub(std::size_t q, std::size_t p, const T& k) {
    for (auto& row : a) row[q] = mul_sub(row[q], k, row[p]);
    for (auto& row : v) row[q] = mul_sub(row[q], k, row[p]);
  }
  void negate_col(std::size_t p) {
    for (auto& row : a) row[p] = T(-row[p]);
    for (auto& row : v) row[p] = T(-row[p]);
  }
  void row_sub(std::size_t q, std::size_t p, const T& k) {
    for (std::size_t j = 0; j < nc; ++j) a[q][j] = mul_sub(a[q][j], k, a[p][j]);
  }

  std::vector<T> run() {
    std::vector<T> diag(nc, T(0));
    std::size_t t = 0;
    for (; t < nr && t < nc; ++t) {
      for (;;) {
        // smallest nonzero entry in the remaining block
        std::size_t pi = nr, pj = nc;
        for (std::size_t i = t; i < nr; ++i)
          for (std::size_t j = t; j < nc; ++j)
            if (a[i][j] != 0 && (pi == nr || absval(a[i][j]) < absval(a[pi][pj]))) {
              pi = i;
              pj = j;
            }
        if (pi == nr) return diag;
        std::swap(a[t], a[pi]);
        swap_cols(t, pj);
        bool clean = true;
        for (std::size_t i = t + 1; i < nr; ++i) {
          if (a[i][t] == 0) continue;
          T q = a[i][t] / a[t][t];
          row_sub(i, t, q);
          if (a[i][t] != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < nc; ++j) {
          if (a[t][j] == 0) continue;
          T q = a[t][j] / a[t][t];
          col_sub(j, t, q);
          if (a[t][j] != 0) clean = false;
        }
        if (!clean) continue;
        // divisibility: fold an offending row into row t and go again
        bool divides = true;
        for (std::size_t i = t + 1; i < nr && divides; ++i)
          for (std::size_t j = t + 1; j < nc; ++j)
            if (a[i][j] % a[t][t] != 0) {
              for (std::size_t c = 0; c < nc; ++c) a[t][c] = add(a[t][c], a[i][c]);
              divides = false;
              break;
            }
        if (divides) break;
      }
      if (a[t][t] < 0) negate_col(t);
      diag[t] = a[t][t];
    }
    return diag;
  }
};

template <class T>
SmithForm to_form(Snf<T>& s, const std::vector<T>& diag) {
  SmithForm out;
  out.diag.resize(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) out.diag[i] = static_cast<std::int64_t>(diag[i]);
  // V itself may carry large entries after a big-integer run; the
  // coordinates callers need are only meaningful modulo the diagonal, so
  // reduce each column modulo its divisor when one exists.
  out.v.assign(s.nc, std::vector<std::int64_t>(s.nc, 0));
  for (std::size_t j = 0; j < s.nc; ++j) {
    T d = diag[j];
    for (std::size_t i = 0; i < s.nc; ++i) {
      T x = s.v[i][j];
      if (d != 0) {
        x %= d;
        if (x < 0) x += d;
      }
      if (x > T(INT64_MAX) || x < T(INT64_MIN))
        throw std::overflow_error("smith form: transform entry outside int64 on a free coordinate");
      out.v[i][j] = static_cast<std::int64_t>(x);
    }
  }
  return out;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& rows, std::size_t ncols) {
  for (const auto& r : rows)
    if (r.size() != ncols) throw std::invalid_argument("smith form: ragged matrix");
  try {
    Snf<std::int64_t> s(rows, ncols);
    auto d = s.run();
    return to_form(s, d);
  } catch (const OverflowError&) {
    Snf<Big> s(rows, ncols);
    auto d = s.run();
    return to_form(s, d);
  }
}

std::vector<std::int64_t> AbelianQuotient::torsion_orders() const {
  std::vector<std::int64_t> r;
  for (auto i : torsion) r.push_back(snf.diag[i]);
  return r;
}

std::vector<std::int64_t> AbelianQuotient::torsion_coords(std::size_t j) const {
  std::vector<std::int64_t> r;
  for (auto i : torsion) {
    std::int64_t d = snf.diag[i];
    std::int64_t x = snf.v[j][i] % d;
    if (x < 0) x += d;
    r.push_back(x);
  }
  return r;
}

AbelianQuotient abelian_quotient(const IntMatrix& rows, std::size_t ncols) {
  AbelianQuotient q{smith_normal_form(rows, ncols), {}, {}};
  for (std::size_t i = 0; i < ncols; ++i) {
    if (q.snf.diag[i] == 0)
      q.free.push_back(i);
    else if (q.snf.diag[i] != 1)
      q.torsion.push_back(i);
  }
  return q;
}

}  // namespace pcinv
