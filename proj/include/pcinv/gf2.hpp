#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace pcinv {

// Dense bit vector over GF(2).
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i, bool v = true) {
    if (v)
      w_[i >> 6] |= (std::uint64_t{1} << (i & 63));
    else
      w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  void flip(std::size_t i) { w_[i >> 6] ^= (std::uint64_t{1} << (i & 63)); }

  BitVec& operator^=(const BitVec& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    return *this;
  }
  bool any() const {
    for (auto x : w_)
      if (x) return true;
    return false;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w_) c += static_cast<std::size_t>(std::popcount(x));
    return c;
  }
  // Index of the lowest set bit, or size() when zero.
  std::size_t first() const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(w_[k]));
    return n_;
  }
  std::vector<std::size_t> ones() const {
    std::vector<std::size_t> r;
    for (std::size_t k = 0; k < w_.size(); ++k) {
      std::uint64_t x = w_[k];
      while (x) {
        r.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(x)));
        x &= x - 1;
      }
    }
    return r;
  }
  bool operator==(const BitVec&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

// Incremental row echelon form. Each stored row optionally remembers which
// inserted vectors it is a sum of, so kernels and certificates fall out.
class Gf2Echelon {
 public:
  Gf2Echelon(std::size_t ncols, bool track) : ncols_(ncols), track_(track) {}

  // Returns true when v was independent of the rows so far. Insertion ids
  // are consecutive from zero.
  bool insert(BitVec v) {
    std::size_t id = inserted_++;
    BitVec comb;
    if (track_) {
      comb = BitVec(id + 1);
      comb.set(id);
    }
    reduce_in_place(v, track_ ? &comb : nullptr);
    if (!v.any()) {
      if (track_) dependencies_.push_back(std::move(comb));
      return false;
    }
    rows_.push_back({v.first(), std::move(v), std::move(comb)});
    return true;
  }

  // Reduces v against the stored rows. When comb is non-null it receives the
  // set of insertion ids whose sum was subtracted.
  void reduce_in_place(BitVec& v, BitVec* comb) const {
    for (const auto& r : rows_) {
      if (v.get(r.pivot)) {
        v ^= r.v;
        if (comb) xor_resized(*comb, r.comb);
      }
    }
  }

  bool contains(BitVec v) const {
    reduce_in_place(v, nullptr);
    return !v.any();
  }

  // Insertion ids summing to v, if v lies in the span.
  std::optional<BitVec> express(BitVec v) const {
    BitVec comb(inserted_);
    reduce_in_place(v, &comb);
    if (v.any()) return std::nullopt;
    return comb;
  }

  std::size_t rank() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }
  std::size_t inserted() const { return inserted_; }
  // One combination of insertion ids per dependent insertion (tracking only).
  const std::vector<BitVec>& dependencies() const { return dependencies_; }

 private:
  struct Row {
    std::size_t pivot;
    BitVec v;
    BitVec comb;
  };

  static void xor_resized(BitVec& a, const BitVec& b) {
    if (b.size() > a.size()) {
      BitVec t(b.size());
      for (auto i : a.ones()) t.set(i);
      a = std::move(t);
    }
    for (auto i : b.ones()) a.flip(i);
  }

  // Rows are reduced only against earlier rows, which is enough because
  // each pivot is the lowest bit of its row and later rows have that bit
  // cleared.
  std::size_t ncols_;
  bool track_;
  std::size_t inserted_ = 0;
  std::vector<Row> rows_;
  std::vector<BitVec> dependencies_;
};

// Kernel of the linear map sending basis vector i to images[i].
inline std::vector<BitVec> gf2_kernel(const std::vector<BitVec>& images, std::size_t ncols) {
  Gf2Echelon e(ncols, true);
  for (const auto& v : images) e.insert(v);
  std::vector<BitVec> out;
  for (const auto& d : e.dependencies()) {
    BitVec k(images.size());
    for (auto i : d.ones()) k.set(i);
    out.push_back(std::move(k));
  }
  return out;
}

inline std::size_t gf2_rank(const std::vector<BitVec>& rows, std::size_t ncols) {
  Gf2Echelon e(ncols, false);
  for (const auto& v : rows) e.insert(v);
  return e.rank();
}

}  // namespace pcinv
