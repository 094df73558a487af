#pragma once

// Bit-packed linear algebra over GF(2).
//
// BitVector is a fixed-length vector of bits packed into 64-bit words. Bit i is
// coordinate i; "leading" always means the lowest set index. Subspace keeps a
// basis in reduced row-echelon form under that convention: rows sorted by
// pivot, and every pivot column is zero in every other row. The reduced form
// of a subspace is unique, so two subspaces are equal iff their row lists are.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fuchslab/error.hpp"

namespace fuchslab::gf2 {

class BitVector {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  static BitVector unit(std::size_t size, std::size_t index) {
    BitVector v(size);
    v.set(index);
    return v;
  }

  /// Low `size` bits of `bits`; size must be <= 64.
  static BitVector from_word(std::size_t size, std::uint64_t bits) {
    BitVector v(size);
    if (size > 0) {
      v.words_[0] = size == 64 ? bits : bits & ((std::uint64_t{1} << size) - 1);
    }
    return v;
  }

  std::size_t size() const noexcept { return size_; }

  bool test(std::size_t i) const noexcept { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i, bool value = true) noexcept {
    const std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (value) {
      words_[i / 64] |= mask;
    } else {
      words_[i / 64] &= ~mask;
    }
  }
  void flip(std::size_t i) noexcept { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  BitVector& operator^=(const BitVector& other) {
    if (other.size_ != size_) throw DomainError("BitVector size mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
  }
  friend BitVector operator^(BitVector lhs, const BitVector& rhs) { return lhs ^= rhs; }

  bool any() const noexcept {
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
  }
  bool none() const noexcept { return !any(); }

  std::size_t popcount() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  std::size_t first_set() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    }
    return npos;
  }

  template <typename F>
  void for_each_set(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word != 0) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
        word &= word - 1;
      }
    }
  }

  /// Packed low word; only meaningful when size() <= 64.
  std::uint64_t word() const noexcept { return words_.empty() ? 0 : words_[0]; }
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  /// "0110..." with coordinate 0 first.
  std::string to_string() const {
    std::string s(size_, '0');
    for_each_set([&](std::size_t i) { s[i] = '1'; });
    return s;
  }

  friend bool operator==(const BitVector&, const BitVector&) = default;
  friend auto operator<=>(const BitVector& a, const BitVector& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return a.words_ <=> b.words_;
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// A subspace of GF(2)^n held as its reduced row-echelon basis.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

  static Subspace span(std::size_t ambient_dim, std::span<const BitVector> vectors) {
    Subspace s(ambient_dim);
    for (const auto& v : vectors) s.insert(v);
    return s;
  }

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  const std::vector<BitVector>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  BitVector reduce(BitVector v) const {
    check_size(v);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (v.test(pivots_[r])) v ^= rows_[r];
    }
    return v;
  }

  bool contains(const BitVector& v) const { return reduce(v).none(); }

  /// Adds v to the span. Returns false when v was already in it.
  bool insert(const BitVector& v) {
    BitVector residue = reduce(v);
    const std::size_t pivot = residue.first_set();
    if (pivot == BitVector::npos) return false;
    for (auto& row : rows_) {
      if (row.test(pivot)) row ^= residue;
    }
    const auto at = std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
    rows_.insert(rows_.begin() + at, std::move(residue));
    pivots_.insert(pivots_.begin() + at, pivot);
    return true;
  }

  /// Coordinates of a member of the subspace with respect to rows().
  BitVector coordinates(const BitVector& member) const {
    BitVector coords(rows_.size());
    BitVector rest = member;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (rest.test(pivots_[r])) {
        coords.set(r);
        rest ^= rows_[r];
      }
    }
    if (rest.any()) throw DomainError("vector is not in the subspace");
    return coords;
  }

  /// Indices of columns that carry no pivot, ascending.
  std::vector<std::size_t> free_columns() const {
    std::vector<std::size_t> free;
    std::size_t p = 0;
    for (std::size_t c = 0; c < ambient_dim_; ++c) {
      if (p < pivots_.size() && pivots_[p] == c) {
        ++p;
      } else {
        free.push_back(c);
      }
    }
    return free;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.rows_ == b.rows_;
  }

 private:
  void check_size(const BitVector& v) const {
    if (v.size() != ambient_dim_) throw DomainError("vector length does not match subspace ambient");
  }

  std::size_t ambient_dim_ = 0;
  std::vector<BitVector> rows_;
  std::vector<std::size_t> pivots_;
};

inline std::size_t rank(std::span<const BitVector> vectors) {
  if (vectors.empty()) return 0;
  return Subspace::span(vectors.front().size(), vectors).dim();
}

/// Kernel of the linear map sending source basis vector i to images[i].
inline Subspace kernel(std::size_t target_dim, std::span<const BitVector> images) {
  const std::size_t n = images.size();
  // Eliminate on the image half while recording the combination in the tag half.
  struct Row {
    BitVector image;
    BitVector tag;
  };
  std::vector<Row> pivot_rows;
  std::vector<std::size_t> pivot_cols;
  Subspace result(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (images[i].size() != target_dim) throw DomainError("image length does not match target dimension");
    Row row{images[i], BitVector::unit(n, i)};
    for (std::size_t r = 0; r < pivot_rows.size(); ++r) {
      if (row.image.test(pivot_cols[r])) {
        row.image ^= pivot_rows[r].image;
        row.tag ^= pivot_rows[r].tag;
      }
    }
    const std::size_t pivot = row.image.first_set();
    if (pivot == BitVector::npos) {
      result.insert(row.tag);
    } else {
      pivot_rows.push_back(std::move(row));
      pivot_cols.push_back(pivot);
    }
  }
  return result;
}

/// Square matrix with at most 64 columns, one packed word per row.
inline bool is_invertible(std::span<const std::uint64_t> rows, std::size_t dim) {
  std::uint64_t scratch[64];
  std::copy(rows.begin(), rows.end(), scratch);
  for (std::size_t col = 0; col < dim; ++col) {
    const std::uint64_t bit = std::uint64_t{1} << col;
    std::size_t pivot = col;
    while (pivot < dim && (scratch[pivot] & bit) == 0) ++pivot;
    if (pivot == dim) return false;
    std::swap(scratch[pivot], scratch[col]);
    for (std::size_t r = col + 1; r < dim; ++r) {
      if (scratch[r] & bit) scratch[r] ^= scratch[col];
    }
  }
  return true;
}

}  // namespace fuchslab::gf2
