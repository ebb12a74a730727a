// Copyright 2026 The gadgetopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gadgetopt {

class Rng;

class NotInvertible : public std::domain_error {
 public:
  NotInvertible() : std::domain_error("matrix is not invertible over GF(2)") {}
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {
inline constexpr std::size_t kWordBits = 64;
constexpr std::size_t words_for(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}
}  // namespace detail

/**
 * A vector over GF(2), bit-packed into 64-bit words.
 *
 * Index i is qubit i. Unused high bits of the last word are always zero,
 * which lets equality and popcount work word-wise.
 */
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t size);

  /** Parses a string of '0'/'1' characters; character k is bit k. */
  static BitVec from_string(std::string_view bits);
  static BitVec unit(std::size_t size, std::size_t index);

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const {
    return (words_[i / detail::kWordBits] >> (i % detail::kWordBits)) & 1U;
  }
  void set(std::size_t i, bool value);
  void flip(std::size_t i) {
    words_[i / detail::kWordBits] ^= std::uint64_t{1} << (i % detail::kWordBits);
  }

  std::size_t popcount() const;
  bool any() const;
  /** Parity of the number of positions set in both vectors. */
  bool dot(const BitVec& other) const;
  std::vector<std::size_t> ones() const;

  BitVec& operator^=(const BitVec& other);
  BitVec& operator&=(const BitVec& other);
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
  friend bool operator==(const BitVec&, const BitVec&) = default;

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  std::string to_string() const;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/**
 * Dense matrix over GF(2). Each row is a packed run of words; row operations
 * are word-wise XORs.
 */
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);
  BitMatrix(std::initializer_list<std::initializer_list<int>> entries);

  static BitMatrix identity(std::size_t n);
  static BitMatrix from_rows(const std::vector<std::vector<int>>& entries);
  /** Matrix whose j-th column is columns[j]; all columns must share a size. */
  static BitMatrix from_columns(std::size_t rows, const std::vector<BitVec>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * stride_ + c / detail::kWordBits] >> (c % detail::kWordBits)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool value);
  void flip(std::size_t r, std::size_t c) {
    data_[r * stride_ + c / detail::kWordBits] ^= std::uint64_t{1}
                                                  << (c % detail::kWordBits);
  }

  std::span<const std::uint64_t> row_words(std::size_t r) const {
    return {data_.data() + r * stride_, stride_};
  }
  std::span<std::uint64_t> row_words(std::size_t r) {
    return {data_.data() + r * stride_, stride_};
  }
  /** row(dst) ^= row(src) */
  void add_row(std::size_t dst, std::size_t src);
  /** col(dst) ^= col(src) */
  void add_col(std::size_t dst, std::size_t src);
  void swap_rows(std::size_t a, std::size_t b);

  BitVec row(std::size_t r) const;
  BitVec column(std::size_t c) const;
  BitMatrix transpose() const;

  std::vector<std::vector<int>> to_rows() const;
  std::string to_string() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> data_;
};

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b);
BitVec mat_vec(const BitMatrix& a, const BitVec& v);
std::size_t rank(const BitMatrix& a);
bool is_invertible(const BitMatrix& a);
/** Gauss-Jordan inverse. Throws NotInvertible when rank < n. */
BitMatrix invert(const BitMatrix& a);
/** (a^T)^-1 */
BitMatrix inverse_transpose(const BitMatrix& a);
BitMatrix mat_pow(const BitMatrix& a, std::size_t k);
std::size_t popcount(const BitMatrix& a);
bool is_upper_triangular(const BitMatrix& a);

/** Uniform n x n matrix, rejection-sampled until invertible. */
BitMatrix random_invertible(std::size_t n, Rng& rng);

}  // namespace gadgetopt
