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

#include "gadgetopt/bit_matrix.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "gadgetopt/random.hpp"

namespace gadgetopt {

using detail::kWordBits;
using detail::words_for;

// ---------------------------------------------------------------- BitVec

BitVec::BitVec(std::size_t size) : size_(size), words_(words_for(size), 0) {}

BitVec BitVec::from_string(std::string_view bits) {
  BitVec v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i, true);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("bit string may only contain '0' and '1'");
    }
  }
  return v;
}

BitVec BitVec::unit(std::size_t size, std::size_t index) {
  BitVec v(size);
  v.set(index, true);
  return v;
}

void BitVec::set(std::size_t i, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= mask;
  } else {
    words_[i / kWordBits] &= ~mask;
  }
}

std::size_t BitVec::popcount() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool BitVec::any() const {
  return std::any_of(words_.begin(), words_.end(), [](auto w) { return w != 0; });
}

bool BitVec::dot(const BitVec& other) const {
  if (other.size_ != size_) throw DimensionMismatch("BitVec::dot size mismatch");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
  return (std::popcount(acc) & 1) != 0;
}

std::vector<std::size_t> BitVec::ones() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) out.push_back(i);
  }
  return out;
}

BitVec& BitVec::operator^=(const BitVec& other) {
  if (other.size_ != size_) throw DimensionMismatch("BitVec xor size mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

BitVec& BitVec::operator&=(const BitVec& other) {
  if (other.size_ != size_) throw DimensionMismatch("BitVec and size mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

std::string BitVec::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

// ------------------------------------------------------------- BitMatrix

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * stride_, 0) {}

BitMatrix::BitMatrix(std::initializer_list<std::initializer_list<int>> entries) {
  std::vector<std::vector<int>> rows;
  for (const auto& r : entries) rows.emplace_back(r);
  *this = from_rows(rows);
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::vector<int>>& entries) {
  const std::size_t cols = entries.empty() ? 0 : entries.front().size();
  BitMatrix m(entries.size(), cols);
  for (std::size_t r = 0; r < entries.size(); ++r) {
    if (entries[r].size() != cols) throw DimensionMismatch("ragged rows in BitMatrix");
    for (std::size_t c = 0; c < cols; ++c) {
      if (entries[r][c] != 0 && entries[r][c] != 1) {
        throw std::invalid_argument("BitMatrix entries must be 0 or 1");
      }
      m.set(r, c, entries[r][c] == 1);
    }
  }
  return m;
}

BitMatrix BitMatrix::from_columns(std::size_t rows, const std::vector<BitVec>& columns) {
  BitMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DimensionMismatch("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) {
      if (columns[c].get(r)) m.set(r, c, true);
    }
  }
  return m;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value) {
  auto& w = data_[r * stride_ + c / kWordBits];
  const std::uint64_t mask = std::uint64_t{1} << (c % kWordBits);
  w = value ? (w | mask) : (w & ~mask);
}

void BitMatrix::add_row(std::size_t dst, std::size_t src) {
  std::uint64_t* d = data_.data() + dst * stride_;
  const std::uint64_t* s = data_.data() + src * stride_;
  for (std::size_t i = 0; i < stride_; ++i) d[i] ^= s[i];
}

void BitMatrix::add_col(std::size_t dst, std::size_t src) {
  for (std::size_t r = 0; r < rows_; ++r) {
    if (get(r, src)) flip(r, dst);
  }
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + a * stride_, data_.begin() + (a + 1) * stride_,
                   data_.begin() + b * stride_);
}

BitVec BitMatrix::row(std::size_t r) const {
  BitVec v(cols_);
  std::copy_n(data_.begin() + r * stride_, stride_, v.words().begin());
  return v;
}

BitVec BitMatrix::column(std::size_t c) const {
  BitVec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (get(r, c)) v.set(r, true);
  }
  return v;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (get(r, c)) t.set(c, r, true);
    }
  }
  return t;
}

std::vector<std::vector<int>> BitMatrix::to_rows() const {
  std::vector<std::vector<int>> out(rows_, std::vector<int>(cols_, 0));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = get(r, c) ? 1 : 0;
  }
  return out;
}

std::string BitMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) os << (get(r, c) ? '1' : '0');
    os << '\n';
  }
  return os.str();
}

// ------------------------------------------------------------ operations

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("mat_mul: a.cols != b.rows");
  BitMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto dst = out.row_words(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (!a.get(i, k)) continue;
      auto src = b.row_words(k);
      for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
    }
  }
  return out;
}

BitVec mat_vec(const BitMatrix& a, const BitVec& v) {
  if (a.cols() != v.size()) throw DimensionMismatch("mat_vec: a.cols != v.size");
  BitVec out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::uint64_t acc = 0;
    auto row = a.row_words(i);
    auto words = v.words();
    for (std::size_t w = 0; w < row.size(); ++w) acc ^= row[w] & words[w];
    if (std::popcount(acc) & 1) out.set(i, true);
  }
  return out;
}

std::size_t rank(const BitMatrix& a) {
  BitMatrix m = a;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && !m.get(pivot, c)) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(r, pivot);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m.get(i, c)) m.add_row(i, r);
    }
    ++r;
  }
  return r;
}

bool is_invertible(const BitMatrix& a) { return a.is_square() && rank(a) == a.rows(); }

BitMatrix invert(const BitMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("invert: matrix is not square");
  const std::size_t n = a.rows();
  BitMatrix m = a;
  BitMatrix inv = BitMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && !m.get(pivot, c)) ++pivot;
    if (pivot == n) throw NotInvertible();
    m.swap_rows(c, pivot);
    inv.swap_rows(c, pivot);
    for (std::size_t i = 0; i < n; ++i) {
      if (i != c && m.get(i, c)) {
        m.add_row(i, c);
        inv.add_row(i, c);
      }
    }
  }
  return inv;
}

BitMatrix inverse_transpose(const BitMatrix& a) { return invert(a).transpose(); }

BitMatrix mat_pow(const BitMatrix& a, std::size_t k) {
  if (!a.is_square()) throw DimensionMismatch("mat_pow: matrix is not square");
  BitMatrix result = BitMatrix::identity(a.rows());
  BitMatrix base = a;
  while (k > 0) {
    if (k & 1U) result = mat_mul(result, base);
    k >>= 1U;
    if (k > 0) base = mat_mul(base, base);
  }
  return result;
}

std::size_t popcount(const BitMatrix& a) {
  std::size_t n = 0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (auto w : a.row_words(r)) n += static_cast<std::size_t>(std::popcount(w));
  }
  return n;
}

bool is_upper_triangular(const BitMatrix& a) {
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < r && c < a.cols(); ++c) {
      if (a.get(r, c)) return false;
    }
  }
  return true;
}

BitMatrix random_invertible(std::size_t n, Rng& rng) {
  if (n == 0) throw std::invalid_argument("random_invertible: n must be positive");
  for (;;) {
    BitMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        if (rng.coin()) m.set(r, c, true);
      }
    }
    if (is_invertible(m)) return m;
  }
}

}  // namespace gadgetopt
