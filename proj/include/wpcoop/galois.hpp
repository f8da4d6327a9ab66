// Copyright 2026 The wpcoop Authors
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

#ifndef WPCOOP_GALOIS_HPP
#define WPCOOP_GALOIS_HPP

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace wpcoop {

using GfElement = std::uint16_t;

/// Degree and reduction polynomial of GF(2^m). Bit i of `polynomial` is the
/// coefficient of x^i, so x^8+x^4+x^3+x+1 is 0x11B.
struct FieldSpec {
  unsigned degree = 8;
  std::uint32_t polynomial = 0x11B;

  /// A known irreducible polynomial for each degree in [2, 16].
  static FieldSpec with_degree(unsigned degree);
};

/// GF(2^m) with log/antilog tables. Immutable after construction; safe to share
/// across threads.
class GaloisField {
 public:
  explicit GaloisField(FieldSpec spec = {});

  const FieldSpec& spec() const { return spec_; }
  unsigned degree() const { return spec_.degree; }
  std::uint32_t order() const { return order_; }

  static GfElement add(GfElement a, GfElement b) { return a ^ b; }

  GfElement mul(GfElement a, GfElement b) const {
    assert(a < order_ && b < order_);
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }

  /// Multiplicative inverse; throws std::domain_error on zero.
  GfElement inv(GfElement a) const;

  GfElement div(GfElement a, GfElement b) const { return mul(a, inv(b)); }

  /// Shift-and-reduce product, independent of the tables.
  static GfElement mul_slow(GfElement a, GfElement b, const FieldSpec& spec);

 private:
  FieldSpec spec_;
  std::uint32_t order_;
  std::vector<std::uint32_t> log_;
  std::vector<GfElement> exp_;  // two periods, so log sums need no reduction
};

/// Dense row-major matrix over GF(2^m).
class GfMatrix {
 public:
  GfMatrix() = default;
  GfMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  GfMatrix(std::size_t rows, std::size_t cols, std::vector<GfElement> data);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  GfElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  GfElement operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const GfElement> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  void append_row(std::span<const GfElement> values);

  /// Columns `cols` of this matrix, in the given order.
  GfMatrix select_columns(std::span<const std::size_t> cols) const;

  bool operator==(const GfMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GfElement> data_;
};

/// Systematic k x n generator [I_k | C] where C is a Cauchy matrix, so every
/// k x k column submatrix is invertible. Requires 1 <= k <= n <= q.
GfMatrix mds_generator(std::size_t k, std::size_t n, const GaloisField& field);

/// Rank of `m` by Gaussian elimination.
std::size_t rank(const GfMatrix& m, const GaloisField& field);

/// Indices j (ascending) such that the unit vector e_j lies in the row space of
/// `coeffs`, i.e. the unknowns a receiver can solve for from these equations.
std::vector<std::size_t> recoverable_unknowns(const GfMatrix& coeffs, const GaloisField& field);

namespace detail {

/// In-place variant on a row-major scratch buffer of `rows` x `unknowns`
/// (unknowns <= 64). Returns the recoverable set as a bitmask. The buffer is
/// left in reduced row-echelon form.
std::uint64_t recoverable_mask(std::span<GfElement> buffer, std::size_t rows, std::size_t unknowns,
                               const GaloisField& field);

}  // namespace detail

}  // namespace wpcoop

#endif  // WPCOOP_GALOIS_HPP
