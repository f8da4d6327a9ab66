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

#include "wpcoop/galois.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace wpcoop {
namespace {

int poly_degree(std::uint32_t p) { return p == 0 ? -1 : 31 - std::countl_zero(p); }

std::uint32_t poly_mod(std::uint32_t a, std::uint32_t m) {
  const int dm = poly_degree(m);
  for (int da = poly_degree(a); da >= dm; da = poly_degree(a)) {
    a ^= m << (da - dm);
  }
  return a;
}

// Trial division by every polynomial of degree 1..deg/2.
bool is_irreducible(std::uint32_t p) {
  const int d = poly_degree(p);
  for (std::uint32_t f = 2; poly_degree(f) <= d / 2; ++f) {
    if (poly_mod(p, f) == 0) return false;
  }
  return true;
}

GfElement pow_slow(GfElement base, std::uint32_t e, const FieldSpec& spec) {
  GfElement result = 1;
  while (e) {
    if (e & 1u) result = GaloisField::mul_slow(result, base, spec);
    base = GaloisField::mul_slow(base, base, spec);
    e >>= 1;
  }
  return result;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

FieldSpec FieldSpec::with_degree(unsigned degree) {
  static constexpr std::uint32_t table[] = {
      0,       0,      0x7,    0xB,    0x13,   0x25,   0x43,    0x89,    0x11B,
      0x211,   0x409,  0x805,  0x1053, 0x201B, 0x4443, 0x8003,  0x1100B};
  if (degree < 2 || degree > 16) {
    throw std::invalid_argument("field degree must be in [2, 16], got " + std::to_string(degree));
  }
  return {degree, table[degree]};
}

GfElement GaloisField::mul_slow(GfElement a, GfElement b, const FieldSpec& spec) {
  const std::uint32_t top = 1u << spec.degree;
  std::uint32_t x = a;
  std::uint32_t product = 0;
  for (std::uint32_t y = b; y; y >>= 1) {
    if (y & 1u) product ^= x;
    x <<= 1;
    if (x & top) x ^= spec.polynomial;
  }
  return static_cast<GfElement>(product);
}

GaloisField::GaloisField(FieldSpec spec) : spec_(spec), order_(0) {
  if (spec.degree < 2 || spec.degree > 16) {
    throw std::invalid_argument("field degree must be in [2, 16]");
  }
  if (poly_degree(spec.polynomial) != static_cast<int>(spec.degree)) {
    throw std::invalid_argument("reduction polynomial degree does not match field degree");
  }
  if (!is_irreducible(spec.polynomial)) {
    throw std::invalid_argument("reduction polynomial is not irreducible over GF(2)");
  }
  order_ = 1u << spec.degree;
  const std::uint32_t n = order_ - 1;

  // Smallest element of multiplicative order q - 1.
  const auto factors = prime_factors(n);
  GfElement generator = 0;
  for (std::uint32_t g = 2; g < order_ && generator == 0; ++g) {
    const bool primitive = std::all_of(factors.begin(), factors.end(), [&](std::uint32_t p) {
      return pow_slow(static_cast<GfElement>(g), n / p, spec) != 1;
    });
    if (primitive) generator = static_cast<GfElement>(g);
  }
  if (n == 1) generator = 1;

  log_.assign(order_, 0);
  exp_.assign(2 * n, 0);
  GfElement x = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    exp_[i] = x;
    exp_[i + n] = x;
    log_[x] = i;
    x = mul_slow(x, generator, spec);
  }
}

GfElement GaloisField::inv(GfElement a) const {
  if (a == 0) throw std::domain_error("GF inverse of zero");
  const std::uint32_t n = order_ - 1;
  return exp_[(n - log_[a]) % n];
}

GfMatrix::GfMatrix(std::size_t rows, std::size_t cols, std::vector<GfElement> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) throw std::invalid_argument("GfMatrix: data size mismatch");
}

void GfMatrix::append_row(std::span<const GfElement> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw std::invalid_argument("GfMatrix: row length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

GfMatrix GfMatrix::select_columns(std::span<const std::size_t> cols) const {
  GfMatrix out(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = (*this)(r, cols[c]);
  }
  return out;
}

GfMatrix mds_generator(std::size_t k, std::size_t n, const GaloisField& field) {
  if (k == 0 || k > n) throw std::invalid_argument("mds_generator: need 1 <= k <= n");
  if (n > field.order()) throw std::invalid_argument("mds_generator: n exceeds field order");
  GfMatrix g(k, n);
  for (std::size_t i = 0; i < k; ++i) g(i, i) = 1;
  // Cauchy block 1/(x_i + y_j) with x_i = i and y_j = k + j, all distinct.
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < n - k; ++j) {
      const auto x = static_cast<GfElement>(i);
      const auto y = static_cast<GfElement>(k + j);
      g(i, k + j) = field.inv(GaloisField::add(x, y));
    }
  }
  return g;
}

namespace {

// Reduced row-echelon form in place. Returns the rank.
std::size_t rref(std::span<GfElement> buf, std::size_t rows, std::size_t cols,
                 const GaloisField& field) {
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t sel = pivot_row;
    while (sel < rows && buf[sel * cols + c] == 0) ++sel;
    if (sel == rows) continue;
    if (sel != pivot_row) {
      std::swap_ranges(buf.begin() + sel * cols, buf.begin() + (sel + 1) * cols,
                       buf.begin() + pivot_row * cols);
    }
    GfElement* prow = buf.data() + pivot_row * cols;
    const GfElement scale = field.inv(prow[c]);
    for (std::size_t j = c; j < cols; ++j) prow[j] = field.mul(prow[j], scale);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row) continue;
      GfElement* row = buf.data() + r * cols;
      const GfElement f = row[c];
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j) row[j] ^= field.mul(f, prow[j]);
    }
    ++pivot_row;
  }
  return pivot_row;
}

}  // namespace

std::size_t rank(const GfMatrix& m, const GaloisField& field) {
  std::vector<GfElement> buf;
  buf.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto row = m.row(r);
    buf.insert(buf.end(), row.begin(), row.end());
  }
  return rref(buf, m.rows(), m.cols(), field);
}

namespace detail {

std::uint64_t recoverable_mask(std::span<GfElement> buffer, std::size_t rows, std::size_t unknowns,
                               const GaloisField& field) {
  if (unknowns > 64) throw std::invalid_argument("recoverable_mask: at most 64 unknowns");
  const std::size_t r = rref(buffer, rows, unknowns, field);
  // In RREF, e_j is in the row space iff some row equals e_j exactly.
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < r; ++i) {
    const GfElement* row = buffer.data() + i * unknowns;
    std::size_t nonzero = 0;
    std::size_t where = 0;
    for (std::size_t j = 0; j < unknowns && nonzero < 2; ++j) {
      if (row[j] != 0) {
        ++nonzero;
        where = j;
      }
    }
    if (nonzero == 1) mask |= std::uint64_t{1} << where;
  }
  return mask;
}

}  // namespace detail

std::vector<std::size_t> recoverable_unknowns(const GfMatrix& coeffs, const GaloisField& field) {
  const std::size_t u = coeffs.cols();
  std::vector<std::size_t> out;
  if (coeffs.rows() == 0 || u == 0) return out;
  for (std::size_t r = 0; r < coeffs.rows(); ++r) {
    for (GfElement v : coeffs.row(r)) {
      if (v >= field.order()) throw std::invalid_argument("coefficient outside the field");
    }
  }
  std::vector<GfElement> buf;
  buf.reserve(coeffs.rows() * u);
  for (std::size_t r = 0; r < coeffs.rows(); ++r) {
    const auto row = coeffs.row(r);
    buf.insert(buf.end(), row.begin(), row.end());
  }
  const std::size_t r = rref(buf, coeffs.rows(), u, field);
  for (std::size_t i = 0; i < r; ++i) {
    const GfElement* row = buf.data() + i * u;
    const auto nz = std::count_if(row, row + u, [](GfElement v) { return v != 0; });
    if (nz == 1) {
      out.push_back(static_cast<std::size_t>(std::find_if(row, row + u, [](GfElement v) { return v != 0; }) - row));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace wpcoop
