#include "wpcoop/galois.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

using wpcoop::FieldSpec;
using wpcoop::GaloisField;
using wpcoop::GfElement;
using wpcoop::GfMatrix;

namespace {

// Determinant by permutation expansion using only shift-and-reduce products.
GfElement leibniz_det(const GfMatrix& m, const FieldSpec& spec) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  GfElement det = 0;
  do {
    GfElement term = 1;
    for (std::size_t i = 0; i < n; ++i) term = GaloisField::mul_slow(term, m(i, perm[i]), spec);
    det ^= term;  // characteristic 2: signs vanish
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

bool all_square_submatrices_invertible(const GfMatrix& g, const FieldSpec& spec, int* count) {
  const std::size_t k = g.rows();
  const std::size_t n = g.cols();
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + k, true);
  *count = 0;
  do {
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < n; ++c) {
      if (pick[c]) cols.push_back(c);
    }
    ++*count;
    if (leibniz_det(g.select_columns(cols), spec) == 0) return false;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return true;
}

// Unknown j is pinned iff every x with A x = 0 has x_j = 0.
std::vector<std::size_t> brute_force_recoverable(const GfMatrix& a, const FieldSpec& spec) {
  const std::size_t u = a.cols();
  const std::uint32_t q = 1u << spec.degree;
  std::vector<bool> pinned(u, true);
  std::vector<GfElement> x(u, 0);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < u; ++i) total *= q;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t t = idx;
    for (std::size_t i = 0; i < u; ++i) {
      x[i] = static_cast<GfElement>(t % q);
      t /= q;
    }
    bool in_null = true;
    for (std::size_t r = 0; r < a.rows() && in_null; ++r) {
      GfElement acc = 0;
      for (std::size_t c = 0; c < u; ++c) acc ^= GaloisField::mul_slow(a(r, c), x[c], spec);
      in_null = acc == 0;
    }
    if (!in_null) continue;
    for (std::size_t i = 0; i < u; ++i) {
      if (x[i] != 0) pinned[i] = false;
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < u; ++i) {
    if (pinned[i]) out.push_back(i);
  }
  return out;
}

}  // namespace

TEST_CASE("gf_mul: identities and a known AES pair") {
  const GaloisField f;
  for (unsigned a = 0; a < 256; ++a) {
    CHECK(f.mul(static_cast<GfElement>(a), 0) == 0);
    CHECK(f.mul(static_cast<GfElement>(a), 1) == a);
  }

  // Independent log/antilog tables from repeated shift-and-reduce by 0x03.
  std::vector<int> log(256, -1);
  std::vector<unsigned> exp(255);
  unsigned x = 1;
  for (int i = 0; i < 255; ++i) {
    exp[i] = x;
    log[x] = i;
    unsigned doubled = (x << 1) ^ ((x & 0x80) ? 0x11B : 0);
    x = (doubled ^ x) & 0xFF;
  }
  const unsigned expected = exp[(log[0x53] + log[0xCA]) % 255];
  CHECK(expected == 0x01);
  CHECK(f.mul(0x53, 0xCA) == 0x01);

  for (unsigned a = 1; a < 256; ++a) {
    for (unsigned b = 1; b < 256; ++b) {
      REQUIRE(f.mul(static_cast<GfElement>(a), static_cast<GfElement>(b)) ==
              exp[(log[a] + log[b]) % 255]);
    }
  }
}

TEST_CASE("gf_inv: matches exhaustive search in GF(16)") {
  const GaloisField f(FieldSpec::with_degree(4));
  CHECK(f.inv(1) == 1);
  for (unsigned a = 1; a < 16; ++a) {
    unsigned found = 0;
    for (unsigned b = 1; b < 16; ++b) {
      if (GaloisField::mul_slow(static_cast<GfElement>(a), static_cast<GfElement>(b), f.spec()) == 1) {
        found = b;
      }
    }
    CHECK(f.inv(static_cast<GfElement>(a)) == found);
  }
  CHECK_THROWS_AS(f.inv(0), std::domain_error);
}

TEST_CASE("field axioms hold exhaustively in GF(16)") {
  const GaloisField f(FieldSpec::with_degree(4));
  for (GfElement a = 0; a < 16; ++a) {
    if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
    for (GfElement b = 0; b < 16; ++b) {
      CHECK(f.mul(a, b) == f.mul(b, a));
      for (GfElement c = 0; c < 16; ++c) {
        REQUIRE(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
        REQUIRE(f.mul(a, GaloisField::add(b, c)) == GaloisField::add(f.mul(a, b), f.mul(a, c)));
      }
    }
    if (a != 0) {
      int count = 0;
      for (GfElement b = 0; b < 16; ++b) count += f.mul(a, b) == 1;
      CHECK(count == 1);
    }
  }
}

TEST_CASE("every default polynomial defines a field") {
  for (unsigned m = 2; m <= 16; ++m) {
    const GaloisField f(FieldSpec::with_degree(m));
    CHECK(f.order() == (1u << m));
    for (GfElement a : {GfElement{1}, GfElement{2}, static_cast<GfElement>(f.order() - 1)}) {
      CHECK(f.mul(a, f.inv(a)) == 1);
    }
  }
  CHECK_THROWS_AS(FieldSpec::with_degree(1), std::invalid_argument);
  CHECK_THROWS_AS(FieldSpec::with_degree(17), std::invalid_argument);
  // x^8 + 1 = (x + 1)^8
  CHECK_THROWS_AS(GaloisField(FieldSpec{8, 0x101}), std::invalid_argument);
  CHECK_THROWS_AS(GaloisField(FieldSpec{8, 0x1B}), std::invalid_argument);
}

TEST_CASE("mds_generator: systematic and MDS") {
  const GaloisField gf256;
  const GfMatrix one = wpcoop::mds_generator(1, 1, gf256);
  CHECK(one == GfMatrix(1, 1, {1}));

  const GaloisField gf4(FieldSpec::with_degree(2));
  int count = 0;
  CHECK(all_square_submatrices_invertible(wpcoop::mds_generator(2, 4, gf4), gf4.spec(), &count));
  CHECK(count == 6);

  struct Case {
    std::size_t k, n;
    int submatrices;
  };
  for (Case c : {Case{2, 4, 6}, Case{2, 6, 15}, Case{4, 8, 70}}) {
    const GfMatrix g = wpcoop::mds_generator(c.k, c.n, gf256);
    for (std::size_t i = 0; i < c.k; ++i) {
      for (std::size_t j = 0; j < c.k; ++j) CHECK(g(i, j) == (i == j ? 1 : 0));
    }
    CHECK(all_square_submatrices_invertible(g, gf256.spec(), &count));
    CHECK(count == c.submatrices);
  }

  CHECK_THROWS_AS(wpcoop::mds_generator(2, 5, gf4), std::invalid_argument);
  CHECK_THROWS_AS(wpcoop::mds_generator(3, 2, gf256), std::invalid_argument);
}

TEST_CASE("recoverable_unknowns: small systems") {
  const GaloisField gf4(FieldSpec::with_degree(2));
  using V = std::vector<std::size_t>;
  CHECK(wpcoop::recoverable_unknowns(GfMatrix(2, 2, {1, 0, 0, 1}), gf4) == V{0, 1});
  CHECK(wpcoop::recoverable_unknowns(GfMatrix(2, 2, {1, 1, 1, 2}), gf4) == V{0, 1});
  CHECK(wpcoop::recoverable_unknowns(GfMatrix(1, 2, {1, 1}), gf4).empty());
  CHECK(wpcoop::recoverable_unknowns(GfMatrix(0, 2), gf4).empty());
  // Two copies of the same combination pin nothing; a zero row adds nothing.
  CHECK(wpcoop::recoverable_unknowns(GfMatrix(3, 2, {1, 2, 1, 2, 0, 0}), gf4).empty());
  CHECK(wpcoop::recoverable_unknowns(GfMatrix(2, 3, {1, 0, 0, 0, 1, 1}), gf4) == V{0});
}

TEST_CASE("recoverable_unknowns agrees with brute force and is monotone") {
  std::mt19937_64 gen(11);
  for (unsigned m : {2u, 3u, 4u}) {
    const GaloisField f(FieldSpec::with_degree(m));
    std::uniform_int_distribution<unsigned> elem(0, f.order() - 1);
    std::uniform_int_distribution<unsigned> sparse(0, 3);
    for (std::size_t u = 1; u <= 2; ++u) {
      for (int trial = 0; trial < 300; ++trial) {
        GfMatrix a(0, u);
        std::vector<std::size_t> previous;
        const int rows = static_cast<int>(gen() % 5);
        for (int r = 0; r <= rows; ++r) {
          std::vector<GfElement> row(u);
          for (auto& v : row) v = sparse(gen) == 0 ? 0 : static_cast<GfElement>(elem(gen));
          a.append_row(row);
          const auto got = wpcoop::recoverable_unknowns(a, f);
          REQUIRE(got == brute_force_recoverable(a, f.spec()));
          CHECK(std::includes(got.begin(), got.end(), previous.begin(), previous.end()));
          previous = got;
        }
      }
    }
  }
}

TEST_CASE("rank of a generator is k") {
  const GaloisField f;
  CHECK(wpcoop::rank(wpcoop::mds_generator(4, 8, f), f) == 4);
  CHECK(wpcoop::rank(GfMatrix(2, 2, {3, 6, 1, 2}), f) == 1);
}
