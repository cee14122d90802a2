// Copyright 2026 The toric-cartier Authors
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

#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "fixtures.hpp"
#include "toric/error.hpp"
#include "toric/linalg.hpp"

namespace toric {
namespace {

using testing::iv;

IntMatrix mat(std::size_t cols, std::vector<IntVector> rows) {
  return IntMatrix::from_rows(cols, rows);
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = d(rng);
  return m;
}

// Is `target` an integer combination of the rows of `a` with coefficients in
// [-bound, bound]? Exhaustive search.
bool brute_force_in_row_lattice(const IntMatrix& a, const IntVector& target, int bound) {
  std::vector<int> coeff(a.rows(), -bound);
  while (true) {
    IntVector v(a.cols(), Integer(0));
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c) v[c] += coeff[r] * a(r, c);
    if (v == target) return true;
    std::size_t i = 0;
    while (i < coeff.size() && coeff[i] == bound) coeff[i++] = -bound;
    if (i == coeff.size()) return false;
    ++coeff[i];
  }
}

// gcd of all r×r minors of an r×n matrix of rank r; 1 iff the row lattice is
// saturated.
Integer gcd_of_maximal_minors(const IntMatrix& b) {
  const std::size_t r = b.rows(), n = b.cols();
  Integer g = 0;
  std::vector<std::size_t> cols(r);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t k) {
    if (k == r) {
      IntMatrix minor(r, r);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) minor(i, j) = b(i, cols[j]);
      g = gcd(g, determinant(minor));
      return;
    }
    for (std::size_t c = start; c < n; ++c) {
      cols[k] = c;
      rec(c + 1, k + 1);
    }
  };
  rec(0, 0);
  return g;
}

bool is_hnf(const IntMatrix& h) {
  std::size_t last_pivot = 0;
  bool seen_zero_row = false;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    std::size_t c = 0;
    while (c < h.cols() && h(r, c) == 0) ++c;
    if (c == h.cols()) {
      seen_zero_row = true;
      continue;
    }
    if (seen_zero_row) return false;
    if (r > 0 && c <= last_pivot) return false;
    if (h(r, c) <= 0) return false;
    for (std::size_t above = 0; above < r; ++above)
      if (h(above, c) < 0 || h(above, c) >= h(r, c)) return false;
    last_pivot = c;
  }
  return true;
}

TEST(Hnf, SingleRowAlreadyReduced) {
  HermiteForm hf = hnf(mat(2, {iv({2, 4})}));
  EXPECT_EQ(hf.h, mat(2, {iv({2, 4})}));
  EXPECT_EQ(hf.rank, 1u);
}

TEST(Hnf, Identity) {
  EXPECT_EQ(hnf(IntMatrix::identity(2)).h, IntMatrix::identity(2));
}

TEST(Hnf, OverdeterminedFullLattice) {
  IntMatrix a = mat(2, {iv({2, 0}), iv({0, 3}), iv({1, 1})});
  // Both unit vectors lie in the row lattice.
  ASSERT_TRUE(brute_force_in_row_lattice(a, iv({1, 0}), 4));
  ASSERT_TRUE(brute_force_in_row_lattice(a, iv({0, 1}), 4));
  HermiteForm hf = hnf(a);
  EXPECT_EQ(hf.h, mat(2, {iv({1, 0}), iv({0, 1}), iv({0, 0})}));
  EXPECT_EQ(hf.u * a, hf.h);
  EXPECT_EQ(abs(determinant(hf.u)), 1);
}

TEST(Hnf, EmptyShapes) {
  EXPECT_EQ(hnf(IntMatrix(0, 3)).rank, 0u);
  HermiteForm tall = hnf(IntMatrix(3, 0));
  EXPECT_EQ(tall.u, IntMatrix::identity(3));
}

TEST(Hnf, RandomMatricesSatisfyContract) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> size(1, 4);
    IntMatrix a = random_matrix(rng, size(rng), size(rng), -6, 6);
    HermiteForm hf = hnf(a);
    ASSERT_EQ(hf.u * a, hf.h);
    ASSERT_EQ(abs(determinant(hf.u)), 1);
    ASSERT_TRUE(is_hnf(hf.h));
    ASSERT_EQ(hnf(hf.h).h, hf.h) << "idempotence";
    ASSERT_EQ(hf.rank, rank(FieldMatrix::from_integers(Field::rationals(), a)));
  }
}

TEST(Hnf, LargeEntriesDoNotOverflow) {
  Integer big("123456789012345678901234567890");
  IntMatrix a(2, 2);
  a(0, 0) = big;
  a(0, 1) = big + 1;
  a(1, 0) = big * big;
  a(1, 1) = 1;
  HermiteForm hf = hnf(a);
  EXPECT_EQ(hf.u * a, hf.h);
  EXPECT_EQ(abs(determinant(hf.u)), 1);
  EXPECT_EQ(abs(determinant(a)), hf.h(0, 0) * hf.h(1, 1));
}

TEST(Saturate, NonPrimitiveRow) {
  // Every integer vector in Q·(2,4) within the box is a multiple of (1,2).
  for (int x = -6; x <= 6; ++x)
    for (int y = -6; y <= 6; ++y)
      if (2 * x - y == 0) EXPECT_EQ(y, 2 * x);
  SaturatedLattice l = saturate(mat(2, {iv({2, 4})}));
  EXPECT_EQ(l.basis(), mat(2, {iv({1, 2})}));
}

TEST(Saturate, FullAndEmpty) {
  EXPECT_EQ(saturate(IntMatrix::identity(2)).basis(), IntMatrix::identity(2));
  SaturatedLattice zero = saturate(IntMatrix(0, 2));
  EXPECT_EQ(zero.rank(), 0u);
  EXPECT_EQ(zero.ambient_rank(), 2u);
  EXPECT_EQ(saturate(IntMatrix(0, 0)).rank(), 0u);
}

TEST(Saturate, RandomMatricesAreSaturatedAndIdempotent) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> size(1, 4);
    IntMatrix a = random_matrix(rng, size(rng), size(rng), -5, 5);
    SaturatedLattice l = saturate(a);
    const std::size_t r = rank(FieldMatrix::from_integers(Field::rationals(), a));
    ASSERT_EQ(l.rank(), r);
    if (r > 0) ASSERT_EQ(gcd_of_maximal_minors(l.basis()), 1);
    ASSERT_EQ(saturate(l.basis()), l);
    // Same rational span.
    ASSERT_EQ(Subspace::span(FieldMatrix::from_integers(Field::rationals(), l.basis())),
              Subspace::span(FieldMatrix::from_integers(Field::rationals(), a)));
    for (std::uint64_t p : {2u, 3u, 5u}) ASSERT_EQ(reduce_mod_p(l, p).dim(), l.rank());
  }
}

TEST(ReduceModP, SaturationIsLoadBearing) {
  SaturatedLattice l = saturate(mat(2, {iv({2, 4})}));
  Subspace s = reduce_mod_p(l, 2);
  EXPECT_EQ(s, Subspace::span(Field::prime(2), 2, {iv({1, 0})}));
  EXPECT_EQ(s.dim(), 1u);
  // The naive reduction of (2,4) vanishes.
  EXPECT_EQ(Subspace::span(Field::prime(2), 2, {iv({2, 4})}).dim(), 0u);
}

TEST(ReduceModP, FullZeroAndNonPrime) {
  EXPECT_EQ(reduce_mod_p(saturate(IntMatrix::identity(2)), 7), Subspace::full(Field::prime(7), 2));
  EXPECT_EQ(reduce_mod_p(saturate(IntMatrix(0, 3)), 3).dim(), 0u);
  try {
    reduce_mod_p(saturate(IntMatrix::identity(2)), 4);
    FAIL() << "expected NotPrime";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPrime);
  }
}

TEST(Field, PrimeArithmetic) {
  Field f = Field::prime(5);
  EXPECT_EQ(f.from_integer(-1), 4);
  EXPECT_EQ(f.mul(3, 4), 2);
  EXPECT_EQ(f.inv(2), 3);
  EXPECT_EQ(f.reduce(Rational(1, 2)), 3);
  EXPECT_THROW(Field::prime(1), Error);
  EXPECT_THROW(Field::prime(2147483659ull), Error);  // prime, but above 2^31
  Field big = Field::prime(2147483647ull);
  EXPECT_EQ(big.mul(big.from_integer(-1), big.from_integer(-1)), 1);
}

TEST(Kernel, RankOneSquare) {
  // x + y = 0 and 2x + 2y = 0 leave the line through (1,-1).
  FieldMatrix a = FieldMatrix::from_integers(Field::rationals(), mat(2, {iv({1, 1}), iv({2, 2})}));
  Subspace k = kernel(a);
  EXPECT_EQ(k, Subspace::span(Field::rationals(), 2, {iv({1, -1})}));
  EXPECT_EQ(rank(a), 1u);
}

TEST(Kernel, EmptyMatrix) {
  EXPECT_EQ(kernel(FieldMatrix(Field::rationals(), 0, 3)), Subspace::full(Field::rationals(), 3));
  EXPECT_EQ(kernel(FieldMatrix(Field::rationals(), 2, 0)).ambient_dim(), 0u);
}

TEST(Intersect, CoordinatePlanes) {
  Field q = Field::rationals();
  Subspace a = Subspace::span(q, 3, {iv({1, 0, 0}), iv({0, 1, 0})});
  Subspace b = Subspace::span(q, 3, {iv({0, 1, 0}), iv({0, 0, 1})});
  EXPECT_EQ(intersect(a, b), Subspace::span(q, 3, {iv({0, 1, 0})}));
  EXPECT_EQ(intersect(a, Subspace::full(q, 3)), a);
}

TEST(Intersect, MismatchedFieldsRejected) {
  Subspace a = Subspace::full(Field::rationals(), 2);
  Subspace b = Subspace::full(Field::prime(3), 2);
  try {
    intersect(a, b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
  }
  EXPECT_THROW(intersect(a, Subspace::full(Field::rationals(), 3)), Error);
}

TEST(Subspace, LatticeProperties) {
  std::mt19937 rng(3);
  for (std::uint32_t p : {0u, 2u, 3u}) {
    Field f = Field::of_characteristic(p);
    for (int trial = 0; trial < 100; ++trial) {
      auto random_space = [&] {
        std::uniform_int_distribution<int> k(0, 3);
        std::vector<IntVector> gens;
        for (int i = k(rng); i > 0; --i) gens.push_back(testing::random_vector(rng, 3, -2, 2));
        return Subspace::span(f, 3, gens);
      };
      Subspace a = random_space(), b = random_space(), c = random_space();
      Subspace ab = intersect(a, b);
      ASSERT_EQ(ab, intersect(b, a));
      ASSERT_EQ(intersect(ab, c), intersect(a, intersect(b, c)));
      ASSERT_EQ(intersect(a, a), a);
      ASSERT_EQ(ab.dim(), a.dim() + b.dim() - sum(a, b).dim());
      ASSERT_TRUE(ab.is_subspace_of(a));
      ASSERT_TRUE(ab.is_subspace_of(b));
    }
  }
}

TEST(Rank, RationalRankBoundsModularRank) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix a = random_matrix(rng, 3, 3, -4, 4);
    const std::size_t rq = rank(FieldMatrix::from_integers(Field::rationals(), a));
    for (std::uint64_t p : {2u, 3u, 5u}) {
      const std::size_t rp = rank(FieldMatrix::from_integers(Field::prime(p), a));
      ASSERT_GE(rq, rp);
      // A saturated HNF basis never loses rank modulo p.
      if (saturate(a).basis() == IntMatrix::from_rows(3, [&] {
            HermiteForm hf = hnf(a);
            std::vector<IntVector> rows;
            for (std::size_t i = 0; i < hf.rank; ++i)
              rows.emplace_back(hf.h.row(i).begin(), hf.h.row(i).end());
            return rows;
          }()))
        ASSERT_EQ(rq, rp);
    }
  }
}

TEST(SparseRank, AgreesWithDenseRank) {
  std::mt19937 rng(13);
  for (std::uint32_t p : {0u, 2u, 3u}) {
    Field f = Field::of_characteristic(p);
    for (int trial = 0; trial < 100; ++trial) {
      IntMatrix a = random_matrix(rng, 5, 4, -2, 2);
      std::vector<SparseVector> rows;
      for (std::size_t r = 0; r < a.rows(); ++r) {
        SparseVector v;
        for (std::size_t c = 0; c < a.cols(); ++c) {
          Rational x = f.from_integer(a(r, c));
          if (x != 0) v[c * 7] = x;  // sparse, non-contiguous keys
        }
        rows.push_back(v);
      }
      ASSERT_EQ(sparse_rank(f, rows), rank(FieldMatrix::from_integers(f, a)));
    }
  }
}

TEST(Solve, ConsistentAndInconsistent) {
  Field q = Field::rationals();
  FieldMatrix a = FieldMatrix::from_integers(q, mat(2, {iv({1, 1}), iv({1, -1})}));
  FieldVector b = {Rational(3), Rational(1)};
  auto x = solve(a, b);
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], 2);
  EXPECT_EQ((*x)[1], 1);
  FieldMatrix singular = FieldMatrix::from_integers(q, mat(2, {iv({1, 1}), iv({2, 2})}));
  FieldVector bad = {Rational(1), Rational(0)};
  EXPECT_FALSE(solve(singular, bad));
}

}  // namespace
}  // namespace toric
