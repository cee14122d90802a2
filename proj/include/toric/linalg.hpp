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

#pragma once

// Exact linear algebra over the integers, the rationals and prime fields.
//
// Integers are GMP bignums throughout. Lattices are kept in Hermite normal
// form and subspaces in reduced row-echelon form, so equality of either is
// equality of the stored matrices.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace toric {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using FieldVector = std::vector<Rational>;

IntVector make_int_vector(std::initializer_list<long> values);
std::string to_string(const IntVector& v);  // "(1,-2,0)"

Integer dot(std::span<const Integer> a, std::span<const Integer> b);
bool is_zero(std::span<const Integer> v);
// Divides by the gcd of the entries; the zero vector is returned unchanged.
IntVector primitive(IntVector v);

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  // Every row must have `cols` entries.
  static IntMatrix from_rows(std::size_t cols, const std::vector<IntVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const Integer> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::vector<IntVector> row_vectors() const;
  IntMatrix transpose() const;
  void swap_rows(std::size_t a, std::size_t b);

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
Integer determinant(const IntMatrix& square);

// Row-style Hermite normal form: H = U * A with U unimodular. The nonzero rows
// of H come first, have strictly increasing pivot columns with positive pivots,
// and entries above each pivot lie in [0, pivot).
struct HermiteForm {
  IntMatrix h;
  IntMatrix u;
  std::size_t rank = 0;
};

HermiteForm hnf(const IntMatrix& a);

// Rows form a Z-basis of {x in Z^cols : A x = 0}.
IntMatrix integer_kernel(const IntMatrix& a);

// A sublattice L of Z^n with L = Z^n ∩ (L ⊗ Q). Only `saturate` builds one.
class SaturatedLattice {
 public:
  std::size_t ambient_rank() const { return basis_.cols(); }
  std::size_t rank() const { return basis_.rows(); }
  // HNF basis, one generator per row.
  const IntMatrix& basis() const { return basis_; }

  bool operator==(const SaturatedLattice&) const = default;

 private:
  friend SaturatedLattice saturate(const IntMatrix& a);
  explicit SaturatedLattice(IntMatrix basis) : basis_(std::move(basis)) {}
  IntMatrix basis_;
};

// Z^n ∩ Q-span(rows of A).
SaturatedLattice saturate(const IntMatrix& a);

bool is_prime(std::uint64_t n);

// Q when characteristic() == 0, otherwise F_p with p < 2^31. Residues are
// stored as integral Rationals in [0, p).
class Field {
 public:
  Field() = default;
  static Field rationals() { return Field(); }
  // Throws NotPrime unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);
  // 0 selects Q.
  static Field of_characteristic(std::uint64_t p);

  std::uint32_t characteristic() const { return p_; }

  Rational from_integer(const Integer& v) const;
  Rational reduce(const Rational& v) const;
  Rational add(const Rational& a, const Rational& b) const;
  Rational sub(const Rational& a, const Rational& b) const;
  Rational mul(const Rational& a, const Rational& b) const;
  Rational neg(const Rational& a) const;
  Rational inv(const Rational& a) const;
  FieldVector from_integers(std::span<const Integer> v) const;

  bool operator==(const Field&) const = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(Field field, std::size_t rows, std::size_t cols);

  static FieldMatrix identity(Field field, std::size_t n);
  static FieldMatrix from_rows(Field field, std::size_t cols,
                               const std::vector<FieldVector>& rows);
  static FieldMatrix from_integers(Field field, const IntMatrix& m);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  FieldVector column(std::size_t c) const;

  bool is_zero() const;
  FieldMatrix transpose() const;

  bool operator==(const FieldMatrix&) const = default;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);
// Columns of `a` followed by columns of `b`.
FieldMatrix hconcat(const FieldMatrix& a, const FieldMatrix& b);

struct EchelonForm {
  FieldMatrix reduced;  // zero rows dropped
  std::vector<std::size_t> pivots;
};

EchelonForm rref(const FieldMatrix& a);
std::size_t rank(const FieldMatrix& a);
Rational determinant(const FieldMatrix& square);
// Some x with A x = b, or nullopt when the system is inconsistent.
std::optional<FieldVector> solve(const FieldMatrix& a, std::span<const Rational> b);

// A subspace of K^n held as its RREF basis.
class Subspace {
 public:
  // Row span of `generators`.
  static Subspace span(const FieldMatrix& generators);
  static Subspace span(Field field, std::size_t n, const std::vector<IntVector>& generators);
  static Subspace zero(Field field, std::size_t n);
  static Subspace full(Field field, std::size_t n);

  const Field& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const FieldMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Coordinates in the RREF basis, or nullopt when v is not in the subspace.
  std::optional<FieldVector> coordinates(std::span<const Rational> v) const;
  bool contains(std::span<const Rational> v) const;
  bool contains(std::span<const Integer> v) const;
  bool is_subspace_of(const Subspace& other) const;

  bool operator==(const Subspace& other) const { return basis_ == other.basis_; }

 private:
  Subspace(FieldMatrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}
  FieldMatrix basis_;
  std::vector<std::size_t> pivots_;
};

// Right kernel {x : A x = 0}.
Subspace kernel(const FieldMatrix& a);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

// L ⊗ F_p. Throws NotPrime for composite p, Internal if the dimension drops.
Subspace reduce_mod_p(const SaturatedLattice& lattice, std::uint64_t p);
// L ⊗ k for either kind of field.
Subspace tensor_with(const SaturatedLattice& lattice, const Field& field);

// Sparse vectors keyed by coordinate index; absent entries are zero.
using SparseVector = std::map<std::size_t, Rational>;

// Rank of the span of `vectors` by incremental sparse elimination.
std::size_t sparse_rank(const Field& field, std::vector<SparseVector> vectors);

}  // namespace toric
