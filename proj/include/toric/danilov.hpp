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

// Danilov's graded model of the Zariski differentials of A = k[σ^∨ ∩ M]:
// the degree-m piece of the a-forms is ⋀^a V_m · x^m with
// V_m = ∩_{τ ∋ m} (M ∩ (τ - τ)) ⊗ k over the facets τ of σ^∨.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "toric/cone.hpp"
#include "toric/linalg.hpp"

namespace toric {

std::size_t binomial(std::size_t n, std::size_t k);

// All k-subsets of {0, ..., n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k);

Subspace v_tau(const Facet& facet, const Field& field);
// Throws NotInCone for m ∉ σ^∨ and NotPointed when σ has no facets to offer.
Subspace v_m(const Cone& cone, std::span<const Integer> m, const Field& field);

// ⋀^• V_m · x^m. Wedge basis elements of degree a are the lexicographically
// ordered a-subsets of the RREF basis of V_m.
class GradedPiece {
 public:
  GradedPiece(IntVector degree, Subspace v_m);

  const IntVector& degree() const { return degree_; }
  const Field& field() const { return v_m_.field(); }
  const Subspace& v_m() const { return v_m_; }
  std::size_t ambient_dim() const { return v_m_.ambient_dim(); }

  std::size_t dim(std::size_t a) const { return binomial(v_m_.dim(), a); }
  const std::vector<std::size_t>& wedge_index(std::size_t a, std::size_t i) const {
    return wedge_bases_[a][i];
  }
  const std::vector<std::vector<std::size_t>>& wedge_basis(std::size_t a) const {
    return wedge_bases_[a];
  }

  // Integer vector whose image in k^n is lift_scale(i) times basis row i.
  const IntVector& lift(std::size_t i) const { return lifts_[i]; }
  const Rational& lift_scale(std::size_t i) const { return lift_scales_[i]; }

  // Position of `subset` in wedge_basis(subset.size()).
  std::size_t wedge_position(const std::vector<std::size_t>& subset) const;

 private:
  IntVector degree_;
  Subspace v_m_;
  std::vector<std::vector<std::vector<std::size_t>>> wedge_bases_;
  std::vector<IntVector> lifts_;
  std::vector<Rational> lift_scales_;
};

// Coordinates of the k-th wedge basis element of ⋀^a V_m in the standard basis
// of ⋀^a k^n (indexed by subsets(n, a)), computed as maximal minors.
FieldVector ambient_wedge(const GradedPiece& piece, std::size_t a, std::size_t k);

GradedPiece graded_piece(const Cone& cone, std::span<const Integer> m, const Field& field);

// One summand c · x^exponent dx^{d_1} ∧ ... ∧ dx^{d_a}.
struct FormTerm {
  Rational coefficient;
  IntVector exponent;
  std::vector<IntVector> differentials;

  bool operator==(const FormTerm&) const = default;
};

// Textual normal form of a sum of monomial forms. Differentials within a term
// are sorted (with the sign of the permutation), repeated differentials vanish,
// like terms are merged and terms are ordered by (differentials, exponent).
class FormExpression {
 public:
  FormExpression() = default;
  explicit FormExpression(std::vector<FormTerm> terms);

  const std::vector<FormTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // e.g. "x^{(0,0)} dx^{(1,0)}∧dx^{(0,1)} - 2 x^{(1,0)} dx^{(0,1)}"
  std::string to_string() const;
  // Throws Parse on malformed input.
  static FormExpression parse(std::string_view text);

  bool operator==(const FormExpression&) const = default;

 private:
  std::vector<FormTerm> terms_;
};

// f_a((m_1 ∧ ... ∧ m_a) · x^m) = x^{m - m_1 - ... - m_a} dx^{m_1} ∧ ... ∧ dx^{m_a}.
FormExpression to_form(std::span<const Integer> m, const std::vector<IntVector>& factors,
                       const Rational& coefficient = 1);
FormExpression to_form(const Cone& cone, std::span<const Integer> m,
                       const std::vector<IntVector>& factors);
// A wedge element of piece.v_m() given by coordinates on wedge_basis(a),
// written through the integer lifts of the basis.
FormExpression to_form(const GradedPiece& piece, std::size_t a, const FieldVector& coords);

}  // namespace toric
