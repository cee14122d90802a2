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

// The degree-m part of the Zariski-de Rham complex,
//   0 -> ⋀^0 V_m -> ⋀^1 V_m -> ... -> ⋀^n V_m -> 0,
// whose differential is left multiplication by m ⊗ 1.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "toric/cone.hpp"
#include "toric/danilov.hpp"
#include "toric/linalg.hpp"

namespace toric {

inline constexpr std::size_t kAllForms = std::numeric_limits<std::size_t>::max();

struct DegreeComplex {
  GradedPiece piece;
  std::vector<std::size_t> dims;           // dim ⋀^a V_m, a = 0..n
  std::vector<FieldMatrix> differentials;  // D_a : ⋀^a -> ⋀^{a+1}, a = 0..n-1

  const IntVector& degree() const { return piece.degree(); }
  const Field& field() const { return piece.field(); }
};

// Matrix of ω ↦ w ∧ ω on ⋀^a V_m, w given by coordinates on the V_m basis.
// Columns index wedge_basis(a), rows wedge_basis(a + 1).
FieldMatrix wedge_matrix(const GradedPiece& piece, const FieldVector& w, std::size_t a);

// Throws Internal if some D_{a+1} D_a is nonzero.
DegreeComplex degree_complex(GradedPiece piece);
DegreeComplex degree_complex(const Cone& cone, std::span<const Integer> m, const Field& field);

// dim H^a = dim ⋀^a V_m - rank D_a - rank D_{a-1}, a = 0..n.
std::vector<std::size_t> cohomology(const DegreeComplex& dc);

struct CohomologyRow {
  IntVector degree;
  std::vector<std::size_t> dims;

  bool operator==(const CohomologyRow&) const = default;
};

struct CohomologyTable {
  std::size_t ambient_rank = 0;
  std::uint32_t characteristic = 0;
  long bound = 0;
  std::vector<CohomologyRow> rows;  // enumerate_points order

  // FNV-1a over the CSV rendering, as 16 hex digits.
  std::string summary_hash() const;
  std::vector<std::size_t> totals() const;

  bool operator==(const CohomologyTable&) const = default;
};

// Threads: 0 means TORIC_THREADS or the hardware concurrency.
unsigned resolve_thread_count(unsigned requested);

CohomologyTable cohomology_table(const Cone& cone, long bound, const Field& field,
                                 unsigned threads = 0);

struct Violation {
  IntVector degree;
  std::size_t a = kAllForms;
  std::string kind;
  std::string detail;

  bool operator==(const Violation&) const = default;
};

struct PoincareReport {
  long bound = 0;
  std::size_t checked_degrees = 0;
  std::vector<Violation> violations;
  std::string table_hash;

  bool passed() const { return violations.empty(); }
  bool operator==(const PoincareReport&) const = default;
};

// Char 0 check that the complex resolves k over the box. Throws NoVertex when
// σ^∨ contains a line.
PoincareReport poincare_check(const Cone& cone, long bound, unsigned threads = 0);

// Total dim H^a of the whole box-truncated complex, assembled as one sparse
// system in ambient Plücker coordinates and reduced without splitting by degree.
std::vector<std::size_t> oracle_full_complex(const Cone& cone, long bound, const Field& field);

}  // namespace toric
