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

// The map φ : (m' ⊗ 1) · x^m ↦ (m' ⊗ 1) · x^{pm} from the forms of the
// Frobenius twist into F_* of the Zariski-de Rham complex, and the checks that
// it is a split injective chain map inducing an isomorphism on cohomology.
//
// Over the prime field the twist A' is identified with A, so φ only shifts the
// degree from m to pm.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "toric/cone.hpp"
#include "toric/derham.hpp"

namespace toric {

struct PhiMap {
  IntVector source;  // m
  IntVector target;  // p·m
  std::size_t a = 0;
  // Columns: wedge basis of ⋀^a V_m. Rows: wedge basis of ⋀^a V_{pm}.
  FieldMatrix matrix;
};

// Throws NotInCone for m ∉ σ^∨, NotPrime for bad p, and Internal if
// V_m != V_{pm}.
PhiMap phi(const Cone& cone, std::span<const Integer> m, std::size_t a, std::uint64_t p);

struct CheckResult {
  std::size_t checked = 0;
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }
};

// D_a(pm) ∘ φ = 0 for every m in the box and every a.
CheckResult check_chain_map(const Cone& cone, long bound, std::uint64_t p);
// π ∘ φ = id, π re-expressing a degree-pm form on the degree-m wedge basis.
CheckResult check_split(const Cone& cone, long bound, std::uint64_t p);
// φ(dx^m ⊗ 1) = x^{(p-1)m} dx^m for every m in the box.
CheckResult inverse_cartier_generator_check(const Cone& cone, long bound, std::uint64_t p);

struct FormDegreeSummary {
  std::size_t a = 0;
  std::size_t checked_degrees = 0;
  bool chain_map = true;
  bool split = true;
  bool isomorphism = true;
  std::size_t source_dim = 0;      // Σ_m dim ⋀^a V_m over the B-box
  std::size_t cohomology_dim = 0;  // Σ_m dim H^a(pm) over the B-box

  bool operator==(const FormDegreeSummary&) const = default;
};

struct CartierReport {
  std::string cone_id;
  std::size_t ambient_rank = 0;
  std::uint32_t p = 0;
  long bound = 0;
  std::vector<FormDegreeSummary> forms;  // a = 0..n
  std::size_t concentration_degrees = 0;  // degrees of the pB-box outside pM
  bool generator_check = true;
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }
  bool operator==(const CartierReport&) const = default;
};

// Cohomology vanishes off pM in the pB-box, and ⋀^a V_m -> H^a(pm) is bijective
// for every m in the B-box. Requires bound >= 1.
CartierReport verify_isomorphism(const Cone& cone, long bound, std::uint64_t p,
                                 unsigned threads = 0);

// verify_isomorphism plus the chain-map, splitting and generator checks.
CartierReport cartier_report(const Cone& cone, long bound, std::uint64_t p,
                             std::string cone_id = {}, unsigned threads = 0);

}  // namespace toric
