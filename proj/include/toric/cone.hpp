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

// Rational polyhedral cones σ ⊂ N_Q together with their duals σ^∨ ⊂ M_Q.

#include <cstddef>
#include <vector>

#include "toric/linalg.hpp"

namespace toric {

// Output of the double description method: the cone is
// span(lineality) + cone(rays).
struct ConeGenerators {
  std::vector<IntVector> rays;
  std::vector<IntVector> lineality;

  // rays ∪ {±l}, sorted lexicographically.
  std::vector<IntVector> all() const;
};

// Generators of {x ∈ Q^n : <a, x> >= 0 for every a in `inequalities`}.
// Lineality is returned as the HNF basis of its saturated lattice, rays are
// primitive, orthogonal to the lineality space and sorted.
ConeGenerators double_description(std::size_t n, const std::vector<IntVector>& inequalities);

// A codimension-one face τ = σ^∨ ∩ normal^⊥ of σ^∨, indexed by the extreme ray
// `normal` of σ.
struct Facet {
  std::size_t id = 0;
  IntVector normal;
  SaturatedLattice span_lattice;  // M ∩ (τ - τ)
};

class Cone {
 public:
  // σ = cone(generators) in N. Zero generators are ignored.
  static Cone from_rays(std::size_t n, const std::vector<IntVector>& generators);
  // σ described through generators of σ^∨ in M.
  static Cone from_dual_rays(std::size_t n, const std::vector<IntVector>& dual_generators);

  std::size_t ambient_rank() const { return n_; }

  // Minimal generators, sorted; a lineality direction l shows up as ±l.
  const std::vector<IntVector>& rays() const { return rays_; }
  const std::vector<IntVector>& dual_rays() const { return dual_rays_; }
  const ConeGenerators& generators() const { return primal_; }
  const ConeGenerators& dual_generators() const { return dual_; }

  // σ ∩ -σ = {0}.
  bool is_pointed() const { return primal_.lineality.empty(); }

  bool contains(std::span<const Integer> v) const;       // v ∈ σ
  bool dual_contains(std::span<const Integer> m) const;  // m ∈ σ^∨

  // Facets of σ^∨, one per extreme ray of σ. Throws NotPointed.
  const std::vector<Facet>& dual_facets() const;

 private:
  Cone(std::size_t n, ConeGenerators primal, ConeGenerators dual);

  std::size_t n_ = 0;
  ConeGenerators primal_;
  ConeGenerators dual_;
  std::vector<IntVector> rays_;
  std::vector<IntVector> dual_rays_;
  std::vector<Facet> facets_;
};

Cone dual_cone(const Cone& c);
std::vector<Facet> facets_of_dual(const Cone& c);

// Membership in σ^∨.
bool contains(const Cone& c, std::span<const Integer> m);
// The facets τ of σ^∨ with m ∈ τ. Throws NotInCone when m ∉ σ^∨.
std::vector<Facet> facets_containing(const Cone& c, std::span<const Integer> m);
// Ids of the same facets, cheaper when only membership matters.
std::vector<std::size_t> facet_ids_containing(const Cone& c, std::span<const Integer> m);

// σ^∨ ∩ [-bound, bound]^n in lexicographic order (first coordinate slowest).
std::vector<IntVector> enumerate_points(const Cone& c, long bound);

// C ∩ -C = {0}.
bool has_vertex(const Cone& c);

}  // namespace toric
