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

// Cones and helpers shared by the test binaries.

#include <random>
#include <vector>

#include "toric/cone.hpp"
#include "toric/linalg.hpp"

namespace toric::testing {

inline IntVector iv(std::initializer_list<long> v) { return make_int_vector(v); }

inline Cone orthant(std::size_t n) {
  std::vector<IntVector> rays;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, Integer(0));
    e[i] = 1;
    rays.push_back(e);
  }
  return Cone::from_rays(n, rays);
}

// σ = cone((0,1),(2,-1)), σ^∨ = cone((1,0),(1,2)): k[x, xy, xy^2].
inline Cone a1_quadric() { return Cone::from_rays(2, {iv({0, 1}), iv({2, -1})}); }

// Cone over the unit square: the conifold xy = zw.
inline Cone square_cone() {
  return Cone::from_rays(3, {iv({0, 0, 1}), iv({1, 0, 1}), iv({0, 1, 1}), iv({1, 1, 1})});
}

// σ^∨ = cone(e1, -e1, e2), a half-plane.
inline Cone half_plane() { return Cone::from_dual_rays(2, {iv({1, 0}), iv({-1, 0}), iv({0, 1})}); }

// The pointed cones used throughout the verification suites.
struct NamedCone {
  const char* name;
  Cone cone;
};

inline std::vector<NamedCone> pointed_cones() {
  return {{"orthant-2", orthant(2)},
          {"orthant-3", orthant(3)},
          {"a1-quadric", a1_quadric()},
          {"cone-over-square-3d", square_cone()}};
}

// Random pointed cone in dimension 1..3 with ray entries in [-3, 3].
inline Cone random_pointed_cone(std::mt19937& rng) {
  std::uniform_int_distribution<int> dim_dist(1, 3), entry(-3, 3), count(1, 4);
  while (true) {
    const std::size_t n = static_cast<std::size_t>(dim_dist(rng));
    std::vector<IntVector> rays;
    const int k = count(rng);
    for (int r = 0; r < k; ++r) {
      IntVector v(n);
      for (auto& x : v) x = entry(rng);
      if (!is_zero(v)) rays.push_back(v);
    }
    if (rays.empty()) continue;
    Cone c = Cone::from_rays(n, rays);
    if (c.is_pointed()) return c;
  }
}

inline IntVector random_vector(std::mt19937& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntVector v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

}  // namespace toric::testing
