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

#include "toric/cone.hpp"

#include <algorithm>

#include "toric/error.hpp"

namespace toric {

namespace {

struct Ray {
  IntVector v;
  std::vector<bool> tight;  // per processed inequality
};

IntVector combine(const Integer& a, const IntVector& x, const Integer& b, const IntVector& y) {
  IntVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = a * x[i] + b * y[i];
  return primitive(std::move(out));
}

std::size_t rank_of_rows(std::size_t n, const std::vector<IntVector>& rows) {
  return rank(FieldMatrix::from_integers(Field::rationals(), IntMatrix::from_rows(n, rows)));
}

// Orthogonal projection onto lineality^⊥, scaled back to a primitive integer
// vector.
IntVector project_off(const IntVector& r, const std::vector<IntVector>& lineality) {
  if (lineality.empty()) return r;
  const std::size_t n = r.size();
  const std::size_t k = lineality.size();
  // Solve (L L^T) c = L r.
  FieldMatrix system(Field::rationals(), k, k + 1);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) system(i, j) = Rational(dot(lineality[i], lineality[j]));
    system(i, k) = Rational(dot(lineality[i], r));
  }
  EchelonForm e = rref(system);
  std::vector<Rational> proj(n);
  for (std::size_t c = 0; c < n; ++c) proj[c] = Rational(r[c]);
  for (std::size_t i = 0; i < k; ++i) {
    const Rational& coeff = e.reduced(i, k);
    for (std::size_t c = 0; c < n; ++c) proj[c] -= coeff * Rational(lineality[i][c]);
  }
  Integer den = 1;
  for (auto& x : proj) den = lcm(den, Integer(x.get_den()));
  IntVector out(n);
  for (std::size_t c = 0; c < n; ++c) {
    Rational scaled = proj[c] * Rational(den);
    out[c] = scaled.get_num();
  }
  return primitive(std::move(out));
}

void sort_unique(std::vector<IntVector>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::vector<IntVector> ConeGenerators::all() const {
  std::vector<IntVector> out = rays;
  for (const auto& l : lineality) {
    out.push_back(l);
    IntVector neg = l;
    for (auto& x : neg) x = -x;
    out.push_back(std::move(neg));
  }
  sort_unique(out);
  return out;
}

ConeGenerators double_description(std::size_t n, const std::vector<IntVector>& inequalities) {
  std::vector<IntVector> lineality;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, Integer(0));
    e[i] = 1;
    lineality.push_back(std::move(e));
  }
  std::vector<Ray> rays;
  std::vector<IntVector> processed;

  for (const IntVector& a : inequalities) {
    if (a.size() != n) fail(ErrorCode::DimensionMismatch, "inequality of wrong length");
    if (is_zero(a)) continue;

    auto pivot = std::find_if(lineality.begin(), lineality.end(),
                              [&](const IntVector& l) { return dot(a, l) != 0; });
    if (pivot != lineality.end()) {
      IntVector l0 = *pivot;
      lineality.erase(pivot);
      Integer a0 = dot(a, l0);
      if (a0 < 0) {
        for (auto& x : l0) x = -x;
        a0 = -a0;
      }
      for (auto& l : lineality) {
        Integer al = dot(a, l);
        if (al != 0) l = combine(a0, l, -al, l0);
      }
      for (auto& r : rays) {
        Integer ar = dot(a, r.v);
        if (ar != 0) r.v = combine(a0, r.v, -ar, l0);
        r.tight.push_back(true);
      }
      std::vector<bool> tight(processed.size(), true);
      tight.push_back(false);
      rays.push_back({l0, std::move(tight)});
      processed.push_back(a);
      continue;
    }

    std::vector<Ray> plus, zero, minus;
    std::vector<Integer> plus_val, minus_val;
    for (auto& r : rays) {
      Integer ar = dot(a, r.v);
      if (ar > 0) {
        plus.push_back(r);
        plus_val.push_back(ar);
      } else if (ar < 0) {
        minus.push_back(r);
        minus_val.push_back(ar);
      } else {
        zero.push_back(r);
      }
    }
    const std::size_t target_rank = n - lineality.size() - 2;
    std::vector<Ray> next;
    for (std::size_t i = 0; i < plus.size(); ++i) {
      for (std::size_t j = 0; j < minus.size(); ++j) {
        std::vector<IntVector> common;
        std::vector<bool> tight(processed.size());
        for (std::size_t k = 0; k < processed.size(); ++k) {
          tight[k] = plus[i].tight[k] && minus[j].tight[k];
          if (tight[k]) common.push_back(processed[k]);
        }
        if (n < lineality.size() + 2 || common.size() < target_rank) continue;
        if (rank_of_rows(n, common) != target_rank) continue;
        IntVector v = combine(plus_val[i], minus[j].v, -minus_val[j], plus[i].v);
        tight.push_back(true);
        next.push_back({std::move(v), std::move(tight)});
      }
    }
    for (auto& r : plus) {
      r.tight.push_back(false);
      next.push_back(std::move(r));
    }
    for (auto& r : zero) {
      r.tight.push_back(true);
      next.push_back(std::move(r));
    }
    rays = std::move(next);
    processed.push_back(a);
  }

  ConeGenerators out;
  if (!lineality.empty()) {
    SaturatedLattice lat = saturate(IntMatrix::from_rows(n, lineality));
    out.lineality = lat.basis().row_vectors();
  }
  for (const auto& r : rays) out.rays.push_back(project_off(r.v, out.lineality));
  sort_unique(out.rays);
  return out;
}

// --------------------------------------------------------------------- Cone

namespace {
std::vector<IntVector> validated(std::size_t n, const std::vector<IntVector>& gens) {
  std::vector<IntVector> out;
  for (const auto& g : gens) {
    if (g.size() != n) fail(ErrorCode::DimensionMismatch, "generator of wrong length");
    if (!is_zero(g)) out.push_back(primitive(g));
  }
  return out;
}
}  // namespace

Cone Cone::from_rays(std::size_t n, const std::vector<IntVector>& generators) {
  ConeGenerators dual = double_description(n, validated(n, generators));
  ConeGenerators primal = double_description(n, dual.all());
  return Cone(n, std::move(primal), std::move(dual));
}

Cone Cone::from_dual_rays(std::size_t n, const std::vector<IntVector>& dual_generators) {
  ConeGenerators primal = double_description(n, validated(n, dual_generators));
  ConeGenerators dual = double_description(n, primal.all());
  return Cone(n, std::move(primal), std::move(dual));
}

Cone::Cone(std::size_t n, ConeGenerators primal, ConeGenerators dual)
    : n_(n), primal_(std::move(primal)), dual_(std::move(dual)) {
  rays_ = primal_.all();
  dual_rays_ = dual_.all();
  if (!is_pointed()) return;
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    std::vector<IntVector> on_face;
    for (const auto& u : dual_rays_)
      if (dot(u, rays_[i]) == 0) on_face.push_back(u);
    SaturatedLattice lattice = saturate(IntMatrix::from_rows(n_, on_face));
    if (lattice.rank() + 1 != n_)
      fail(ErrorCode::Internal, "facet of the dual cone has wrong dimension");
    facets_.push_back(Facet{i, rays_[i], std::move(lattice)});
  }
}

bool Cone::contains(std::span<const Integer> v) const {
  if (v.size() != n_) fail(ErrorCode::DimensionMismatch, "Cone::contains");
  return std::all_of(dual_rays_.begin(), dual_rays_.end(),
                     [&](const IntVector& u) { return dot(u, v) >= 0; });
}

bool Cone::dual_contains(std::span<const Integer> m) const {
  if (m.size() != n_) fail(ErrorCode::DimensionMismatch, "Cone::dual_contains");
  return std::all_of(rays_.begin(), rays_.end(),
                     [&](const IntVector& v) { return dot(m, v) >= 0; });
}

const std::vector<Facet>& Cone::dual_facets() const {
  if (!is_pointed())
    fail(ErrorCode::NotPointed, "cone is not pointed; its dual is not full-dimensional");
  return facets_;
}

Cone dual_cone(const Cone& c) {
  return Cone::from_rays(c.ambient_rank(), c.dual_rays());
}

std::vector<Facet> facets_of_dual(const Cone& c) { return c.dual_facets(); }

bool contains(const Cone& c, std::span<const Integer> m) { return c.dual_contains(m); }

std::vector<std::size_t> facet_ids_containing(const Cone& c, std::span<const Integer> m) {
  const auto& facets = c.dual_facets();
  if (!c.dual_contains(m)) fail(ErrorCode::NotInCone, to_string(IntVector(m.begin(), m.end())) +
                                                         " is not in the dual cone");
  std::vector<std::size_t> ids;
  for (const auto& f : facets)
    if (dot(f.normal, m) == 0) ids.push_back(f.id);
  return ids;
}

std::vector<Facet> facets_containing(const Cone& c, std::span<const Integer> m) {
  std::vector<Facet> out;
  for (std::size_t id : facet_ids_containing(c, m)) out.push_back(c.dual_facets()[id]);
  return out;
}

std::vector<IntVector> enumerate_points(const Cone& c, long bound) {
  if (bound < 0) fail(ErrorCode::InvalidArgument, "bound must be non-negative");
  const std::size_t n = c.ambient_rank();
  std::vector<IntVector> out;
  std::vector<long> cur(n, -bound);
  IntVector m(n);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) m[i] = cur[i];
    if (c.dual_contains(m)) out.push_back(m);
    std::size_t i = n;
    while (i > 0 && cur[i - 1] == bound) {
      cur[i - 1] = -bound;
      --i;
    }
    if (i == 0) break;
    ++cur[i - 1];
  }
  return out;
}

bool has_vertex(const Cone& c) { return c.is_pointed(); }

}  // namespace toric
