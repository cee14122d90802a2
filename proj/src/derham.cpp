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

#include "toric/derham.hpp"

#include <cstdlib>
#include <string>

#include "parallel.hpp"
#include "toric/error.hpp"
#include "toric/report.hpp"

namespace toric {

namespace {

// (-1)^{#{i in subset : i < j}}
bool odd_insertion(const std::vector<std::size_t>& subset, std::size_t j) {
  std::size_t below = 0;
  for (std::size_t i : subset)
    if (i < j) ++below;
  return below % 2 == 1;
}

std::vector<std::size_t> with_element(std::vector<std::size_t> subset, std::size_t j) {
  subset.insert(std::upper_bound(subset.begin(), subset.end(), j), j);
  return subset;
}

}  // namespace

FieldMatrix wedge_matrix(const GradedPiece& piece, const FieldVector& w, std::size_t a) {
  const Field& f = piece.field();
  const std::size_t d = piece.v_m().dim();
  if (w.size() != d) fail(ErrorCode::DimensionMismatch, "wedge_matrix: coordinates");
  FieldMatrix m(f, piece.dim(a + 1), piece.dim(a));
  for (std::size_t col = 0; col < piece.dim(a); ++col) {
    const auto& subset = piece.wedge_index(a, col);
    for (std::size_t j = 0; j < d; ++j) {
      if (w[j] == 0 || std::binary_search(subset.begin(), subset.end(), j)) continue;
      std::size_t row = piece.wedge_position(with_element(subset, j));
      Rational term = odd_insertion(subset, j) ? f.neg(w[j]) : w[j];
      m(row, col) = f.add(m(row, col), term);
    }
  }
  return m;
}

DegreeComplex degree_complex(GradedPiece piece) {
  const std::size_t n = piece.ambient_dim();
  FieldVector m = piece.field().from_integers(piece.degree());
  auto w = piece.v_m().coordinates(m);
  if (!w) fail(ErrorCode::Internal, "degree is not in V_m");
  DegreeComplex dc{std::move(piece), {}, {}};
  for (std::size_t a = 0; a <= n; ++a) dc.dims.push_back(dc.piece.dim(a));
  for (std::size_t a = 0; a < n; ++a) dc.differentials.push_back(wedge_matrix(dc.piece, *w, a));
  for (std::size_t a = 0; a + 1 < n; ++a)
    if (!(dc.differentials[a + 1] * dc.differentials[a]).is_zero())
      fail(ErrorCode::Internal, "d∘d != 0 in degree " + to_string(dc.degree()));
  return dc;
}

DegreeComplex degree_complex(const Cone& cone, std::span<const Integer> m, const Field& field) {
  return degree_complex(graded_piece(cone, m, field));
}

std::vector<std::size_t> cohomology(const DegreeComplex& dc) {
  const std::size_t n = dc.dims.size() - 1;
  std::vector<std::size_t> ranks;
  for (const auto& d : dc.differentials) ranks.push_back(rank(d));
  std::vector<std::size_t> h(n + 1);
  for (std::size_t a = 0; a <= n; ++a) {
    std::size_t out = a < n ? ranks[a] : 0;
    std::size_t in = a > 0 ? ranks[a - 1] : 0;
    h[a] = dc.dims[a] - out - in;
  }
  return h;
}

std::string CohomologyTable::summary_hash() const {
  const std::string csv = to_csv(*this);
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : csv) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

std::vector<std::size_t> CohomologyTable::totals() const {
  std::vector<std::size_t> t(ambient_rank + 1, 0);
  for (const auto& row : rows)
    for (std::size_t a = 0; a < row.dims.size(); ++a) t[a] += row.dims[a];
  return t;
}

unsigned resolve_thread_count(unsigned requested) {
  if (requested) return requested;
  if (const char* env = std::getenv("TORIC_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

CohomologyTable cohomology_table(const Cone& cone, long bound, const Field& field,
                                 unsigned threads) {
  CohomologyTable table;
  table.ambient_rank = cone.ambient_rank();
  table.characteristic = field.characteristic();
  table.bound = bound;
  std::vector<IntVector> degrees = enumerate_points(cone, bound);
  table.rows.resize(degrees.size());
  detail::parallel_for(degrees.size(), resolve_thread_count(threads), [&](std::size_t i) {
    table.rows[i] = {degrees[i], cohomology(degree_complex(cone, degrees[i], field))};
  });
  return table;
}

PoincareReport poincare_check(const Cone& cone, long bound, unsigned threads) {
  cone.dual_facets();  // NotPointed before NoVertex
  if (!has_vertex(dual_cone(cone)))
    fail(ErrorCode::NoVertex, "the dual cone contains a line; the Poincaré lemma does not apply");
  CohomologyTable table = cohomology_table(cone, bound, Field::rationals(), threads);
  PoincareReport report;
  report.bound = bound;
  report.checked_degrees = table.rows.size();
  report.table_hash = table.summary_hash();
  for (const auto& row : table.rows) {
    const bool origin = is_zero(row.degree);
    for (std::size_t a = 0; a < row.dims.size(); ++a) {
      std::size_t expected = (origin && a == 0) ? 1 : 0;
      if (row.dims[a] != expected)
        report.violations.push_back(
            {row.degree, a, "poincare",
             "dim H^" + std::to_string(a) + " = " + std::to_string(row.dims[a]) +
                 ", expected " + std::to_string(expected)});
    }
  }
  return report;
}

// ------------------------------------------------------------------ oracle

namespace {

// Plücker coordinates of the wedge of the given rows of `basis`, indexed by
// position in subsets(n, rows.size()).
SparseVector plucker(const Field& f, const FieldMatrix& basis,
                     const std::vector<std::size_t>& rows,
                     const std::vector<std::vector<std::size_t>>& ambient, std::size_t offset) {
  SparseVector out;
  const std::size_t a = rows.size();
  for (std::size_t j = 0; j < ambient.size(); ++j) {
    FieldMatrix minor(f, a, a);
    for (std::size_t r = 0; r < a; ++r)
      for (std::size_t c = 0; c < a; ++c) minor(r, c) = basis(rows[r], ambient[j][c]);
    Rational det = determinant(minor);
    if (det != 0) out[offset + j] = det;
  }
  return out;
}

}  // namespace

std::vector<std::size_t> oracle_full_complex(const Cone& cone, long bound, const Field& f) {
  const std::size_t n = cone.ambient_rank();
  std::vector<IntVector> degrees = enumerate_points(cone, bound);
  std::vector<Subspace> spaces;
  spaces.reserve(degrees.size());
  for (const auto& m : degrees) spaces.push_back(v_m(cone, m, f));

  std::vector<std::vector<std::vector<std::size_t>>> ambient;
  for (std::size_t a = 0; a <= n + 1; ++a) ambient.push_back(subsets(n, a));

  std::vector<std::size_t> chain_dim(n + 1), diff_rank(n + 1, 0);
  for (std::size_t a = 0; a <= n; ++a) {
    std::vector<SparseVector> chains, images;
    for (std::size_t g = 0; g < degrees.size(); ++g) {
      const Subspace& v = spaces[g];
      FieldVector m = f.from_integers(degrees[g]);
      for (const auto& rows : subsets(v.dim(), a)) {
        SparseVector w = plucker(f, v.basis(), rows, ambient[a], g * ambient[a].size());
        // m ∧ e_J = Σ_{i ∉ J} m_i (-1)^{#{j in J : j < i}} e_{J ∪ i}
        SparseVector image;
        for (const auto& [idx, coeff] : w) {
          const auto& j_set = ambient[a][idx - g * ambient[a].size()];
          for (std::size_t i = 0; i < n; ++i) {
            if (m[i] == 0 || std::binary_search(j_set.begin(), j_set.end(), i)) continue;
            auto k_set = with_element(j_set, i);
            auto pos = std::lower_bound(ambient[a + 1].begin(), ambient[a + 1].end(), k_set) -
                       ambient[a + 1].begin();
            std::size_t key = g * ambient[a + 1].size() + static_cast<std::size_t>(pos);
            Rational term = f.mul(coeff, m[i]);
            if (odd_insertion(j_set, i)) term = f.neg(term);
            image[key] = f.add(image[key], term);
          }
        }
        chains.push_back(std::move(w));
        images.push_back(std::move(image));
      }
    }
    chain_dim[a] = sparse_rank(f, std::move(chains));
    diff_rank[a] = sparse_rank(f, std::move(images));
  }
  std::vector<std::size_t> h(n + 1);
  for (std::size_t a = 0; a <= n; ++a)
    h[a] = chain_dim[a] - diff_rank[a] - (a > 0 ? diff_rank[a - 1] : 0);
  return h;
}

}  // namespace toric
