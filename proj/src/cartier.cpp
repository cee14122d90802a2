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

#include "toric/cartier.hpp"

#include "parallel.hpp"
#include "toric/error.hpp"

namespace toric {

namespace {

IntVector scaled(std::span<const Integer> m, std::uint64_t p) {
  IntVector out(m.begin(), m.end());
  for (auto& x : out) x *= static_cast<unsigned long>(p);
  return out;
}

bool in_multiples(std::span<const Integer> m, std::uint64_t p) {
  for (const auto& x : m)
    if (!mpz_divisible_ui_p(x.get_mpz_t(), static_cast<unsigned long>(p))) return false;
  return true;
}

FieldMatrix phi_matrix(const GradedPiece& source, const GradedPiece& target, std::size_t a) {
  if (!(source.v_m() == target.v_m()))
    fail(ErrorCode::Internal, "V_m differs from V_pm in degree " + to_string(source.degree()));
  return FieldMatrix::identity(source.field(), source.dim(a));
}

void merge(std::vector<std::vector<Violation>>& parts, std::vector<Violation>& out) {
  for (auto& part : parts)
    for (auto& v : part) out.push_back(std::move(v));
}

}  // namespace

PhiMap phi(const Cone& cone, std::span<const Integer> m, std::size_t a, std::uint64_t p) {
  Field f = Field::prime(p);
  if (a > cone.ambient_rank()) fail(ErrorCode::InvalidArgument, "form degree exceeds rank");
  IntVector target = scaled(m, p);
  GradedPiece src = graded_piece(cone, m, f);
  GradedPiece dst = graded_piece(cone, target, f);
  return PhiMap{src.degree(), std::move(target), a, phi_matrix(src, dst, a)};
}

CheckResult check_chain_map(const Cone& cone, long bound, std::uint64_t p) {
  Field f = Field::prime(p);
  CheckResult result;
  const std::size_t n = cone.ambient_rank();
  for (const auto& m : enumerate_points(cone, bound)) {
    GradedPiece src = graded_piece(cone, m, f);
    DegreeComplex dst = degree_complex(cone, scaled(m, p), f);
    for (std::size_t a = 0; a <= n; ++a) {
      ++result.checked;
      if (a == n) continue;  // the next term of the complex is zero
      FieldMatrix composite = dst.differentials[a] * phi_matrix(src, dst.piece, a);
      if (!composite.is_zero())
        result.violations.push_back({m, a, "chain_map", "D_a(pm) ∘ φ is nonzero"});
    }
  }
  return result;
}

CheckResult check_split(const Cone& cone, long bound, std::uint64_t p) {
  Field f = Field::prime(p);
  CheckResult result;
  const std::size_t n = cone.ambient_rank();
  for (const auto& m : enumerate_points(cone, bound)) {
    GradedPiece src = graded_piece(cone, m, f);
    GradedPiece dst = graded_piece(cone, scaled(m, p), f);
    for (std::size_t a = 0; a <= n; ++a) {
      ++result.checked;
      FieldMatrix map = phi_matrix(src, dst, a);
      const std::size_t ambient = binomial(n, a);
      // Source wedge basis as columns in ambient coordinates.
      FieldMatrix source_basis(f, ambient, src.dim(a));
      for (std::size_t k = 0; k < src.dim(a); ++k) {
        FieldVector w = ambient_wedge(src, a, k);
        for (std::size_t r = 0; r < ambient; ++r) source_basis(r, k) = w[r];
      }
      FieldMatrix projected(f, src.dim(a), src.dim(a));
      bool ok = true;
      for (std::size_t k = 0; k < map.cols() && ok; ++k) {
        FieldVector image(ambient, Rational(0));
        for (std::size_t r = 0; r < map.rows(); ++r) {
          if (map(r, k) == 0) continue;
          FieldVector w = ambient_wedge(dst, a, r);
          for (std::size_t i = 0; i < ambient; ++i) image[i] = f.add(image[i], f.mul(map(r, k), w[i]));
        }
        auto coords = solve(source_basis, image);
        if (!coords) {
          ok = false;
          break;
        }
        for (std::size_t i = 0; i < coords->size(); ++i) projected(i, k) = (*coords)[i];
      }
      if (!ok || !(projected == FieldMatrix::identity(f, src.dim(a))))
        result.violations.push_back({m, a, "split", "π ∘ φ is not the identity"});
    }
  }
  return result;
}

CheckResult inverse_cartier_generator_check(const Cone& cone, long bound, std::uint64_t p) {
  Field f = Field::prime(p);
  CheckResult result;
  for (const auto& m : enumerate_points(cone, bound)) {
    ++result.checked;
    if (is_zero(m)) continue;  // d(x^0) = 0
    GradedPiece src = graded_piece(cone, m, f);
    IntVector target = scaled(m, p);
    GradedPiece dst = graded_piece(cone, target, f);
    FieldVector m_field = f.from_integers(m);
    auto coords = src.v_m().coordinates(m_field);
    if (!coords) {
      result.violations.push_back({m, 1, "generator", "m ⊗ 1 not in V_m"});
      continue;
    }
    FieldMatrix map = phi_matrix(src, dst, 1);
    FieldVector image(m.size(), Rational(0));
    for (std::size_t r = 0; r < map.rows(); ++r) {
      Rational c = 0;
      for (std::size_t k = 0; k < map.cols(); ++k) c = f.add(c, f.mul(map(r, k), (*coords)[k]));
      for (std::size_t i = 0; i < m.size(); ++i)
        image[i] = f.add(image[i], f.mul(c, dst.v_m().basis()(r, i)));
    }
    if (image != m_field) {
      result.violations.push_back({m, 1, "generator", "φ(m ⊗ 1) != m ⊗ 1 in degree pm"});
      continue;
    }
    IntVector twist = m;
    for (auto& x : twist) x *= static_cast<unsigned long>(p - 1);
    const std::string expected = "x^{" + to_string(twist) + "} dx^{" + to_string(m) + "}";
    FormExpression form = to_form(cone, target, {m});
    if (form.to_string() != expected || FormExpression::parse(expected) != form)
      result.violations.push_back(
          {m, 1, "generator", "f_1 printed " + form.to_string() + ", expected " + expected});
  }
  return result;
}

CartierReport verify_isomorphism(const Cone& cone, long bound, std::uint64_t p,
                                 unsigned threads) {
  Field f = Field::prime(p);
  if (bound < 1) fail(ErrorCode::InvalidArgument, "the Cartier check needs bound >= 1");
  const std::size_t n = cone.ambient_rank();
  const unsigned workers = resolve_thread_count(threads);

  CartierReport report;
  report.ambient_rank = n;
  report.p = static_cast<std::uint32_t>(p);
  report.bound = bound;
  for (std::size_t a = 0; a <= n; ++a) report.forms.push_back({a});

  // Off pM the complex must be exact.
  const long target_bound = bound * static_cast<long>(p);
  std::vector<IntVector> targets = enumerate_points(cone, target_bound);
  std::vector<std::vector<Violation>> off(targets.size());
  std::vector<char> counted(targets.size(), 0);
  detail::parallel_for(targets.size(), workers, [&](std::size_t i) {
    const IntVector& m = targets[i];
    if (in_multiples(m, p)) return;
    counted[i] = 1;
    auto h = cohomology(degree_complex(cone, m, f));
    for (std::size_t a = 0; a < h.size(); ++a)
      if (h[a] != 0)
        off[i].push_back({m, a, "concentration",
                          "dim H^" + std::to_string(a) + " = " + std::to_string(h[a]) +
                              " outside pM"});
  });
  for (char c : counted) report.concentration_degrees += static_cast<std::size_t>(c);
  merge(off, report.violations);

  // On pM the map from ⋀^a V_m must hit cohomology bijectively.
  std::vector<IntVector> sources = enumerate_points(cone, bound);
  struct PerDegree {
    std::vector<std::size_t> source_dim, cohomology_dim;
    std::vector<Violation> violations;
  };
  std::vector<PerDegree> results(sources.size());
  detail::parallel_for(sources.size(), workers, [&](std::size_t i) {
    const IntVector& m = sources[i];
    GradedPiece src = graded_piece(cone, m, f);
    DegreeComplex dst = degree_complex(cone, scaled(m, p), f);
    auto h = cohomology(dst);
    PerDegree& out = results[i];
    for (std::size_t a = 0; a <= n; ++a) {
      const std::size_t expected = binomial(src.v_m().dim(), a);
      out.source_dim.push_back(src.dim(a));
      out.cohomology_dim.push_back(h[a]);
      FieldMatrix map = phi_matrix(src, dst.piece, a);
      bool cocycles = a == n || (dst.differentials[a] * map).is_zero();
      std::size_t boundary_rank = 0;
      std::size_t combined_rank = rank(map);
      if (a > 0) {
        boundary_rank = rank(dst.differentials[a - 1]);
        combined_rank = rank(hconcat(dst.differentials[a - 1], map));
      }
      const std::size_t induced_rank = combined_rank - boundary_rank;
      if (!cocycles || induced_rank != expected || h[a] != expected)
        out.violations.push_back(
            {m, a, "isomorphism",
             "dim H^a(pm) = " + std::to_string(h[a]) + ", induced rank " +
                 std::to_string(induced_rank) + ", expected " + std::to_string(expected) +
                 (cocycles ? "" : "; image not closed")});
    }
  });
  for (std::size_t i = 0; i < results.size(); ++i) {
    for (std::size_t a = 0; a <= n; ++a) {
      auto& s = report.forms[a];
      ++s.checked_degrees;
      s.source_dim += results[i].source_dim[a];
      s.cohomology_dim += results[i].cohomology_dim[a];
    }
    for (auto& v : results[i].violations) {
      report.forms[v.a].isomorphism = false;
      report.violations.push_back(std::move(v));
    }
  }
  for (const auto& v : report.violations)
    if (v.kind == "concentration") report.forms[v.a].isomorphism = false;
  return report;
}

CartierReport cartier_report(const Cone& cone, long bound, std::uint64_t p, std::string cone_id,
                             unsigned threads) {
  CartierReport report = verify_isomorphism(cone, bound, p, threads);
  report.cone_id = std::move(cone_id);
  for (auto& v : check_chain_map(cone, bound, p).violations) {
    report.forms[v.a].chain_map = false;
    report.violations.push_back(std::move(v));
  }
  for (auto& v : check_split(cone, bound, p).violations) {
    report.forms[v.a].split = false;
    report.violations.push_back(std::move(v));
  }
  CheckResult gen = inverse_cartier_generator_check(cone, bound, p);
  report.generator_check = gen.passed();
  for (auto& v : gen.violations) report.violations.push_back(std::move(v));
  return report;
}

}  // namespace toric
