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

#include <random>

#include "fixtures.hpp"
#include "toric/danilov.hpp"
#include "toric/error.hpp"

namespace toric {
namespace {

using testing::iv;

const Field kQ = Field::rationals();

TEST(VTau, OrthantFacet) {
  const auto& facets = testing::orthant(2).dual_facets();
  for (std::uint32_t p : {0u, 2u, 3u}) {
    Field f = Field::of_characteristic(p);
    EXPECT_EQ(v_tau(facets[0], f), Subspace::span(f, 2, {iv({1, 0})}));
  }
}

TEST(VTau, A1FacetReducesModTwo) {
  Cone a1 = testing::a1_quadric();
  const Facet* slanted = nullptr;
  for (const auto& f : a1.dual_facets())
    if (f.span_lattice.basis() == IntMatrix::from_rows(2, {iv({1, 2})})) slanted = &f;
  ASSERT_NE(slanted, nullptr);
  EXPECT_EQ(v_tau(*slanted, Field::prime(2)), Subspace::span(Field::prime(2), 2, {iv({1, 0})}));
  EXPECT_EQ(v_tau(*slanted, kQ), Subspace::span(kQ, 2, {iv({1, 2})}));
}

TEST(VTau, SaturationRegression) {
  // τ presented by the non-primitive spanning vector (2,4).
  Facet facet{0, iv({2, -1}), saturate(IntMatrix::from_rows(2, {iv({2, 4})}))};
  EXPECT_EQ(v_tau(facet, Field::prime(2)).dim(), 1u);
}

TEST(Vm, OriginOfPointedDualIsZero) {
  for (const auto& [name, c] : testing::pointed_cones()) {
    IntVector zero(c.ambient_rank(), Integer(0));
    EXPECT_EQ(v_m(c, zero, kQ).dim(), 0u) << name;
  }
  EXPECT_EQ(v_m(testing::orthant(3), IntVector(3, Integer(0)), Field::prime(2)).dim(), 0u);
}

TEST(Vm, OriginOfA1InCharacteristicTwo) {
  // Both facet lattices Z(1,0) and Z(1,2) reduce to the same line mod 2.
  Field f2 = Field::prime(2);
  EXPECT_EQ(v_m(testing::a1_quadric(), iv({0, 0}), f2), Subspace::span(f2, 2, {iv({1, 0})}));
  EXPECT_EQ(v_m(testing::a1_quadric(), iv({0, 0}), Field::prime(3)).dim(), 0u);
}

TEST(Vm, Examples) {
  for (std::uint32_t p : {0u, 2u, 5u}) {
    Field f = Field::of_characteristic(p);
    EXPECT_EQ(v_m(testing::orthant(2), iv({1, 0}), f), Subspace::span(f, 2, {iv({1, 0})}));
    EXPECT_EQ(v_m(testing::a1_quadric(), iv({1, 1}), f), Subspace::full(f, 2));
  }
  EXPECT_THROW(v_m(testing::orthant(2), iv({-1, 0}), kQ), Error);
}

TEST(Vm, HalfPlaneOriginIsNotZero) {
  // σ^∨ contains a line, so V_0 keeps that direction.
  Cone c = testing::half_plane();
  EXPECT_EQ(v_m(c, iv({0, 0}), kQ), Subspace::span(kQ, 2, {iv({1, 0})}));
}

TEST(GradedPiece, Dimensions) {
  EXPECT_EQ(graded_piece(testing::orthant(2), iv({1, 1}), kQ).dim(1), 2u);
  EXPECT_EQ(graded_piece(testing::orthant(2), iv({1, 0}), kQ).dim(2), 0u);
  for (const auto& [name, c] : testing::pointed_cones())
    for (const auto& m : enumerate_points(c, 1)) EXPECT_EQ(graded_piece(c, m, kQ).dim(0), 1u);
  GradedPiece piece = graded_piece(testing::orthant(3), iv({1, 1, 1}), kQ);
  EXPECT_EQ(piece.wedge_basis(2),
            (std::vector<std::vector<std::size_t>>{{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_EQ(piece.wedge_basis(0), (std::vector<std::vector<std::size_t>>{{}}));
}

TEST(GradedPiece, IntegerLiftsMapToBasis) {
  Cone c = testing::square_cone();
  for (std::uint32_t p : {0u, 3u}) {
    Field f = Field::of_characteristic(p);
    for (const auto& m : enumerate_points(c, 2)) {
      GradedPiece piece = graded_piece(c, m, f);
      for (std::size_t i = 0; i < piece.v_m().dim(); ++i) {
        FieldVector lifted = f.from_integers(piece.lift(i));
        for (std::size_t k = 0; k < lifted.size(); ++k)
          ASSERT_EQ(lifted[k], f.mul(piece.lift_scale(i), piece.v_m().basis()(i, k)));
      }
    }
  }
}

TEST(ToForm, Examples) {
  EXPECT_EQ(to_form(iv({1, 0}), {iv({1, 0})}).to_string(), "x^{(0,0)} dx^{(1,0)}");
  EXPECT_EQ(to_form(iv({1, 1}), {}).to_string(), "x^{(1,1)}");
  EXPECT_EQ(to_form(testing::orthant(2), iv({1, 1}), {iv({1, 0}), iv({0, 1})}).to_string(),
            "-x^{(0,0)} dx^{(0,1)}∧dx^{(1,0)}");
  // dx∧dy and -dy∧dx have the same normal form.
  EXPECT_EQ(to_form(iv({1, 1}), {iv({1, 0}), iv({0, 1})}),
            to_form(iv({1, 1}), {iv({0, 1}), iv({1, 0})}, -1));
  EXPECT_TRUE(to_form(iv({2, 0}), {iv({1, 0}), iv({1, 0})}).is_zero());
}

TEST(ToForm, FromWedgeCoordinates) {
  GradedPiece piece = graded_piece(testing::orthant(2), iv({1, 1}), kQ);
  FieldVector e1e2 = {Rational(1)};
  EXPECT_EQ(to_form(piece, 2, e1e2), FormExpression::parse("-x^{(0,0)} dx^{(0,1)}∧dx^{(1,0)}"));
  FieldVector coords = {Rational(2), Rational(-1, 3)};
  EXPECT_EQ(to_form(piece, 1, coords).to_string(),
            "-1/3 x^{(1,0)} dx^{(0,1)} + 2 x^{(0,1)} dx^{(1,0)}");
}

TEST(FormExpression, ParseRejectsGarbage) {
  for (const char* bad : {"", "x^{(1,0)", "dx^{(1,0)}", "x^{(1,0)} dx^{(1)}", "x^{(1,0)} +",
                          "2/0 x^{(1)}", "x^{(a)}"}) {
    try {
      FormExpression::parse(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::Parse) << bad;
    }
  }
  EXPECT_TRUE(FormExpression::parse("0").is_zero());
}

TEST(FormExpression, RoundTripsRandomForms) {
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> terms(0, 4), degree(0, 3), coeff(-5, 5), den(1, 4);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<FormTerm> ts;
    for (int t = terms(rng); t > 0; --t) {
      FormTerm term{Rational(coeff(rng), den(rng)), testing::random_vector(rng, 3, -3, 3), {}};
      term.coefficient.canonicalize();
      for (int d = degree(rng); d > 0; --d)
        term.differentials.push_back(testing::random_vector(rng, 3, -2, 2));
      ts.push_back(term);
    }
    FormExpression e(ts);
    ASSERT_EQ(FormExpression::parse(e.to_string()), e) << e.to_string();
    ASSERT_EQ(FormExpression::parse(e.to_string()).to_string(), e.to_string());
  }
}

TEST(DanilovProperties, OrthantMatchesFreeModuleCount) {
  for (std::size_t n = 2; n <= 3; ++n) {
    Cone c = testing::orthant(n);
    for (std::uint32_t p : {0u, 2u}) {
      Field f = Field::of_characteristic(p);
      for (const auto& m : enumerate_points(c, 3)) {
        std::size_t support = 0;
        for (const auto& x : m) support += x != 0;
        GradedPiece piece = graded_piece(c, m, f);
        ASSERT_EQ(piece.v_m().dim(), support);
        for (std::size_t a = 0; a <= n; ++a) ASSERT_EQ(piece.dim(a), binomial(support, a));
      }
    }
  }
}

TEST(DanilovProperties, ClosureAndFrobeniusStability) {
  for (const auto& [name, c] : testing::pointed_cones()) {
    for (std::uint32_t p : {0u, 2u, 3u}) {
      Field f = Field::of_characteristic(p);
      auto points = enumerate_points(c, 2);
      for (const auto& m : points) {
        Subspace vm = v_m(c, m, f);
        ASSERT_TRUE(vm.contains(std::span<const Integer>(m))) << name;
        for (const auto& m2 : points) {
          IntVector s = m;
          for (std::size_t i = 0; i < s.size(); ++i) s[i] += m2[i];
          ASSERT_TRUE(vm.is_subspace_of(v_m(c, s, f))) << name << ' ' << to_string(m);
        }
        if (p) {
          IntVector pm = m;
          for (auto& x : pm) x *= static_cast<unsigned long>(p);
          ASSERT_EQ(v_m(c, pm, f), vm) << name << ' ' << to_string(m);
        }
      }
      for (const auto& facet : c.dual_facets())
        ASSERT_EQ(v_tau(facet, f).dim() + 1, c.ambient_rank());
    }
  }
}

TEST(Subsets, LexicographicAndCounted) {
  EXPECT_EQ(subsets(3, 2), (std::vector<std::vector<std::size_t>>{{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_TRUE(subsets(2, 3).empty());
  for (std::size_t n = 0; n <= 6; ++n)
    for (std::size_t k = 0; k <= n + 1; ++k) EXPECT_EQ(subsets(n, k).size(), binomial(n, k));
}

}  // namespace
}  // namespace toric
