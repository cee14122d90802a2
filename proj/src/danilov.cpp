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

#include "toric/danilov.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "toric/error.hpp"

namespace toric {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

Subspace v_tau(const Facet& facet, const Field& field) {
  Subspace s = tensor_with(facet.span_lattice, field);
  if (s.dim() + 1 != s.ambient_dim()) fail(ErrorCode::Internal, "V_tau has wrong dimension");
  return s;
}

Subspace v_m(const Cone& cone, std::span<const Integer> m, const Field& field) {
  const auto& facets = cone.dual_facets();
  Subspace result = Subspace::full(field, cone.ambient_rank());
  for (std::size_t id : facet_ids_containing(cone, m))
    result = intersect(result, v_tau(facets[id], field));
  if (!result.contains(m)) fail(ErrorCode::Internal, "m ⊗ 1 is not in V_m");
  return result;
}

GradedPiece::GradedPiece(IntVector degree, Subspace v_m)
    : degree_(std::move(degree)), v_m_(std::move(v_m)) {
  const std::size_t d = v_m_.dim();
  for (std::size_t a = 0; a <= v_m_.ambient_dim(); ++a) wedge_bases_.push_back(subsets(d, a));
  for (std::size_t i = 0; i < d; ++i) {
    auto row = v_m_.basis().row(i);
    Integer den = 1;
    for (const auto& x : row) den = lcm(den, Integer(x.get_den()));
    IntVector lift(row.size());
    for (std::size_t c = 0; c < row.size(); ++c) lift[c] = Rational(row[c] * Rational(den)).get_num();
    if (field().characteristic() == 0) {
      // Scale to a primitive vector; the scale is what multiplies basis row i.
      Integer g = 0;
      for (const auto& x : lift) g = gcd(g, x);
      for (auto& x : lift) x /= g;
      lift_scales_.push_back(Rational(den, g));
      lift_scales_.back().canonicalize();
    } else {
      lift_scales_.push_back(1);
    }
    lifts_.push_back(std::move(lift));
  }
}

std::size_t GradedPiece::wedge_position(const std::vector<std::size_t>& subset) const {
  const auto& basis = wedge_bases_.at(subset.size());
  auto it = std::lower_bound(basis.begin(), basis.end(), subset);
  if (it == basis.end() || *it != subset)
    fail(ErrorCode::InvalidArgument, "not a wedge basis index");
  return static_cast<std::size_t>(it - basis.begin());
}

FieldVector ambient_wedge(const GradedPiece& piece, std::size_t a, std::size_t k) {
  const Field& f = piece.field();
  const auto& rows = piece.wedge_index(a, k);
  const auto ambient = subsets(piece.ambient_dim(), a);
  FieldVector out;
  out.reserve(ambient.size());
  for (const auto& cols : ambient) {
    FieldMatrix minor(f, a, a);
    for (std::size_t r = 0; r < a; ++r)
      for (std::size_t c = 0; c < a; ++c) minor(r, c) = piece.v_m().basis()(rows[r], cols[c]);
    out.push_back(determinant(minor));
  }
  return out;
}

GradedPiece graded_piece(const Cone& cone, std::span<const Integer> m, const Field& field) {
  return GradedPiece(IntVector(m.begin(), m.end()), v_m(cone, m, field));
}

// ---------------------------------------------------------- FormExpression

namespace {

void normalize_term(FormTerm& t) {
  auto& d = t.differentials;
  // Insertion sort counting transpositions.
  bool odd = false;
  for (std::size_t i = 1; i < d.size(); ++i)
    for (std::size_t j = i; j > 0 && d[j] < d[j - 1]; --j) {
      std::swap(d[j], d[j - 1]);
      odd = !odd;
    }
  if (odd) t.coefficient = -t.coefficient;
  for (std::size_t i = 1; i < d.size(); ++i)
    if (d[i] == d[i - 1]) t.coefficient = 0;
}

bool term_less(const FormTerm& a, const FormTerm& b) {
  if (a.differentials != b.differentials) return a.differentials < b.differentials;
  return a.exponent < b.exponent;
}

}  // namespace

FormExpression::FormExpression(std::vector<FormTerm> terms) {
  for (auto& t : terms) normalize_term(t);
  std::sort(terms.begin(), terms.end(), term_less);
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().differentials == t.differentials &&
        terms_.back().exponent == t.exponent) {
      terms_.back().coefficient += t.coefficient;
    } else {
      terms_.push_back(std::move(t));
    }
  }
  std::erase_if(terms_, [](const FormTerm& t) { return t.coefficient == 0; });
}

std::string FormExpression::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const FormTerm& t = terms_[i];
    Rational mag = abs(t.coefficient);
    if (i == 0) {
      if (t.coefficient < 0) os << '-';
    } else {
      os << (t.coefficient < 0 ? " - " : " + ");
    }
    if (mag != 1) os << mag.get_str() << ' ';
    os << "x^{" << toric::to_string(t.exponent) << '}';
    for (std::size_t j = 0; j < t.differentials.size(); ++j)
      os << (j == 0 ? " " : "∧") << "dx^{" << toric::to_string(t.differentials[j]) << '}';
  }
  return os.str();
}

namespace {

class FormParser {
 public:
  explicit FormParser(std::string_view s) : s_(s) {}

  FormExpression parse() {
    skip_ws();
    if (s_.substr(pos_) == "0") return {};
    std::vector<FormTerm> terms;
    bool negative = consume("-");
    while (true) {
      skip_ws();
      FormTerm t = term();
      if (negative) t.coefficient = -t.coefficient;
      terms.push_back(std::move(t));
      skip_ws();
      if (pos_ == s_.size()) break;
      if (consume("+")) negative = false;
      else if (consume("-")) negative = true;
      else error("expected '+' or '-'");
    }
    return FormExpression(std::move(terms));
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::Parse, "form expression: " + what + " at offset " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool consume(std::string_view tok) {
    if (s_.substr(pos_, tok.size()) != tok) return false;
    pos_ += tok.size();
    return true;
  }

  void expect(std::string_view tok) {
    if (!consume(tok)) error("expected '" + std::string(tok) + "'");
  }

  Integer integer() {
    std::size_t start = pos_;
    if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
    std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) error("expected an integer");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  IntVector vec() {
    expect("{(");
    IntVector v;
    if (!consume(")")) {
      v.push_back(integer());
      while (consume(",")) v.push_back(integer());
      expect(")");
    }
    expect("}");
    return v;
  }

  FormTerm term() {
    FormTerm t;
    t.coefficient = 1;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      Integer num = integer();
      Integer den = 1;
      if (consume("/")) den = integer();
      if (den == 0) error("zero denominator");
      t.coefficient = Rational(num, den);
      t.coefficient.canonicalize();
      skip_ws();
    }
    expect("x^");
    t.exponent = vec();
    std::size_t save = pos_;
    skip_ws();
    if (consume("dx^")) {
      t.differentials.push_back(vec());
      while (consume("∧")) {
        expect("dx^");
        t.differentials.push_back(vec());
      }
    } else {
      pos_ = save;
    }
    for (const auto& d : t.differentials)
      if (d.size() != t.exponent.size()) error("vector length mismatch");
    return t;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

FormExpression FormExpression::parse(std::string_view text) { return FormParser(text).parse(); }

// -------------------------------------------------------------------- f_a

FormExpression to_form(std::span<const Integer> m, const std::vector<IntVector>& factors,
                       const Rational& coefficient) {
  FormTerm t;
  t.coefficient = coefficient;
  t.exponent.assign(m.begin(), m.end());
  for (const auto& f : factors) {
    if (f.size() != m.size()) fail(ErrorCode::DimensionMismatch, "to_form: factor length");
    for (std::size_t i = 0; i < m.size(); ++i) t.exponent[i] -= f[i];
  }
  t.differentials = factors;
  return FormExpression({std::move(t)});
}

FormExpression to_form(const Cone& cone, std::span<const Integer> m,
                       const std::vector<IntVector>& factors) {
  if (m.size() != cone.ambient_rank()) fail(ErrorCode::DimensionMismatch, "to_form: degree");
  return to_form(m, factors);
}

FormExpression to_form(const GradedPiece& piece, std::size_t a, const FieldVector& coords) {
  const auto& basis = piece.wedge_basis(a);
  if (coords.size() != basis.size()) fail(ErrorCode::DimensionMismatch, "to_form: coordinates");
  std::vector<FormTerm> terms;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (coords[k] == 0) continue;
    Rational c = coords[k];
    std::vector<IntVector> factors;
    for (std::size_t i : basis[k]) {
      c /= piece.lift_scale(i);
      factors.push_back(piece.lift(i));
    }
    auto t = to_form(piece.degree(), factors, c).terms();
    terms.insert(terms.end(), t.begin(), t.end());
  }
  return FormExpression(std::move(terms));
}

}  // namespace toric
