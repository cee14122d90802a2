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

#include "toric/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "toric/error.hpp"

namespace toric {

IntVector make_int_vector(std::initializer_list<long> values) {
  IntVector v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i].get_str();
  }
  os << ')';
  return os.str();
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size()) fail(ErrorCode::DimensionMismatch, "dot: length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(std::span<const Integer> v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

IntVector primitive(IntVector v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0 || g == 1) return v;
  for (auto& x : v) x /= g;
  return v;
}

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::size_t cols, const std::vector<IntVector>& rows) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      fail(ErrorCode::DimensionMismatch, "IntMatrix::from_rows: ragged row");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<IntVector> IntMatrix::row_vectors() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    auto s = row(r);
    out.emplace_back(s.begin(), s.end());
  }
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) fail(ErrorCode::DimensionMismatch, "IntMatrix product");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

// Bareiss fraction-free elimination.
Integer determinant(const IntMatrix& square) {
  if (square.rows() != square.cols())
    fail(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = square.rows();
  if (n == 0) return 1;
  IntMatrix m = square;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      m.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = t;
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace {

// Replaces rows (i, j) by (s*ri + t*rj, -(b/g)*ri + (a/g)*rj), a unimodular
// operation that leaves gcd(a, b) in row i and zero in row j of column c.
void gcd_combine(IntMatrix& m, std::size_t i, std::size_t j, const Integer& s,
                 const Integer& t, const Integer& bg, const Integer& ag) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Integer ri = m(i, c);
    Integer rj = m(j, c);
    m(i, c) = s * ri + t * rj;
    m(j, c) = ag * rj - bg * ri;
  }
}

void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) += k * m(src, c);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}

}  // namespace

HermiteForm hnf(const IntMatrix& a) {
  HermiteForm out{a, IntMatrix::identity(a.rows()), 0};
  IntMatrix& h = out.h;
  IntMatrix& u = out.u;
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    for (std::size_t j = r + 1; j < h.rows(); ++j) {
      if (h(j, c) == 0) continue;
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), h(r, c).get_mpz_t(),
                 h(j, c).get_mpz_t());
      Integer ag = h(r, c) / g;
      Integer bg = h(j, c) / g;
      gcd_combine(h, r, j, s, t, bg, ag);
      gcd_combine(u, r, j, s, t, bg, ag);
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
      add_row_multiple(h, i, r, -q);
      add_row_multiple(u, i, r, -q);
    }
    ++r;
  }
  out.rank = r;
  return out;
}

IntMatrix integer_kernel(const IntMatrix& a) {
  const std::size_t n = a.cols();
  HermiteForm hf = hnf(a.transpose());
  IntMatrix k(n - hf.rank, n);
  for (std::size_t i = hf.rank; i < n; ++i)
    for (std::size_t c = 0; c < n; ++c) k(i - hf.rank, c) = hf.u(i, c);
  return k;
}

SaturatedLattice saturate(const IntMatrix& a) {
  // The double integer kernel is the saturation of the row lattice.
  IntMatrix sat = integer_kernel(integer_kernel(a));
  HermiteForm hf = hnf(sat);
  IntMatrix basis(hf.rank, a.cols());
  for (std::size_t i = 0; i < hf.rank; ++i)
    for (std::size_t c = 0; c < a.cols(); ++c) basis(i, c) = hf.h(i, c);
  return SaturatedLattice(std::move(basis));
}

// -------------------------------------------------------------------- Field

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
    fail(ErrorCode::NotPrime, std::to_string(p) + " is not a prime below 2^31");
  return Field(static_cast<std::uint32_t>(p));
}

Field Field::of_characteristic(std::uint64_t p) { return p == 0 ? rationals() : prime(p); }

Rational Field::from_integer(const Integer& v) const {
  if (p_ == 0) return Rational(v);
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_);
  return Rational(r);
}

Rational Field::reduce(const Rational& v) const {
  if (p_ == 0) return v;
  Rational num = from_integer(v.get_num());
  Rational den = from_integer(v.get_den());
  if (den == 0) fail(ErrorCode::InvalidArgument, "denominator divisible by p");
  return mul(num, inv(den));
}

namespace {
std::uint64_t residue(const Rational& v) { return v.get_num().get_ui(); }
}  // namespace

Rational Field::add(const Rational& a, const Rational& b) const {
  if (p_ == 0) return a + b;
  std::uint64_t s = residue(a) + residue(b);
  return Rational(static_cast<unsigned long>(s % p_));
}

Rational Field::sub(const Rational& a, const Rational& b) const {
  if (p_ == 0) return a - b;
  std::uint64_t s = residue(a) + p_ - residue(b);
  return Rational(static_cast<unsigned long>(s % p_));
}

Rational Field::mul(const Rational& a, const Rational& b) const {
  if (p_ == 0) return a * b;
  std::uint64_t s = residue(a) * residue(b);
  return Rational(static_cast<unsigned long>(s % p_));
}

Rational Field::neg(const Rational& a) const {
  if (p_ == 0) return -a;
  std::uint64_t r = residue(a);
  return Rational(static_cast<unsigned long>(r == 0 ? 0 : p_ - r));
}

Rational Field::inv(const Rational& a) const {
  if (a == 0) fail(ErrorCode::InvalidArgument, "division by zero");
  if (p_ == 0) return 1 / a;
  // Fermat: a^(p-2).
  std::uint64_t base = residue(a), result = 1, e = p_ - 2;
  while (e) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return Rational(static_cast<unsigned long>(result));
}

FieldVector Field::from_integers(std::span<const Integer> v) const {
  FieldVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(from_integer(x));
  return out;
}

// -------------------------------------------------------------- FieldMatrix

FieldMatrix::FieldMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

FieldMatrix FieldMatrix::identity(Field field, std::size_t n) {
  FieldMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FieldMatrix FieldMatrix::from_rows(Field field, std::size_t cols,
                                   const std::vector<FieldVector>& rows) {
  FieldMatrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      fail(ErrorCode::DimensionMismatch, "FieldMatrix::from_rows: ragged row");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = field.reduce(rows[r][c]);
  }
  return m;
}

FieldMatrix FieldMatrix::from_integers(Field field, const IntMatrix& im) {
  FieldMatrix m(field, im.rows(), im.cols());
  for (std::size_t r = 0; r < im.rows(); ++r)
    for (std::size_t c = 0; c < im.cols(); ++c) m(r, c) = field.from_integer(im(r, c));
  return m;
}

FieldVector FieldMatrix::column(std::size_t c) const {
  FieldVector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

bool FieldMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x == 0; });
}

FieldMatrix FieldMatrix::transpose() const {
  FieldMatrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols() != b.rows() || !(a.field() == b.field()))
    fail(ErrorCode::DimensionMismatch, "FieldMatrix product");
  const Field& f = a.field();
  FieldMatrix out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out(i, j) = f.add(out(i, j), f.mul(a(i, k), b(k, j)));
    }
  return out;
}

FieldMatrix hconcat(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.rows() != b.rows() || !(a.field() == b.field()))
    fail(ErrorCode::DimensionMismatch, "hconcat");
  FieldMatrix out(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

EchelonForm rref(const FieldMatrix& a) {
  const Field& f = a.field();
  FieldMatrix m = a;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pr = r;
    while (pr < m.rows() && m(pr, c) == 0) ++pr;
    if (pr == m.rows()) continue;
    if (pr != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pr, j), m(r, j));
    Rational inv = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational k = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        m(i, j) = f.sub(m(i, j), f.mul(k, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  FieldMatrix reduced(f, r, m.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) reduced(i, j) = m(i, j);
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const FieldMatrix& a) { return rref(a).pivots.size(); }

Rational determinant(const FieldMatrix& square) {
  if (square.rows() != square.cols())
    fail(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  const Field& f = square.field();
  const std::size_t n = square.rows();
  FieldMatrix m = square;
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = f.neg(det);
    }
    det = f.mul(det, m(c, c));
    Rational inv = f.inv(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      Rational k = f.mul(m(i, c), inv);
      for (std::size_t j = c; j < n; ++j) m(i, j) = f.sub(m(i, j), f.mul(k, m(c, j)));
    }
  }
  return det;
}

std::optional<FieldVector> solve(const FieldMatrix& a, std::span<const Rational> b) {
  if (b.size() != a.rows()) fail(ErrorCode::DimensionMismatch, "solve: right-hand side");
  const Field& f = a.field();
  FieldMatrix aug(f, a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = f.reduce(b[r]);
  }
  EchelonForm e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  FieldVector x(a.cols(), Rational(0));
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, a.cols());
  return x;
}

// ----------------------------------------------------------------- Subspace

Subspace Subspace::span(const FieldMatrix& generators) {
  EchelonForm e = rref(generators);
  return Subspace(std::move(e.reduced), std::move(e.pivots));
}

Subspace Subspace::span(Field field, std::size_t n, const std::vector<IntVector>& generators) {
  return span(FieldMatrix::from_integers(field, IntMatrix::from_rows(n, generators)));
}

Subspace Subspace::zero(Field field, std::size_t n) { return span(FieldMatrix(field, 0, n)); }

Subspace Subspace::full(Field field, std::size_t n) {
  return span(FieldMatrix::identity(field, n));
}

std::optional<FieldVector> Subspace::coordinates(std::span<const Rational> v) const {
  if (v.size() != ambient_dim()) fail(ErrorCode::DimensionMismatch, "Subspace::coordinates");
  const Field& f = field();
  FieldVector coords;
  coords.reserve(dim());
  for (std::size_t p : pivots_) coords.push_back(f.reduce(v[p]));
  for (std::size_t c = 0; c < ambient_dim(); ++c) {
    Rational acc = 0;
    for (std::size_t i = 0; i < dim(); ++i) acc = f.add(acc, f.mul(coords[i], basis_(i, c)));
    if (acc != f.reduce(v[c])) return std::nullopt;
  }
  return coords;
}

bool Subspace::contains(std::span<const Rational> v) const { return coordinates(v).has_value(); }

bool Subspace::contains(std::span<const Integer> v) const {
  FieldVector fv = field().from_integers(v);
  return contains(std::span<const Rational>(fv));
}

bool Subspace::is_subspace_of(const Subspace& other) const {
  if (!(field() == other.field()) || ambient_dim() != other.ambient_dim())
    fail(ErrorCode::DimensionMismatch, "Subspace::is_subspace_of");
  for (std::size_t i = 0; i < dim(); ++i)
    if (!other.contains(basis_.row(i))) return false;
  return true;
}

Subspace kernel(const FieldMatrix& a) {
  const Field& f = a.field();
  EchelonForm e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<FieldVector> gens;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    FieldVector v(a.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = f.neg(e.reduced(i, free));
    gens.push_back(std::move(v));
  }
  return Subspace::span(FieldMatrix::from_rows(f, a.cols(), gens));
}

namespace {
void check_compatible(const Subspace& a, const Subspace& b, const char* what) {
  if (!(a.field() == b.field()) || a.ambient_dim() != b.ambient_dim())
    fail(ErrorCode::DimensionMismatch, std::string(what) + ": incompatible subspaces");
}
}  // namespace

Subspace sum(const Subspace& a, const Subspace& b) {
  check_compatible(a, b, "sum");
  FieldMatrix stacked(a.field(), a.dim() + b.dim(), a.ambient_dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t c = 0; c < a.ambient_dim(); ++c) stacked(i, c) = a.basis()(i, c);
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t c = 0; c < b.ambient_dim(); ++c) stacked(a.dim() + i, c) = b.basis()(i, c);
  return Subspace::span(stacked);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  check_compatible(a, b, "intersect");
  const Field& f = a.field();
  const std::size_t n = a.ambient_dim();
  // Solutions (x, y) of x*A = y*B, i.e. the kernel of [A; -B]^T.
  FieldMatrix system(f, n, a.dim() + b.dim());
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t i = 0; i < a.dim(); ++i) system(c, i) = a.basis()(i, c);
    for (std::size_t j = 0; j < b.dim(); ++j) system(c, a.dim() + j) = f.neg(b.basis()(j, c));
  }
  Subspace sol = kernel(system);
  std::vector<FieldVector> gens;
  for (std::size_t s = 0; s < sol.dim(); ++s) {
    FieldVector v(n, Rational(0));
    for (std::size_t i = 0; i < a.dim(); ++i) {
      const Rational& x = sol.basis()(s, i);
      if (x == 0) continue;
      for (std::size_t c = 0; c < n; ++c) v[c] = f.add(v[c], f.mul(x, a.basis()(i, c)));
    }
    gens.push_back(std::move(v));
  }
  return Subspace::span(FieldMatrix::from_rows(f, n, gens));
}

Subspace reduce_mod_p(const SaturatedLattice& lattice, std::uint64_t p) {
  Subspace s = Subspace::span(FieldMatrix::from_integers(Field::prime(p), lattice.basis()));
  if (s.dim() != lattice.rank())
    fail(ErrorCode::Internal, "reduction of a saturated lattice lost rank");
  return s;
}

Subspace tensor_with(const SaturatedLattice& lattice, const Field& field) {
  if (field.characteristic() != 0) return reduce_mod_p(lattice, field.characteristic());
  return Subspace::span(FieldMatrix::from_integers(field, lattice.basis()));
}

// ------------------------------------------------------------ sparse_rank

std::size_t sparse_rank(const Field& f, std::vector<SparseVector> vectors) {
  // pivot column -> stored vector whose lowest nonzero index is that column,
  // normalised to 1 there.
  std::map<std::size_t, SparseVector> pivots;
  for (SparseVector& v : vectors) {
    for (auto it = v.begin(); it != v.end();) {
      if (it->second == 0) it = v.erase(it);
      else ++it;
    }
    while (!v.empty()) {
      auto [lead, coeff] = *v.begin();
      auto p = pivots.find(lead);
      if (p == pivots.end()) {
        Rational inv = f.inv(coeff);
        for (auto& [k, x] : v) x = f.mul(x, inv);
        pivots.emplace(lead, std::move(v));
        break;
      }
      Rational k = coeff;
      for (const auto& [idx, x] : p->second) {
        Rational updated = f.sub(v[idx], f.mul(k, x));
        if (updated == 0) v.erase(idx);
        else v[idx] = std::move(updated);
      }
    }
  }
  return pivots.size();
}

}  // namespace toric
