// Copyright 2026 The Authors.
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

#include "matchkit/fq_core.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <utility>

#include "matchkit/error.hpp"

namespace matchkit::fq {

int inverse_mod(int a, int p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) fail(ErrorKind::InvalidInput, "zero has no inverse mod p");
  // Extended Euclid.
  int t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    const int q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return t < 0 ? t + p : t;
}

namespace {

// Right kernel of a (vectors v with a * v = 0), one row per free column.
Matrix right_kernel(Matrix a, int p) {
  const Eigen::Index rank = row_reduce(a, p);
  std::vector<Eigen::Index> pivot_cols;
  std::vector<char> is_pivot(a.cols(), 0);
  for (Eigen::Index r = 0; r < rank; ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      if (a(r, c) != 0) {
        pivot_cols.push_back(c);
        is_pivot[c] = 1;
        break;
      }
    }
  }
  std::vector<Row> rows;
  for (Eigen::Index f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Row v = Row::Zero(a.cols());
    v(f) = 1;
    for (Eigen::Index r = 0; r < rank; ++r) {
      v(pivot_cols[r]) = (p - a(r, f)) % p;
    }
    rows.push_back(std::move(v));
  }
  Matrix out(static_cast<Eigen::Index>(rows.size()), a.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) out.row(static_cast<Eigen::Index>(i)) = rows[i];
  return out;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

// Remainder of f modulo the monic polynomial g (ascending coefficients).
std::vector<int> poly_mod(std::vector<int> f, const std::vector<int>& g, int p) {
  const std::size_t dg = g.size() - 1;
  for (std::size_t k = f.size(); k-- > dg;) {
    const int c = f[k] % p;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dg; ++j) {
      f[k - dg + j] = ((f[k - dg + j] - c * g[j]) % p + p) % p;
    }
  }
  f.resize(std::min(f.size(), dg));
  return f;
}

// Trial division by every monic polynomial of degree 1..m/2.
bool is_irreducible(const std::vector<int>& f, int p) {
  const int m = static_cast<int>(f.size()) - 1;
  std::uint64_t candidates = 0;
  std::uint64_t pk = 1;
  for (int k = 1; k <= m / 2; ++k) {
    pk *= static_cast<std::uint64_t>(p);
    candidates += pk;
    if (candidates > 4'000'000) {
      fail(ErrorKind::InvalidInput, "modulus too large for the irreducibility check");
    }
  }
  for (int k = 1; k <= m / 2; ++k) {
    std::vector<int> g(k + 1, 0);
    g[k] = 1;
    while (true) {
      const auto r = poly_mod(f, g, p);
      if (std::all_of(r.begin(), r.end(), [](int c) { return c == 0; })) return false;
      int i = 0;
      while (i < k && g[i] == p - 1) g[i++] = 0;
      if (i == k) break;
      ++g[i];
    }
  }
  return true;
}

}  // namespace

Matrix left_kernel(const Matrix& m, int p) {
  return right_kernel(m.transpose(), p);
}

// --- FieldElement ----------------------------------------------------------

std::strong_ordering operator<=>(const FieldElement& x, const FieldElement& y) {
  if (x.size() != y.size()) return x.size() <=> y.size();
  for (int i = x.size(); i-- > 0;) {
    if (x.coeffs_(i) != y.coeffs_(i)) return x.coeffs_(i) <=> y.coeffs_(i);
  }
  return std::strong_ordering::equal;
}

std::string to_string(const FieldElement& x) {
  std::string out;
  for (int i = x.size(); i-- > 0;) {
    const int c = x.coeffs()(i);
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (c != 1 || i == 0) out += std::to_string(c);
    if (i >= 1) out += "t";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

// --- ExtensionField --------------------------------------------------------

struct ExtensionField::Impl {
  int p = 2;
  int m = 1;
  std::vector<int> modulus;
  std::uint64_t order = 0;  // 0 when p^m does not fit
  Matrix frobenius;
};

ExtensionField::ExtensionField(std::shared_ptr<const Impl> impl)
    : impl_(std::move(impl)) {}

ExtensionField ExtensionField::make(int p, int m, std::vector<int> modulus) {
  if (!is_prime(p)) fail(ErrorKind::InvalidInput, std::to_string(p) + " is not prime");
  if (p > 997) fail(ErrorKind::InvalidInput, "characteristic too large");
  if (m < 1 || m > 64) fail(ErrorKind::InvalidInput, "degree must lie in [1, 64]");
  if (modulus.size() != static_cast<std::size_t>(m) + 1) {
    fail(ErrorKind::InvalidInput, "modulus must have m + 1 coefficients");
  }
  for (int c : modulus) {
    if (c < 0 || c >= p) fail(ErrorKind::InvalidInput, "modulus coefficient out of range");
  }
  if (modulus.back() != 1) fail(ErrorKind::InvalidInput, "modulus must be monic");
  if (!is_irreducible(modulus, p)) {
    fail(ErrorKind::InvalidInput, "modulus is reducible over F_" + std::to_string(p));
  }
  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->m = m;
  impl->modulus = std::move(modulus);
  std::uint64_t order = 1;
  for (int i = 0; i < m; ++i) {
    if (order > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(p)) {
      order = 0;
      break;
    }
    order *= static_cast<std::uint64_t>(p);
  }
  impl->order = order;
  impl->frobenius = Matrix::Zero(m, m);
  ExtensionField partial(impl);
  FieldElement basis = partial.one();
  for (int j = 0; j < m; ++j) {
    impl->frobenius.row(j) = partial.pow(basis, static_cast<std::uint64_t>(p)).coeffs();
    basis = partial.mul(basis, partial.generator());
  }
  return ExtensionField(std::move(impl));
}

std::optional<std::vector<int>> ExtensionField::default_modulus(int p, int m) {
  static const std::map<std::pair<int, int>, std::vector<int>> table = {
      {{2, 1}, {0, 1}},
      {{2, 2}, {1, 1, 1}},
      {{2, 3}, {1, 1, 0, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 5}, {1, 0, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 0, 0, 0, 1}},
      {{2, 8}, {1, 1, 0, 1, 1, 0, 0, 0, 1}},
      {{2, 12}, {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
      {{3, 1}, {0, 1}},
      {{3, 2}, {1, 0, 1}},
      {{3, 3}, {1, 2, 0, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{5, 1}, {0, 1}},
      {{5, 2}, {2, 0, 1}},
  };
  auto it = table.find({p, m});
  if (it == table.end()) return std::nullopt;
  return it->second;
}

ExtensionField ExtensionField::standard(int p, int m) {
  auto modulus = default_modulus(p, m);
  if (!modulus) {
    fail(ErrorKind::InvalidInput, "no built-in modulus for p = " + std::to_string(p) +
                                      ", m = " + std::to_string(m));
  }
  return make(p, m, *modulus);
}

int ExtensionField::p() const { return impl_->p; }
int ExtensionField::m() const { return impl_->m; }
const std::vector<int>& ExtensionField::modulus() const { return impl_->modulus; }
std::uint64_t ExtensionField::order() const { return impl_->order; }
const Matrix& ExtensionField::frobenius_matrix() const { return impl_->frobenius; }

bool ExtensionField::operator==(const ExtensionField& other) const {
  return impl_ == other.impl_ ||
         (impl_->p == other.impl_->p && impl_->modulus == other.impl_->modulus);
}

FieldElement ExtensionField::zero() const { return FieldElement(Row::Zero(m())); }

FieldElement ExtensionField::one() const {
  Row r = Row::Zero(m());
  r(0) = 1;
  return FieldElement(std::move(r));
}

FieldElement ExtensionField::generator() const {
  if (m() == 1) {
    // t is the root of the linear modulus t + c, i.e. -c.
    Row r(1);
    r(0) = (p() - modulus()[0]) % p();
    return FieldElement(std::move(r));
  }
  Row r = Row::Zero(m());
  r(1) = 1;
  return FieldElement(std::move(r));
}

FieldElement ExtensionField::element(const std::vector<int>& coeffs) const {
  if (coeffs.size() != static_cast<std::size_t>(m())) {
    fail(ErrorKind::InvalidInput, "field element needs " + std::to_string(m()) +
                                      " coefficients, got " + std::to_string(coeffs.size()));
  }
  Row r(m());
  for (int i = 0; i < m(); ++i) {
    if (coeffs[i] < 0 || coeffs[i] >= p()) {
      fail(ErrorKind::InvalidInput, "field coefficient out of range");
    }
    r(i) = coeffs[i];
  }
  return FieldElement(std::move(r));
}

FieldElement ExtensionField::from_code(std::uint64_t code) const {
  if (order() == 0 || code >= order()) fail(ErrorKind::InvalidInput, "element code out of range");
  Row r(m());
  for (int i = 0; i < m(); ++i) {
    r(i) = static_cast<int>(code % static_cast<std::uint64_t>(p()));
    code /= static_cast<std::uint64_t>(p());
  }
  return FieldElement(std::move(r));
}

std::uint64_t ExtensionField::code(const FieldElement& x) const {
  if (order() == 0) fail(ErrorKind::InvalidInput, "field too large for element codes");
  std::uint64_t c = 0;
  for (int i = m(); i-- > 0;) c = c * static_cast<std::uint64_t>(p()) + static_cast<std::uint64_t>(x.coeffs()(i));
  return c;
}

bool ExtensionField::contains(const FieldElement& x) const {
  return x.size() == m() && (x.coeffs().array() >= 0).all() && (x.coeffs().array() < p()).all();
}

FieldElement ExtensionField::add(const FieldElement& x, const FieldElement& y) const {
  Row r = x.coeffs() + y.coeffs();
  reduce_mod(r, p());
  return FieldElement(std::move(r));
}

FieldElement ExtensionField::sub(const FieldElement& x, const FieldElement& y) const {
  Row r = x.coeffs() - y.coeffs();
  reduce_mod(r, p());
  return FieldElement(std::move(r));
}

FieldElement ExtensionField::mul(const FieldElement& x, const FieldElement& y) const {
  const int n = m();
  const int q = p();
  if (x.size() != n || y.size() != n) fail(ErrorKind::InvalidInput, "element size mismatch");
  std::vector<int> prod(2 * n - 1, 0);
  for (int i = 0; i < n; ++i) {
    const int xi = x.coeffs()(i);
    if (xi == 0) continue;
    for (int j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + xi * y.coeffs()(j)) % q;
  }
  const auto rem = poly_mod(std::move(prod), modulus(), q);
  Row r = Row::Zero(n);
  for (std::size_t i = 0; i < rem.size() && i < static_cast<std::size_t>(n); ++i) {
    r(static_cast<Eigen::Index>(i)) = rem[i];
  }
  return FieldElement(std::move(r));
}

FieldElement ExtensionField::pow(const FieldElement& x, std::uint64_t e) const {
  FieldElement result = one();
  FieldElement base = x;
  while (e > 0) {
    if (e & 1u) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

Matrix ExtensionField::multiplication_matrix(const FieldElement& x) const {
  Matrix out(m(), m());
  FieldElement row = x;
  for (int j = 0; j < m(); ++j) {
    out.row(j) = row.coeffs();
    if (j + 1 < m()) row = mul(row, generator());
  }
  return out;
}

FieldElement ExtensionField::inv(const FieldElement& x) const {
  if (!contains(x)) fail(ErrorKind::InvalidInput, "element not in field");
  if (x.is_zero()) fail(ErrorKind::InvalidInput, "zero is not invertible");
  // y * M_x = 1  <=>  M_x^T y^T = e_0.
  const int n = m();
  Matrix aug(n, n + 1);
  aug.leftCols(n) = multiplication_matrix(x).transpose();
  aug.col(n).setZero();
  aug(0, n) = 1;
  row_reduce(aug, p());
  return FieldElement(Row(aug.col(n).transpose()));
}

FieldElement ExtensionField::frobenius(const FieldElement& x) const {
  Row r = x.coeffs() * frobenius_matrix();
  reduce_mod(r, p());
  return FieldElement(std::move(r));
}

std::string to_string(const ExtensionField& field) {
  std::string poly;
  const auto& f = field.modulus();
  for (std::size_t i = f.size(); i-- > 0;) {
    if (f[i] == 0) continue;
    if (!poly.empty()) poly += "+";
    if (f[i] != 1 || i == 0) poly += std::to_string(f[i]);
    if (i >= 1) poly += "t";
    if (i >= 2) poly += "^" + std::to_string(i);
  }
  return "F_" + std::to_string(field.p()) + "^" + std::to_string(field.m()) + " mod " + poly;
}

ExtensionField make_extension_field(int p, int m, std::vector<int> modulus) {
  return ExtensionField::make(p, m, std::move(modulus));
}

FieldElement field_arith(const ExtensionField& field, const FieldElement& x,
                         const FieldElement& y, ArithOp op, std::uint64_t exponent) {
  if (!field.contains(x)) fail(ErrorKind::InvalidInput, "element not in field");
  switch (op) {
    case ArithOp::Add:
      if (!field.contains(y)) fail(ErrorKind::InvalidInput, "element not in field");
      return field.add(x, y);
    case ArithOp::Mul:
      if (!field.contains(y)) fail(ErrorKind::InvalidInput, "element not in field");
      return field.mul(x, y);
    case ArithOp::Inv:
      return field.inv(x);
    case ArithOp::Pow:
      return field.pow(x, exponent);
  }
  fail(ErrorKind::InvalidInput, "unknown arithmetic operation");
}

std::vector<int> divisors(int m) {
  std::vector<int> out;
  for (int d = 1; d <= m; ++d) {
    if (m % d == 0) out.push_back(d);
  }
  return out;
}

int minimal_degree(const ExtensionField& field, const FieldElement& x) {
  if (!field.contains(x)) fail(ErrorKind::InvalidInput, "element not in field");
  if (x.is_zero()) fail(ErrorKind::InvalidInput, "minimal degree of 0 is undefined");
  FieldElement y = x;
  for (int k = 1; k <= field.m(); ++k) {
    y = field.frobenius(y);
    if (field.m() % k == 0 && y == x) return k;
  }
  fail(ErrorKind::InternalInconsistency, "Frobenius orbit longer than the degree");
}

// --- FqSubspace ------------------------------------------------------------

FqSubspace::FqSubspace(ExtensionField field)
    : field_(std::move(field)), basis_(0, field_.m()) {}

FqSubspace::FqSubspace(ExtensionField field, Matrix rows) : field_(std::move(field)) {
  if (rows.cols() != field_.m()) {
    fail(ErrorKind::InvalidInput, "subspace rows must have m coordinates");
  }
  const Eigen::Index rank = row_reduce(rows, field_.p());
  basis_ = rows.topRows(rank);
  for (Eigen::Index r = 0; r < rank; ++r) {
    for (Eigen::Index c = 0; c < basis_.cols(); ++c) {
      if (basis_(r, c) != 0) {
        pivots_.push_back(static_cast<int>(c));
        break;
      }
    }
  }
}

FqSubspace FqSubspace::whole(const ExtensionField& field) {
  return FqSubspace(field, Matrix::Identity(field.m(), field.m()));
}

FieldElement FqSubspace::basis_element(int i) const {
  return FieldElement(Row(basis_.row(i)));
}

std::vector<FieldElement> FqSubspace::basis_elements() const {
  std::vector<FieldElement> out;
  for (int i = 0; i < dim(); ++i) out.push_back(basis_element(i));
  return out;
}

bool FqSubspace::contains(const FieldElement& x) const {
  if (!field_.contains(x)) return false;
  const int p = field_.p();
  Row v = x.coeffs();
  for (int i = 0; i < dim(); ++i) {
    const int c = v(pivots_[i]);
    if (c == 0) continue;
    v -= c * basis_.row(i);
    reduce_mod(v, p);
  }
  return (v.array() == 0).all();
}

bool FqSubspace::contains(const FqSubspace& other) const {
  if (!(field_ == other.field_)) return false;
  for (int i = 0; i < other.dim(); ++i) {
    if (!contains(other.basis_element(i))) return false;
  }
  return true;
}

std::vector<FieldElement> FqSubspace::elements() const {
  const int p = field_.p();
  std::uint64_t count = 1;
  for (int i = 0; i < dim(); ++i) {
    count *= static_cast<std::uint64_t>(p);
    if (count > (std::uint64_t{1} << 20)) {
      fail(ErrorKind::InvalidInput, "subspace too large to list its elements");
    }
  }
  std::vector<FieldElement> out;
  out.reserve(count);
  std::vector<int> coord(dim(), 0);
  for (std::uint64_t k = 0; k < count; ++k) {
    Row v = Row::Zero(field_.m());
    for (int i = 0; i < dim(); ++i) v += coord[i] * basis_.row(i);
    reduce_mod(v, p);
    out.emplace_back(std::move(v));
    for (int i = 0; i < dim(); ++i) {
      if (++coord[i] < p) break;
      coord[i] = 0;
    }
  }
  return out;
}

bool operator==(const FqSubspace& u, const FqSubspace& v) {
  return u.field_ == v.field_ && u.basis_.rows() == v.basis_.rows() &&
         u.basis_ == v.basis_;
}

bool operator<(const FqSubspace& u, const FqSubspace& v) {
  if (u.dim() != v.dim()) return u.dim() < v.dim();
  return std::lexicographical_compare(u.basis_.data(), u.basis_.data() + u.basis_.size(),
                                      v.basis_.data(), v.basis_.data() + v.basis_.size());
}

std::string to_string(const FqSubspace& u) {
  std::string out = "<";
  for (int i = 0; i < u.dim(); ++i) {
    if (i) out += ", ";
    out += to_string(u.basis_element(i));
  }
  return out + ">";
}

namespace {

Matrix stack(const std::vector<FieldElement>& vectors, int m) {
  Matrix rows(static_cast<Eigen::Index>(vectors.size()), m);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != m) fail(ErrorKind::InvalidInput, "vector length mismatch");
    rows.row(static_cast<Eigen::Index>(i)) = vectors[i].coeffs();
  }
  return rows;
}

void require_same_field(const FqSubspace& u, const FqSubspace& v) {
  if (!(u.field() == v.field())) fail(ErrorKind::InvalidInput, "subspaces of different fields");
}

}  // namespace

FqSubspace span(const ExtensionField& field, const std::vector<FieldElement>& vectors) {
  for (const auto& v : vectors) {
    if (!field.contains(v)) fail(ErrorKind::InvalidInput, "vector not in field");
  }
  return FqSubspace(field, stack(vectors, field.m()));
}

FqSubspace sum(const FqSubspace& u, const FqSubspace& v) {
  require_same_field(u, v);
  Matrix rows(u.dim() + v.dim(), u.field().m());
  rows << u.basis(), v.basis();
  return FqSubspace(u.field(), std::move(rows));
}

FqSubspace intersect(const FqSubspace& u, const FqSubspace& v) {
  require_same_field(u, v);
  // Zassenhaus: reduce [U U; V 0]; rows whose left half vanishes span U n V.
  const int m = u.field().m();
  const int p = u.field().p();
  Matrix z = Matrix::Zero(u.dim() + v.dim(), 2 * m);
  z.topLeftCorner(u.dim(), m) = u.basis();
  z.topRightCorner(u.dim(), m) = u.basis();
  z.bottomLeftCorner(v.dim(), m) = v.basis();
  const Eigen::Index rank = row_reduce(z, p);
  std::vector<Eigen::Index> keep;
  for (Eigen::Index r = 0; r < rank; ++r) {
    if ((z.row(r).leftCols(m).array() == 0).all()) keep.push_back(r);
  }
  Matrix rows(static_cast<Eigen::Index>(keep.size()), m);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    rows.row(static_cast<Eigen::Index>(i)) = z.row(keep[i]).rightCols(m);
  }
  return FqSubspace(u.field(), std::move(rows));
}

FqSubspace scale(const FieldElement& x, const FqSubspace& u) {
  const auto& field = u.field();
  Matrix rows(u.dim(), field.m());
  for (int i = 0; i < u.dim(); ++i) {
    rows.row(i) = field.mul(x, u.basis_element(i)).coeffs();
  }
  return FqSubspace(field, std::move(rows));
}

std::vector<FieldElement> complement_vectors(const FqSubspace& u, const FqSubspace& w) {
  require_same_field(u, w);
  if (!w.contains(u)) fail(ErrorKind::InvalidInput, "complement requires U inside W");
  std::vector<FieldElement> added;
  FqSubspace current = u;
  for (int i = 0; i < w.dim() && current.dim() < w.dim(); ++i) {
    FieldElement candidate = w.basis_element(i);
    if (current.contains(candidate)) continue;
    added.push_back(candidate);
    current = sum(current, span(w.field(), {candidate}));
  }
  return added;
}

FqSubspace complement(const FqSubspace& u, const FqSubspace& w) {
  return span(w.field(), complement_vectors(u, w));
}

FqSubspace minkowski_span(const FqSubspace& s, const FqSubspace& r) {
  require_same_field(s, r);
  if (s.is_zero() || r.is_zero()) {
    fail(ErrorKind::InvalidInput, "minkowski_span needs nonzero subspaces");
  }
  const auto& field = s.field();
  Matrix rows(s.dim() * r.dim(), field.m());
  Eigen::Index k = 0;
  for (int i = 0; i < s.dim(); ++i) {
    const FieldElement a = s.basis_element(i);
    for (int j = 0; j < r.dim(); ++j) {
      rows.row(k++) = field.mul(a, r.basis_element(j)).coeffs();
    }
  }
  return FqSubspace(field, std::move(rows));
}

FqSubspace subfield_subspace(const ExtensionField& field, int d) {
  if (d < 1 || field.m() % d != 0) {
    fail(ErrorKind::InvalidInput, std::to_string(d) + " does not divide m = " +
                                      std::to_string(field.m()));
  }
  const int p = field.p();
  Matrix power = Matrix::Identity(field.m(), field.m());
  for (int i = 0; i < d; ++i) {
    power = power * field.frobenius_matrix();
    reduce_mod(power, p);
  }
  Matrix shifted = power - Matrix::Identity(field.m(), field.m());
  reduce_mod(shifted, p);
  return FqSubspace(field, left_kernel(shifted, p));
}

int generated_subfield(const FqSubspace& r) {
  if (r.is_zero()) fail(ErrorKind::InvalidInput, "generated subfield of the zero space");
  int d = 1;
  for (int i = 0; i < r.dim(); ++i) {
    d = std::lcm(d, minimal_degree(r.field(), r.basis_element(i)));
  }
  return d;
}

FqSubspace stable_core(const FqSubspace& a, const FqSubspace& subfield) {
  require_same_field(a, subfield);
  const auto& field = a.field();
  if (!subfield.contains(field.one()) || !(minkowski_span(subfield, subfield) == subfield)) {
    fail(ErrorKind::InvalidInput, "stable_core needs a subfield");
  }
  FqSubspace core = a;
  for (int i = 0; i < subfield.dim() && !core.is_zero(); ++i) {
    core = intersect(core, scale(field.inv(subfield.basis_element(i)), a));
  }
  return core;
}

void require_enumerable(const FqSubspace& v, const SubspaceBounds& bounds) {
  std::uint64_t points = 1;
  for (int i = 0; i < v.dim(); ++i) {
    points *= static_cast<std::uint64_t>(v.field().p());
    if (points > bounds.max_points) {
      fail(ErrorKind::InvalidInput,
           "subspace enumeration bound exceeded: " + std::to_string(v.field().p()) + "^" +
               std::to_string(v.dim()) + " > " + std::to_string(bounds.max_points));
    }
  }
}

std::vector<FqSubspace> enumerate_subspaces(const FqSubspace& v,
                                            const std::optional<std::vector<int>>& dims,
                                            const SubspaceBounds& bounds) {
  require_enumerable(v, bounds);
  const int k = v.dim();
  const int p = v.field().p();
  std::vector<FqSubspace> out;
  for (int r = 0; r <= k; ++r) {
    if (dims && std::find(dims->begin(), dims->end(), r) == dims->end()) continue;
    // Every r x k reduced echelon matrix C over F_p, mapped to C * basis(V).
    std::vector<int> pivot(r);
    std::iota(pivot.begin(), pivot.end(), 0);
    while (true) {
      std::vector<char> is_pivot(k, 0);
      for (int c : pivot) is_pivot[c] = 1;
      std::vector<std::pair<int, int>> free;
      for (int i = 0; i < r; ++i) {
        for (int c = pivot[i] + 1; c < k; ++c) {
          if (!is_pivot[c]) free.emplace_back(i, c);
        }
      }
      std::vector<int> value(free.size(), 0);
      while (true) {
        Matrix coeff = Matrix::Zero(r, k);
        for (int i = 0; i < r; ++i) coeff(i, pivot[i]) = 1;
        for (std::size_t f = 0; f < free.size(); ++f) {
          coeff(free[f].first, free[f].second) = value[f];
        }
        Matrix rows = coeff * v.basis();
        out.emplace_back(v.field(), std::move(rows));
        std::size_t f = 0;
        while (f < free.size() && value[f] == p - 1) value[f++] = 0;
        if (f == free.size()) break;
        ++value[f];
      }
      int i = r;
      while (i > 0 && pivot[i - 1] == k - r + (i - 1)) --i;
      if (i == 0) break;
      ++pivot[i - 1];
      for (int j = i; j < r; ++j) pivot[j] = pivot[j - 1] + 1;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace matchkit::fq
