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

#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace matchkit::fq {

// Dense matrices over F_p hold residues in [0, p). Rows are vectors: a field
// element is the row of its coordinates in the basis 1, t, ..., t^(m-1), and
// a subspace is stored as the reduced row-echelon matrix of a basis.
using Matrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Row = Eigen::Matrix<int, 1, Eigen::Dynamic>;

int inverse_mod(int a, int p);

template <typename Derived>
void reduce_mod(Eigen::MatrixBase<Derived>& m, int p) {
  m = m.unaryExpr([p](int v) { return ((v % p) + p) % p; });
}

// In-place reduced row-echelon form over F_p. Nonzero rows end up on top in
// ascending pivot order with unit pivots. Returns the rank.
template <typename Derived>
Eigen::Index row_reduce(Eigen::MatrixBase<Derived>& m, int p) {
  reduce_mod(m, p);
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < m.cols() && rank < m.rows(); ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = rank; r < m.rows(); ++r) {
      if (m(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    m.row(pivot).swap(m.row(rank));
    const int scale = inverse_mod(m(rank, col), p);
    m.row(rank) = m.row(rank).unaryExpr([&](int v) { return (v * scale) % p; });
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == rank || m(r, col) == 0) continue;
      const int factor = m(r, col);
      for (Eigen::Index c = col; c < m.cols(); ++c) {
        m(r, c) = ((m(r, c) - factor * m(rank, c)) % p + p) % p;
      }
    }
    ++rank;
  }
  return rank;
}

// Rows x with x * m = 0 over F_p, in reduced row-echelon form.
Matrix left_kernel(const Matrix& m, int p);

class FieldElement {
 public:
  FieldElement() = default;
  explicit FieldElement(Row coeffs) : coeffs_(std::move(coeffs)) {}

  const Row& coeffs() const { return coeffs_; }
  int size() const { return static_cast<int>(coeffs_.size()); }
  bool is_zero() const { return (coeffs_.array() == 0).all(); }

  friend bool operator==(const FieldElement& x, const FieldElement& y) {
    return x.coeffs_.size() == y.coeffs_.size() && x.coeffs_ == y.coeffs_;
  }
  // Canonical element order: the base-p number sum c_i p^i.
  friend std::strong_ordering operator<=>(const FieldElement& x,
                                          const FieldElement& y);

 private:
  Row coeffs_;
};

std::string to_string(const FieldElement& x);

// F_{p^m} = F_p[t] / (modulus). q = p throughout.
class ExtensionField {
 public:
  // Throws InvalidInput if p is not prime, the modulus is malformed or it is
  // reducible over F_p.
  static ExtensionField make(int p, int m, std::vector<int> modulus);
  // Built-in moduli for (2,1..6), (2,8), (2,12), (3,1..4), (5,1..2).
  static ExtensionField standard(int p, int m);
  static std::optional<std::vector<int>> default_modulus(int p, int m);

  int p() const;
  int m() const;
  // Ascending coefficients, length m + 1, leading 1.
  const std::vector<int>& modulus() const;
  std::uint64_t order() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement generator() const;  // t
  // Validates length and range.
  FieldElement element(const std::vector<int>& coeffs) const;
  FieldElement from_code(std::uint64_t code) const;
  std::uint64_t code(const FieldElement& x) const;
  bool contains(const FieldElement& x) const;

  FieldElement add(const FieldElement& x, const FieldElement& y) const;
  FieldElement sub(const FieldElement& x, const FieldElement& y) const;
  FieldElement mul(const FieldElement& x, const FieldElement& y) const;
  FieldElement pow(const FieldElement& x, std::uint64_t e) const;
  // Throws InvalidInput for x = 0.
  FieldElement inv(const FieldElement& x) const;
  FieldElement frobenius(const FieldElement& x) const;  // x^p

  // Row j is (t^j)^p; x^p = x * frobenius_matrix().
  const Matrix& frobenius_matrix() const;
  // Row j is x * t^j.
  Matrix multiplication_matrix(const FieldElement& x) const;

  bool operator==(const ExtensionField& other) const;

 private:
  struct Impl;
  explicit ExtensionField(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
};

std::string to_string(const ExtensionField& field);

ExtensionField make_extension_field(int p, int m, std::vector<int> modulus);

enum class ArithOp { Add, Mul, Inv, Pow };

// y is ignored by Inv and Pow; Pow raises x to `exponent`.
FieldElement field_arith(const ExtensionField& field, const FieldElement& x,
                         const FieldElement& y, ArithOp op,
                         std::uint64_t exponent = 0);

// Least divisor d of m with x^(p^d) = x, i.e. [F_p(x) : F_p].
int minimal_degree(const ExtensionField& field, const FieldElement& x);

std::vector<int> divisors(int m);

// F_p-subspace of F_{p^m} in canonical reduced row-echelon form, so equality
// is structural.
class FqSubspace {
 public:
  explicit FqSubspace(ExtensionField field);  // zero subspace
  FqSubspace(ExtensionField field, Matrix rows);

  static FqSubspace whole(const ExtensionField& field);

  const ExtensionField& field() const { return field_; }
  const Matrix& basis() const { return basis_; }
  int dim() const { return static_cast<int>(basis_.rows()); }
  bool is_zero() const { return basis_.rows() == 0; }

  FieldElement basis_element(int i) const;
  std::vector<FieldElement> basis_elements() const;
  // Column of the leading entry of each basis row.
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(const FieldElement& x) const;
  bool contains(const FqSubspace& other) const;
  // All p^dim elements in code order of their coordinates.
  std::vector<FieldElement> elements() const;

  friend bool operator==(const FqSubspace& u, const FqSubspace& v);
  // Dimension first, then row-major lexicographic order of the bases.
  friend bool operator<(const FqSubspace& u, const FqSubspace& v);

 private:
  ExtensionField field_;
  Matrix basis_;
  std::vector<int> pivots_;
};

std::string to_string(const FqSubspace& u);

FqSubspace span(const ExtensionField& field, const std::vector<FieldElement>& vectors);
FqSubspace sum(const FqSubspace& u, const FqSubspace& v);
FqSubspace intersect(const FqSubspace& u, const FqSubspace& v);
// x * U.
FqSubspace scale(const FieldElement& x, const FqSubspace& u);

// Rows of W's canonical basis, in ascending pivot order, that extend U's
// basis greedily. Throws InvalidInput unless U is contained in W.
std::vector<FieldElement> complement_vectors(const FqSubspace& u, const FqSubspace& w);
// Y with U + Y = W direct.
FqSubspace complement(const FqSubspace& u, const FqSubspace& w);

// span{ s * r }, for s and r over bases. Throws InvalidInput on zero input.
FqSubspace minkowski_span(const FqSubspace& s, const FqSubspace& r);

// Fixed space of x -> x^(p^d); throws InvalidInput unless d | m.
FqSubspace subfield_subspace(const ExtensionField& field, int d);

// d with F_p(R) = F_{p^d}. Throws InvalidInput for R = 0.
int generated_subfield(const FqSubspace& r);

// Largest F-submodule of A: the intersection of f^-1 A over a basis of F.
FqSubspace stable_core(const FqSubspace& a, const FqSubspace& subfield);

struct SubspaceBounds {
  // Largest admitted p^dim for an enumerated space: dim <= 6 over F_2 and
  // dim <= 4 over F_3 by default.
  std::uint64_t max_points = 81;
};

void require_enumerable(const FqSubspace& v, const SubspaceBounds& bounds);

// Every subspace of V (of the listed dimensions, when given), sorted by
// dimension and then by basis.
std::vector<FqSubspace> enumerate_subspaces(const FqSubspace& v,
                                            const std::optional<std::vector<int>>& dims = {},
                                            const SubspaceBounds& bounds = {});

}  // namespace matchkit::fq
