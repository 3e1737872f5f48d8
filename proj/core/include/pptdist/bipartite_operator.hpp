// Copyright 2026 The pptdist Authors
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

#ifndef PPTDIST_BIPARTITE_OPERATOR_HPP
#define PPTDIST_BIPARTITE_OPERATOR_HPP

#include <complex>
#include <utility>

#include <Eigen/Dense>

#include "pptdist/errors.hpp"

namespace pptdist {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Relative hermiticity tolerance: an operator counts as hermitian when
// max |X - X^dag| <= kHermiticityTol * max(1, max |X|). Inputs inside the
// tolerance are symmetrized to (X + X^dag)/2 before any spectral work.
inline constexpr double kHermiticityTol = 1e-10;

//=========================================================================
// BipartiteOperator
//=========================================================================

// Dense complex square operator on a dim_a (x) dim_b composite space.
// The composite index convention is row-major over the factors: basis
// vector |i>|j> sits at composite index i * dim_b + j. This convention is
// fixed once here; every identity in the library is exact relative to it.
class BipartiteOperator {
public:
  // Zero operator.
  BipartiteOperator(int dim_a, int dim_b)
      : dim_a_(check_dims(dim_a, dim_b)), dim_b_(dim_b),
        mat_(Matrix::Zero(dim_a * dim_b, dim_a * dim_b)) {}

  BipartiteOperator(int dim_a, int dim_b, Matrix entries)
      : dim_a_(check_dims(dim_a, dim_b)), dim_b_(dim_b),
        mat_(std::move(entries)) {
    if (mat_.rows() != side() || mat_.cols() != side()) {
      throw DimensionMismatchError(
          "BipartiteOperator: entries must be square with side dim_a*dim_b (" +
          std::to_string(side()) + "), got " + std::to_string(mat_.rows()) +
          "x" + std::to_string(mat_.cols()));
    }
  }

  static BipartiteOperator identity(int dim_a, int dim_b) {
    return {dim_a, dim_b, Matrix::Identity(dim_a * dim_b, dim_a * dim_b)};
  }

  int dim_a() const { return dim_a_; }
  int dim_b() const { return dim_b_; }
  int side() const { return dim_a_ * dim_b_; }

  const Matrix &matrix() const { return mat_; }
  Matrix &matrix() { return mat_; }

  Complex operator()(int row, int col) const { return mat_(row, col); }

  // Composite index of basis vector |i>|j>.
  int index(int i, int j) const { return i * dim_b_ + j; }

  Complex trace() const { return mat_.trace(); }
  double frobenius_norm() const { return mat_.norm(); }
  double max_abs() const {
    return mat_.size() == 0 ? 0.0 : mat_.cwiseAbs().maxCoeff();
  }

  // max |X - X^dag| over entries.
  double hermiticity_defect() const {
    return (mat_ - Matrix(mat_.adjoint())).cwiseAbs().maxCoeff();
  }

  bool is_hermitian(double rel_tol = kHermiticityTol) const {
    return hermiticity_defect() <= rel_tol * std::max(1.0, max_abs());
  }

  BipartiteOperator adjoint() const {
    return {dim_a_, dim_b_, Matrix(mat_.adjoint())};
  }

  // (X + X^dag)/2.
  BipartiteOperator symmetrized() const {
    return {dim_a_, dim_b_, Matrix(0.5 * (mat_ + mat_.adjoint()))};
  }

private:
  static int check_dims(int dim_a, int dim_b) {
    if (dim_a < 1 || dim_b < 1) {
      throw InvalidParameterError("BipartiteOperator: factor dimensions must "
                                  "be positive, got dim_a=" +
                                  std::to_string(dim_a) +
                                  " dim_b=" + std::to_string(dim_b));
    }
    return dim_a;
  }

  int dim_a_;
  int dim_b_;
  Matrix mat_;
};

//-------------------------------------------------------------------------
// Arithmetic (dimensions must agree factor-wise)
//-------------------------------------------------------------------------

BipartiteOperator operator+(const BipartiteOperator &x,
                            const BipartiteOperator &y);
BipartiteOperator operator-(const BipartiteOperator &x,
                            const BipartiteOperator &y);
BipartiteOperator operator*(const BipartiteOperator &x,
                            const BipartiteOperator &y);
BipartiteOperator operator*(Complex scale, const BipartiteOperator &x);
inline BipartiteOperator operator*(double scale, const BipartiteOperator &x) {
  return Complex(scale, 0.0) * x;
}
inline BipartiteOperator operator*(const BipartiteOperator &x, double scale) {
  return Complex(scale, 0.0) * x;
}

// tr(X Y) without forming the product.
Complex trace_product(const BipartiteOperator &x, const BipartiteOperator &y);

//-------------------------------------------------------------------------
// Canonical constructions
//-------------------------------------------------------------------------

// Kronecker product of square factors; dim_a = side(x), dim_b = side(y),
// (x kron y)_{(i,j),(k,l)} = x_{ik} y_{jl}.
BipartiteOperator kron(const Matrix &x, const Matrix &y);

// Transposition of the second factor in the fixed computational basis:
// (X^T2)_{(i,j),(k,l)} = X_{(i,l),(k,j)}. An entry permutation, so trace
// and Frobenius norm are preserved and the map is an involution.
BipartiteOperator partial_transpose(const BipartiteOperator &x);

// Flip (swap) operator on d (x) d: F |phi>|psi> = |psi>|phi>, entries
// F_{(i,j),(k,l)} = delta_{il} delta_{jk}.
BipartiteOperator flip_operator(int d);

// Rank-1 projector onto (1/sqrt(m)) sum_i |i>|i>, entries
// (P_m)_{(i,j),(k,l)} = delta_{ij} delta_{kl} / m.
BipartiteOperator max_ent_projector(int m);

// The vector (1/sqrt(m)) sum_i |i>|i> itself.
Vector max_ent_vector(int m);

// Projectors onto the symmetric and antisymmetric subspaces of d (x) d:
// P_pm = (1 pm F)/2, tr P_pm = (d^2 pm d)/2.
std::pair<BipartiteOperator, BipartiteOperator> sym_antisym_projectors(int d);

} // namespace pptdist

#endif // PPTDIST_BIPARTITE_OPERATOR_HPP
