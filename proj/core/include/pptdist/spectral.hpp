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

#ifndef PPTDIST_SPECTRAL_HPP
#define PPTDIST_SPECTRAL_HPP

#include <utility>

#include "pptdist/bipartite_operator.hpp"

namespace pptdist {

// Eigenvalues with |lambda| at or below kSpectralCutTol * max(1, op_norm)
// count as zero when splitting an operator into positive and negative
// parts, and when deciding negativity of a partial transpose. Keeps
// numerical zeros out of the negative eigenspace.
inline constexpr double kSpectralCutTol = 1e-9;

//=========================================================================
// Hermitian spectral analysis
//=========================================================================

struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues; // sorted ascending
  Matrix eigenvectors;         // orthonormal columns, paired with eigenvalues

  // sum_k lambda_k v_k v_k^dag
  Matrix reconstruct() const {
    return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() *
           eigenvectors.adjoint();
  }
};

// Gate for hermitian-required operations: rejects inputs whose hermiticity
// defect exceeds tolerance, returns the symmetrized (X + X^dag)/2 otherwise.
BipartiteOperator require_hermitian(const BipartiteOperator &x,
                                    const char *context);

// Full eigendecomposition of a hermitian operator, eigenvalues ascending.
SpectralDecomposition spectral(const BipartiteOperator &h);

// sum_k |lambda_k|
double trace_norm(const BipartiteOperator &h);

// max_k |lambda_k|
double op_norm(const BipartiteOperator &h);

// h = pos - neg with pos, neg PSD and pos * neg = 0. Eigenvalues inside
// the spectral cut are assigned to neither part.
std::pair<BipartiteOperator, BipartiteOperator>
positive_negative_parts(const BipartiteOperator &h);

// True iff lambda_min >= -tol * max(1, op_norm(h)).
bool psd_check(const BipartiteOperator &h, double tol);

} // namespace pptdist

#endif // PPTDIST_SPECTRAL_HPP
