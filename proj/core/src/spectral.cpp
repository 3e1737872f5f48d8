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

#include "pptdist/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace pptdist {

BipartiteOperator require_hermitian(const BipartiteOperator &x,
                                    const char *context) {
  const double defect = x.hermiticity_defect();
  const double tol = kHermiticityTol * std::max(1.0, x.max_abs());
  if (defect > tol) {
    throw NotHermitianError(std::string(context) +
                                ": input is not hermitian (max |X - X^dag| = " +
                                std::to_string(defect) + " exceeds tolerance " +
                                std::to_string(tol) + ")",
                            defect);
  }
  return x.symmetrized();
}

SpectralDecomposition spectral(const BipartiteOperator &h) {
  BipartiteOperator sym = require_hermitian(h, "spectral");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym.matrix());
  if (solver.info() != Eigen::Success) {
    throw Error("spectral: eigendecomposition did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

double trace_norm(const BipartiteOperator &h) {
  return spectral(h).eigenvalues.cwiseAbs().sum();
}

double op_norm(const BipartiteOperator &h) {
  const Eigen::VectorXd evals = spectral(h).eigenvalues;
  return evals.size() == 0 ? 0.0 : evals.cwiseAbs().maxCoeff();
}

std::pair<BipartiteOperator, BipartiteOperator>
positive_negative_parts(const BipartiteOperator &h) {
  SpectralDecomposition sd = spectral(h);
  const double norm = sd.eigenvalues.cwiseAbs().maxCoeff();
  const double cut = kSpectralCutTol * std::max(1.0, norm);

  Matrix pos = Matrix::Zero(h.side(), h.side());
  Matrix neg = Matrix::Zero(h.side(), h.side());
  for (int k = 0; k < sd.eigenvalues.size(); ++k) {
    const double lambda = sd.eigenvalues(k);
    if (std::abs(lambda) <= cut) {
      continue;
    }
    const Matrix proj =
        sd.eigenvectors.col(k) * sd.eigenvectors.col(k).adjoint();
    if (lambda > 0) {
      pos += lambda * proj;
    } else {
      neg += -lambda * proj;
    }
  }
  return {BipartiteOperator(h.dim_a(), h.dim_b(), std::move(pos)),
          BipartiteOperator(h.dim_a(), h.dim_b(), std::move(neg))};
}

bool psd_check(const BipartiteOperator &h, double tol) {
  if (tol < 0) {
    throw InvalidParameterError("psd_check: tol must be nonnegative");
  }
  const Eigen::VectorXd evals = spectral(h).eigenvalues;
  const double norm = evals.cwiseAbs().maxCoeff();
  return evals(0) >= -tol * std::max(1.0, norm);
}

} // namespace pptdist
