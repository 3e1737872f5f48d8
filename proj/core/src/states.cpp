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

#include "pptdist/states.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace pptdist {

namespace {

// Clamp a trace-derived parameter into [0, 1]; values further than slack
// outside the interval are a genuine input error and propagate as such.
double clamp_unit(double value, const char *context) {
  constexpr double slack = 1e-12;
  if (value < -slack || value > 1.0 + slack) {
    throw InvalidParameterError(std::string(context) +
                                ": parameter out of [0,1]: " +
                                std::to_string(value));
  }
  return std::clamp(value, 0.0, 1.0);
}

} // namespace

DensityOperator DensityOperator::validate(const BipartiteOperator &x,
                                          const DensityTolerances &tol) {
  const double defect = x.hermiticity_defect();
  const double herm_tol = tol.hermiticity * std::max(1.0, x.max_abs());
  if (defect > herm_tol) {
    throw NotHermitianError(
        "density validation: NotHermitian, max |X - X^dag| = " +
            std::to_string(defect) + " exceeds tolerance " +
            std::to_string(herm_tol),
        defect);
  }
  BipartiteOperator sym = x.symmetrized();

  const double trace_defect = std::abs(sym.trace() - Complex(1.0, 0.0));
  if (trace_defect > tol.trace) {
    throw NotUnitTraceError("density validation: NotUnitTrace, |tr - 1| = " +
                                std::to_string(trace_defect) +
                                " exceeds tolerance " +
                                std::to_string(tol.trace),
                            trace_defect);
  }

  const Eigen::VectorXd evals = spectral(sym).eigenvalues;
  const double min_eval = evals(0);
  const double norm = evals.cwiseAbs().maxCoeff();
  if (min_eval < -tol.psd * std::max(1.0, norm)) {
    throw NotPositiveError("density validation: NotPositive, min eigenvalue " +
                               std::to_string(min_eval) +
                               " below PSD tolerance",
                           min_eval);
  }

  return DensityOperator(std::move(sym), tol);
}

DensityOperator werner(int d, double p) {
  if (d < 2) {
    throw InvalidParameterError("werner: d must be >= 2, got " +
                                std::to_string(d));
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidParameterError("werner: p must lie in [0,1], got " +
                                std::to_string(p));
  }
  auto [p_sym, p_anti] = sym_antisym_projectors(d);
  const double r_plus = 0.5 * d * (d + 1);
  const double r_minus = 0.5 * d * (d - 1);
  BipartiteOperator rho =
      ((1.0 - p) / r_plus) * p_sym + (p / r_minus) * p_anti;
  return DensityOperator::validate(rho);
}

DensityOperator isotropic_state(int m, double f) {
  if (m < 2) {
    throw InvalidParameterError("isotropic_state: m must be >= 2, got " +
                                std::to_string(m));
  }
  if (!(f >= 0.0 && f <= 1.0)) {
    throw InvalidParameterError("isotropic_state: f must lie in [0,1], got " +
                                std::to_string(f));
  }
  BipartiteOperator proj = max_ent_projector(m);
  BipartiteOperator rest = BipartiteOperator::identity(m, m) - proj;
  BipartiteOperator rho = f * proj + ((1.0 - f) / (m * m - 1.0)) * rest;
  return DensityOperator::validate(rho);
}

NegativityReport negativity_report(const DensityOperator &rho) {
  const BipartiteOperator pt = partial_transpose(rho.op());
  SpectralDecomposition sd = spectral(pt);
  const double norm = sd.eigenvalues.cwiseAbs().maxCoeff();
  const double cut = kSpectralCutTol * std::max(1.0, norm);

  double negativity = 0.0;
  int rank = 0;
  Matrix projector = Matrix::Zero(pt.side(), pt.side());
  for (int k = 0; k < sd.eigenvalues.size(); ++k) {
    const double lambda = sd.eigenvalues(k);
    if (lambda < -cut) {
      negativity += -lambda;
      projector += sd.eigenvectors.col(k) * sd.eigenvectors.col(k).adjoint();
      ++rank;
    }
  }
  return {negativity,
          BipartiteOperator(rho.dim_a(), rho.dim_b(), std::move(projector)),
          rank, rank >= 1};
}

LoccCriterion locc_criterion(const DensityOperator &rho, int m) {
  if (m < 2) {
    throw InvalidParameterError("locc_criterion: m must be >= 2, got " +
                                std::to_string(m));
  }
  if (rho.dim_a() != m || rho.dim_b() != m) {
    throw DimensionMismatchError(
        "locc_criterion: state lives on " + std::to_string(rho.dim_a()) + "x" +
        std::to_string(rho.dim_b()) + ", expected " + std::to_string(m) + "x" +
        std::to_string(m));
  }
  const double value =
      trace_product(rho.op(), max_ent_projector(m)).real();
  return {value, value > 1.0 / m};
}

DensityOperator twirl_isotropic(const DensityOperator &rho) {
  if (rho.dim_a() != rho.dim_b()) {
    throw DimensionMismatchError("twirl_isotropic: state must live on m x m");
  }
  const int m = rho.dim_a();
  if (m == 1) {
    return rho; // one-dimensional factors: the only state is fixed
  }
  const double f = clamp_unit(
      trace_product(rho.op(), max_ent_projector(m)).real(), "twirl_isotropic");
  return isotropic_state(m, f);
}

DensityOperator twirl_werner(const DensityOperator &rho) {
  if (rho.dim_a() != rho.dim_b()) {
    throw DimensionMismatchError("twirl_werner: state must live on d x d");
  }
  const int d = rho.dim_a();
  if (d < 2) {
    throw DimensionMismatchError("twirl_werner: d must be >= 2");
  }
  auto [p_sym, p_anti] = sym_antisym_projectors(d);
  const double p =
      clamp_unit(trace_product(rho.op(), p_anti).real(), "twirl_werner");
  return werner(d, p);
}

Vector random_unit_vector(int dim, std::mt19937_64 &rng) {
  if (dim < 1) {
    throw InvalidParameterError("random_unit_vector: dim must be >= 1");
  }
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector v(dim);
  double norm2 = 0.0;
  do {
    for (int i = 0; i < dim; ++i) {
      v(i) = Complex(normal(rng), normal(rng));
    }
    norm2 = v.squaredNorm();
  } while (norm2 < 1e-12); // resample degenerate draws
  return v / std::sqrt(norm2);
}

DensityOperator random_ppt_state(int d, std::uint64_t seed, int mixture_size) {
  if (d < 2) {
    throw InvalidParameterError("random_ppt_state: d must be >= 2, got " +
                                std::to_string(d));
  }
  if (mixture_size < 1) {
    throw InvalidParameterError(
        "random_ppt_state: mixture_size must be >= 1, got " +
        std::to_string(mixture_size));
  }
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> expo(1.0);

  std::vector<double> weights(mixture_size);
  double total = 0.0;
  for (double &w : weights) {
    w = expo(rng);
    total += w;
  }

  Matrix rho = Matrix::Zero(d * d, d * d);
  for (int k = 0; k < mixture_size; ++k) {
    const Vector a = random_unit_vector(d, rng);
    const Vector b = random_unit_vector(d, rng);
    const Matrix proj_a = a * a.adjoint();
    const Matrix proj_b = b * b.adjoint();
    rho += (weights[k] / total) * kron(proj_a, proj_b).matrix();
  }
  return DensityOperator::validate(BipartiteOperator(d, d, std::move(rho)));
}

} // namespace pptdist
