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

#include "pptdist/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace pptdist {

namespace {

constexpr double kFeasibilityTarget = 1e-8;
constexpr int kStallIterations = 10;

} // namespace

BipartiteOperator project_interval(const BipartiteOperator &h, double lo,
                                   double hi) {
  if (lo > hi) {
    throw InvalidParameterError("project_interval: lo > hi (" +
                                std::to_string(lo) + " > " +
                                std::to_string(hi) + ")");
  }
  SpectralDecomposition sd = spectral(h);
  Eigen::VectorXd clamped = sd.eigenvalues.cwiseMax(lo).cwiseMin(hi);
  Matrix out = sd.eigenvectors * clamped.cast<Complex>().asDiagonal() *
               sd.eigenvectors.adjoint();
  return BipartiteOperator(h.dim_a(), h.dim_b(), std::move(out))
      .symmetrized();
}

BipartiteOperator project_box_constraint(const BipartiteOperator &h) {
  return project_interval(h, 0.0, 1.0);
}

BipartiteOperator project_pt_constraint(const BipartiteOperator &h, int m) {
  if (m < 2) {
    throw InvalidParameterError("project_pt_constraint: m must be >= 2");
  }
  const double bound = 1.0 / m;
  return partial_transpose(
      project_interval(partial_transpose(h), -bound, bound));
}

double feasibility_residual(const BipartiteOperator &a, int m) {
  const Eigen::VectorXd direct = spectral(a).eigenvalues;
  const Eigen::VectorXd transposed =
      spectral(partial_transpose(a)).eigenvalues;
  const double lo = direct(0);
  const double hi = direct(direct.size() - 1);
  const double pt_lo = m * transposed(0);
  const double pt_hi = m * transposed(transposed.size() - 1);
  double worst = 0.0;
  worst = std::max(worst, -lo);
  worst = std::max(worst, hi - 1.0);
  worst = std::max(worst, -(pt_lo + 1.0));
  worst = std::max(worst, pt_hi - 1.0);
  return worst;
}

DykstraResult dykstra_project(const BipartiteOperator &h, int m,
                              const SolverOptions &opts) {
  BipartiteOperator x = require_hermitian(h, "dykstra_project");
  BipartiteOperator p(x.dim_a(), x.dim_b());
  BipartiteOperator q(x.dim_a(), x.dim_b());

  int iteration = 0;
  for (; iteration < opts.max_dykstra; ++iteration) {
    const BipartiteOperator y = project_box_constraint(x + p);
    p = x + p - y;
    const BipartiteOperator x_next = project_pt_constraint(y + q, m);
    q = y + q - x_next;

    const double change = (x_next - x).frobenius_norm();
    x = x_next;
    if (change < opts.dykstra_tol) {
      // x sits in S2 exactly; only the S1 faces can still be off.
      const double residual = feasibility_residual(x, m);
      if (residual <= kFeasibilityTarget) {
        return {std::move(x), iteration + 1, true, residual};
      }
    }
  }
  return {x, iteration, false, feasibility_residual(x, m)};
}

FidelityResult solve_fidelity(const DensityOperator &rho, int m,
                              const SolverOptions &opts) {
  if (m < 2) {
    throw InvalidParameterError("solve_fidelity: m must be >= 2, got " +
                                std::to_string(m));
  }
  if (rho.op().side() > 100) {
    throw InvalidParameterError(
        "solve_fidelity: composite side " + std::to_string(rho.op().side()) +
        " exceeds the dense-eigensolver cap of 100");
  }

  const BipartiteOperator &target = rho.op();
  BipartiteOperator a =
      (1.0 / m) * BipartiteOperator::identity(rho.dim_a(), rho.dim_b());
  double objective = trace_product(target, a).real();

  double step = opts.step.value_or(0.5 / target.frobenius_norm());
  const double min_step = 1e-14 * std::max(1.0, std::abs(step));

  std::vector<double> history;
  history.push_back(objective);

  int stall = 0;
  bool converged = false;
  int iteration = 0;
  for (; iteration < opts.max_outer; ++iteration) {
    const BipartiteOperator candidate_raw = a + step * target;
    DykstraResult projected = dykstra_project(candidate_raw, m, opts);
    const double candidate_obj =
        trace_product(target, projected.point).real();

    if (candidate_obj < objective - 1e-12) {
      // Projection inexactness can shave the ascent guarantee; backtrack.
      step *= 0.5;
      if (step < min_step) {
        break;
      }
      continue;
    }

    const double change = candidate_obj - objective;
    a = std::move(projected.point);
    objective = candidate_obj;
    history.push_back(objective);

    stall = (change < opts.tol) ? stall + 1 : 0;
    if (stall >= kStallIterations) {
      if (feasibility_residual(a, m) <= kFeasibilityTarget) {
        converged = true;
        break;
      }
      stall = 0;
    }
  }

  const double residual = feasibility_residual(a, m);
  const double gap = trace_norm(partial_transpose(target)) / m - objective;
  return {objective,  std::move(a), iteration, converged,
          residual,   gap,          std::move(history)};
}

} // namespace pptdist
