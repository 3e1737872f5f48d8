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

#include "pptdist/witness.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace pptdist {

DistillationWitness build_witness(const DensityOperator &rho, int m,
                                  std::optional<double> epsilon) {
  if (m < 2) {
    throw InvalidParameterError("build_witness: m must be >= 2, got " +
                                std::to_string(m));
  }
  const NegativityReport report = negativity_report(rho);
  const BipartiteOperator identity =
      BipartiteOperator::identity(rho.dim_a(), rho.dim_b());

  double eps_cap = 2.0;
  BipartiteOperator direction(rho.dim_a(), rho.dim_b()); // P_neg^T2
  if (report.neg_rank > 0) {
    direction = partial_transpose(report.neg_projector);
    eps_cap = std::min(2.0, 1.0 / op_norm(direction));
  }

  double eps = epsilon.value_or(eps_cap);
  if (!(eps > 0.0) || eps > eps_cap * (1.0 + 1e-12)) {
    throw EpsilonOutOfRangeError(
        "build_witness: EpsilonOutOfRange, epsilon = " + std::to_string(eps) +
        " outside (0, " + std::to_string(eps_cap) + "]");
  }
  eps = std::min(eps, eps_cap);

  const double inv_m = 1.0 / m;
  BipartiteOperator a = report.neg_rank > 0
                            ? inv_m * (identity - eps * direction)
                            : inv_m * identity;
  const double fidelity = (1.0 + eps * report.negativity) / m;

  // The construction guarantees feasibility; check it spectrally anyway
  // rather than trusting the sufficient conditions.
  ConstraintReport constraints = validate_witness_constraints(a, m, 1e-10);
  if (!constraints.all_satisfied()) {
    throw InfeasibleWitnessError(std::move(constraints));
  }

  return {std::move(a), eps, m, fidelity, report.negativity};
}

double witness_fidelity(const DensityOperator &rho, int m) {
  const DistillationWitness witness = build_witness(rho, m);
  const double direct = trace_product(rho.op(), witness.a_op).real();
  if (std::abs(direct - witness.fidelity) > 1e-12) {
    throw Error("witness_fidelity: closed form (1 + eps N)/m = " +
                std::to_string(witness.fidelity) +
                " disagrees with direct trace " + std::to_string(direct));
  }
  return witness.fidelity;
}

FidelityBound fidelity_upper_bound(const DensityOperator &rho, int m) {
  if (m < 2) {
    throw InvalidParameterError("fidelity_upper_bound: m must be >= 2");
  }
  const double bound = trace_norm(partial_transpose(rho.op())) / m;
  const NegativityReport report = negativity_report(rho);
  double pt_norm = 0.0;
  if (report.neg_rank > 0) {
    pt_norm = op_norm(partial_transpose(report.neg_projector));
  }
  return {bound, pt_norm <= 0.5 + 1e-12};
}

double werner_fidelity_analytic(int d, double p, int m) {
  if (d < 2) {
    throw InvalidParameterError("werner_fidelity_analytic: d must be >= 2");
  }
  if (m < 2) {
    throw InvalidParameterError("werner_fidelity_analytic: m must be >= 2");
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidParameterError(
        "werner_fidelity_analytic: p must lie in [0,1], got " +
        std::to_string(p));
  }
  if (p < 0.5) {
    return 1.0 / m; // PPT regime, the witness degenerates to 1/m identity
  }
  return (d - 2.0 + 4.0 * p) / (static_cast<double>(m) * d);
}

FidelityReport full_report(const DensityOperator &rho, int m, bool with_sdp,
                           const SolverOptions &opts) {
  FidelityReport report{};
  report.witness_fidelity = witness_fidelity(rho, m);
  const FidelityBound bound = fidelity_upper_bound(rho, m);
  report.upper_bound = bound.bound;
  report.bound_tight = bound.tight;

  if (rho.dim_a() == m && rho.dim_b() == m) {
    report.locc_value = locc_criterion(rho, m).value;
  }

  if (with_sdp) {
    FidelityResult solved = solve_fidelity(rho, m, opts);
    report.sdp_fidelity = solved.value;
    report.sdp_iterations = solved.iterations;
    report.sdp_converged = solved.converged;
    report.sdp_feasibility_residual = solved.feasibility_residual;
  }
  return report;
}

} // namespace pptdist
