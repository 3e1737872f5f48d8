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

#ifndef PPTDIST_SOLVER_HPP
#define PPTDIST_SOLVER_HPP

#include <optional>
#include <vector>

#include "pptdist/states.hpp"

namespace pptdist {

//=========================================================================
// Numerical maximization of tr(rho A) over the witness constraint set
//=========================================================================
//
// The feasible set is the intersection of two spectral boxes,
//   S1 = { 0 <= A <= 1 },   S2 = { -1 <= m A^T2 <= 1 },
// each with an exact Frobenius-nearest projection (eigenvalue clamping;
// for S2 in the partially transposed frame, which is a Frobenius
// isometry). The solver runs projected gradient ascent on the linear
// objective, projecting onto S1 cap S2 with Dykstra's algorithm.

struct SolverOptions {
  double tol = 1e-7;         // objective-change stopping threshold
  int max_outer = 5000;      // ascent iterations
  int max_dykstra = 500;     // Dykstra sweeps per projection
  double dykstra_tol = 1e-10; // Frobenius-change stopping threshold
  std::optional<double> step; // nullopt: auto, 0.5 / ||rho||_F
};

// Frobenius-nearest operator with spectrum clamped into [lo, hi].
BipartiteOperator project_interval(const BipartiteOperator &h, double lo,
                                   double hi);

// Projection onto S1.
BipartiteOperator project_box_constraint(const BipartiteOperator &h);

// Projection onto S2, computed exactly in the transposed frame.
BipartiteOperator project_pt_constraint(const BipartiteOperator &h, int m);

// Worst spectral violation of the four constraint faces at a.
double feasibility_residual(const BipartiteOperator &a, int m);

struct DykstraResult {
  BipartiteOperator point;
  int iterations;
  bool converged;
  double residual; // feasibility residual of the returned point
};

// Nearest point of S1 cap S2 by Dykstra's alternating projections. The
// intersection contains 1/m * identity, hence is nonempty. On hitting
// max_dykstra the best iterate is returned flagged, never thrown.
DykstraResult dykstra_project(const BipartiteOperator &h, int m,
                              const SolverOptions &opts = {});

struct FidelityResult {
  double value;             // tr(rho A) at the final iterate
  BipartiteOperator a_opt;
  int iterations;
  bool converged;
  double feasibility_residual;
  double duality_gap_proxy; // trace_norm(rho^T2)/m - value
  std::vector<double> objective_history; // accepted iterates, nondecreasing
};

// Maximal distillation fidelity: ascent from the interior point
// 1/m * identity (objective exactly 1/m) with Dykstra projections; stops
// once the objective stalls for 10 iterations and the iterate is feasible
// to 1e-8. Composite sides above 100 are refused.
FidelityResult solve_fidelity(const DensityOperator &rho, int m,
                              const SolverOptions &opts = {});

} // namespace pptdist

#endif // PPTDIST_SOLVER_HPP
