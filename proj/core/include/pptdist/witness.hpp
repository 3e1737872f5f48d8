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

#ifndef PPTDIST_WITNESS_HPP
#define PPTDIST_WITNESS_HPP

#include <optional>

#include "pptdist/channel.hpp"
#include "pptdist/solver.hpp"
#include "pptdist/states.hpp"

namespace pptdist {

//=========================================================================
// The explicit distillation witness
//=========================================================================

// A = (1/m)(1 - epsilon P_neg^T2) built from the negative eigenspace of
// rho^T2. Feasible for 0 < epsilon <= min{2, 1/||P_neg^T2||_inf}, with
// fidelity tr(rho A) = (1 + epsilon N(rho))/m. For NPT states the maximal
// epsilon certifies a fidelity strictly above 1/m, i.e. distillability
// under PPT-preserving channels.
struct DistillationWitness {
  BipartiteOperator a_op;
  double epsilon;
  int m;
  double fidelity;        // (1 + epsilon * negativity)/m
  double negativity_used; // N(rho) entering the formula
};

// Default epsilon is the maximal feasible value; the fidelity formula is
// increasing in epsilon so this maximizes the certified fidelity. PPT
// inputs give P_neg = 0, A = 1/m identity, fidelity exactly 1/m (epsilon
// fixed to 2 for determinism).
DistillationWitness
build_witness(const DensityOperator &rho, int m,
              std::optional<double> epsilon = std::nullopt);

// Fidelity of the default witness. Cross-checks the closed form
// (1 + epsilon N)/m against the direct trace tr(rho A) to 1e-12.
double witness_fidelity(const DensityOperator &rho, int m);

struct FidelityBound {
  double bound; // trace_norm(rho^T2)/m
  bool tight;   // reachable: ||P_neg^T2||_inf <= 1/2
};

// Upper bound on the maximal fidelity from splitting rho^T2 into positive
// and negative parts; attained by the witness whenever tight.
FidelityBound fidelity_upper_bound(const DensityOperator &rho, int m);

// Closed form for Werner states, p >= 1/2: (d - 2 + 4p)/(m d). Below the
// separable boundary p < 1/2 the state is PPT and the value is 1/m.
double werner_fidelity_analytic(int d, double p, int m);

//=========================================================================
// Aggregate report
//=========================================================================

struct FidelityReport {
  double witness_fidelity;
  double upper_bound;
  bool bound_tight;
  std::optional<double> sdp_fidelity;
  std::optional<double> locc_value; // only when rho lives on m (x) m
  std::optional<int> sdp_iterations;
  std::optional<bool> sdp_converged;
  std::optional<double> sdp_feasibility_residual;
};

FidelityReport full_report(const DensityOperator &rho, int m, bool with_sdp,
                           const SolverOptions &opts = {});

} // namespace pptdist

#endif // PPTDIST_WITNESS_HPP
