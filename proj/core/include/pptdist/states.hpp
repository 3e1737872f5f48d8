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

#ifndef PPTDIST_STATES_HPP
#define PPTDIST_STATES_HPP

#include <cstdint>
#include <random>

#include "pptdist/bipartite_operator.hpp"
#include "pptdist/spectral.hpp"

namespace pptdist {

//=========================================================================
// Validated density operators
//=========================================================================

struct DensityTolerances {
  double hermiticity = kHermiticityTol; // relative, see BipartiteOperator
  double trace = 1e-10;                 // |tr - 1|
  double psd = 1e-9;                    // psd_check tolerance
};

// A quantum state: hermitian, PSD, unit trace. Validation is strict --
// the trace is never silently renormalized. Inputs within the hermiticity
// tolerance are stored symmetrized.
class DensityOperator {
public:
  // Throws NotHermitianError / NotUnitTraceError / NotPositiveError, each
  // naming the violated invariant and the magnitude of the violation.
  static DensityOperator validate(const BipartiteOperator &x,
                                  const DensityTolerances &tol = {});

  const BipartiteOperator &op() const { return op_; }
  int dim_a() const { return op_.dim_a(); }
  int dim_b() const { return op_.dim_b(); }
  const DensityTolerances &tolerances() const { return tol_; }

private:
  DensityOperator(BipartiteOperator op, DensityTolerances tol)
      : op_(std::move(op)), tol_(tol) {}

  BipartiteOperator op_;
  DensityTolerances tol_;
};

//=========================================================================
// Negativity
//=========================================================================

struct NegativityReport {
  double negativity;             // sum |negative eigenvalues of rho^T2|
  BipartiteOperator neg_projector; // P_neg, projector onto that eigenspace
  int neg_rank;
  bool is_npt; // neg_rank >= 1
};

//=========================================================================
// Operations
//=========================================================================

// U (x) U invariant family on d (x) d: (1-p) P_+/r_+ + p P_-/r_- with
// r_pm = (d^2 pm d)/2 and antisymmetric weight p in [0, 1].
DensityOperator werner(int d, double p);

// U (x) Ubar invariant family on m (x) m: f P_m + (1-f)(1 - P_m)/(m^2 - 1)
// with fidelity parameter f in [0, 1].
DensityOperator isotropic_state(int m, double f);

// Negative eigenspace of rho^T2: negativity, projector, rank, NPT flag.
// An eigenvalue counts as negative only below the spectral cut, so
// numerical zeros never flag a state as NPT.
NegativityReport negativity_report(const DensityOperator &rho);

struct LoccCriterion {
  double value; // tr(rho P_m)
  bool passes;  // value > 1/m, strict
};

// Overlap with the maximally entangled projector; above 1/m the state is
// distillable by standard recurrence protocols. rho must live on m (x) m.
LoccCriterion locc_criterion(const DensityOperator &rho, int m);

// Exact projection onto the isotropic family, preserving tr(rho P_m).
DensityOperator twirl_isotropic(const DensityOperator &rho);

// Exact projection onto the Werner family, preserving tr(rho F).
DensityOperator twirl_werner(const DensityOperator &rho);

// Seeded convex mixture of random pure product states; separable hence
// PPT by construction. Amplitudes are complex-normal, mixture weights
// uniform on the simplex.
DensityOperator random_ppt_state(int d, std::uint64_t seed, int mixture_size);

// Haar-like random unit vector with complex-normal amplitudes.
Vector random_unit_vector(int dim, std::mt19937_64 &rng);

} // namespace pptdist

#endif // PPTDIST_STATES_HPP
