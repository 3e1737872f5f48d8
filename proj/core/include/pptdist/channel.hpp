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

#ifndef PPTDIST_CHANNEL_HPP
#define PPTDIST_CHANNEL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pptdist/states.hpp"

namespace pptdist {

//=========================================================================
// Witness feasibility
//=========================================================================

// One spectral face of the feasible set: margin is the signed distance to
// the face (nonnegative when satisfied), worst_eigenvalue the eigenvalue
// of the constrained operator that attains it.
struct ConstraintCheck {
  std::string name;
  bool satisfied;
  double worst_eigenvalue;
  double margin;
};

struct ConstraintReport {
  std::vector<ConstraintCheck> checks;
  double tolerance;

  bool all_satisfied() const {
    for (const auto &c : checks) {
      if (!c.satisfied) {
        return false;
      }
    }
    return true;
  }

  // Largest violation across faces; zero when feasible.
  double worst_violation() const {
    double worst = 0.0;
    for (const auto &c : checks) {
      worst = std::max(worst, -c.margin);
    }
    return std::max(worst, 0.0);
  }

  std::string summary() const;
};

// Spectral margins of the four one-sided constraints
//   0 <= A, A <= 1, -1 <= m A^T2, m A^T2 <= 1
// which characterize the operators A inducing PPT-preserving channels.
ConstraintReport validate_witness_constraints(const BipartiteOperator &a,
                                              int m, double tol = 1e-8);

class InfeasibleWitnessError : public Error {
public:
  explicit InfeasibleWitnessError(ConstraintReport report)
      : Error("InfeasibleWitness: " + report.summary()),
        report_(std::move(report)) {}
  const ConstraintReport &report() const { return report_; }

private:
  ConstraintReport report_;
};

//=========================================================================
// The two-parameter channel family
//=========================================================================

// T(rho) = tr[rho B] (1 - P_m) + tr[rho A] P_m, with B = (1 - A)/(m^2 - 1)
// so that T is trace preserving. Inputs live on d (x) d, outputs on
// m (x) m. For A inside the constraint set the map is PPT-preserving and
// completely positive.
class PptChannel {
public:
  const BipartiteOperator &a_op() const { return a_; }
  const BipartiteOperator &b_op() const { return b_; }
  int m() const { return m_; }
  int d() const { return d_; }

private:
  PptChannel(BipartiteOperator a, BipartiteOperator b, int m, int d)
      : a_(std::move(a)), b_(std::move(b)), m_(m), d_(d) {}

  friend PptChannel make_channel(const BipartiteOperator &, int, double);
  friend PptChannel make_channel_unchecked(const BipartiteOperator &, int);

  BipartiteOperator a_;
  BipartiteOperator b_;
  int m_;
  int d_;
};

// Validates the witness constraints and builds the channel; throws
// InfeasibleWitnessError carrying the full report on failure.
PptChannel make_channel(const BipartiteOperator &a, int m, double tol = 1e-8);

// Skips validation. For diagnostics of infeasible operators only; the
// resulting map may fail to be PPT-preserving or positive.
PptChannel make_channel_unchecked(const BipartiteOperator &a, int m);

// Channel action on a state; the output is a validated isotropic state on
// m (x) m with tr(P_m out) = tr(rho A).
DensityOperator apply(const PptChannel &ch, const DensityOperator &rho);

// Linear extension to arbitrary operators on the input space (no
// positivity or trace assumptions).
BipartiteOperator apply_to_operator(const PptChannel &ch,
                                    const BipartiteOperator &x);

// Kraus decomposition: (m^2 - 1) * d^2 operators |e_alpha><f_beta| sqrt(B)
// over an orthonormal basis of range(1 - P_m), followed by d^2 operators
// |psi_m><f_beta| sqrt(A). Each is m^2 x d^2; together they satisfy
// sum K^dag K = (m^2-1) B + A = 1 and reproduce apply().
std::vector<Matrix> kraus_operators(const PptChannel &ch);

// Choi matrix assembled from the Kraus list, an operator on the d^2 (x) m^2
// composite space; PSD iff the channel is completely positive.
BipartiteOperator choi_matrix(const PptChannel &ch);

//=========================================================================
// Empirical PPT-preservation check
//=========================================================================

struct PptSample {
  std::string kind; // "adversarial", "ppt", "pure"
  double min_eigenvalue;
};

struct PptPreservationReport {
  std::vector<PptSample> samples;
  double worst_min_eigenvalue;
  bool passes; // all min eigenvalues >= -1e-9
};

// Samples PSD sigma (eigenvectors of A^T2 first -- violations of the
// transpose-face constraints are witnessed exactly there -- then random
// PPT states and random pure projectors) and checks T(sigma^T2)^T2 >= 0.
PptPreservationReport verify_ppt_preserving(const PptChannel &ch, int samples,
                                            std::uint64_t seed);

} // namespace pptdist

#endif // PPTDIST_CHANNEL_HPP
