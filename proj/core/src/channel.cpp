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

#include "pptdist/channel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace pptdist {

namespace {

// Square root of a PSD operator via its eigendecomposition. Eigenvalues
// inside [-cut, 0] are clamped to zero so tolerance-level negatives cannot
// produce imaginary entries.
Matrix psd_sqrt(const BipartiteOperator &h) {
  SpectralDecomposition sd = spectral(h);
  Eigen::VectorXd clamped = sd.eigenvalues.cwiseMax(0.0);
  return sd.eigenvectors *
         clamped.cwiseSqrt().cast<Complex>().asDiagonal() *
         sd.eigenvectors.adjoint();
}

void check_input_dims(const PptChannel &ch, const BipartiteOperator &x,
                      const char *context) {
  if (x.dim_a() != ch.d() || x.dim_b() != ch.d()) {
    throw DimensionMismatchError(
        std::string(context) + ": input lives on " + std::to_string(x.dim_a()) +
        "x" + std::to_string(x.dim_b()) + ", channel expects " +
        std::to_string(ch.d()) + "x" + std::to_string(ch.d()));
  }
}

} // namespace

std::string ConstraintReport::summary() const {
  std::ostringstream out;
  for (size_t i = 0; i < checks.size(); ++i) {
    if (i > 0) {
      out << ", ";
    }
    out << checks[i].name << (checks[i].satisfied ? " ok" : " VIOLATED")
        << " (margin " << checks[i].margin << ")";
  }
  return out.str();
}

ConstraintReport validate_witness_constraints(const BipartiteOperator &a,
                                              int m, double tol) {
  if (m < 2) {
    throw InvalidParameterError(
        "validate_witness_constraints: m must be >= 2, got " +
        std::to_string(m));
  }
  BipartiteOperator sym = require_hermitian(a, "validate_witness_constraints");

  const Eigen::VectorXd direct = spectral(sym).eigenvalues;
  const Eigen::VectorXd transposed =
      spectral(partial_transpose(sym)).eigenvalues;
  const double lo = direct(0);
  const double hi = direct(direct.size() - 1);
  const double pt_lo = m * transposed(0);
  const double pt_hi = m * transposed(transposed.size() - 1);

  ConstraintReport report;
  report.tolerance = tol;
  report.checks = {
      {"0 <= A", lo >= -tol, lo, lo},
      {"A <= 1", 1.0 - hi >= -tol, hi, 1.0 - hi},
      {"-1 <= m*A^T2", pt_lo + 1.0 >= -tol, pt_lo, pt_lo + 1.0},
      {"m*A^T2 <= 1", 1.0 - pt_hi >= -tol, pt_hi, 1.0 - pt_hi},
  };
  return report;
}

PptChannel make_channel(const BipartiteOperator &a, int m, double tol) {
  ConstraintReport report = validate_witness_constraints(a, m, tol);
  if (!report.all_satisfied()) {
    throw InfeasibleWitnessError(std::move(report));
  }
  return make_channel_unchecked(a, m);
}

PptChannel make_channel_unchecked(const BipartiteOperator &a, int m) {
  if (m < 2) {
    throw InvalidParameterError("make_channel: m must be >= 2, got " +
                                std::to_string(m));
  }
  if (a.dim_a() != a.dim_b()) {
    throw DimensionMismatchError(
        "make_channel: witness must live on d x d, got " +
        std::to_string(a.dim_a()) + "x" + std::to_string(a.dim_b()));
  }
  BipartiteOperator sym = a.symmetrized();
  const int d = sym.dim_a();
  BipartiteOperator b =
      (1.0 / (static_cast<double>(m) * m - 1.0)) *
      (BipartiteOperator::identity(d, d) - sym);
  return PptChannel(std::move(sym), std::move(b), m, d);
}

BipartiteOperator apply_to_operator(const PptChannel &ch,
                                    const BipartiteOperator &x) {
  check_input_dims(ch, x, "apply_to_operator");
  const Complex weight_b = trace_product(x, ch.b_op());
  const Complex weight_a = trace_product(x, ch.a_op());
  BipartiteOperator proj = max_ent_projector(ch.m());
  BipartiteOperator rest =
      BipartiteOperator::identity(ch.m(), ch.m()) - proj;
  return weight_b * rest + weight_a * proj;
}

DensityOperator apply(const PptChannel &ch, const DensityOperator &rho) {
  check_input_dims(ch, rho.op(), "apply");
  return DensityOperator::validate(apply_to_operator(ch, rho.op()));
}

std::vector<Matrix> kraus_operators(const PptChannel &ch) {
  const int m = ch.m();
  const int d = ch.d();
  const int out_side = m * m;
  const int in_side = d * d;

  const Matrix sqrt_a = psd_sqrt(ch.a_op());
  const Matrix sqrt_b = psd_sqrt(ch.b_op());

  // Orthonormal basis of range(1 - P_m): the eigenvalue-1 eigenvectors.
  BipartiteOperator complement =
      BipartiteOperator::identity(m, m) - max_ent_projector(m);
  SpectralDecomposition sd = spectral(complement);
  std::vector<int> range_cols;
  for (int k = 0; k < sd.eigenvalues.size(); ++k) {
    if (sd.eigenvalues(k) > 0.5) {
      range_cols.push_back(k);
    }
  }

  std::vector<Matrix> kraus;
  kraus.reserve(range_cols.size() * in_side + in_side);
  for (int col : range_cols) {
    const Vector e = sd.eigenvectors.col(col);
    for (int beta = 0; beta < in_side; ++beta) {
      Matrix k(out_side, in_side);
      k = e * sqrt_b.row(beta);
      kraus.push_back(std::move(k));
    }
  }
  const Vector psi = max_ent_vector(m);
  for (int beta = 0; beta < in_side; ++beta) {
    Matrix k(out_side, in_side);
    k = psi * sqrt_a.row(beta);
    kraus.push_back(std::move(k));
  }
  return kraus;
}

BipartiteOperator choi_matrix(const PptChannel &ch) {
  const int in_side = ch.d() * ch.d();
  const int out_side = ch.m() * ch.m();
  const std::vector<Matrix> kraus = kraus_operators(ch);

  // C = sum_k |v_k><v_k| with v_k = sum_beta |f_beta> (x) K_k |f_beta>,
  // an operator on the (input) (x) (output) composite space.
  Matrix choi = Matrix::Zero(in_side * out_side, in_side * out_side);
  for (const Matrix &k : kraus) {
    Vector v(in_side * out_side);
    for (int beta = 0; beta < in_side; ++beta) {
      v.segment(beta * out_side, out_side) = k.col(beta);
    }
    choi += v * v.adjoint();
  }
  return {in_side, out_side, std::move(choi)};
}

PptPreservationReport verify_ppt_preserving(const PptChannel &ch, int samples,
                                            std::uint64_t seed) {
  if (samples < 1) {
    throw InvalidParameterError("verify_ppt_preserving: samples must be >= 1");
  }
  const int d = ch.d();
  std::mt19937_64 rng(seed);

  std::vector<std::pair<std::string, BipartiteOperator>> sigmas;
  sigmas.reserve(samples);

  // Eigenvectors of A^T2: extreme eigenvalues witness transpose-face
  // violations exactly, so they go in first.
  SpectralDecomposition sd = spectral(partial_transpose(ch.a_op()));
  for (int k = 0; k < sd.eigenvalues.size() &&
                  static_cast<int>(sigmas.size()) < samples;
       ++k) {
    Matrix proj = sd.eigenvectors.col(k) * sd.eigenvectors.col(k).adjoint();
    sigmas.emplace_back("adversarial",
                        BipartiteOperator(d, d, std::move(proj)));
  }

  bool take_ppt = true;
  while (static_cast<int>(sigmas.size()) < samples) {
    if (take_ppt) {
      sigmas.emplace_back("ppt", random_ppt_state(d, rng(), 3).op());
    } else {
      const Vector v = random_unit_vector(d * d, rng);
      Matrix proj = v * v.adjoint();
      sigmas.emplace_back("pure", BipartiteOperator(d, d, std::move(proj)));
    }
    take_ppt = !take_ppt;
  }

  PptPreservationReport report;
  report.worst_min_eigenvalue = std::numeric_limits<double>::infinity();
  for (auto &[kind, sigma] : sigmas) {
    const BipartiteOperator mapped =
        apply_to_operator(ch, partial_transpose(sigma));
    const Eigen::VectorXd evals =
        spectral(partial_transpose(mapped)).eigenvalues;
    const double min_eval = evals(0);
    report.samples.push_back({kind, min_eval});
    report.worst_min_eigenvalue =
        std::min(report.worst_min_eigenvalue, min_eval);
  }
  report.passes = report.worst_min_eigenvalue >= -1e-9;
  return report;
}

} // namespace pptdist
