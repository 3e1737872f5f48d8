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

#ifndef PPTDIST_TESTS_SUPPORT_RANDOM_STATES_HPP
#define PPTDIST_TESTS_SUPPORT_RANDOM_STATES_HPP

#include <random>

#include "pptdist/states.hpp"

namespace pptdist::testing {

// Random general complex operator, entries standard complex-normal.
inline BipartiteOperator random_operator(int dim_a, int dim_b,
                                         std::mt19937_64 &rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const int side = dim_a * dim_b;
  Matrix mat(side, side);
  for (int r = 0; r < side; ++r) {
    for (int c = 0; c < side; ++c) {
      mat(r, c) = Complex(normal(rng), normal(rng));
    }
  }
  return {dim_a, dim_b, std::move(mat)};
}

inline BipartiteOperator random_hermitian(int dim_a, int dim_b,
                                          std::mt19937_64 &rng) {
  return random_operator(dim_a, dim_b, rng).symmetrized();
}

// Hilbert-Schmidt style random density: G G^dag normalized, G Ginibre.
inline DensityOperator random_density(int dim_a, int dim_b,
                                      std::mt19937_64 &rng) {
  const BipartiteOperator g = random_operator(dim_a, dim_b, rng);
  Matrix rho = g.matrix() * g.matrix().adjoint();
  rho /= rho.trace().real();
  return DensityOperator::validate(
      BipartiteOperator(dim_a, dim_b, std::move(rho)));
}

// Rejection-samples a density on d (x) d whose negativity exceeds the
// floor. Ginibre states on small spaces are NPT with high probability.
inline DensityOperator random_npt_density(int d, std::mt19937_64 &rng,
                                          double min_negativity = 1e-6) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    DensityOperator rho = random_density(d, d, rng);
    if (negativity_report(rho).negativity > min_negativity) {
      return rho;
    }
  }
  throw Error("random_npt_density: rejection sampling failed");
}

inline double max_abs_diff(const BipartiteOperator &x,
                           const BipartiteOperator &y) {
  return (x - y).max_abs();
}

} // namespace pptdist::testing

#endif // PPTDIST_TESTS_SUPPORT_RANDOM_STATES_HPP
