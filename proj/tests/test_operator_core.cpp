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

#include <random>

#include "doctest.h"

#include "pptdist/bipartite_operator.hpp"
#include "pptdist/spectral.hpp"
#include "support/random_states.hpp"

using namespace pptdist;
using pptdist::testing::max_abs_diff;
using pptdist::testing::random_hermitian;
using pptdist::testing::random_operator;

namespace {

Matrix unit_matrix(int side, int row, int col) {
  Matrix e = Matrix::Zero(side, side);
  e(row, col) = 1.0;
  return e;
}

// Flip built from its defining action |k>|l> -> |l>|k>, column by column.
// Independent of the entry formula used by flip_operator.
BipartiteOperator flip_from_action(int d) {
  Matrix f = Matrix::Zero(d * d, d * d);
  for (int k = 0; k < d; ++k) {
    for (int l = 0; l < d; ++l) {
      f(l * d + k, k * d + l) = 1.0;
    }
  }
  return {d, d, std::move(f)};
}

} // namespace

TEST_CASE("BipartiteOperator construction") {
  CHECK_THROWS_AS(BipartiteOperator(0, 2), InvalidParameterError);
  CHECK_THROWS_AS(BipartiteOperator(2, 2, Matrix::Zero(3, 3)),
                  DimensionMismatchError);
  CHECK_THROWS_AS(BipartiteOperator(2, 2, Matrix::Zero(4, 3)),
                  DimensionMismatchError);

  const BipartiteOperator id = BipartiteOperator::identity(2, 3);
  CHECK(id.dim_a() == 2);
  CHECK(id.dim_b() == 3);
  CHECK(id.side() == 6);
  CHECK(id.trace() == Complex(6.0, 0.0));
  CHECK(id.index(1, 2) == 5);
}

TEST_CASE("kron") {
  SUBCASE("identity factors") {
    const BipartiteOperator out =
        kron(Matrix::Identity(2, 2), Matrix::Identity(2, 2));
    CHECK(max_abs_diff(out, BipartiteOperator::identity(2, 2)) == 0.0);
  }

  SUBCASE("single-entry bookkeeping") {
    // E01 (x) E10 has its only 1 at row (0,1) -> 1, column (1,0) -> 2.
    const BipartiteOperator out =
        kron(unit_matrix(2, 0, 1), unit_matrix(2, 1, 0));
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) {
        CHECK(out(r, c) == ((r == 1 && c == 2) ? Complex(1.0) : Complex(0.0)));
      }
    }
  }

  SUBCASE("sum of E_ij (x) E_ji equals the flip") {
    BipartiteOperator sum(2, 2);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        sum = sum + kron(unit_matrix(2, i, j), unit_matrix(2, j, i));
      }
    }
    CHECK(max_abs_diff(sum, flip_from_action(2)) == 0.0);
    CHECK(max_abs_diff(sum, flip_operator(2)) == 0.0);
  }

  SUBCASE("rejects non-square factors") {
    CHECK_THROWS_AS(kron(Matrix::Zero(2, 3), Matrix::Identity(2, 2)),
                    DimensionMismatchError);
  }
}

TEST_CASE("partial_transpose") {
  std::mt19937_64 rng(11);

  SUBCASE("involution is exact") {
    for (auto [da, db] : {std::pair{2, 2}, {2, 3}, {3, 4}}) {
      const BipartiteOperator x = random_operator(da, db, rng);
      CHECK(max_abs_diff(partial_transpose(partial_transpose(x)), x) == 0.0);
    }
  }

  SUBCASE("product case: (A (x) B)^T2 = A (x) B^T") {
    const Matrix a = random_operator(3, 1, rng).matrix();
    const Matrix b = random_operator(1, 4, rng).matrix();
    CHECK(max_abs_diff(partial_transpose(kron(a, b)),
                       kron(a, b.transpose())) == 0.0);
  }

  SUBCASE("flip identity, entrywise against the index formula") {
    for (int d = 2; d <= 6; ++d) {
      const BipartiteOperator pt = partial_transpose(flip_operator(d));
      // delta_il delta_jk |-> delta_ij delta_kl
      for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
          for (int k = 0; k < d; ++k) {
            for (int l = 0; l < d; ++l) {
              const Complex expected = (i == j && k == l) ? 1.0 : 0.0;
              CHECK(pt(i * d + j, k * d + l) == expected);
            }
          }
        }
      }
      CHECK(max_abs_diff(pt, static_cast<double>(d) * max_ent_projector(d)) ==
            0.0);
    }
  }

  SUBCASE("trace and Frobenius norm preserved") {
    const BipartiteOperator x = random_operator(3, 3, rng);
    const BipartiteOperator pt = partial_transpose(x);
    CHECK(std::abs(x.trace() - pt.trace()) == 0.0);
    CHECK(x.frobenius_norm() ==
          doctest::Approx(pt.frobenius_norm()).epsilon(1e-15));
  }

  SUBCASE("trace pairing tr(X^T2 Y^T2) = tr(XY)") {
    for (int trial = 0; trial < 20; ++trial) {
      const BipartiteOperator x = random_hermitian(2, 3, rng);
      const BipartiteOperator y = random_hermitian(2, 3, rng);
      const Complex direct = trace_product(x, y);
      const Complex paired =
          trace_product(partial_transpose(x), partial_transpose(y));
      CHECK(std::abs(direct - paired) <= 1e-12 * std::max(1.0, std::abs(direct)));
    }
  }
}

TEST_CASE("flip_operator") {
  SUBCASE("d = 2 is the permutation swapping composite indices 1 and 2") {
    const BipartiteOperator f = flip_operator(2);
    Matrix expected = Matrix::Zero(4, 4);
    expected(0, 0) = 1.0;
    expected(1, 2) = 1.0;
    expected(2, 1) = 1.0;
    expected(3, 3) = 1.0;
    CHECK((f.matrix() - expected).cwiseAbs().maxCoeff() == 0.0);
  }

  SUBCASE("involution and trace") {
    for (int d = 2; d <= 5; ++d) {
      const BipartiteOperator f = flip_operator(d);
      CHECK(max_abs_diff(f * f, BipartiteOperator::identity(d, d)) == 0.0);
      CHECK(f.trace() == Complex(static_cast<double>(d), 0.0));
    }
  }

  SUBCASE("rejects d = 0") {
    CHECK_THROWS_AS(flip_operator(0), InvalidParameterError);
  }
}

TEST_CASE("max_ent_projector") {
  SUBCASE("m = 2 entries") {
    const BipartiteOperator p = max_ent_projector(2);
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) {
        const bool hit = (r == 0 || r == 3) && (c == 0 || c == 3);
        CHECK(p(r, c) == (hit ? Complex(0.5) : Complex(0.0)));
      }
    }
  }

  SUBCASE("projector of unit trace") {
    for (int m = 2; m <= 5; ++m) {
      const BipartiteOperator p = max_ent_projector(m);
      CHECK(std::abs(p.trace() - Complex(1.0)) <= 1e-15);
      CHECK(max_abs_diff(p * p, p) <= 1e-15);
    }
  }

  SUBCASE("partial transpose is flip/m") {
    for (int m = 2; m <= 5; ++m) {
      CHECK(max_abs_diff(partial_transpose(max_ent_projector(m)),
                         (1.0 / m) * flip_operator(m)) == 0.0);
    }
  }

  SUBCASE("rejects m = 0") {
    CHECK_THROWS_AS(max_ent_projector(0), InvalidParameterError);
  }
}

TEST_CASE("sym_antisym_projectors") {
  SUBCASE("dimensions of the subspaces") {
    auto [p2_sym, p2_anti] = sym_antisym_projectors(2);
    CHECK(p2_sym.trace() == Complex(3.0));
    CHECK(p2_anti.trace() == Complex(1.0));
    auto [p3_sym, p3_anti] = sym_antisym_projectors(3);
    CHECK(p3_sym.trace() == Complex(6.0));
    CHECK(p3_anti.trace() == Complex(3.0));
  }

  SUBCASE("projector algebra for d in 2..6") {
    for (int d = 2; d <= 6; ++d) {
      auto [sym, anti] = sym_antisym_projectors(d);
      CHECK(sym.trace() == Complex(0.5 * d * (d + 1)));
      CHECK(anti.trace() == Complex(0.5 * d * (d - 1)));
      CHECK(max_abs_diff(sym * sym, sym) <= 1e-15);
      CHECK(max_abs_diff(anti * anti, anti) <= 1e-15);
      CHECK(max_abs_diff(sym + anti, BipartiteOperator::identity(d, d)) ==
            0.0);
      CHECK((sym * anti).max_abs() <= 1e-15);
    }
  }
}

TEST_CASE("spectral") {
  std::mt19937_64 rng(12);

  SUBCASE("identity") {
    const SpectralDecomposition sd =
        spectral(BipartiteOperator::identity(2, 2));
    for (int k = 0; k < 4; ++k) {
      CHECK(sd.eigenvalues(k) == doctest::Approx(1.0).epsilon(1e-14));
    }
  }

  SUBCASE("flip(2) has spectrum (-1, 1, 1, 1)") {
    const SpectralDecomposition sd = spectral(flip_operator(2));
    CHECK(sd.eigenvalues(0) == doctest::Approx(-1.0).epsilon(1e-12));
    for (int k = 1; k < 4; ++k) {
      CHECK(sd.eigenvalues(k) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }

  SUBCASE("already diagonal") {
    Matrix diag = Matrix::Zero(2, 2);
    diag(0, 0) = 3.0;
    diag(1, 1) = -1.0;
    const SpectralDecomposition sd =
        spectral(BipartiteOperator(1, 2, diag));
    CHECK(sd.eigenvalues(0) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(sd.eigenvalues(1) == doctest::Approx(3.0).epsilon(1e-14));
  }

  SUBCASE("reconstruction and orthonormality up to side 36") {
    for (auto [da, db] : {std::pair{2, 2}, {2, 3}, {4, 4}, {6, 6}}) {
      const BipartiteOperator h = random_hermitian(da, db, rng);
      const SpectralDecomposition sd = spectral(h);
      const double norm = sd.eigenvalues.cwiseAbs().maxCoeff();
      CHECK((sd.reconstruct() - h.matrix()).cwiseAbs().maxCoeff() <=
            1e-10 * norm);
      const Matrix gram = sd.eigenvectors.adjoint() * sd.eigenvectors;
      CHECK((gram - Matrix::Identity(h.side(), h.side()))
                .cwiseAbs()
                .maxCoeff() <= 1e-12);
    }
  }

  SUBCASE("ascending order") {
    const BipartiteOperator h = random_hermitian(3, 3, rng);
    const SpectralDecomposition sd = spectral(h);
    for (int k = 1; k < sd.eigenvalues.size(); ++k) {
      CHECK(sd.eigenvalues(k - 1) <= sd.eigenvalues(k));
    }
  }

  SUBCASE("rejects non-hermitian input") {
    const BipartiteOperator x = random_operator(2, 2, rng);
    CHECK_THROWS_AS(spectral(x), NotHermitianError);
  }
}

TEST_CASE("trace_norm") {
  SUBCASE("PSD unit-trace operator") {
    CHECK(trace_norm(max_ent_projector(3)) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }

  SUBCASE("partially transposed singlet") {
    auto [sym, anti] = sym_antisym_projectors(2);
    const BipartiteOperator pt = partial_transpose(anti);
    // spectrum (1/2, 1/2, 1/2, -1/2)
    const SpectralDecomposition sd = spectral(pt);
    CHECK(sd.eigenvalues(0) == doctest::Approx(-0.5).epsilon(1e-12));
    for (int k = 1; k < 4; ++k) {
      CHECK(sd.eigenvalues(k) == doctest::Approx(0.5).epsilon(1e-12));
    }
    CHECK(trace_norm(pt) == doctest::Approx(2.0).epsilon(1e-12));
  }

  SUBCASE("rejects non-hermitian input") {
    std::mt19937_64 rng(13);
    CHECK_THROWS_AS(trace_norm(random_operator(2, 2, rng)),
                    NotHermitianError);
  }
}

TEST_CASE("op_norm") {
  CHECK(op_norm(BipartiteOperator::identity(2, 2)) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(op_norm(BipartiteOperator(2, 2)) == 0.0);
  for (int d = 2; d <= 5; ++d) {
    CHECK(op_norm(partial_transpose(max_ent_projector(d))) ==
          doctest::Approx(1.0 / d).epsilon(1e-13));
  }
}

TEST_CASE("positive_negative_parts") {
  SUBCASE("PSD input returns (input, 0)") {
    const BipartiteOperator p = max_ent_projector(2);
    auto [pos, neg] = positive_negative_parts(p);
    CHECK(max_abs_diff(pos, p) <= 1e-12);
    CHECK(neg.max_abs() <= 1e-12);
  }

  SUBCASE("diagonal split") {
    Matrix diag = Matrix::Zero(2, 2);
    diag(0, 0) = 2.0;
    diag(1, 1) = -3.0;
    auto [pos, neg] = positive_negative_parts(BipartiteOperator(1, 2, diag));
    CHECK(std::abs(pos(0, 0) - Complex(2.0)) <= 1e-14);
    CHECK(std::abs(pos(1, 1)) <= 1e-14);
    CHECK(std::abs(neg(0, 0)) <= 1e-14);
    CHECK(std::abs(neg(1, 1) - Complex(3.0)) <= 1e-14);
  }

  SUBCASE("negative part of the transposed singlet") {
    auto [sym, anti] = sym_antisym_projectors(2);
    auto [pos, neg] = positive_negative_parts(partial_transpose(anti));
    CHECK(max_abs_diff(neg, 0.5 * max_ent_projector(2)) <= 1e-12);
    CHECK(std::abs(neg.trace() - Complex(0.5)) <= 1e-12);
  }

  SUBCASE("decomposition properties on random hermitians") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 10; ++trial) {
      const BipartiteOperator h = random_hermitian(2, 3, rng);
      auto [pos, neg] = positive_negative_parts(h);
      CHECK(max_abs_diff(pos - neg, h.symmetrized()) <= 1e-10);
      CHECK(psd_check(pos, 1e-9));
      CHECK(psd_check(neg, 1e-9));
      CHECK((pos * neg).max_abs() <= 1e-9);
    }
  }
}

TEST_CASE("psd_check") {
  CHECK(psd_check(BipartiteOperator::identity(2, 2), 1e-9));
  CHECK_FALSE(psd_check(flip_operator(2), 1e-9));
  CHECK(psd_check(BipartiteOperator(2, 2), 1e-9));
  CHECK_THROWS_AS(psd_check(BipartiteOperator::identity(2, 2), -1.0),
                  InvalidParameterError);
}

TEST_CASE("require_hermitian symmetrizes within tolerance") {
  BipartiteOperator x = BipartiteOperator::identity(2, 2);
  x.matrix()(0, 1) = Complex(0.0, 1e-12); // defect below tolerance
  const BipartiteOperator sym = require_hermitian(x, "test");
  CHECK(sym.hermiticity_defect() == 0.0);

  x.matrix()(0, 1) = Complex(0.0, 1e-3);
  CHECK_THROWS_AS(require_hermitian(x, "test"), NotHermitianError);
}
