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

#include "pptdist/bipartite_operator.hpp"

#include <cmath>

namespace pptdist {

namespace {

void check_same_dims(const BipartiteOperator &x, const BipartiteOperator &y,
                     const char *op) {
  if (x.dim_a() != y.dim_a() || x.dim_b() != y.dim_b()) {
    throw DimensionMismatchError(
        std::string(op) + ": operands live on different spaces (" +
        std::to_string(x.dim_a()) + "x" + std::to_string(x.dim_b()) + " vs " +
        std::to_string(y.dim_a()) + "x" + std::to_string(y.dim_b()) + ")");
  }
}

} // namespace

BipartiteOperator operator+(const BipartiteOperator &x,
                            const BipartiteOperator &y) {
  check_same_dims(x, y, "operator+");
  return {x.dim_a(), x.dim_b(), Matrix(x.matrix() + y.matrix())};
}

BipartiteOperator operator-(const BipartiteOperator &x,
                            const BipartiteOperator &y) {
  check_same_dims(x, y, "operator-");
  return {x.dim_a(), x.dim_b(), Matrix(x.matrix() - y.matrix())};
}

BipartiteOperator operator*(const BipartiteOperator &x,
                            const BipartiteOperator &y) {
  check_same_dims(x, y, "operator*");
  return {x.dim_a(), x.dim_b(), Matrix(x.matrix() * y.matrix())};
}

BipartiteOperator operator*(Complex scale, const BipartiteOperator &x) {
  return {x.dim_a(), x.dim_b(), Matrix(scale * x.matrix())};
}

Complex trace_product(const BipartiteOperator &x, const BipartiteOperator &y) {
  check_same_dims(x, y, "trace_product");
  // tr(XY) = sum_{rc} X_{rc} Y_{cr}
  return x.matrix().cwiseProduct(y.matrix().transpose()).sum();
}

BipartiteOperator kron(const Matrix &x, const Matrix &y) {
  if (x.rows() != x.cols() || y.rows() != y.cols()) {
    throw DimensionMismatchError("kron: factors must be square");
  }
  const int da = static_cast<int>(x.rows());
  const int db = static_cast<int>(y.rows());
  Matrix out(da * db, da * db);
  for (int i = 0; i < da; ++i) {
    for (int k = 0; k < da; ++k) {
      for (int j = 0; j < db; ++j) {
        for (int l = 0; l < db; ++l) {
          out(i * db + j, k * db + l) = x(i, k) * y(j, l);
        }
      }
    }
  }
  return {da, db, std::move(out)};
}

BipartiteOperator partial_transpose(const BipartiteOperator &x) {
  const int da = x.dim_a();
  const int db = x.dim_b();
  Matrix out(x.side(), x.side());
  for (int i = 0; i < da; ++i) {
    for (int k = 0; k < da; ++k) {
      for (int j = 0; j < db; ++j) {
        for (int l = 0; l < db; ++l) {
          out(i * db + j, k * db + l) = x.matrix()(i * db + l, k * db + j);
        }
      }
    }
  }
  return {da, db, std::move(out)};
}

BipartiteOperator flip_operator(int d) {
  if (d < 1) {
    throw InvalidParameterError("flip_operator: d must be >= 1, got " +
                                std::to_string(d));
  }
  Matrix out = Matrix::Zero(d * d, d * d);
  // delta_{il} delta_{jk}: row (i,j) has its single 1 at column (j,i).
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      out(i * d + j, j * d + i) = 1.0;
    }
  }
  return {d, d, std::move(out)};
}

BipartiteOperator max_ent_projector(int m) {
  if (m < 1) {
    throw InvalidParameterError("max_ent_projector: m must be >= 1, got " +
                                std::to_string(m));
  }
  Matrix out = Matrix::Zero(m * m, m * m);
  const double w = 1.0 / static_cast<double>(m);
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < m; ++k) {
      out(i * m + i, k * m + k) = w;
    }
  }
  return {m, m, std::move(out)};
}

Vector max_ent_vector(int m) {
  if (m < 1) {
    throw InvalidParameterError("max_ent_vector: m must be >= 1, got " +
                                std::to_string(m));
  }
  Vector v = Vector::Zero(m * m);
  const double w = 1.0 / std::sqrt(static_cast<double>(m));
  for (int i = 0; i < m; ++i) {
    v(i * m + i) = w;
  }
  return v;
}

std::pair<BipartiteOperator, BipartiteOperator> sym_antisym_projectors(int d) {
  BipartiteOperator flip = flip_operator(d);
  BipartiteOperator id = BipartiteOperator::identity(d, d);
  return {0.5 * (id + flip), 0.5 * (id - flip)};
}

} // namespace pptdist
