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

#ifndef PPTDIST_TOOLS_STATE_IO_HPP
#define PPTDIST_TOOLS_STATE_IO_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "pptdist/bipartite_operator.hpp"

namespace pptdist::cli {

// The on-disk operator format (extension .qstate.json):
//   {
//     "dim_a": 2, "dim_b": 2,
//     "matrix": [[[re, im], ...], ...],   // side x side, row-major
//     "metadata": {"label": ..., "seed": ..., "generator": ...}  // optional
//   }
// Numbers are written with 17 significant digits so doubles round-trip
// losslessly, and serialization is deterministic byte for byte.

struct StateFileMetadata {
  std::optional<std::string> label;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> generator;
};

struct StateFile {
  int dim_a = 0;
  int dim_b = 0;
  Matrix matrix;
  StateFileMetadata metadata;
};

// Parse or schema failure; message carries the parser's location context.
class StateFileError : public Error {
public:
  using Error::Error;
};

StateFile read_state_file(const std::string &path);
StateFile parse_state(const std::string &text, const std::string &origin);

BipartiteOperator to_operator(const StateFile &file);

std::string serialize_state(const BipartiteOperator &op,
                            const StateFileMetadata &metadata = {});
void write_state_file(const std::string &path, const BipartiteOperator &op,
                      const StateFileMetadata &metadata = {});

// 17-significant-digit decimal form used throughout the file format.
std::string format_number(double value);

} // namespace pptdist::cli

#endif // PPTDIST_TOOLS_STATE_IO_HPP
