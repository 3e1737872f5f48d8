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

#ifndef PPTDIST_TOOLS_COMMANDS_HPP
#define PPTDIST_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "pptdist/solver.hpp"

namespace pptdist::cli {

// Process exit codes.
inline constexpr int kExitSuccess = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNoConvergence = 3;
inline constexpr int kExitInfeasibleWitness = 4;

struct InfoOptions {
  std::string file;
  bool normalize = false;
  bool json = false;
};

struct GenerateOptions {
  std::string kind; // werner | isotropic | maxent | random-ppt
  std::string out_file;
  int d = 2;
  double p = 1.0;
  int m = 2;
  double f = 1.0;
  std::uint64_t seed = 0;
  int mixture_size = 4;
  std::optional<std::string> label;
  bool json = false;
};

struct WitnessOptions {
  std::string file;
  int m = 2;
  std::optional<double> epsilon;
  std::string out_file;
  bool normalize = false;
  bool json = false;
};

struct FidelityOptions {
  std::string file;
  int m = 2;
  std::string method = "both"; // witness | sdp | both
  bool normalize = false;
  bool json = false;
  SolverOptions solver;
};

struct ChannelOptions {
  std::string file;
  int m = 2;
  std::optional<std::string> witness_file;
  std::string out_file;
  std::uint64_t seed = 20260101;
  int samples = 50;
  bool normalize = false;
  bool json = false;
};

int run_info(const InfoOptions &opts, std::ostream &out, std::ostream &err);
int run_generate(const GenerateOptions &opts, std::ostream &out,
                 std::ostream &err);
int run_witness(const WitnessOptions &opts, std::ostream &out,
                std::ostream &err);
int run_fidelity(const FidelityOptions &opts, std::ostream &out,
                 std::ostream &err);
int run_channel(const ChannelOptions &opts, std::ostream &out,
                std::ostream &err);

} // namespace pptdist::cli

#endif // PPTDIST_TOOLS_COMMANDS_HPP
