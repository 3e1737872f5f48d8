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

#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "commands.hpp"

namespace {

// Adds the per-command output format switch.
void add_format_flag(CLI::App *cmd, bool &json) {
  cmd->add_flag_callback(
      "--json", [&json]() { json = true; },
      "Emit a machine-readable JSON document instead of text");
  cmd->add_option_function<std::string>(
         "--format",
         [&json](const std::string &value) { json = (value == "json"); },
         "Output format")
      ->check(CLI::IsMember({"text", "json"}));
}

} // namespace

int main(int argc, char **argv) {
  using namespace pptdist::cli;

  CLI::App app{"pptdist: distillability of bipartite states under "
               "PPT-preserving channels"};
  app.require_subcommand(1);

  InfoOptions info_opts;
  auto *info = app.add_subcommand(
      "info", "Inspect a state file: dimensions, spectrum, negativity");
  info->add_option("file", info_opts.file, "Input .qstate.json file")
      ->required();
  info->add_flag("--normalize", info_opts.normalize,
                 "Renormalize the trace to 1 at parse time");
  add_format_flag(info, info_opts.json);

  GenerateOptions gen_opts;
  auto *generate =
      app.add_subcommand("generate", "Write a canonical state file");
  generate
      ->add_option("kind", gen_opts.kind,
                   "State family: werner | isotropic | maxent | random-ppt")
      ->required()
      ->check(CLI::IsMember({"werner", "isotropic", "maxent", "random-ppt"}));
  generate->add_option("--out", gen_opts.out_file, "Output file")->required();
  generate->add_option("--d", gen_opts.d, "Local dimension (werner, random-ppt)");
  generate->add_option("--p", gen_opts.p,
                       "Antisymmetric weight in [0,1] (werner)");
  generate->add_option("--m", gen_opts.m,
                       "Local dimension (isotropic, maxent)");
  generate->add_option("--f", gen_opts.f,
                       "Maximally entangled fraction in [0,1] (isotropic)");
  generate->add_option("--seed", gen_opts.seed, "RNG seed (random-ppt)");
  generate->add_option("--mixture-size", gen_opts.mixture_size,
                       "Number of product terms (random-ppt)");
  generate->add_option("--label", gen_opts.label, "Metadata label");
  add_format_flag(generate, gen_opts.json);

  WitnessOptions wit_opts;
  auto *witness = app.add_subcommand(
      "witness", "Build the negative-eigenspace witness for a state");
  witness->add_option("file", wit_opts.file, "Input .qstate.json file")
      ->required();
  witness->add_option("--m", wit_opts.m, "Target entangled dimension")
      ->required();
  witness->add_option("--epsilon", wit_opts.epsilon,
                      "Witness strength; default is the maximal feasible "
                      "min{2, 1/||Pneg^T2||}");
  witness->add_option("--out", wit_opts.out_file, "Witness output file")
      ->required();
  witness->add_flag("--normalize", wit_opts.normalize,
                    "Renormalize the trace to 1 at parse time");
  add_format_flag(witness, wit_opts.json);

  FidelityOptions fid_opts;
  auto *fidelity = app.add_subcommand(
      "fidelity", "Witness, solver, and bound values for the maximal "
                  "distillation fidelity");
  fidelity->add_option("file", fid_opts.file, "Input .qstate.json file")
      ->required();
  fidelity->add_option("--m", fid_opts.m, "Target entangled dimension")
      ->required();
  fidelity
      ->add_option("--method", fid_opts.method,
                   "Evaluation route: witness | sdp | both")
      ->check(CLI::IsMember({"witness", "sdp", "both"}));
  fidelity->add_option("--tol", fid_opts.solver.tol,
                       "Solver objective-change tolerance");
  fidelity->add_option("--max-iter", fid_opts.solver.max_outer,
                       "Solver iteration cap");
  fidelity->add_flag("--normalize", fid_opts.normalize,
                     "Renormalize the trace to 1 at parse time");
  add_format_flag(fidelity, fid_opts.json);

  ChannelOptions chan_opts;
  auto *channel = app.add_subcommand(
      "channel", "Build a PPT-preserving channel, apply it, and verify it");
  channel->add_option("file", chan_opts.file, "Input .qstate.json file")
      ->required();
  channel->add_option("--m", chan_opts.m, "Output entangled dimension")
      ->required();
  channel->add_option("--witness", chan_opts.witness_file,
                      "Witness file; default builds the witness from the "
                      "input state");
  channel->add_option("--out", chan_opts.out_file, "Output state file")
      ->required();
  channel->add_option("--seed", chan_opts.seed,
                      "Seed for PPT-preservation sampling");
  channel->add_option("--samples", chan_opts.samples,
                      "PPT-preservation sample count");
  channel->add_flag("--normalize", chan_opts.normalize,
                    "Renormalize the trace to 1 at parse time");
  add_format_flag(channel, chan_opts.json);

  CLI11_PARSE(app, argc, argv);

  if (info->parsed()) {
    return run_info(info_opts, std::cout, std::cerr);
  }
  if (generate->parsed()) {
    return run_generate(gen_opts, std::cout, std::cerr);
  }
  if (witness->parsed()) {
    return run_witness(wit_opts, std::cout, std::cerr);
  }
  if (fidelity->parsed()) {
    return run_fidelity(fid_opts, std::cout, std::cerr);
  }
  if (channel->parsed()) {
    return run_channel(chan_opts, std::cout, std::cerr);
  }
  return 0;
}
