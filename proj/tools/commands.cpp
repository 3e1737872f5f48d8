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

#include "commands.hpp"

#include <cmath>
#include <functional>
#include <iomanip>
#include <ostream>

#include "json.hpp"

#include "pptdist/channel.hpp"
#include "pptdist/witness.hpp"
#include "state_io.hpp"

namespace pptdist::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

// Shared fault handling: every command body runs under this wrapper and
// maps library errors onto the documented exit codes.
int guarded(std::ostream &err, const std::function<int()> &body) {
  try {
    return body();
  } catch (const InfeasibleWitnessError &e) {
    err << "error: " << e.what() << "\n";
    return kExitInfeasibleWitness;
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}

DensityOperator load_density(const std::string &path, bool normalize) {
  const StateFile file = read_state_file(path);
  BipartiteOperator op = to_operator(file);
  if (normalize) {
    const double trace = op.trace().real();
    if (trace > 0.0) {
      op = (1.0 / trace) * op;
    }
  }
  return DensityOperator::validate(op);
}

const char *yes_no(bool value) { return value ? "yes" : "no"; }

std::ostream &print_number(std::ostream &out, double value) {
  return out << format_number(value);
}

void print_constraints(std::ostream &out, const ConstraintReport &report) {
  out << "constraints (tol " << format_number(report.tolerance) << "):\n";
  for (const auto &check : report.checks) {
    out << "  " << std::left << std::setw(14) << check.name
        << (check.satisfied ? " ok      " : " VIOLATED") << "  margin ";
    print_number(out, check.margin) << "  worst eigenvalue ";
    print_number(out, check.worst_eigenvalue) << "\n";
  }
}

ordered_json constraints_to_json(const ConstraintReport &report) {
  ordered_json checks = ordered_json::array();
  for (const auto &check : report.checks) {
    checks.push_back({{"name", check.name},
                      {"satisfied", check.satisfied},
                      {"worst_eigenvalue", check.worst_eigenvalue},
                      {"margin", check.margin}});
  }
  return {{"tolerance", report.tolerance},
          {"all_satisfied", report.all_satisfied()},
          {"checks", checks}};
}

} // namespace

int run_info(const InfoOptions &opts, std::ostream &out, std::ostream &err) {
  return guarded(err, [&]() {
    const DensityOperator rho = load_density(opts.file, opts.normalize);
    const NegativityReport report = negativity_report(rho);
    const double min_eigenvalue = spectral(rho.op()).eigenvalues(0);
    const double pt_trace_norm = trace_norm(partial_transpose(rho.op()));

    if (opts.json) {
      ordered_json doc{{"command", "info"},
                       {"file", opts.file},
                       {"dim_a", rho.dim_a()},
                       {"dim_b", rho.dim_b()},
                       {"trace", rho.op().trace().real()},
                       {"min_eigenvalue", min_eigenvalue},
                       {"negativity", report.negativity},
                       {"npt", report.is_npt},
                       {"neg_rank", report.neg_rank},
                       {"pt_trace_norm", pt_trace_norm}};
      out << doc.dump(2) << "\n";
    } else {
      out << "file:           " << opts.file << "\n";
      out << "dims:           " << rho.dim_a() << " x " << rho.dim_b()
          << "  (side " << rho.op().side() << ")\n";
      out << "trace:          ";
      print_number(out, rho.op().trace().real()) << "\n";
      out << "min eigenvalue: ";
      print_number(out, min_eigenvalue) << "\n";
      out << "negativity:     ";
      print_number(out, report.negativity) << "\n";
      out << "npt:            " << yes_no(report.is_npt) << "  (neg rank "
          << report.neg_rank << ")\n";
      out << "pt trace norm:  ";
      print_number(out, pt_trace_norm) << "\n";
    }
    return kExitSuccess;
  });
}

int run_generate(const GenerateOptions &opts, std::ostream &out,
                 std::ostream &err) {
  return guarded(err, [&]() {
    StateFileMetadata metadata;
    metadata.generator = opts.kind;
    metadata.label = opts.label;

    DensityOperator rho = [&]() {
      if (opts.kind == "werner") {
        return werner(opts.d, opts.p);
      }
      if (opts.kind == "isotropic") {
        return isotropic_state(opts.m, opts.f);
      }
      if (opts.kind == "maxent") {
        return DensityOperator::validate(max_ent_projector(opts.m));
      }
      if (opts.kind == "random-ppt") {
        metadata.seed = opts.seed;
        return random_ppt_state(opts.d, opts.seed, opts.mixture_size);
      }
      throw InvalidParameterError("generate: unknown kind \"" + opts.kind +
                                  "\"");
    }();

    write_state_file(opts.out_file, rho.op(), metadata);

    if (opts.json) {
      ordered_json doc{{"command", "generate"},
                       {"kind", opts.kind},
                       {"dim_a", rho.dim_a()},
                       {"dim_b", rho.dim_b()},
                       {"out", opts.out_file}};
      out << doc.dump(2) << "\n";
    } else {
      out << "generated " << opts.kind << " state on " << rho.dim_a() << " x "
          << rho.dim_b() << " -> " << opts.out_file << "\n";
    }
    return kExitSuccess;
  });
}

int run_witness(const WitnessOptions &opts, std::ostream &out,
                std::ostream &err) {
  return guarded(err, [&]() {
    const DensityOperator rho = load_density(opts.file, opts.normalize);
    const DistillationWitness witness =
        build_witness(rho, opts.m, opts.epsilon);
    const ConstraintReport constraints =
        validate_witness_constraints(witness.a_op, opts.m, 1e-10);
    const FidelityBound bound = fidelity_upper_bound(rho, opts.m);

    StateFileMetadata metadata;
    metadata.generator = "witness";
    metadata.label = "A = (1/m)(1 - eps*Pneg^T2), m=" + std::to_string(opts.m);
    write_state_file(opts.out_file, witness.a_op, metadata);

    if (opts.json) {
      ordered_json doc{{"command", "witness"},
                       {"file", opts.file},
                       {"m", witness.m},
                       {"epsilon", witness.epsilon},
                       {"fidelity", witness.fidelity},
                       {"negativity", witness.negativity_used},
                       {"upper_bound", bound.bound},
                       {"bound_tight", bound.tight},
                       {"constraints", constraints_to_json(constraints)},
                       {"out", opts.out_file}};
      out << doc.dump(2) << "\n";
    } else {
      out << "m:           " << witness.m << "\n";
      out << "epsilon:     ";
      print_number(out, witness.epsilon) << "\n";
      out << "fidelity:    ";
      print_number(out, witness.fidelity) << "\n";
      out << "negativity:  ";
      print_number(out, witness.negativity_used) << "\n";
      out << "upper bound: ";
      print_number(out, bound.bound) << "\n";
      out << "bound tight: " << yes_no(bound.tight) << "\n";
      print_constraints(out, constraints);
      out << "witness written to " << opts.out_file << "\n";
    }
    return kExitSuccess;
  });
}

int run_fidelity(const FidelityOptions &opts, std::ostream &out,
                 std::ostream &err) {
  return guarded(err, [&]() {
    const DensityOperator rho = load_density(opts.file, opts.normalize);
    const bool with_witness = opts.method != "sdp";
    const bool with_sdp = opts.method != "witness";

    const FidelityReport report =
        full_report(rho, opts.m, with_sdp, opts.solver);

    const double decisive =
        with_witness ? report.witness_fidelity : report.sdp_fidelity.value();
    const bool distillable = decisive > 1.0 / opts.m + 1e-9;
    const char *verdict = distillable ? "DISTILLABLE (PPT-protocol)"
                                      : "NOT DISTILLABLE (PPT-protocol)";

    if (opts.json) {
      ordered_json doc{{"command", "fidelity"},
                       {"file", opts.file},
                       {"m", opts.m},
                       {"method", opts.method}};
      if (with_witness) {
        doc["witness_fidelity"] = report.witness_fidelity;
      }
      doc["upper_bound"] = report.upper_bound;
      doc["bound_tight"] = report.bound_tight;
      if (with_sdp) {
        doc["sdp"] = {
            {"value", *report.sdp_fidelity},
            {"iterations", *report.sdp_iterations},
            {"converged", *report.sdp_converged},
            {"feasibility_residual", *report.sdp_feasibility_residual}};
      }
      doc["locc_value"] = report.locc_value
                              ? ordered_json(*report.locc_value)
                              : ordered_json(nullptr);
      doc["distillable"] = distillable;
      doc["verdict"] = verdict;
      out << doc.dump(2) << "\n";
    } else {
      out << "m:                " << opts.m << "\n";
      if (with_witness) {
        out << "witness fidelity: ";
        print_number(out, report.witness_fidelity) << "\n";
      }
      out << "upper bound:      ";
      print_number(out, report.upper_bound) << "\n";
      out << "bound tight:      " << yes_no(report.bound_tight) << "\n";
      if (with_sdp) {
        out << "sdp value:        ";
        print_number(out, *report.sdp_fidelity)
            << "  (iterations " << *report.sdp_iterations << ", "
            << (*report.sdp_converged ? "converged" : "NOT converged")
            << ")\n";
      }
      if (report.locc_value) {
        out << "locc value:       ";
        print_number(out, *report.locc_value) << "\n";
      }
      out << "verdict:          " << verdict << "\n";
    }

    if (with_sdp && !*report.sdp_converged) {
      err << "error: solver did not converge within "
          << opts.solver.max_outer << " iterations\n";
      return kExitNoConvergence;
    }
    return kExitSuccess;
  });
}

int run_channel(const ChannelOptions &opts, std::ostream &out,
                std::ostream &err) {
  return guarded(err, [&]() {
    const DensityOperator rho = load_density(opts.file, opts.normalize);

    BipartiteOperator witness_op = [&]() {
      if (opts.witness_file) {
        return to_operator(read_state_file(*opts.witness_file));
      }
      return build_witness(rho, opts.m).a_op;
    }();

    const PptChannel channel = make_channel(witness_op, opts.m);
    const DensityOperator output = apply(channel, rho);
    const double fidelity =
        trace_product(max_ent_projector(opts.m), output.op()).real();

    // Kraus diagnostics
    const std::vector<Matrix> kraus = kraus_operators(channel);
    Matrix completeness =
        Matrix::Zero(rho.op().side(), rho.op().side());
    Matrix kraus_output =
        Matrix::Zero(output.op().side(), output.op().side());
    for (const Matrix &k : kraus) {
      completeness += k.adjoint() * k;
      kraus_output += k * rho.op().matrix() * k.adjoint();
    }
    const double completeness_residual =
        (completeness -
         Matrix::Identity(rho.op().side(), rho.op().side()))
            .cwiseAbs()
            .maxCoeff();
    const double apply_residual =
        (kraus_output - output.op().matrix()).cwiseAbs().maxCoeff();

    const double choi_min =
        spectral(choi_matrix(channel)).eigenvalues(0);
    const PptPreservationReport preservation =
        verify_ppt_preserving(channel, opts.samples, opts.seed);

    StateFileMetadata metadata;
    metadata.generator = "channel";
    metadata.label = "T(rho), m=" + std::to_string(opts.m);
    write_state_file(opts.out_file, output.op(), metadata);

    if (opts.json) {
      ordered_json doc{
          {"command", "channel"},
          {"file", opts.file},
          {"d", channel.d()},
          {"m", channel.m()},
          {"output_fidelity", fidelity},
          {"kraus_count", kraus.size()},
          {"kraus_completeness_residual", completeness_residual},
          {"kraus_apply_residual", apply_residual},
          {"choi_min_eigenvalue", choi_min},
          {"ppt_preservation",
           {{"samples", preservation.samples.size()},
            {"worst_min_eigenvalue", preservation.worst_min_eigenvalue},
            {"passes", preservation.passes}}},
          {"out", opts.out_file}};
      out << doc.dump(2) << "\n";
    } else {
      out << "d: " << channel.d() << "  m: " << channel.m() << "\n";
      out << "output fidelity tr[P_m T(rho)]: ";
      print_number(out, fidelity) << "\n";
      out << "kraus operators:               " << kraus.size() << "\n";
      out << "kraus completeness residual:   ";
      print_number(out, completeness_residual) << "\n";
      out << "kraus/apply residual:          ";
      print_number(out, apply_residual) << "\n";
      out << "choi min eigenvalue:           ";
      print_number(out, choi_min) << "\n";
      out << "ppt preservation:              " << preservation.samples.size()
          << " samples, worst min eigenvalue ";
      print_number(out, preservation.worst_min_eigenvalue)
          << " -> " << (preservation.passes ? "PASS" : "FAIL") << "\n";
      out << "output written to " << opts.out_file << "\n";
    }
    return kExitSuccess;
  });
}

} // namespace pptdist::cli
