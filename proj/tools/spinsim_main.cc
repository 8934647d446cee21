// Copyright 2026 The spinsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end for the spin-dynamics simulator.
//
//   spinsim grover --hardware nmr --item 2 --init 12 --out traj.csv
//   spinsim run --config hadamard.cfg --sequence init --out traj.csv
//   spinsim converge --hardware nmr --item 2 --init 12 --tol 1e-6
//   spinsim selftest
//   spinsim dump-profile nmr > nmr.cfg
//
// Exit codes: 0 success, 1 usage or parse error, 2 numerical check failure,
// 3 I/O error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "spinsim/config.h"
#include "spinsim/experiments.h"
#include "spinsim/oracle.h"
#include "spinsim/propagator.h"
#include "spinsim/pulse_lib.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitIo = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<std::int64_t> parse_steps(const std::string& text) {
  if (text == "auto") return std::nullopt;
  std::size_t used = 0;
  long long v = std::stoll(text, &used);
  if (used != text.size() || v < 1) {
    throw std::invalid_argument("--steps must be 'auto' or a positive integer");
  }
  return v;
}

spinsim::RfClock parse_clock(const std::string& text) {
  if (text == "pulse") return spinsim::RfClock::kPulseLocal;
  if (text == "absolute") return spinsim::RfClock::kAbsolute;
  throw std::invalid_argument("--rf-clock must be 'pulse' or 'absolute'");
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  return out;
}

void finish_output(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw IoError("error while writing '" + path + "'");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace spinsim;

  CLI::App app{"Spin-1/2 quantum computer simulator"};
  app.require_subcommand(1);

  // grover
  std::string hardware = "ideal";
  int item = 0;
  std::string init = "12";
  std::string out_path;
  std::string steps_text = "auto";
  std::string clock_text = "pulse";
  std::int64_t sample_every = 0;
  bool rotating_frame = false;
  auto* grover = app.add_subcommand("grover", "Run the four-item Grover search");
  grover->add_option("--hardware", hardware, "ideal or nmr")
      ->check(CLI::IsMember({"ideal", "nmr"}));
  grover->add_option("--item", item, "Searched item 0..3")->check(CLI::Range(0, 3));
  grover->add_option("--init", init, "WH order: 12 runs W1 first, 21 runs W2 first")
      ->check(CLI::IsMember({"12", "21"}));
  grover->add_option("--out", out_path, "Trajectory CSV");
  grover->add_option("--steps", steps_text, "auto or substeps per EO");
  grover->add_option("--rf-clock", clock_text, "pulse or absolute")
      ->check(CLI::IsMember({"pulse", "absolute"}));
  grover->add_option("--sample-every", sample_every, "Substeps between samples");
  grover->add_flag("--rotating-frame", rotating_frame,
                   "Report sx/sy in the frame rotating with the Larmor fields");

  // run
  std::string config_path;
  std::string sequence_name;
  bool compare_uniform = false;
  auto* run = app.add_subcommand("run", "Run a sequence from a config file");
  run->add_option("--config", config_path, "Config file")->required();
  run->add_option("--sequence", sequence_name, "Sequence (default: [run] sequence)");
  run->add_option("--out", out_path, "Trajectory CSV (default: [run] output)");
  run->add_flag("--compare-uniform", compare_uniform,
                "Report fidelity of the final state with the uniform superposition");

  // converge
  double tol = 1e-6;
  std::int64_t max_multiplier = 1024;
  auto* converge = app.add_subcommand("converge", "Double substeps until Q stabilizes");
  converge->add_option("--hardware", hardware)->check(CLI::IsMember({"ideal", "nmr"}));
  converge->add_option("--item", item)->check(CLI::Range(0, 3));
  converge->add_option("--init", init)->check(CLI::IsMember({"12", "21"}));
  converge->add_option("--tol", tol, "Largest accepted change of Q under doubling");
  converge->add_option("--max-multiplier", max_multiplier, "Cap on the substep multiplier");
  converge->add_option("--rf-clock", clock_text)->check(CLI::IsMember({"pulse", "absolute"}));

  auto* selftest = app.add_subcommand("selftest", "Run the oracle cross-checks");

  std::string profile_kind;
  auto* dump = app.add_subcommand("dump-profile", "Print a hardware profile as config text");
  dump->add_option("kind", profile_kind, "ideal or nmr")
      ->required()
      ->check(CLI::IsMember({"ideal", "nmr"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (grover->parsed()) {
      RunOptions options;
      options.fixed_substeps = parse_steps(steps_text);
      options.rf_clock = parse_clock(clock_text);
      options.sample_every = sample_every;
      if (rotating_frame && hardware == "nmr") {
        const auto& model = make_profile(HardwareKind::kNmr).eo("Ipi").model;
        options.frame_omega = std::vector<double>{model.static_field(1, Axis::kZ),
                                                  model.static_field(2, Axis::kZ)};
      }
      std::ofstream csv;
      if (!out_path.empty()) csv = open_output(out_path);
      GroverReport report =
          run_grover(parse_hardware(hardware), item, parse_init_order(init), options);
      std::cout << format_report(report);
      if (!out_path.empty()) {
        write_csv(csv, 2, report.trajectory);
        finish_output(csv, out_path);
      }
      return 0;
    }

    if (run->parsed()) {
      std::ifstream in(config_path);
      if (!in) throw IoError("cannot read '" + config_path + "'");
      ExperimentConfig config = parse_config(in);
      const std::string name = sequence_name.empty() ? config.run.sequence : sequence_name;
      if (name.empty()) throw std::invalid_argument("no sequence given");
      PulseSequence seq = config.build_sequence(name);
      RunOptions options;
      options.fixed_substeps = config.run.steps;
      options.sample_every = config.run.sample_every;
      options.rf_clock = config.run.rf_clock;
      const std::string path = out_path.empty() ? config.run.output : out_path;
      std::ofstream csv;
      if (!path.empty()) csv = open_output(path);
      StateVector state = StateVector::basis(config.num_qubits, config.initial_bits);
      RunResult result = run_sequence(state, seq, options);
      const Observables final_obs = qubit_values(state, result.end_time);
      std::printf("sequence %s: %zu EOs, %lld substeps, t = %.6g\n", name.c_str(),
                  seq.ops.size(), static_cast<long long>(result.total_substeps),
                  result.end_time);
      for (std::size_t j = 0; j < final_obs.q.size(); ++j) {
        std::printf("Q%zu = %.6f\n", j + 1, final_obs.q[j]);
      }
      std::printf("norm - 1 = %.3e\n", final_obs.norm - 1.0);
      if (compare_uniform) {
        std::printf("fidelity with uniform state = %.12f\n",
                    fidelity(state, StateVector::uniform(config.num_qubits)));
      }
      if (!path.empty()) {
        write_csv(csv, config.num_qubits, result.trajectory);
        finish_output(csv, path);
      }
      return 0;
    }

    if (converge->parsed()) {
      RunOptions base;
      base.rf_clock = parse_clock(clock_text);
      ConvergeReport report = converge_grover(parse_hardware(hardware), item,
                                              parse_init_order(init), tol, base,
                                              max_multiplier);
      for (const auto& [mult, q] : report.history) {
        std::printf("multiplier %6lld  Q1 = %.9f  Q2 = %.9f\n",
                    static_cast<long long>(mult), q[0], q[1]);
      }
      if (!report.converged) {
        std::printf("NOT CONVERGED: shift %.3e >= tol %.3e at multiplier cap %lld\n",
                    report.last_shift, tol, static_cast<long long>(max_multiplier));
        return kExitNumerical;
      }
      std::printf("converged at multiplier %lld (shift %.3e)  Q1 = %.6f  Q2 = %.6f\n",
                  static_cast<long long>(report.multiplier), report.last_shift,
                  report.q[0], report.q[1]);
      return 0;
    }

    if (selftest->parsed()) {
      bool all = true;
      for (const CheckResult& c : run_selftest()) {
        std::printf("[%s] %s  %s\n", c.passed ? "PASS" : "FAIL", c.name.c_str(),
                    c.detail.c_str());
        all = all && c.passed;
      }
      return all ? 0 : kExitNumerical;
    }

    if (dump->parsed()) {
      std::cout << dump_config(profile_config(make_profile(parse_hardware(profile_kind))));
      return 0;
    }
  } catch (const IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitIo;
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "%s: %s\n", config_path.c_str(), e.what());
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNumerical;
  }
  return kExitUsage;
}
