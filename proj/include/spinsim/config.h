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

#ifndef SPINSIM_CONFIG_H_
#define SPINSIM_CONFIG_H_

#include <cstdint>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spinsim/propagator.h"
#include "spinsim/pulse_lib.h"
#include "spinsim/spin_model.h"

namespace spinsim {

// Line-oriented experiment description:
//
//   # comment
//   [eo X1]
//   tau_over_2pi = 0.25
//   h0 x 1 = 1
//   J z 1 2 = -1e-6
//   [sequence init]
//   eos = Y1bar, X1, X1
//   [run]
//   state = 00
//   sequence = init
//   sample_every = 10
//
// Parameter lines: `J <axis> <j> <k>`, `h0|h1|f|phi <axis> <j>`. [run] also
// accepts `qubits`, `steps` (auto or an integer), `output` and `rf_clock`
// (pulse or absolute). Omitted parameters are zero.

class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& what, int line)
      : std::runtime_error(what), line_(line) {}
  /// 1-based line, 0 when the problem is not tied to one line.
  int line() const { return line_; }

 private:
  int line_;
};

struct RunDirective {
  std::string sequence;
  std::optional<std::int64_t> steps;  // nullopt = auto
  std::int64_t sample_every = 0;      // 0 = about 200 samples per EO
  std::string output;
  RfClock rf_clock = RfClock::kPulseLocal;
};

struct ExperimentConfig {
  int num_qubits = 0;
  std::vector<int> initial_bits;
  std::vector<ElementaryOperation> eos;  // definition order
  std::vector<std::pair<std::string, std::vector<std::string>>> sequences;
  RunDirective run;

  const ElementaryOperation* find_eo(std::string_view name) const;
  /// Throws std::invalid_argument if the sequence is unknown.
  PulseSequence build_sequence(std::string_view name) const;
};

ExperimentConfig parse_config(std::istream& in);
ExperimentConfig parse_config_string(std::string_view text);

/// Round-trippable text (17 significant digits).
std::string dump_config(const ExperimentConfig& config);

/// Every EO of the profile plus sequences W1, W2 and grover<i>_<12|21>.
ExperimentConfig profile_config(const HardwareProfile& profile);

}  // namespace spinsim

#endif  // SPINSIM_CONFIG_H_
