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

#ifndef SPINSIM_PULSE_LIB_H_
#define SPINSIM_PULSE_LIB_H_

#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spinsim/spin_model.h"

namespace spinsim {

// Two-qubit instruction sets for Grover's search. EO names:
//   X1 X1bar X2 X2bar Y1 Y1bar Y2 Y2bar Ipi
// X_j = exp(+i pi/2 S^x_j), Ybar_j = exp(-i pi/2 S^y_j), a trailing "bar"
// is the inverse rotation, Ipi = exp(-i pi S^z_1 S^z_2).

enum class HardwareKind { kIdeal, kNmr };

const char* hardware_name(HardwareKind kind);
/// "ideal" or "nmr"; anything else throws std::invalid_argument.
HardwareKind parse_hardware(std::string_view name);

struct HardwareProfile {
  HardwareKind kind;
  std::map<std::string, ElementaryOperation> eo_table;

  /// Throws std::invalid_argument naming the EO if it is missing.
  const ElementaryOperation& eo(const std::string& name) const;
};

/// Ideal: one static field of magnitude 1 for tau = pi/2 per rotation.
/// NMR: chloroform-like background (h0_z = 1 and 0.25, J_z = -1e-6) plus
/// resonant RF pulses.
HardwareProfile make_profile(HardwareKind kind);

/// Turns an operator product (the
/// rightmost factor acts first) into an execution-order sequence.
PulseSequence expand_product(const HardwareProfile& profile,
                             std::span<const std::string> product);
PulseSequence expand_product(const HardwareProfile& profile,
                             std::initializer_list<std::string> product);

/// W_j = X_j X_j Ybar_j; runs Ybar_j, X_j, X_j.
PulseSequence wh_transform_seq(int qubit, const HardwareProfile& profile);

/// F_item = Y_1 X1(bar) Ybar_1 Y_2 X2(bar) Ybar_2 I(pi), the unshortened
/// query that flips the sign of basis state `item` (up to global phase).
PulseSequence f_oracle_seq(int item, const HardwareProfile& profile);

/// P = Y_1 X1bar Ybar_1 Y_2 X2bar Ybar_2 I(pi) = diag(1, -1, -1, -1) up to
/// global phase.
PulseSequence conditional_phase_seq(const HardwareProfile& profile);

enum class InitOrder { kW1First, kW2First };

/// "12" -> kW1First, "21" -> kW2First.
InitOrder parse_init_order(std::string_view text);
const char* init_order_name(InitOrder order);

struct GroverProgram {
  int item = 0;
  HardwareKind kind = HardwareKind::kIdeal;
  InitOrder init_order = InitOrder::kW1First;
  PulseSequence seq;
};

/// Initialization (two WH transforms in the given order) followed by the
/// shortened search program
///   U_i = X1 Ybar1 X2 Ybar2 I(pi) X1' Ybar1 X2' Ybar2 I(pi)
/// where X1' carries a bar iff bit 1 of `item` is set and X2' carries a bar
/// iff bit 0 is set.
GroverProgram grover_program(int item, const HardwareProfile& profile,
                             InitOrder init_order);

/// The shortened U_item product alone, left-to-right as written.
std::vector<std::string> shortened_grover_product(int item);

/// W1 W2 P W1 W2 F_item, left-to-right as written.
std::vector<std::string> full_grover_product(int item);

}  // namespace spinsim

#endif  // SPINSIM_PULSE_LIB_H_
