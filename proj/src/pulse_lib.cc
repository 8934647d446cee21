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

#include "spinsim/pulse_lib.h"

#include <algorithm>
#include <numbers>
#include <stdexcept>
#include <string>

namespace spinsim {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kQubits = 2;

// Ideal EOs.
constexpr double kIdealRotationTau = 0.25;  // tau / 2pi
constexpr double kIdealField = 1.0;

// Shared by both profiles: free evolution under the zz coupling for
// tau = -pi / J.
constexpr double kCouplingZ = -1e-6;
constexpr double kFreeEvolutionTau = 50e4;  // tau / 2pi

// NMR background (Larmor frequencies) and RF drive.
constexpr double kLarmor[kQubits] = {1.0, 0.25};
constexpr double kRfAmplitude[kQubits] = {0.05, 0.0125};
constexpr double kPulseTau[kQubits] = {10.0, 40.0};  // tau / 2pi, per target

std::string rotation_name(char axis, int qubit, bool bar) {
  std::string name{axis};
  name += std::to_string(qubit);
  if (bar) name += "bar";
  return name;
}

ElementaryOperation ideal_rotation(char axis, int qubit, bool bar) {
  SpinModel model(kQubits);
  model.set_static_field(qubit, axis == 'X' ? Axis::kX : Axis::kY,
                         bar ? -kIdealField : kIdealField);
  return {rotation_name(axis, qubit, bar), model, kTwoPi * kIdealRotationTau};
}

SpinModel nmr_background() {
  SpinModel model(kQubits);
  model.set_static_field(1, Axis::kZ, kLarmor[0]);
  model.set_static_field(2, Axis::kZ, kLarmor[1]);
  model.set_coupling(1, 2, Axis::kZ, kCouplingZ);
  return model;
}

// A pulse polarized along y rotates about x and vice versa. `sign` is the
// sign of the RF amplitude; one coil drives both spins at the target's
// Larmor frequency.
ElementaryOperation nmr_rotation(char axis, int qubit, bool bar) {
  const Axis rf_axis = axis == 'X' ? Axis::kY : Axis::kX;
  // Unbarred X_j needs a negative y drive, unbarred Y_j a positive x drive.
  double sign = axis == 'X' ? -1.0 : 1.0;
  if (bar) sign = -sign;
  SpinModel model = nmr_background();
  for (int j = 1; j <= kQubits; ++j) {
    model.set_rf_amplitude(j, rf_axis, sign * kRfAmplitude[j - 1]);
    model.set_rf_frequency(j, rf_axis, kLarmor[qubit - 1]);
  }
  return {rotation_name(axis, qubit, bar), model, kTwoPi * kPulseTau[qubit - 1]};
}

}  // namespace

const char* hardware_name(HardwareKind kind) {
  return kind == HardwareKind::kIdeal ? "ideal" : "nmr";
}

HardwareKind parse_hardware(std::string_view name) {
  if (name == "ideal") return HardwareKind::kIdeal;
  if (name == "nmr") return HardwareKind::kNmr;
  throw std::invalid_argument("unknown hardware '" + std::string(name) +
                              "' (expected ideal or nmr)");
}

const ElementaryOperation& HardwareProfile::eo(const std::string& name) const {
  auto it = eo_table.find(name);
  if (it == eo_table.end()) {
    throw std::invalid_argument("profile has no EO named '" + name + "'");
  }
  return it->second;
}

HardwareProfile make_profile(HardwareKind kind) {
  HardwareProfile profile{kind, {}};
  for (char axis : {'X', 'Y'}) {
    for (int q = 1; q <= kQubits; ++q) {
      for (bool bar : {false, true}) {
        ElementaryOperation eo = kind == HardwareKind::kIdeal
                                     ? ideal_rotation(axis, q, bar)
                                     : nmr_rotation(axis, q, bar);
        profile.eo_table.emplace(eo.name, std::move(eo));
      }
    }
  }
  SpinModel free = kind == HardwareKind::kIdeal ? SpinModel(kQubits)
                                                : nmr_background();
  free.set_coupling(1, 2, Axis::kZ, kCouplingZ);
  profile.eo_table.emplace("Ipi", ElementaryOperation{"Ipi", free,
                                                      kTwoPi * kFreeEvolutionTau});
  return profile;
}

PulseSequence expand_product(const HardwareProfile& profile,
                             std::span<const std::string> product) {
  PulseSequence seq;
  seq.ops.reserve(product.size());
  for (auto it = product.rbegin(); it != product.rend(); ++it) {
    seq.ops.push_back(profile.eo(*it));
  }
  return seq;
}

PulseSequence expand_product(const HardwareProfile& profile,
                             std::initializer_list<std::string> product) {
  return expand_product(profile,
                        std::span<const std::string>(product.begin(), product.size()));
}

PulseSequence wh_transform_seq(int qubit, const HardwareProfile& profile) {
  if (qubit != 1 && qubit != 2) throw std::invalid_argument("qubit must be 1 or 2");
  const std::string x = rotation_name('X', qubit, false);
  return expand_product(profile, {x, x, rotation_name('Y', qubit, true)});
}

PulseSequence f_oracle_seq(int item, const HardwareProfile& profile) {
  if (item < 0 || item > 3) throw std::invalid_argument("item must be in 0..3");
  // F_0: both bars, F_1: bar on X1 only, F_2: bar on X2 only, F_3: none.
  const bool bar1 = (item & 2) == 0;
  const bool bar2 = (item & 1) == 0;
  return expand_product(
      profile, {"Y1", rotation_name('X', 1, bar1), "Y1bar", "Y2",
                rotation_name('X', 2, bar2), "Y2bar", "Ipi"});
}

PulseSequence conditional_phase_seq(const HardwareProfile& profile) {
  return expand_product(profile,
                        {"Y1", "X1bar", "Y1bar", "Y2", "X2bar", "Y2bar", "Ipi"});
}

InitOrder parse_init_order(std::string_view text) {
  if (text == "12") return InitOrder::kW1First;
  if (text == "21") return InitOrder::kW2First;
  throw std::invalid_argument("init order must be 12 or 21, got '" +
                              std::string(text) + "'");
}

const char* init_order_name(InitOrder order) {
  return order == InitOrder::kW1First ? "12" : "21";
}

std::vector<std::string> shortened_grover_product(int item) {
  if (item < 0 || item > 3) throw std::invalid_argument("item must be in 0..3");
  return {"X1",  "Y1bar", "X2", "Y2bar", "Ipi",
          rotation_name('X', 1, (item & 2) != 0), "Y1bar",
          rotation_name('X', 2, (item & 1) != 0), "Y2bar", "Ipi"};
}

std::vector<std::string> full_grover_product(int item) {
  if (item < 0 || item > 3) throw std::invalid_argument("item must be in 0..3");
  const bool bar1 = (item & 2) == 0;
  const bool bar2 = (item & 1) == 0;
  // W1 W2 P W1 W2 F_i with W_j = X_j X_j Ybar_j.
  std::vector<std::string> w1w2 = {"X1", "X1", "Y1bar", "X2", "X2", "Y2bar"};
  std::vector<std::string> p = {"Y1", "X1bar", "Y1bar", "Y2", "X2bar", "Y2bar",
                                "Ipi"};
  std::vector<std::string> f = {"Y1", rotation_name('X', 1, bar1), "Y1bar", "Y2",
                                rotation_name('X', 2, bar2), "Y2bar", "Ipi"};
  std::vector<std::string> out;
  for (const auto* part : {&w1w2, &p, &w1w2, &f}) {
    out.insert(out.end(), part->begin(), part->end());
  }
  return out;
}

GroverProgram grover_program(int item, const HardwareProfile& profile,
                             InitOrder init_order) {
  if (item < 0 || item > 3) throw std::invalid_argument("item must be in 0..3");
  GroverProgram program{item, profile.kind, init_order, {}};
  const int first = init_order == InitOrder::kW1First ? 1 : 2;
  auto& ops = program.seq.ops;
  for (int q : {first, 3 - first}) {
    PulseSequence w = wh_transform_seq(q, profile);
    ops.insert(ops.end(), w.ops.begin(), w.ops.end());
  }
  std::vector<std::string> product = shortened_grover_product(item);
  PulseSequence body = expand_product(profile, product);
  ops.insert(ops.end(), body.ops.begin(), body.ops.end());
  return program;
}

}  // namespace spinsim
