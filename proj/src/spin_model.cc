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

#include "spinsim/spin_model.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "spinsim/errors.h"

namespace spinsim {

SpinModel::SpinModel(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw CapacityError("qubit count " + std::to_string(num_qubits) +
                            " out of range",
                        num_qubits, kMaxQubits);
  }
  const std::size_t n = static_cast<std::size_t>(num_qubits);
  j_.assign(n * n * 3, 0.0);
  h0_.assign(n * 3, 0.0);
  h1_.assign(n * 3, 0.0);
  f_.assign(n * 3, 0.0);
  phi_.assign(n * 3, 0.0);
}

std::size_t SpinModel::slot(int j, Axis axis) const {
  if (j < 1 || j > num_qubits_) {
    throw std::invalid_argument("spin index " + std::to_string(j) +
                                " outside [1, " + std::to_string(num_qubits_) +
                                "]");
  }
  return static_cast<std::size_t>(j - 1) * 3 + static_cast<std::size_t>(axis);
}

std::size_t SpinModel::pair_slot(int j, int k, Axis axis) const {
  if (j == k) throw std::invalid_argument("coupling of a spin to itself");
  if (j > k) std::swap(j, k);
  slot(j, axis);
  slot(k, axis);
  const std::size_t n = static_cast<std::size_t>(num_qubits_);
  return (static_cast<std::size_t>(j - 1) * n + static_cast<std::size_t>(k - 1)) *
             3 +
         static_cast<std::size_t>(axis);
}

double SpinModel::coupling(int j, int k, Axis axis) const {
  if (j == k) return 0.0;
  return j_[pair_slot(j, k, axis)];
}

SpinModel& SpinModel::set_coupling(int j, int k, Axis axis, double value) {
  j_[pair_slot(j, k, axis)] = value;
  return *this;
}

SpinModel& SpinModel::set_static_field(int j, Axis axis, double value) {
  h0_[slot(j, axis)] = value;
  return *this;
}

SpinModel& SpinModel::set_rf_amplitude(int j, Axis axis, double value) {
  h1_[slot(j, axis)] = value;
  return *this;
}

SpinModel& SpinModel::set_rf_frequency(int j, Axis axis, double value) {
  f_[slot(j, axis)] = value;
  return *this;
}

SpinModel& SpinModel::set_rf_phase(int j, Axis axis, double value) {
  phi_[slot(j, axis)] = value;
  return *this;
}

double SpinModel::field(int j, Axis axis, double t) const {
  std::size_t s = slot(j, axis);
  if (h1_[s] == 0.0) return h0_[s];
  return h0_[s] + h1_[s] * std::sin(f_[s] * t + phi_[s]);
}

int SpinModel::pair_count(Axis axis) const {
  int count = 0;
  for (int j = 1; j <= num_qubits_; ++j) {
    for (int k = j + 1; k <= num_qubits_; ++k) {
      if (j_[pair_slot(j, k, axis)] != 0.0) ++count;
    }
  }
  return count;
}

bool SpinModel::axis_active(Axis axis) const {
  if (pair_count(axis) > 0) return true;
  for (int j = 1; j <= num_qubits_; ++j) {
    std::size_t s = slot(j, axis);
    if (h0_[s] != 0.0 || h1_[s] != 0.0) return true;
  }
  return false;
}

bool SpinModel::has_rf() const {
  for (double v : h1_) {
    if (v != 0.0) return true;
  }
  return false;
}

double SpinModel::max_rf_frequency() const {
  double f = 0.0;
  for (std::size_t s = 0; s < h1_.size(); ++s) {
    if (h1_[s] != 0.0) f = std::max(f, std::abs(f_[s]));
  }
  return f;
}

void SpinModel::validate() const {
  auto check = [](const std::vector<double>& v, const char* what) {
    for (double x : v) {
      if (!std::isfinite(x)) {
        throw std::invalid_argument(std::string("non-finite ") + what);
      }
    }
  };
  check(j_, "coupling");
  check(h0_, "static field");
  check(h1_, "RF amplitude");
  check(f_, "RF frequency");
  check(phi_, "RF phase");
}

double PulseSequence::total_duration() const {
  double total = 0.0;
  for (const auto& op : ops) total += op.tau;
  return total;
}

int PulseSequence::num_qubits() const {
  return ops.empty() ? 0 : ops.front().model.num_qubits();
}

}  // namespace spinsim
