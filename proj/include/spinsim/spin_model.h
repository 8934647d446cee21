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

#ifndef SPINSIM_SPIN_MODEL_H_
#define SPINSIM_SPIN_MODEL_H_

#include <string>
#include <vector>

#include "spinsim/state_vector.h"

namespace spinsim {

/// Parameters of the spin Hamiltonian
///
///   H(t) = - sum_{j<k} sum_a J[j][k][a] S^a_j S^a_k
///          - sum_j sum_a (h0[j][a] + h1[j][a] sin(f[j][a] t + phi[j][a])) S^a_j
///
/// Couplings are angular frequencies, stored once per unordered pair.
/// Every parameter defaults to zero.
class SpinModel {
 public:
  explicit SpinModel(int num_qubits);

  int num_qubits() const { return num_qubits_; }

  double coupling(int j, int k, Axis axis) const;
  /// Sets J for the pair {j, k}; j == k throws std::invalid_argument.
  SpinModel& set_coupling(int j, int k, Axis axis, double value);

  double static_field(int j, Axis axis) const { return h0_[slot(j, axis)]; }
  double rf_amplitude(int j, Axis axis) const { return h1_[slot(j, axis)]; }
  double rf_frequency(int j, Axis axis) const { return f_[slot(j, axis)]; }
  double rf_phase(int j, Axis axis) const { return phi_[slot(j, axis)]; }

  SpinModel& set_static_field(int j, Axis axis, double value);
  SpinModel& set_rf_amplitude(int j, Axis axis, double value);
  SpinModel& set_rf_frequency(int j, Axis axis, double value);
  SpinModel& set_rf_phase(int j, Axis axis, double value);

  /// h0 + h1 sin(f t + phi) for spin j along `axis`.
  double field(int j, Axis axis, double t) const;

  /// Number of pairs with nonzero coupling along `axis`.
  int pair_count(Axis axis) const;
  /// True if any J, h0 or h1 along `axis` is nonzero.
  bool axis_active(Axis axis) const;
  /// True if any h1 is nonzero.
  bool has_rf() const;
  /// Largest f among spins/axes with nonzero h1; 0 without RF.
  double max_rf_frequency() const;

  /// Throws std::invalid_argument on non-finite parameters.
  void validate() const;

  bool operator==(const SpinModel&) const = default;

 private:
  std::size_t slot(int j, Axis axis) const;
  std::size_t pair_slot(int j, int k, Axis axis) const;

  int num_qubits_;
  std::vector<double> j_;  // L*L*3, only j<k used
  std::vector<double> h0_;
  std::vector<double> h1_;
  std::vector<double> f_;
  std::vector<double> phi_;
};

/// One hardware instruction: a model held constant for `tau`.
struct ElementaryOperation {
  std::string name;
  SpinModel model;
  double tau = 0.0;
};

/// EOs in execution order. Operator products are written right-to-left, so
/// the rightmost factor of a product is the first entry here.
struct PulseSequence {
  std::vector<ElementaryOperation> ops;
  double start_time = 0.0;

  double total_duration() const;
  int num_qubits() const;
};

}  // namespace spinsim

#endif  // SPINSIM_SPIN_MODEL_H_
