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

#ifndef SPINSIM_STATE_VECTOR_H_
#define SPINSIM_STATE_VECTOR_H_

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace spinsim {

using Complex = std::complex<double>;

/// Largest register the simulator will allocate (2^26 amplitudes, 1 GiB).
inline constexpr int kMaxQubits = 26;

enum class Axis { kX = 0, kY = 1, kZ = 2 };

inline constexpr std::array<Axis, 3> kAllAxes = {Axis::kX, Axis::kY, Axis::kZ};

char axis_name(Axis axis);

/// Dense 2x2 matrix in row-major order: {m00, m01, m10, m11}.
struct Mat2 {
  std::array<Complex, 4> m;

  Complex operator()(int r, int c) const { return m[2 * r + c]; }
  Mat2 adjoint() const;
  Mat2 operator*(const Mat2& rhs) const;
  /// Largest entry of |M^dagger M - 1|.
  double unitarity_deviation() const;

  static Mat2 identity();
};

/// Eigenvalue of S^z for qubit `qubit` (1-based) in basis state `index`:
/// +1/2 for spin up (bit clear), -1/2 for spin down (bit set).
inline double spin_z_value(std::uint64_t index, int qubit) {
  return ((index >> (qubit - 1)) & 1u) ? -0.5 : 0.5;
}

/// Pure state of L spin-1/2 particles.
///
/// Basis index n = x_1 + 2 x_2 + ... + 2^(L-1) x_L where x_j = 0 is spin up
/// and x_j = 1 is spin down; qubit 1 is the least significant bit. For L = 2
/// the order is |up up>, |down up>, |up down>, |down down>.
///
/// Qubits are numbered from 1 throughout the public API.
class StateVector {
 public:
  /// Computational basis state. `bits[j-1]` is x_j.
  static StateVector basis(int num_qubits, std::span<const int> bits);
  static StateVector basis(int num_qubits, std::uint64_t index);

  /// Takes ownership of explicit amplitudes. The size must be a power of two
  /// and the norm must be 1 within 1e-9.
  static StateVector from_amplitudes(std::vector<Complex> amplitudes);

  /// (|up> + |down>)^{(x) L} / 2^{L/2}.
  static StateVector uniform(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  std::size_t size() const { return amp_.size(); }

  std::span<Complex> amplitudes() { return amp_; }
  std::span<const Complex> amplitudes() const { return amp_; }
  Complex operator[](std::size_t i) const { return amp_[i]; }

  /// Sum of |amp|^2 in pairwise order.
  double norm() const;

 private:
  StateVector(int num_qubits, std::vector<Complex> amp)
      : num_qubits_(num_qubits), amp_(std::move(amp)) {}

  int num_qubits_ = 0;
  std::vector<Complex> amp_;
};

/// Per-qubit readout. All vectors have one entry per qubit, index j-1.
struct Observables {
  double t = 0.0;
  double norm = 1.0;
  std::vector<double> sx;
  std::vector<double> sy;
  std::vector<double> sz;
  /// Qubit value Q_j = 1/2 - <S^z_j>, 0 for spin up and 1 for spin down.
  std::vector<double> q;
};

/// Applies `gate` to qubit `qubit`. Throws UnitarityError if the gate
/// deviates from unitarity by more than 1e-12.
void apply_single_qubit_gate(StateVector& state, int qubit, const Mat2& gate);

namespace detail {
/// Same as apply_single_qubit_gate without validation.
void apply_1q_kernel(std::span<Complex> amp, int qubit, const Mat2& gate);
}  // namespace detail

/// <state| S^axis_qubit |state> with S = sigma / 2.
double expectation_spin(const StateVector& state, int qubit, Axis axis);

Observables qubit_values(const StateVector& state, double t = 0.0);

Complex inner_product(const StateVector& a, const StateVector& b);

/// |<a|b>|; insensitive to global phase.
double fidelity(const StateVector& a, const StateVector& b);

/// Multiplies amplitude n by exp(+i t sum_j omega_j s_j(n)), i.e. the change
/// to a frame rotating about z with angular frequency omega_j for spin j.
void apply_frame_rotation(StateVector& state, double t,
                          std::span<const double> omega);

}  // namespace spinsim

#endif  // SPINSIM_STATE_VECTOR_H_
