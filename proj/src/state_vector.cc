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

#include "spinsim/state_vector.h"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "pairwise_sum.h"
#include "spinsim/errors.h"
#include "spinsim/parallel.h"

namespace spinsim {
namespace {

constexpr double kUnitarityTolerance = 1e-12;
constexpr double kImagResidueLimit = 1e-10;

void check_qubit_count(int num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw CapacityError("qubit count " + std::to_string(num_qubits) +
                            " outside [1, " + std::to_string(kMaxQubits) + "]",
                        num_qubits, kMaxQubits);
  }
}

void check_qubit(const StateVector& state, int qubit) {
  if (qubit < 1 || qubit > state.num_qubits()) {
    throw std::invalid_argument("qubit " + std::to_string(qubit) +
                                " outside [1, " +
                                std::to_string(state.num_qubits()) + "]");
  }
}

// Index of the i-th amplitude with bit `bit` clear.
inline std::size_t insert_zero_bit(std::size_t i, int bit) {
  std::size_t low = i & ((std::size_t{1} << bit) - 1);
  return ((i >> bit) << (bit + 1)) | low;
}

// a * x + b * y without the inf/nan recovery of std::complex operator*.
inline Complex mul_add(Complex a, Complex x, Complex b, Complex y) {
  return {a.real() * x.real() - a.imag() * x.imag() + b.real() * y.real() -
              b.imag() * y.imag(),
          a.real() * x.imag() + a.imag() * x.real() + b.real() * y.imag() +
              b.imag() * y.real()};
}

}  // namespace

char axis_name(Axis axis) {
  switch (axis) {
    case Axis::kX:
      return 'x';
    case Axis::kY:
      return 'y';
    case Axis::kZ:
      return 'z';
  }
  return '?';
}

Mat2 Mat2::identity() { return Mat2{{1.0, 0.0, 0.0, 1.0}}; }

Mat2 Mat2::adjoint() const {
  return Mat2{{std::conj(m[0]), std::conj(m[2]), std::conj(m[1]),
               std::conj(m[3])}};
}

Mat2 Mat2::operator*(const Mat2& rhs) const {
  const auto& a = m;
  const auto& b = rhs.m;
  return Mat2{{a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
               a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]}};
}

double Mat2::unitarity_deviation() const {
  Mat2 p = adjoint() * *this;
  Mat2 id = identity();
  double dev = 0.0;
  for (int i = 0; i < 4; ++i) dev = std::max(dev, std::abs(p.m[i] - id.m[i]));
  return dev;
}

StateVector StateVector::basis(int num_qubits, std::span<const int> bits) {
  check_qubit_count(num_qubits);
  if (static_cast<int>(bits.size()) != num_qubits) {
    throw std::invalid_argument("expected " + std::to_string(num_qubits) +
                                " bits, got " + std::to_string(bits.size()));
  }
  std::uint64_t index = 0;
  for (int j = 0; j < num_qubits; ++j) {
    if (bits[j] != 0 && bits[j] != 1) {
      throw std::invalid_argument("bit values must be 0 or 1");
    }
    index |= static_cast<std::uint64_t>(bits[j]) << j;
  }
  return basis(num_qubits, index);
}

StateVector StateVector::basis(int num_qubits, std::uint64_t index) {
  check_qubit_count(num_qubits);
  std::size_t dim = std::size_t{1} << num_qubits;
  if (index >= dim) throw std::invalid_argument("basis index out of range");
  std::vector<Complex> amp(dim, Complex{0.0, 0.0});
  amp[index] = 1.0;
  return StateVector(num_qubits, std::move(amp));
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
  std::size_t dim = amplitudes.size();
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    throw std::invalid_argument("amplitude count must be a power of two >= 2");
  }
  int num_qubits = std::countr_zero(dim);
  check_qubit_count(num_qubits);
  StateVector state(num_qubits, std::move(amplitudes));
  if (std::abs(state.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("amplitudes are not normalized");
  }
  return state;
}

StateVector StateVector::uniform(int num_qubits) {
  check_qubit_count(num_qubits);
  std::size_t dim = std::size_t{1} << num_qubits;
  double a = 1.0 / std::sqrt(static_cast<double>(dim));
  return StateVector(num_qubits, std::vector<Complex>(dim, Complex{a, 0.0}));
}

double StateVector::norm() const {
  return detail::pairwise_sum<double>(
      0, amp_.size(), [&](std::size_t i) { return std::norm(amp_[i]); });
}

namespace detail {

void apply_1q_kernel(std::span<Complex> amp, int qubit, const Mat2& gate) {
  const int bit = qubit - 1;
  const std::size_t stride = std::size_t{1} << bit;
  const Complex g00 = gate.m[0], g01 = gate.m[1], g10 = gate.m[2],
                g11 = gate.m[3];
  parallel_for(amp.size() / 2, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      std::size_t n0 = insert_zero_bit(i, bit);
      std::size_t n1 = n0 | stride;
      const Complex a0 = amp[n0];
      const Complex a1 = amp[n1];
      amp[n0] = mul_add(g00, a0, g01, a1);
      amp[n1] = mul_add(g10, a0, g11, a1);
    }
  });
}

}  // namespace detail

void apply_single_qubit_gate(StateVector& state, int qubit, const Mat2& gate) {
  check_qubit(state, qubit);
  double dev = gate.unitarity_deviation();
  if (!(dev <= kUnitarityTolerance)) {
    throw UnitarityError("gate is not unitary (max deviation " +
                             std::to_string(dev) + ")",
                         dev);
  }
  detail::apply_1q_kernel(state.amplitudes(), qubit, gate);
}

double expectation_spin(const StateVector& state, int qubit, Axis axis) {
  check_qubit(state, qubit);
  const auto amp = state.amplitudes();
  const std::size_t stride = std::size_t{1} << (qubit - 1);
  // <psi| S |psi> = sum_n conj(a_n) (S a)_n, S = sigma / 2.
  auto term = [&](std::size_t n) -> Complex {
    bool down = (n & stride) != 0;
    Complex s_a;
    switch (axis) {
      case Axis::kX:
        s_a = 0.5 * amp[n ^ stride];
        break;
      case Axis::kY:
        s_a = down ? Complex{0.0, 0.5} * amp[n ^ stride]
                   : Complex{0.0, -0.5} * amp[n ^ stride];
        break;
      case Axis::kZ:
        s_a = (down ? -0.5 : 0.5) * amp[n];
        break;
    }
    return std::conj(amp[n]) * s_a;
  };
  Complex value = detail::pairwise_sum<Complex>(0, amp.size(), term);
  if (std::abs(value.imag()) >= kImagResidueLimit) {
    throw std::logic_error("spin expectation has imaginary residue " +
                           std::to_string(value.imag()));
  }
  return value.real();
}

Observables qubit_values(const StateVector& state, double t) {
  Observables obs;
  obs.t = t;
  obs.norm = state.norm();
  const int n = state.num_qubits();
  obs.sx.resize(n);
  obs.sy.resize(n);
  obs.sz.resize(n);
  obs.q.resize(n);
  for (int j = 1; j <= n; ++j) {
    obs.sx[j - 1] = expectation_spin(state, j, Axis::kX);
    obs.sy[j - 1] = expectation_spin(state, j, Axis::kY);
    obs.sz[j - 1] = expectation_spin(state, j, Axis::kZ);
    obs.q[j - 1] = 0.5 - obs.sz[j - 1];
  }
  return obs;
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("inner product of states with " +
                                std::to_string(a.num_qubits()) + " and " +
                                std::to_string(b.num_qubits()) + " qubits");
  }
  return detail::pairwise_sum<Complex>(
      0, a.size(), [&](std::size_t i) { return std::conj(a[i]) * b[i]; });
}

double fidelity(const StateVector& a, const StateVector& b) {
  return std::abs(inner_product(a, b));
}

void apply_frame_rotation(StateVector& state, double t,
                          std::span<const double> omega) {
  const int n = state.num_qubits();
  if (static_cast<int>(omega.size()) != n) {
    throw std::invalid_argument("frame rotation needs one frequency per qubit");
  }
  auto amp = state.amplitudes();
  parallel_for(amp.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      double phase = 0.0;
      for (int j = 1; j <= n; ++j) phase += omega[j - 1] * spin_z_value(i, j);
      amp[i] *= std::polar(1.0, t * phase);
    }
  });
}

}  // namespace spinsim
