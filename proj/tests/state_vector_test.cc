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

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "spinsim/errors.h"

namespace spinsim {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
const Complex kI{0.0, 1.0};

Mat2 x_gate() { return Mat2{{kInvSqrt2, kInvSqrt2 * kI, kInvSqrt2 * kI, kInvSqrt2}}; }
Mat2 ybar_gate() { return Mat2{{kInvSqrt2, -kInvSqrt2, kInvSqrt2, kInvSqrt2}}; }

StateVector random_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<Complex> amp(std::size_t{1} << n);
  double s = 0.0;
  for (auto& a : amp) {
    a = {g(rng), g(rng)};
    s += std::norm(a);
  }
  for (auto& a : amp) a /= std::sqrt(s);
  return StateVector::from_amplitudes(std::move(amp));
}

Mat2 random_unitary(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
  const double a = u(rng), b = u(rng), c = u(rng), th = u(rng);
  const Complex ea = std::polar(1.0, a), eb = std::polar(1.0, b), ec = std::polar(1.0, c);
  return Mat2{{ea * std::cos(th), eb * std::sin(th), -std::conj(eb) * ec * std::sin(th),
               std::conj(ea) * ec * std::cos(th)}};
}

TEST(Basis, EncodingUsesQubitOneAsLowBit) {
  std::vector<int> b00 = {0, 0}, b10 = {1, 0}, b011 = {0, 1, 1};
  EXPECT_EQ(StateVector::basis(2, b00)[0], Complex(1.0));
  EXPECT_EQ(StateVector::basis(2, b10)[1], Complex(1.0));
  auto s = StateVector::basis(3, b011);
  EXPECT_EQ(s[6], Complex(1.0));
  EXPECT_DOUBLE_EQ(s.norm(), 1.0);
}

TEST(Basis, RejectsBadInput) {
  std::vector<int> bad = {0, 2};
  std::vector<int> wrong_len = {0};
  EXPECT_THROW(StateVector::basis(2, bad), std::invalid_argument);
  EXPECT_THROW(StateVector::basis(2, wrong_len), std::invalid_argument);
  EXPECT_THROW(StateVector::basis(kMaxQubits + 1, std::uint64_t{0}), CapacityError);
  EXPECT_THROW(StateVector::from_amplitudes({1.0, 1.0}), std::invalid_argument);
  EXPECT_THROW(StateVector::from_amplitudes({1.0, 0.0, 0.0}), std::invalid_argument);
}

TEST(Gate, IdentityLeavesStateUnchanged) {
  std::mt19937_64 rng(1);
  auto s = random_state(3, rng);
  auto copy = s;
  apply_single_qubit_gate(s, 2, Mat2::identity());
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_EQ(s[i], copy[i]);
}

TEST(Gate, XAndYbarOnSpinUp) {
  auto s = StateVector::basis(1, std::uint64_t{0});
  apply_single_qubit_gate(s, 1, x_gate());
  EXPECT_NEAR(std::abs(s[0] - kInvSqrt2), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s[1] - kInvSqrt2 * kI), 0.0, 1e-15);

  auto t = StateVector::basis(1, std::uint64_t{0});
  apply_single_qubit_gate(t, 1, ybar_gate());
  EXPECT_NEAR(std::abs(t[0] - kInvSqrt2), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(t[1] - kInvSqrt2), 0.0, 1e-15);
}

TEST(Gate, RejectsNonUnitaryAndBadQubit) {
  auto s = StateVector::basis(2, std::uint64_t{0});
  EXPECT_THROW(apply_single_qubit_gate(s, 1, Mat2{{1.0, 1.0, 0.0, 1.0}}), UnitarityError);
  EXPECT_THROW(apply_single_qubit_gate(s, 3, Mat2::identity()), std::invalid_argument);
  EXPECT_THROW(apply_single_qubit_gate(s, 0, Mat2::identity()), std::invalid_argument);
}

TEST(Gate, GatesOnDistinctQubitsCommute) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    auto s = random_state(4, rng);
    Mat2 a = random_unitary(rng), b = random_unitary(rng);
    auto s1 = s, s2 = s;
    apply_single_qubit_gate(s1, 1, a);
    apply_single_qubit_gate(s1, 3, b);
    apply_single_qubit_gate(s2, 3, b);
    apply_single_qubit_gate(s2, 1, a);
    for (std::size_t i = 0; i < s.size(); ++i) EXPECT_NEAR(std::abs(s1[i] - s2[i]), 0.0, 1e-14);
  }
}

TEST(Gate, NormPreservedPerCall) {
  std::mt19937_64 rng(11);
  auto s = random_state(6, rng);
  for (int k = 0; k < 200; ++k) {
    const double before = s.norm();
    apply_single_qubit_gate(s, 1 + k % 6, random_unitary(rng));
    EXPECT_LT(std::abs(s.norm() - before), 1e-12);
  }
}

TEST(Expectation, Examples) {
  auto up = StateVector::basis(2, std::uint64_t{0});
  EXPECT_DOUBLE_EQ(expectation_spin(up, 1, Axis::kZ), 0.5);
  EXPECT_DOUBLE_EQ(expectation_spin(up, 2, Axis::kZ), 0.5);

  auto plus = StateVector::from_amplitudes({kInvSqrt2, kInvSqrt2, 0.0, 0.0});
  EXPECT_NEAR(expectation_spin(plus, 1, Axis::kX), 0.5, 1e-15);
  EXPECT_NEAR(expectation_spin(plus, 2, Axis::kX), 0.0, 1e-15);

  auto eq = StateVector::from_amplitudes({kInvSqrt2, kInvSqrt2 * kI});
  EXPECT_NEAR(expectation_spin(eq, 1, Axis::kZ), 0.0, 1e-15);
  EXPECT_NEAR(expectation_spin(eq, 1, Axis::kY), 0.5, 1e-15);
}

TEST(QubitValues, Examples) {
  auto q = qubit_values(StateVector::basis(2, std::uint64_t{0}));
  EXPECT_DOUBLE_EQ(q.q[0], 0.0);
  EXPECT_DOUBLE_EQ(q.q[1], 0.0);
  std::vector<int> updown = {0, 1};
  q = qubit_values(StateVector::basis(2, updown));
  EXPECT_DOUBLE_EQ(q.q[0], 0.0);
  EXPECT_DOUBLE_EQ(q.q[1], 1.0);
  q = qubit_values(StateVector::uniform(2));
  EXPECT_NEAR(q.q[0], 0.5, 1e-15);
  EXPECT_NEAR(q.q[1], 0.5, 1e-15);
  EXPECT_NEAR(q.norm, 1.0, 1e-15);
}

TEST(Fidelity, Examples) {
  auto uu = StateVector::basis(2, std::uint64_t{0});
  auto dd = StateVector::basis(2, std::uint64_t{3});
  EXPECT_DOUBLE_EQ(fidelity(uu, uu), 1.0);
  EXPECT_DOUBLE_EQ(fidelity(uu, dd), 0.0);
  // Global sign is invisible.
  auto psi = StateVector::from_amplitudes({0.5, 0.5, -0.5, 0.5});
  auto minus = StateVector::from_amplitudes({-0.5, -0.5, 0.5, -0.5});
  EXPECT_NEAR(fidelity(psi, minus), 1.0, 1e-15);
  EXPECT_THROW(fidelity(uu, StateVector::basis(3, std::uint64_t{0})), std::invalid_argument);
}

TEST(FrameRotation, Examples) {
  std::mt19937_64 rng(3);
  auto s = random_state(2, rng);
  auto copy = s;
  std::vector<double> omega = {1.0, 0.25};
  apply_frame_rotation(s, 0.0, omega);
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_EQ(s[i], copy[i]);

  auto one = StateVector::from_amplitudes({kInvSqrt2, kInvSqrt2 * kI});
  auto before = one;
  std::vector<double> w1 = {1.0};
  apply_frame_rotation(one, 2.0 * std::numbers::pi, w1);
  EXPECT_NEAR(fidelity(one, before), 1.0, 1e-14);
}

TEST(FrameRotation, ReadoutIsFrameInvariant) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    auto s = random_state(3, rng);
    auto before = qubit_values(s);
    std::vector<double> omega = {u(rng), u(rng), u(rng)};
    apply_frame_rotation(s, 10.0 * u(rng), omega);
    auto after = qubit_values(s);
    for (int j = 0; j < 3; ++j) {
      EXPECT_NEAR(before.q[j], after.q[j], 1e-14);
      EXPECT_NEAR(before.sz[j], after.sz[j], 1e-14);
    }
    EXPECT_LT(std::abs(s.norm() - 1.0), 1e-12);
  }
}

}  // namespace
}  // namespace spinsim
