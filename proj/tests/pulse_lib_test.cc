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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "spinsim/oracle.h"
#include "spinsim/propagator.h"

namespace spinsim {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool same_up_to_phase(const GateMatrix& a, const GateMatrix& b, double tol = 1e-12) {
  return std::abs(std::abs(relative_phase(a, b)) - 1.0) < tol;
}

StateVector run(const PulseSequence& seq, StateVector s, RunOptions opt = {}) {
  run_sequence(s, seq, opt);
  return s;
}

TEST(Profile, IdealValues) {
  const HardwareProfile ideal = make_profile(HardwareKind::kIdeal);
  EXPECT_EQ(ideal.eo_table.size(), 9u);
  const auto& x1 = ideal.eo("X1");
  EXPECT_DOUBLE_EQ(x1.tau, kTwoPi * 0.25);
  SpinModel expected(2);
  expected.set_static_field(1, Axis::kX, 1.0);
  EXPECT_EQ(x1.model, expected);
  EXPECT_DOUBLE_EQ(ideal.eo("Y2bar").model.static_field(2, Axis::kY), -1.0);
  const auto& ipi = ideal.eo("Ipi");
  EXPECT_DOUBLE_EQ(ipi.tau, kTwoPi * 50e4);
  EXPECT_DOUBLE_EQ(ipi.model.coupling(1, 2, Axis::kZ), -1e-6);
  EXPECT_DOUBLE_EQ(ipi.model.coupling(2, 1, Axis::kZ), -1e-6);
  EXPECT_THROW(ideal.eo("Z1"), std::invalid_argument);
}

TEST(Profile, NmrValues) {
  const HardwareProfile nmr = make_profile(HardwareKind::kNmr);
  const auto& x2bar = nmr.eo("X2bar");
  EXPECT_DOUBLE_EQ(x2bar.tau, kTwoPi * 40);
  SpinModel expected(2);
  expected.set_static_field(1, Axis::kZ, 1.0).set_static_field(2, Axis::kZ, 0.25);
  expected.set_coupling(1, 2, Axis::kZ, -1e-6);
  EXPECT_EQ(nmr.eo("Ipi").model, expected);
  expected.set_rf_amplitude(1, Axis::kY, 0.05).set_rf_amplitude(2, Axis::kY, 0.0125);
  expected.set_rf_frequency(1, Axis::kY, 0.25).set_rf_frequency(2, Axis::kY, 0.25);
  EXPECT_EQ(x2bar.model, expected);

  // Inverse EOs flip the drive.
  for (const char* name : {"X1", "X2", "Y1", "Y2"}) {
    const auto& a = nmr.eo(name).model;
    const auto& b = nmr.eo(std::string(name) + "bar").model;
    for (int j = 1; j <= 2; ++j) {
      for (Axis ax : {Axis::kX, Axis::kY}) {
        EXPECT_DOUBLE_EQ(a.rf_amplitude(j, ax), -b.rf_amplitude(j, ax));
        EXPECT_DOUBLE_EQ(a.rf_frequency(j, ax), b.rf_frequency(j, ax));
      }
    }
  }
  const auto& y1 = nmr.eo("Y1");
  EXPECT_DOUBLE_EQ(y1.tau, kTwoPi * 10);
  EXPECT_DOUBLE_EQ(y1.model.rf_amplitude(1, Axis::kX), 0.05);
  EXPECT_DOUBLE_EQ(nmr.eo("X1").model.rf_amplitude(1, Axis::kY), -0.05);
}

TEST(Parse, NamesRoundTrip) {
  EXPECT_EQ(parse_hardware("nmr"), HardwareKind::kNmr);
  EXPECT_STREQ(hardware_name(HardwareKind::kIdeal), "ideal");
  EXPECT_THROW(parse_hardware("ion"), std::invalid_argument);
  EXPECT_EQ(parse_init_order("21"), InitOrder::kW2First);
  EXPECT_STREQ(init_order_name(InitOrder::kW1First), "12");
  EXPECT_THROW(parse_init_order("11"), std::invalid_argument);
}

TEST(Sequences, ProductIsReversed) {
  const HardwareProfile ideal = make_profile(HardwareKind::kIdeal);
  PulseSequence w = wh_transform_seq(1, ideal);
  ASSERT_EQ(w.ops.size(), 3u);
  EXPECT_EQ(w.ops[0].name, "Y1bar");
  EXPECT_EQ(w.ops[1].name, "X1");
  EXPECT_EQ(w.ops[2].name, "X1");
  EXPECT_THROW(wh_transform_seq(3, ideal), std::invalid_argument);
  EXPECT_THROW(f_oracle_seq(4, ideal), std::invalid_argument);
}

TEST(Sequences, WalshHadamardOnIdealHardware) {
  const HardwareProfile ideal = make_profile(HardwareKind::kIdeal);
  PulseSequence seq = wh_transform_seq(1, ideal);
  PulseSequence w2 = wh_transform_seq(2, ideal);
  seq.ops.insert(seq.ops.end(), w2.ops.begin(), w2.ops.end());
  StateVector s = run(seq, StateVector::basis(2, std::uint64_t{0}));
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(std::abs(s[i] + 0.5), 0.0, 1e-12);
  EXPECT_NEAR(fidelity(s, StateVector::uniform(2)), 1.0, 1e-12);

  PulseSequence twice = wh_transform_seq(1, ideal);
  const PulseSequence once = twice;
  twice.ops.insert(twice.ops.end(), once.ops.begin(), once.ops.end());
  // W^2 = -1: the register comes back to |up up> with a sign.
  StateVector t = run(twice, StateVector::basis(2, std::uint64_t{0}));
  EXPECT_NEAR(std::abs(t[0] + 1.0), 0.0, 1e-12);
  auto q = qubit_values(t);
  EXPECT_NEAR(q.q[0], 0.0, 1e-12);
  EXPECT_NEAR(q.q[1], 0.0, 1e-12);
}

TEST(Sequences, OracleAndPhaseMatchIdealGates) {
  const HardwareProfile ideal = make_profile(HardwareKind::kIdeal);
  for (int item = 0; item < 4; ++item) {
    auto f = static_cast<TwoQubitGate>(static_cast<int>(TwoQubitGate::kF0) + item);
    EXPECT_TRUE(same_up_to_phase(matrix_of_sequence(f_oracle_seq(item, ideal)),
                                 ideal_two_qubit(f)))
        << item;
  }
  EXPECT_TRUE(same_up_to_phase(matrix_of_sequence(conditional_phase_seq(ideal)),
                               ideal_two_qubit(TwoQubitGate::kP)));
  // P = -F0.
  EXPECT_NEAR((ideal_two_qubit(TwoQubitGate::kP).matrix() +
               ideal_two_qubit(TwoQubitGate::kF0).matrix()).norm(), 0.0, 1e-15);
}

TEST(Sequences, SimulatedOracleOnUniformState) {
  const HardwareProfile ideal = make_profile(HardwareKind::kIdeal);
  StateVector f2 = run(f_oracle_seq(2, ideal), StateVector::uniform(2));
  EXPECT_NEAR(fidelity(f2, StateVector::from_amplitudes({0.5, 0.5, -0.5, 0.5})), 1.0, 1e-12);

  StateVector p = run(conditional_phase_seq(ideal), StateVector::uniform(2));
  const Complex phase = p[0] / 0.5;
  EXPECT_NEAR(std::abs(phase), 1.0, 1e-12);
  for (std::size_t i = 1; i < 4; ++i) EXPECT_NEAR(std::abs(p[i] + 0.5 * phase), 0.0, 1e-12);
}

TEST(Sequences, EveryIdealEoMatchesItsGate) {
  const HardwareProfile ideal = make_profile(HardwareKind::kIdeal);
  for (const auto& [name, eo] : ideal.eo_table) {
    PulseSequence seq;
    seq.ops.push_back(eo);
    const GateMatrix gate = ideal_gate_by_name(name, 2);
    for (std::uint64_t c = 0; c < 4; ++c) {
      StateVector s = run(seq, StateVector::basis(2, c));
      StateVector expected = gate.apply(StateVector::basis(2, c));
      EXPECT_GE(fidelity(s, expected), 1.0 - 1e-12) << name;
      // Not just up to phase: the ideal gates are exact.
      for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(std::abs(s[i] - expected[i]), 0.0, 1e-12);
    }
  }
}

TEST(Grover, ShortenedEqualsFullProductUpToPhase) {
  const HardwareProfile ideal = make_profile(HardwareKind::kIdeal);
  for (int item = 0; item < 4; ++item) {
    GateMatrix shortened = matrix_of_sequence(expand_product(ideal, shortened_grover_product(item)));
    GateMatrix full = matrix_of_sequence(expand_product(ideal, full_grover_product(item)));
    const Complex phase = relative_phase(full, shortened);
    const double expected = (item == 1 || item == 2) ? -1.0 : 1.0;
    EXPECT_NEAR(std::abs(phase - expected), 0.0, 1e-12) << item;
    EXPECT_GE(column_fidelity(full, shortened), 1.0 - 1e-12);
  }
}

TEST(Grover, IdealProgramsFindTheItem) {
  const HardwareProfile ideal = make_profile(HardwareKind::kIdeal);
  for (InitOrder order : {InitOrder::kW1First, InitOrder::kW2First}) {
    for (int item = 0; item < 4; ++item) {
      GroverProgram p = grover_program(item, ideal, order);
      EXPECT_EQ(p.item, item);
      EXPECT_EQ(p.init_order, order);
      StateVector s = run(p.seq, StateVector::basis(2, std::uint64_t{0}));
      EXPECT_NEAR(fidelity(s, StateVector::basis(2, static_cast<std::uint64_t>(item))), 1.0, 1e-12);
      auto q = qubit_values(s);
      EXPECT_NEAR(q.q[0], item & 1, 1e-9);
      EXPECT_NEAR(q.q[1], (item >> 1) & 1, 1e-9);
    }
  }
}

TEST(Grover, InitOrderIsIrrelevantOnIdealHardware) {
  const HardwareProfile ideal = make_profile(HardwareKind::kIdeal);
  for (int item = 0; item < 4; ++item) {
    auto a = qubit_values(run(grover_program(item, ideal, InitOrder::kW1First).seq,
                              StateVector::basis(2, std::uint64_t{0})));
    auto b = qubit_values(run(grover_program(item, ideal, InitOrder::kW2First).seq,
                              StateVector::basis(2, std::uint64_t{0})));
    EXPECT_LT(std::abs(a.q[0] - b.q[0]), 1e-9);
    EXPECT_LT(std::abs(a.q[1] - b.q[1]), 1e-9);
  }
}

TEST(Grover, ProgramLayoutAndDuration) {
  const HardwareProfile nmr = make_profile(HardwareKind::kNmr);
  GroverProgram p = grover_program(1, nmr, InitOrder::kW2First);
  ASSERT_EQ(p.seq.ops.size(), 16u);
  EXPECT_EQ(p.seq.ops[0].name, "Y2bar");
  EXPECT_EQ(p.seq.ops[3].name, "Y1bar");
  EXPECT_EQ(p.seq.ops.back().name, "X1");
  EXPECT_NEAR(p.seq.total_duration() / kTwoPi, 1000350.0, 1e-6);
  EXPECT_EQ(p.seq.num_qubits(), 2);
}

TEST(Nmr, SinglePulsesRotateToTheEquator) {
  const HardwareProfile nmr = make_profile(HardwareKind::kNmr);
  RunOptions opt;
  opt.substep_multiplier = 4;
  auto x1 = qubit_values(run(expand_product(nmr, {"X1"}), StateVector::basis(2, std::uint64_t{0}), opt));
  EXPECT_NEAR(x1.q[0], 0.5, 0.05);
  EXPECT_LT(x1.q[1], 0.05);
  auto w1 = qubit_values(run(wh_transform_seq(1, nmr), StateVector::basis(2, std::uint64_t{0}), opt));
  EXPECT_NEAR(w1.q[0], 0.5, 0.05);
}

}  // namespace
}  // namespace spinsim
