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

#ifndef SPINSIM_PROPAGATOR_H_
#define SPINSIM_PROPAGATOR_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "spinsim/spin_model.h"
#include "spinsim/state_vector.h"

namespace spinsim {

/// Instrumentation for the amplitude kernels. Pass a pointer to collect.
struct KernelCounters {
  std::uint64_t diagonal_sweeps = 0;
  std::uint64_t pair_terms = 0;  // nonzero couplings visited per sweep
  std::uint64_t global_rotations = 0;
  std::uint64_t single_qubit_kernels = 0;
};

/// Which clock the RF sinusoids of an EO see.
///
/// kPulseLocal: sin(f (t - t_start) + phi), each EO starts its drive at
/// phase phi. kAbsolute: sin(f t + phi) with the global simulation clock.
/// The NMR Grover experiments are run with kPulseLocal.
enum class RfClock { kPulseLocal, kAbsolute };

/// Substep heuristic constants.
struct StepPolicy {
  double samples_per_rf_period = 64.0;
  double max_phase_per_step = 0.1;  // radians
};

/// m substeps of length tau / m.
struct StepPlan {
  std::int64_t substeps = 1;
  double tau = 0.0;

  double delta() const { return tau / static_cast<double>(substeps); }
};

/// Multiplies amplitude n by exp(+i theta E_axis(n)) with theta = delta / 2
/// if `half` else delta, where
///   E_axis(n) = sum_{j<k} J[j][k][axis] s_j s_k + sum_j h_j(t_mid) s_j
/// and s_j = +-1/2 are S^z eigenvalues. This is exp(-i theta H_axis) for the
/// axis Hamiltonian written in its own eigenbasis.
void apply_diagonal_factor(StateVector& state, const SpinModel& model,
                           Axis axis, double delta, double t_mid, bool half,
                           KernelCounters* counters = nullptr);

/// The pi/2 rotation of every spin:
///   R_x = exp(+i pi/2 S^x) = [[1, i], [i, 1]] / sqrt(2)
///   R_y = exp(-i pi/2 S^y) = [[1, -1], [1, 1]] / sqrt(2)
/// These satisfy R_x S^z R_x^dagger = S^y and R_y S^z R_y^dagger = S^x.
/// `inverse` applies R^dagger. Only kX and kY are accepted.
void global_half_pi_rotation(StateVector& state, Axis axis, bool inverse,
                             KernelCounters* counters = nullptr);

/// Single-qubit matrix used by global_half_pi_rotation.
Mat2 half_pi_rotation_matrix(Axis axis, bool inverse);

/// One second-order product-formula step from `t` to `t + delta`:
///   exp(-i d Hz/2) exp(-i d Hy/2) exp(-i d Hx) exp(-i d Hy/2) exp(-i d Hz/2)
/// with every sinusoid evaluated at t + delta/2. The y and x factors are
/// applied as R_x D_y R_x^dagger and R_y D_x R_y^dagger.
void symmetrized_step(StateVector& state, const SpinModel& model,
                      double delta, double t,
                      KernelCounters* counters = nullptr);

/// Substep count for an EO. Constant single-axis Hamiltonians get m = 1
/// (the product formula is exact). Otherwise the step is bounded by
/// T_rf / samples_per_rf_period and max_phase_per_step / h_scale, with h_scale
/// the largest |h0| + |h1| over spins and axes.
StepPlan auto_substeps(const ElementaryOperation& eo,
                       const StepPolicy& policy = {});

/// Evolves through one EO starting at global time t0; returns t0 + tau.
double evolve_eo(StateVector& state, const ElementaryOperation& eo, double t0,
                 const StepPlan& plan, RfClock clock = RfClock::kPulseLocal,
                 KernelCounters* counters = nullptr);

struct Sample {
  std::int64_t step = 0;  // cumulative substeps
  int eo_index = -1;      // -1 before the first EO
  Observables obs;
};

struct RunOptions {
  RfClock rf_clock = RfClock::kPulseLocal;
  StepPolicy policy;
  /// Scales every auto plan (m -> m * multiplier).
  std::int64_t substep_multiplier = 1;
  /// Fixed m for every EO instead of auto_substeps.
  std::optional<std::int64_t> fixed_substeps;
  /// Sample every k-th substep inside an EO; 0 picks about 200 per EO.
  std::int64_t sample_every = 0;
  /// When set, sx/sy are reported in the frame rotating about z with these
  /// angular frequencies (one per qubit). Q is unaffected.
  std::optional<std::vector<double>> frame_omega;
};

struct RunResult {
  std::vector<Sample> trajectory;
  double end_time = 0.0;
  std::int64_t total_substeps = 0;
};

/// Plan actually used for `eo` under `options`.
StepPlan plan_for(const ElementaryOperation& eo, const RunOptions& options);

/// Executes the EOs in order with a continuous clock. The trajectory holds
/// the initial state, samples inside each EO, every EO boundary and the
/// final state. `on_sample`, if set, sees each sample as it is produced.
RunResult run_sequence(StateVector& state, const PulseSequence& seq,
                       const RunOptions& options = {},
                       const std::function<void(const Sample&)>& on_sample = {});

}  // namespace spinsim

#endif  // SPINSIM_PROPAGATOR_H_
