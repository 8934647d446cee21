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

#include "spinsim/propagator.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "spinsim/parallel.h"

namespace spinsim {
namespace {

struct PairTerm {
  std::uint64_t mask_j;
  std::uint64_t mask_k;
  double coupling;
};

}  // namespace

void apply_diagonal_factor(StateVector& state, const SpinModel& model,
                           Axis axis, double delta, double t_mid, bool half,
                           KernelCounters* counters) {
  const int n = model.num_qubits();
  if (n != state.num_qubits()) {
    throw std::invalid_argument("model and state disagree on qubit count");
  }
  const double theta = half ? 0.5 * delta : delta;

  std::vector<PairTerm> pairs;
  for (int j = 1; j <= n; ++j) {
    for (int k = j + 1; k <= n; ++k) {
      double c = model.coupling(j, k, axis);
      if (c != 0.0) {
        pairs.push_back({std::uint64_t{1} << (j - 1),
                         std::uint64_t{1} << (k - 1), c});
      }
    }
  }
  // Field term sum_j h_j s_j = sum_j h_j/2 - sum_{j down} h_j.
  std::vector<double> fields(n);
  double field_up = 0.0;
  for (int j = 1; j <= n; ++j) {
    fields[j - 1] = model.field(j, axis, t_mid);
    field_up += 0.5 * fields[j - 1];
  }
  if (counters) {
    ++counters->diagonal_sweeps;
    counters->pair_terms += pairs.size();
  }

  auto amp = state.amplitudes();
  parallel_for(amp.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      double energy = field_up;
      for (int j = 0; j < n; ++j) {
        if ((i >> j) & 1u) energy -= fields[j];
      }
      for (const PairTerm& p : pairs) {
        bool aligned = ((i & p.mask_j) != 0) == ((i & p.mask_k) != 0);
        energy += aligned ? 0.25 * p.coupling : -0.25 * p.coupling;
      }
      const double c = std::cos(theta * energy);
      const double s = std::sin(theta * energy);
      const Complex a = amp[i];
      amp[i] = {a.real() * c - a.imag() * s, a.real() * s + a.imag() * c};
    }
  });
}

Mat2 half_pi_rotation_matrix(Axis axis, bool inverse) {
  // 1/sqrt2 is not a double. A kernel built from its nearest neighbour
  // scales the norm by 2r^2 = 1 + 1.4e-16, which adds up over millions of
  // steps. Rotations come in R, R^dagger pairs, so the two roundings are
  // split between them and the bias cancels to first order.
  const double r_up = std::numbers::sqrt2 / 2.0;
  const double r = inverse ? std::nextafter(r_up, 0.0) : r_up;
  Mat2 m;
  switch (axis) {
    case Axis::kX:
      m = Mat2{{Complex{r, 0}, Complex{0, r}, Complex{0, r}, Complex{r, 0}}};
      break;
    case Axis::kY:
      m = Mat2{{Complex{r, 0}, Complex{-r, 0}, Complex{r, 0}, Complex{r, 0}}};
      break;
    default:
      throw std::invalid_argument("global rotations exist for x and y only");
  }
  return inverse ? m.adjoint() : m;
}

void global_half_pi_rotation(StateVector& state, Axis axis, bool inverse,
                             KernelCounters* counters) {
  const Mat2 gate = half_pi_rotation_matrix(axis, inverse);
  for (int j = 1; j <= state.num_qubits(); ++j) {
    detail::apply_1q_kernel(state.amplitudes(), j, gate);
  }
  if (counters) {
    ++counters->global_rotations;
    counters->single_qubit_kernels += state.num_qubits();
  }
}

void symmetrized_step(StateVector& state, const SpinModel& model, double delta,
                      double t, KernelCounters* counters) {
  const double t_mid = t + 0.5 * delta;
  // Rightmost factor first.
  apply_diagonal_factor(state, model, Axis::kZ, delta, t_mid, true, counters);

  global_half_pi_rotation(state, Axis::kX, true, counters);
  apply_diagonal_factor(state, model, Axis::kY, delta, t_mid, true, counters);
  global_half_pi_rotation(state, Axis::kX, false, counters);

  global_half_pi_rotation(state, Axis::kY, true, counters);
  apply_diagonal_factor(state, model, Axis::kX, delta, t_mid, false, counters);
  global_half_pi_rotation(state, Axis::kY, false, counters);

  global_half_pi_rotation(state, Axis::kX, true, counters);
  apply_diagonal_factor(state, model, Axis::kY, delta, t_mid, true, counters);
  global_half_pi_rotation(state, Axis::kX, false, counters);

  apply_diagonal_factor(state, model, Axis::kZ, delta, t_mid, true, counters);
}

StepPlan auto_substeps(const ElementaryOperation& eo, const StepPolicy& policy) {
  StepPlan plan{1, eo.tau};
  if (eo.tau <= 0.0) return plan;
  const SpinModel& model = eo.model;

  int active_axes = 0;
  for (Axis a : kAllAxes) active_axes += model.axis_active(a) ? 1 : 0;
  if (active_axes <= 1 && !model.has_rf()) return plan;

  double h_scale = 0.0;
  double j_scale = 0.0;
  for (int j = 1; j <= model.num_qubits(); ++j) {
    for (Axis a : kAllAxes) {
      h_scale = std::max(h_scale, std::abs(model.static_field(j, a)) +
                                      std::abs(model.rf_amplitude(j, a)));
      for (int k = j + 1; k <= model.num_qubits(); ++k) {
        j_scale = std::max(j_scale, std::abs(model.coupling(j, k, a)));
      }
    }
  }
  // Pure couplings along several axes have no field scale; fall back to J.
  if (h_scale == 0.0) h_scale = j_scale;

  double delta_target = std::numeric_limits<double>::infinity();
  if (h_scale > 0.0) delta_target = policy.max_phase_per_step / h_scale;
  double f_max = model.max_rf_frequency();
  if (f_max > 0.0) {
    delta_target = std::min(
        delta_target, 2.0 * std::numbers::pi / f_max / policy.samples_per_rf_period);
  }
  if (!std::isfinite(delta_target)) return plan;

  // The slack keeps exact ratios such as 640.0000000001 from rounding up.
  double ratio = eo.tau / delta_target * (1.0 - 1e-12);
  plan.substeps = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(ratio)));
  return plan;
}

double evolve_eo(StateVector& state, const ElementaryOperation& eo, double t0,
                 const StepPlan& plan, RfClock clock, KernelCounters* counters) {
  if (eo.tau <= 0.0) return t0;
  if (plan.substeps < 1) throw std::invalid_argument("substep count must be >= 1");
  const double delta = eo.tau / static_cast<double>(plan.substeps);
  const double origin = clock == RfClock::kAbsolute ? t0 : 0.0;
  for (std::int64_t n = 0; n < plan.substeps; ++n) {
    symmetrized_step(state, eo.model, delta,
                     origin + static_cast<double>(n) * delta, counters);
  }
  return t0 + eo.tau;
}

StepPlan plan_for(const ElementaryOperation& eo, const RunOptions& options) {
  StepPlan plan = options.fixed_substeps
                      ? StepPlan{*options.fixed_substeps, eo.tau}
                      : auto_substeps(eo, options.policy);
  plan.substeps *= std::max<std::int64_t>(1, options.substep_multiplier);
  return plan;
}

RunResult run_sequence(StateVector& state, const PulseSequence& seq,
                       const RunOptions& options,
                       const std::function<void(const Sample&)>& on_sample) {
  for (const auto& op : seq.ops) {
    if (op.model.num_qubits() != state.num_qubits()) {
      throw std::invalid_argument("EO '" + op.name + "' acts on " +
                                  std::to_string(op.model.num_qubits()) +
                                  " qubits, state has " +
                                  std::to_string(state.num_qubits()));
    }
  }
  if (options.frame_omega &&
      static_cast<int>(options.frame_omega->size()) != state.num_qubits()) {
    throw std::invalid_argument("frame_omega needs one entry per qubit");
  }

  RunResult result;
  double t = seq.start_time;
  auto record = [&](std::int64_t step, int eo_index, double time) {
    Sample s{step, eo_index, {}};
    if (options.frame_omega) {
      StateVector rotated = state;
      apply_frame_rotation(rotated, time, *options.frame_omega);
      s.obs = qubit_values(rotated, time);
    } else {
      s.obs = qubit_values(state, time);
    }
    if (on_sample) on_sample(s);
    result.trajectory.push_back(std::move(s));
  };

  record(0, -1, t);
  std::int64_t step = 0;
  for (std::size_t idx = 0; idx < seq.ops.size(); ++idx) {
    const ElementaryOperation& eo = seq.ops[idx];
    const int eo_index = static_cast<int>(idx);
    if (eo.tau <= 0.0) {
      record(step, eo_index, t);
      continue;
    }
    const StepPlan plan = plan_for(eo, options);
    if (plan.substeps < 1) throw std::invalid_argument("substep count must be >= 1");
    const std::int64_t every =
        options.sample_every > 0 ? options.sample_every
                                 : std::max<std::int64_t>(1, plan.substeps / 200);
    const double delta = plan.delta();
    const double origin = options.rf_clock == RfClock::kAbsolute ? t : 0.0;
    for (std::int64_t n = 0; n < plan.substeps; ++n) {
      symmetrized_step(state, eo.model, delta,
                       origin + static_cast<double>(n) * delta);
      ++step;
      if ((n + 1) % every == 0 && n + 1 < plan.substeps) {
        record(step, eo_index, t + static_cast<double>(n + 1) * delta);
      }
    }
    t += eo.tau;
    record(step, eo_index, t);
  }
  result.end_time = t;
  result.total_substeps = step;
  return result;
}

}  // namespace spinsim
