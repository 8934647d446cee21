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

#ifndef SPINSIM_ORACLE_H_
#define SPINSIM_ORACLE_H_

#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "spinsim/propagator.h"
#include "spinsim/spin_model.h"
#include "spinsim/state_vector.h"

namespace spinsim {

/// Dense unitary, checked on construction (|U^dagger U - 1| <= 1e-12 by
/// default). Rows and columns follow the StateVector basis order.
class GateMatrix {
 public:
  explicit GateMatrix(Eigen::MatrixXcd m, double tolerance = 1e-12);

  static GateMatrix identity(int dim);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return m_; }
  Complex operator()(int r, int c) const { return m_(r, c); }

  GateMatrix operator*(const GateMatrix& rhs) const;
  GateMatrix adjoint() const;
  double unitarity_deviation() const;

  /// Only valid for dim() == 2.
  Mat2 to_mat2() const;

  StateVector apply(const StateVector& state) const;

 private:
  Eigen::MatrixXcd m_;
};

/// max_ij |a_ij - b_ij|.
double max_abs_diff(const GateMatrix& a, const GateMatrix& b);

/// tr(a^dagger b) / dim: a unit number when b equals a up to a global phase.
Complex relative_phase(const GateMatrix& a, const GateMatrix& b);

/// Smallest |<a e_c | b e_c>| over basis columns c.
double column_fidelity(const GateMatrix& a, const GateMatrix& b);

enum class IdealGate { kX, kXbar, kY, kYbar, kW };

/// Single-qubit gate on qubit `qubit` of an L-qubit register (L <= 10):
///   X    = exp(+i pi/2 S^x) = [[1, i], [i, 1]] / sqrt(2)
///   Ybar = exp(-i pi/2 S^y) = [[1, -1], [1, 1]] / sqrt(2)
///   W    = X X Ybar = (i / sqrt(2)) [[1, 1], [1, -1]]
/// with bars denoting inverses.
GateMatrix ideal_gate(IdealGate gate, int qubit, int num_qubits);

enum class TwoQubitGate { kIpi, kF0, kF1, kF2, kF3, kP, kD };

/// Logical two-qubit gates: Ipi = exp(-i pi S^z_1 S^z_2); F_i flips the sign
/// of basis state i; P = diag(1, -1, -1, -1); D is inversion about the mean.
GateMatrix ideal_two_qubit(TwoQubitGate gate);

/// Gate for an EO name ("X1", "Y2bar", "W1", "Ipi", ...). Throws
/// std::invalid_argument for unknown names.
GateMatrix ideal_gate_by_name(std::string_view name, int num_qubits);

/// Ordered product of the ideal gates named by the EOs of `seq` (the last
/// EO ends up leftmost). Empty sequences give the identity.
GateMatrix matrix_of_sequence(const PulseSequence& seq);

struct GroverIterateReport {
  int item = 0;
  /// Iteration counts k <= max_iterations where D^k |Psi_item> is a basis
  /// state (up to phase), and which basis index it is.
  std::vector<int> pure_iterations;
  std::vector<int> pure_index;
};

/// State after `iterations` rounds of the four-item search: starting from
/// |Psi_item> = F_item |U> (|U> the uniform superposition), each round applies
/// the inversion about the mean D followed by the query F_item. Round 1 gives
/// the searched basis state, round 2 |U> and round 3 |Psi_item>, all up to
/// sign.
StateVector grover_iterate_state(int item, int iterations);

/// Scans rounds 1..max_iterations of grover_iterate_state for basis states.
GroverIterateReport grover_iterate_check(int item, int max_iterations = 10);

/// Dense H(t) for L <= 6.
Eigen::MatrixXcd hamiltonian_matrix(const SpinModel& model, double t);

/// Dense H_axis(t): only the terms along `axis`.
Eigen::MatrixXcd axis_hamiltonian_matrix(const SpinModel& model, Axis axis,
                                         double t);

/// exp(-i dt H) for Hermitian H via eigendecomposition.
Eigen::MatrixXcd spectral_exponential(const Eigen::MatrixXcd& h, double dt);

struct DenseOptions {
  double tolerance = 1e-12;
  int max_slices = 1 << 20;
};

/// Time-ordered exponential exp_+(-i int_{t0}^{t0+tau} H(u) du) for L <= 6.
///
/// Each of n slices is exponentiated exactly with the fourth-order
/// commutator-free pair exp(-i dt (a1 H(c1) + a2 H(c2))) exp(-i dt (a2 H(c1)
/// + a1 H(c2))) at the Gauss nodes c1, c2; constant H is exact at n = 1.
/// Slices are doubled from `n_slices` until two successive results agree
/// within `options.tolerance` in max norm. Throws ConvergenceError at the cap
/// and CapacityError for L > 6.
GateMatrix dense_propagator(const SpinModel& model, double t0, double tau,
                            int n_slices = 1, const DenseOptions& options = {});

/// One evaluation with exactly `n_slices` slices, no refinement.
GateMatrix dense_propagator_fixed(const SpinModel& model, double t0,
                                  double tau, int n_slices);

/// Unitary realized by the product-formula integrator for one EO, built by
/// evolving every basis state (L <= 6).
GateMatrix integrator_unitary(const ElementaryOperation& eo, double t0,
                              const StepPlan& plan,
                              RfClock clock = RfClock::kPulseLocal);

}  // namespace spinsim

#endif  // SPINSIM_ORACLE_H_
