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

#include "spinsim/oracle.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

#include "spinsim/errors.h"

namespace spinsim {
namespace {

constexpr int kMaxEmbedQubits = 10;
constexpr int kMaxDenseQubits = 6;
const Complex kI{0.0, 1.0};

// 2x2 gate acting on `qubit` of an L-qubit register.
Eigen::MatrixXcd embed(const Eigen::MatrixXcd& g, int qubit, int num_qubits) {
  const std::size_t dim = std::size_t{1} << num_qubits;
  const std::size_t mask = std::size_t{1} << (qubit - 1);
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    const int b = (col & mask) ? 1 : 0;
    const std::size_t base = col & ~mask;
    u(base, col) = g(0, b);
    u(base | mask, col) = g(1, b);
  }
  return u;
}

Eigen::MatrixXcd spin_operator(int num_qubits, int qubit, Axis axis) {
  const std::size_t dim = std::size_t{1} << num_qubits;
  const std::size_t mask = std::size_t{1} << (qubit - 1);
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t n = 0; n < dim; ++n) {
    const bool down = (n & mask) != 0;
    switch (axis) {
      case Axis::kX:
        s(n ^ mask, n) = 0.5;
        break;
      case Axis::kY:
        // S^y |up> = (i/2) |down>, S^y |down> = (-i/2) |up>.
        s(n ^ mask, n) = down ? -0.5 * kI : 0.5 * kI;
        break;
      case Axis::kZ:
        s(n, n) = down ? -0.5 : 0.5;
        break;
    }
  }
  return s;
}

void check_dense(int num_qubits) {
  if (num_qubits > kMaxDenseQubits) {
    throw CapacityError("dense oracle supports at most 6 qubits", num_qubits,
                        kMaxDenseQubits);
  }
}

Eigen::MatrixXcd rotation_2x2(IdealGate gate) {
  const double r = std::numbers::sqrt2 / 2.0;
  Eigen::MatrixXcd x(2, 2), ybar(2, 2);
  x << r, r * kI, r * kI, r;
  ybar << r, -r, r, r;
  switch (gate) {
    case IdealGate::kX:
      return x;
    case IdealGate::kXbar:
      return x.adjoint();
    case IdealGate::kY:
      return ybar.adjoint();
    case IdealGate::kYbar:
      return ybar;
    case IdealGate::kW:
      return x * x * ybar;
  }
  throw std::invalid_argument("unknown gate");
}

}  // namespace

GateMatrix::GateMatrix(Eigen::MatrixXcd m, double tolerance) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw std::invalid_argument("gate must be square");
  double dev = unitarity_deviation();
  if (!(dev <= tolerance)) {
    throw UnitarityError("matrix is not unitary (max deviation " +
                             std::to_string(dev) + ")",
                         dev);
  }
}

GateMatrix GateMatrix::identity(int dim) {
  return GateMatrix(Eigen::MatrixXcd::Identity(dim, dim));
}

GateMatrix GateMatrix::operator*(const GateMatrix& rhs) const {
  if (dim() != rhs.dim()) throw std::invalid_argument("gate dimension mismatch");
  return GateMatrix(m_ * rhs.m_, 1e-10);
}

GateMatrix GateMatrix::adjoint() const { return GateMatrix(m_.adjoint(), 1e-10); }

double GateMatrix::unitarity_deviation() const {
  Eigen::MatrixXcd p = m_.adjoint() * m_;
  p -= Eigen::MatrixXcd::Identity(m_.rows(), m_.cols());
  return p.cwiseAbs().maxCoeff();
}

Mat2 GateMatrix::to_mat2() const {
  if (dim() != 2) throw std::invalid_argument("not a single-qubit gate");
  return Mat2{{m_(0, 0), m_(0, 1), m_(1, 0), m_(1, 1)}};
}

StateVector GateMatrix::apply(const StateVector& state) const {
  if (static_cast<std::size_t>(dim()) != state.size()) {
    throw std::invalid_argument("gate and state dimensions differ");
  }
  Eigen::VectorXcd v(dim());
  for (int i = 0; i < dim(); ++i) v(i) = state[i];
  Eigen::VectorXcd w = m_ * v;
  return StateVector::from_amplitudes(std::vector<Complex>(w.begin(), w.end()));
}

double max_abs_diff(const GateMatrix& a, const GateMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("gate dimension mismatch");
  return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

Complex relative_phase(const GateMatrix& a, const GateMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("gate dimension mismatch");
  return (a.matrix().adjoint() * b.matrix()).trace() / static_cast<double>(a.dim());
}

double column_fidelity(const GateMatrix& a, const GateMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("gate dimension mismatch");
  double worst = 1.0;
  for (int c = 0; c < a.dim(); ++c) {
    worst = std::min(worst, std::abs(a.matrix().col(c).dot(b.matrix().col(c))));
  }
  return worst;
}

GateMatrix ideal_gate(IdealGate gate, int qubit, int num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxEmbedQubits) {
    throw CapacityError("ideal gates are embedded for at most 10 qubits",
                        num_qubits, kMaxEmbedQubits);
  }
  if (qubit < 1 || qubit > num_qubits) throw std::invalid_argument("bad qubit");
  return GateMatrix(embed(rotation_2x2(gate), qubit, num_qubits));
}

GateMatrix ideal_two_qubit(TwoQubitGate gate) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(4, 4);
  switch (gate) {
    case TwoQubitGate::kIpi: {
      const Complex aligned = std::polar(1.0, -std::numbers::pi / 4);
      const Complex anti = std::polar(1.0, std::numbers::pi / 4);
      m.diagonal() << aligned, anti, anti, aligned;
      break;
    }
    case TwoQubitGate::kF0:
    case TwoQubitGate::kF1:
    case TwoQubitGate::kF2:
    case TwoQubitGate::kF3: {
      int item = static_cast<int>(gate) - static_cast<int>(TwoQubitGate::kF0);
      m.setIdentity();
      m(item, item) = -1.0;
      break;
    }
    case TwoQubitGate::kP:
      m.diagonal() << 1.0, -1.0, -1.0, -1.0;
      break;
    case TwoQubitGate::kD:
      m.setConstant(0.5);
      m.diagonal().setConstant(-0.5);
      break;
  }
  return GateMatrix(m);
}

GateMatrix ideal_gate_by_name(std::string_view name, int num_qubits) {
  if (name == "Ipi") {
    if (num_qubits != 2) throw std::invalid_argument("Ipi is a two-qubit gate");
    return ideal_two_qubit(TwoQubitGate::kIpi);
  }
  if (name.size() >= 2 && (name[0] == 'X' || name[0] == 'Y' || name[0] == 'W')) {
    std::string_view rest = name.substr(1);
    bool bar = false;
    if (rest.size() > 3 && rest.substr(rest.size() - 3) == "bar") {
      bar = true;
      rest.remove_suffix(3);
    }
    if (rest.size() == 1 && rest[0] >= '1' && rest[0] <= '9' &&
        !(name[0] == 'W' && bar)) {
      const int qubit = rest[0] - '0';
      IdealGate gate = IdealGate::kW;
      if (name[0] == 'X') gate = bar ? IdealGate::kXbar : IdealGate::kX;
      if (name[0] == 'Y') gate = bar ? IdealGate::kYbar : IdealGate::kY;
      return ideal_gate(gate, qubit, num_qubits);
    }
  }
  throw std::invalid_argument("no ideal gate named '" + std::string(name) + "'");
}

GateMatrix matrix_of_sequence(const PulseSequence& seq) {
  const int num_qubits = seq.ops.empty() ? 2 : seq.num_qubits();
  GateMatrix u = GateMatrix::identity(1 << num_qubits);
  for (const auto& op : seq.ops) {
    u = ideal_gate_by_name(op.name, num_qubits) * u;
  }
  return u;
}

StateVector grover_iterate_state(int item, int iterations) {
  if (item < 0 || item > 3) throw std::invalid_argument("item must be in 0..3");
  if (iterations < 0) throw std::invalid_argument("iterations must be >= 0");
  const auto f = ideal_two_qubit(static_cast<TwoQubitGate>(
      static_cast<int>(TwoQubitGate::kF0) + item));
  const auto d = ideal_two_qubit(TwoQubitGate::kD);
  // D alone is an involution; each round is inversion about the mean
  // followed by the query.
  const Eigen::MatrixXcd round = f.matrix() * d.matrix();
  Eigen::VectorXcd psi = f.matrix() * Eigen::VectorXcd::Constant(4, 0.5);
  for (int k = 0; k < iterations; ++k) psi = round * psi;
  return StateVector::from_amplitudes(std::vector<Complex>(psi.begin(), psi.end()));
}

GroverIterateReport grover_iterate_check(int item, int max_iterations) {
  GroverIterateReport report;
  report.item = item;
  for (int k = 1; k <= max_iterations; ++k) {
    const StateVector psi = grover_iterate_state(item, k);
    std::size_t idx = 0;
    double peak = 0.0;
    for (std::size_t i = 0; i < psi.size(); ++i) {
      if (std::abs(psi[i]) > peak) {
        peak = std::abs(psi[i]);
        idx = i;
      }
    }
    if (peak > 1.0 - 1e-12) {
      report.pure_iterations.push_back(k);
      report.pure_index.push_back(static_cast<int>(idx));
    }
  }
  return report;
}

Eigen::MatrixXcd axis_hamiltonian_matrix(const SpinModel& model, Axis axis,
                                         double t) {
  const int n = model.num_qubits();
  check_dense(n);
  const std::size_t dim = std::size_t{1} << n;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  std::vector<Eigen::MatrixXcd> s;
  for (int j = 1; j <= n; ++j) s.push_back(spin_operator(n, j, axis));
  for (int j = 1; j <= n; ++j) {
    for (int k = j + 1; k <= n; ++k) {
      double c = model.coupling(j, k, axis);
      if (c != 0.0) h -= c * s[j - 1] * s[k - 1];
    }
    h -= model.field(j, axis, t) * s[j - 1];
  }
  return h;
}

Eigen::MatrixXcd hamiltonian_matrix(const SpinModel& model, double t) {
  Eigen::MatrixXcd h = axis_hamiltonian_matrix(model, Axis::kX, t);
  h += axis_hamiltonian_matrix(model, Axis::kY, t);
  h += axis_hamiltonian_matrix(model, Axis::kZ, t);
  return h;
}

Eigen::MatrixXcd spectral_exponential(const Eigen::MatrixXcd& h, double dt) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("Hermitian eigendecomposition failed");
  }
  const Eigen::VectorXd& w = solver.eigenvalues();
  Eigen::VectorXcd phases(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) phases(i) = std::polar(1.0, -dt * w(i));
  const Eigen::MatrixXcd& v = solver.eigenvectors();
  return v * phases.asDiagonal() * v.adjoint();
}

GateMatrix dense_propagator_fixed(const SpinModel& model, double t0, double tau,
                                  int n_slices) {
  check_dense(model.num_qubits());
  if (n_slices < 1) throw std::invalid_argument("n_slices must be >= 1");
  const Eigen::Index dim = Eigen::Index{1} << model.num_qubits();
  if (tau == 0.0) return GateMatrix::identity(static_cast<int>(dim));

  // Extended precision keeps the roundoff of long slice products below the
  // 1e-12 refinement threshold.
  using Real = long double;
  using CMat = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
  auto h_at = [&](Real t) -> CMat {
    return hamiltonian_matrix(model, static_cast<double>(t)).cast<std::complex<Real>>();
  };
  auto expm = [](const CMat& h, Real dt) -> CMat {
    Eigen::SelfAdjointEigenSolver<CMat> solver(h);
    if (solver.info() != Eigen::Success) {
      throw std::runtime_error("Hermitian eigendecomposition failed");
    }
    const auto& w = solver.eigenvalues();
    Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1> phases(w.size());
    for (Eigen::Index i = 0; i < w.size(); ++i) phases(i) = std::polar(Real{1}, -dt * w(i));
    const CMat& v = solver.eigenvectors();
    return v * phases.asDiagonal() * v.adjoint();
  };

  // Fourth-order commutator-free exponentials at the two Gauss nodes.
  const Real sqrt3 = std::sqrt(Real{3});
  const Real c1 = Real{0.5} - sqrt3 / 6;
  const Real c2 = Real{0.5} + sqrt3 / 6;
  const Real a1 = (3 - 2 * sqrt3) / 12;
  const Real a2 = (3 + 2 * sqrt3) / 12;

  const Real dt = static_cast<Real>(tau) / n_slices;
  CMat u = CMat::Identity(dim, dim);
  if (!model.has_rf()) {
    const CMat step = expm(h_at(t0), dt);
    for (int s = 0; s < n_slices; ++s) u = step * u;
  } else {
    for (int s = 0; s < n_slices; ++s) {
      const Real start = static_cast<Real>(t0) + s * dt;
      const CMat h1 = h_at(start + c1 * dt);
      const CMat h2 = h_at(start + c2 * dt);
      u = expm(a2 * h1 + a1 * h2, dt) * u;
      u = expm(a1 * h1 + a2 * h2, dt) * u;
    }
  }
  return GateMatrix(u.cast<Complex>(), 1e-10);
}

GateMatrix dense_propagator(const SpinModel& model, double t0, double tau,
                            int n_slices, const DenseOptions& options) {
  check_dense(model.num_qubits());
  if (n_slices < 1) throw std::invalid_argument("n_slices must be >= 1");
  GateMatrix current = dense_propagator_fixed(model, t0, tau, n_slices);
  double residual = 0.0;
  while (2 * static_cast<long>(n_slices) <= options.max_slices) {
    n_slices *= 2;
    GateMatrix refined = dense_propagator_fixed(model, t0, tau, n_slices);
    residual = max_abs_diff(current, refined);
    current = std::move(refined);
    if (residual < options.tolerance) return current;
  }
  throw ConvergenceError("dense propagator did not converge within " +
                             std::to_string(options.max_slices) +
                             " slices (residual " + std::to_string(residual) + ")",
                         residual);
}

GateMatrix integrator_unitary(const ElementaryOperation& eo, double t0,
                              const StepPlan& plan, RfClock clock) {
  const int n = eo.model.num_qubits();
  check_dense(n);
  const std::size_t dim = std::size_t{1} << n;
  Eigen::MatrixXcd u(dim, dim);
  for (std::size_t c = 0; c < dim; ++c) {
    StateVector psi = StateVector::basis(n, static_cast<std::uint64_t>(c));
    evolve_eo(psi, eo, t0, plan, clock);
    for (std::size_t r = 0; r < dim; ++r) u(r, c) = psi[r];
  }
  return GateMatrix(std::move(u), 1e-10);
}

}  // namespace spinsim
