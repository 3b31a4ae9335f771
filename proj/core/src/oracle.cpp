// Copyright 2026 The photonlogic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "photonlogic/oracle.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <string>

namespace photonlogic::oracle {

namespace {

std::size_t bit_of(std::size_t index, std::size_t qubits, Qubit q) {
  return (index >> (qubits - 1 - q)) & 1U;
}

std::size_t reverse_bits(std::size_t x, std::size_t bits) {
  std::size_t r = 0;
  for (std::size_t i = 0; i < bits; ++i) {
    r = (r << 1) | ((x >> i) & 1U);
  }
  return r;
}

void check_qubits(const QubitVector& vec, const Gate& gate) {
  const auto qs = gate_qubits(gate);
  for (const Qubit q : qs) {
    if (q >= vec.qubits()) {
      throw CircuitError("gate qubit " + std::to_string(q) +
                         " out of range for " + std::to_string(vec.qubits()) +
                         " qubits");
    }
  }
  if (std::set<Qubit>(qs.begin(), qs.end()).size() != qs.size()) {
    throw CircuitError("gate repeats a qubit");
  }
}

}  // namespace

QubitVector::QubitVector(std::size_t qubits)
    : qubits_(qubits), amplitudes_(std::size_t{1} << qubits, Amplitude{0.0}) {
  amplitudes_[0] = 1.0;
}

QubitVector::QubitVector(std::size_t qubits, std::vector<Amplitude> amplitudes)
    : qubits_(qubits), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != (std::size_t{1} << qubits)) {
    throw StateError("qubit vector needs 2^n amplitudes");
  }
}

QubitVector QubitVector::basis(std::size_t qubits, std::size_t index) {
  std::vector<Amplitude> amps(std::size_t{1} << qubits, Amplitude{0.0});
  amps.at(index) = 1.0;
  return QubitVector(qubits, std::move(amps));
}

double QubitVector::norm() const {
  double s = 0.0;
  for (const auto& a : amplitudes_) s += std::norm(a);
  return std::sqrt(s);
}

QubitVector QubitVector::normalized() const {
  const double n = norm();
  if (n == 0.0) throw StateError("cannot normalize the zero vector");
  std::vector<Amplitude> amps = amplitudes_;
  for (auto& a : amps) a /= n;
  return QubitVector(qubits_, std::move(amps));
}

QubitVector apply_gate(const QubitVector& vec, const Gate& gate) {
  check_qubits(vec, gate);
  const std::size_t n = vec.qubits();
  std::vector<Qubit> controls;
  Qubit target = 0;
  const SingleQubitUnitary* u = nullptr;
  std::visit(
      [&](const auto& g) {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, SingleQubitGate>) {
          target = g.qubit;
        } else if constexpr (std::is_same_v<T, ControlledGate>) {
          controls = {g.control};
          target = g.target;
        } else {
          controls = g.controls;
          target = g.target;
        }
        u = &g.u;
      },
      gate);

  std::vector<Amplitude> out = vec.amplitudes();
  const std::size_t target_mask = std::size_t{1} << (n - 1 - target);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i & target_mask) continue;
    bool fire = true;
    for (const Qubit c : controls) fire = fire && bit_of(i, n, c) == 1;
    if (!fire) continue;
    const Amplitude a0 = vec[i];
    const Amplitude a1 = vec[i | target_mask];
    out[i] = (*u)(0, 0) * a0 + (*u)(0, 1) * a1;
    out[i | target_mask] = (*u)(1, 0) * a0 + (*u)(1, 1) * a1;
  }
  return QubitVector(n, std::move(out));
}

QubitVector run(const CircuitIR& circuit, const QubitVector& input) {
  if (input.qubits() != circuit.qubits) {
    throw CircuitError("input vector size does not match the circuit");
  }
  QubitVector v = input;
  for (const auto& gate : circuit.gates) v = apply_gate(v, gate);
  return v;
}

double fidelity(const QubitVector& a, const QubitVector& b) {
  if (a.dimension() != b.dimension()) {
    throw StateError("fidelity of vectors with different sizes");
  }
  Amplitude s{0.0};
  for (std::size_t i = 0; i < a.dimension(); ++i) s += std::conj(a[i]) * b[i];
  return std::norm(s);
}

double phase_aligned_distance(const QubitVector& a, const QubitVector& b) {
  Amplitude s{0.0};
  for (std::size_t i = 0; i < a.dimension(); ++i) s += std::conj(b[i]) * a[i];
  const Amplitude phase =
      std::abs(s) > 0.0 ? s / std::abs(s) : Amplitude{1.0};
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    worst = std::max(worst, std::abs(a[i] - phase * b[i]));
  }
  return worst;
}

Eigen::MatrixXcd grover_diffusion_matrix(std::size_t n) {
  if (n < 1) throw CircuitError("grover diffusion needs n >= 1");
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
  Eigen::MatrixXcd m =
      Eigen::MatrixXcd::Constant(dim, dim, Amplitude{2.0 / static_cast<double>(dim)});
  m -= Eigen::MatrixXcd::Identity(dim, dim);
  return m;
}

Eigen::MatrixXcd dft_matrix(std::size_t n) {
  const std::size_t dim = std::size_t{1} << n;
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  Eigen::MatrixXcd m(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t k = 0; k < dim; ++k) {
      // Reduce jk mod 2^n before scaling to keep the angle small.
      const std::size_t e = (j * k) % dim;
      m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) =
          std::polar(scale, 2.0 * std::numbers::pi * static_cast<double>(e) /
                                static_cast<double>(dim));
    }
  }
  return m;
}

Eigen::MatrixXcd qft_matrix(std::size_t n) {
  if (n < 1) throw CircuitError("qft needs n >= 1");
  const Eigen::MatrixXcd dft = dft_matrix(n);
  Eigen::MatrixXcd m(dft.rows(), dft.cols());
  for (Eigen::Index j = 0; j < dft.rows(); ++j) {
    m.row(j) = dft.row(static_cast<Eigen::Index>(
        reverse_bits(static_cast<std::size_t>(j), n)));
  }
  return m;
}

Eigen::MatrixXcd circuit_unitary(const CircuitIR& circuit) {
  const std::size_t dim = std::size_t{1} << circuit.qubits;
  Eigen::MatrixXcd m(dim, dim);
  for (std::size_t k = 0; k < dim; ++k) {
    const QubitVector col = run(circuit, QubitVector::basis(circuit.qubits, k));
    for (std::size_t j = 0; j < dim; ++j) {
      m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) = col[j];
    }
  }
  return m;
}

QubitVector apply_matrix(const Eigen::MatrixXcd& m, const QubitVector& vec) {
  if (static_cast<std::size_t>(m.cols()) != vec.dimension()) {
    throw StateError("matrix and vector sizes differ");
  }
  Eigen::VectorXcd v(m.cols());
  for (Eigen::Index i = 0; i < m.cols(); ++i) {
    v(i) = vec[static_cast<std::size_t>(i)];
  }
  const Eigen::VectorXcd r = m * v;
  return QubitVector(vec.qubits(), std::vector<Amplitude>(r.begin(), r.end()));
}

QubitVector photonic_to_qubit(const HybridState& state, PathId logical_path,
                              double leakage_tolerance) {
  if (!state.registers().empty()) {
    throw StateError("photonic_to_qubit: coherent registers remain");
  }
  const double outside = leakage(state, logical_path);
  if (outside > leakage_tolerance) {
    throw StateError("photonic_to_qubit: weight " + std::to_string(outside) +
                     " off path " + std::to_string(logical_path) +
                     "; merge every photon first");
  }
  const std::size_t n = state.photon_count();
  std::vector<Amplitude> amps(std::size_t{1} << n, Amplitude{0.0});
  for (const auto& term : state.terms()) {
    std::size_t index = 0;
    bool logical = true;
    for (PhotonId p = 0; p < n; ++p) {
      logical = logical && term.photons[p].path == logical_path;
      index = (index << 1) |
              (term.photons[p].pol == Polarization::V ? 1U : 0U);
    }
    if (logical) amps[index] += term.coeff;
  }
  return QubitVector(n, std::move(amps));
}

double leakage(const HybridState& state, PathId logical_path) {
  double outside = 0.0;
  for (const auto& term : state.terms()) {
    for (const PhotonConfig& c : term.photons) {
      if (c.path != logical_path) {
        outside += std::norm(term.coeff);
        break;
      }
    }
  }
  return outside;
}

HybridState qubit_to_photonic(const QubitVector& vec) {
  const std::size_t n = vec.qubits();
  HybridState state(n);
  for (std::size_t i = 0; i < vec.dimension(); ++i) {
    if (vec[i] == Amplitude{0.0}) continue;
    std::vector<PhotonConfig> photons(n);
    for (PhotonId p = 0; p < n; ++p) {
      photons[p].pol =
          bit_of(i, n, p) ? Polarization::V : Polarization::H;
    }
    state.add_term(vec[i], std::move(photons));
  }
  return state;
}

}  // namespace photonlogic::oracle
