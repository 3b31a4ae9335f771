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

#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "photonlogic/circuit.hpp"
#include "photonlogic/state.hpp"

namespace photonlogic::oracle {

/// Dense 2^n state vector. Qubit 0 is the most significant index bit.
class QubitVector {
 public:
  QubitVector() = default;
  /// |0...0>.
  explicit QubitVector(std::size_t qubits);
  QubitVector(std::size_t qubits, std::vector<Amplitude> amplitudes);

  static QubitVector basis(std::size_t qubits, std::size_t index);

  std::size_t qubits() const { return qubits_; }
  std::size_t dimension() const { return amplitudes_.size(); }
  const std::vector<Amplitude>& amplitudes() const { return amplitudes_; }
  Amplitude operator[](std::size_t i) const { return amplitudes_[i]; }

  double norm() const;
  QubitVector normalized() const;

 private:
  std::size_t qubits_ = 0;
  std::vector<Amplitude> amplitudes_;
};

/// Exact action of one circuit gate. Throws CircuitError on bad indices.
QubitVector apply_gate(const QubitVector& vec, const Gate& gate);

QubitVector run(const CircuitIR& circuit, const QubitVector& input);

/// |<a|b>|^2.
double fidelity(const QubitVector& a, const QubitVector& b);

/// max_i |a_i - e^{i phi} b_i| with phi chosen to align the global phase.
double phase_aligned_distance(const QubitVector& a, const QubitVector& b);

/// 2|s><s| - I with |s> the uniform superposition; entries 2/2^n - delta.
Eigen::MatrixXcd grover_diffusion_matrix(std::size_t n);

/// omega^{jk} / sqrt(2^n), omega = e^{2 pi i / 2^n}.
Eigen::MatrixXcd dft_matrix(std::size_t n);

/// Unitary of the swap-free QFT ladder: omega^{rev(j) k} / sqrt(2^n).
Eigen::MatrixXcd qft_matrix(std::size_t n);

/// Dense unitary of a whole circuit (column k = run on basis state k).
Eigen::MatrixXcd circuit_unitary(const CircuitIR& circuit);

QubitVector apply_matrix(const Eigen::MatrixXcd& m, const QubitVector& vec);

/// Projects a register-free state onto "every photon on `logical_path`" and
/// reads it as a qubit vector (H -> 0, V -> 1). Not renormalized: residue
/// left on other paths lowers the fidelity as it should. Throws StateError
/// when that residue (see leakage()) exceeds `leakage_tolerance`, i.e. some
/// photon still genuinely occupies several paths.
QubitVector photonic_to_qubit(const HybridState& state, PathId logical_path = 0,
                              double leakage_tolerance = 1e-9);

/// Probability of the terms with some photon off `logical_path`.
double leakage(const HybridState& state, PathId logical_path = 0);

/// One term per nonzero amplitude, every photon on path 0.
HybridState qubit_to_photonic(const QubitVector& vec);

}  // namespace photonlogic::oracle
