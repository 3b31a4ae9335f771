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

#include <cstddef>
#include <stdexcept>
#include <variant>
#include <vector>

#include "photonlogic/optics.hpp"

namespace photonlogic {

using Qubit = std::size_t;

struct SingleQubitGate {
  Qubit qubit = 0;
  SingleQubitUnitary u;

  friend bool operator==(const SingleQubitGate&,
                         const SingleQubitGate&) = default;
};

/// |H><H| x I + |V><V| x U.
struct ControlledGate {
  Qubit control = 0;
  Qubit target = 1;
  SingleQubitUnitary u;

  friend bool operator==(const ControlledGate&, const ControlledGate&) = default;
};

/// U on the target when every control reads V.
struct MultiControlledGate {
  std::vector<Qubit> controls;
  Qubit target = 0;
  SingleQubitUnitary u;

  friend bool operator==(const MultiControlledGate&,
                         const MultiControlledGate&) = default;
};

using Gate = std::variant<SingleQubitGate, ControlledGate, MultiControlledGate>;

/// Known circuit families; enables closed-form resource reporting.
enum class CircuitFamily { Generic, GroverDiffusion, Qft };

/// Logical circuit over qubits encoded in photon polarizations, qubit i on
/// photon i (qubit 0 is the most significant bit of basis indices).
struct CircuitIR {
  std::size_t qubits = 0;
  std::vector<Gate> gates;
  /// Optional 2^qubits input amplitudes.
  std::vector<Amplitude> input;
  CircuitFamily family = CircuitFamily::Generic;

  friend bool operator==(const CircuitIR&, const CircuitIR&) = default;
};

/// Semantic problems with a circuit (bad indices, repeated qubits).
class CircuitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void validate(const CircuitIR& circuit);

/// Qubits a gate touches, target last.
std::vector<Qubit> gate_qubits(const Gate& gate);

namespace circuits {

/// H^n X^n (n-1 control Z) X^n H^n, i.e. -(2|s><s| - I).
CircuitIR grover_diffusion(std::size_t n);

/// Hadamard and controlled-R ladder without the final swap layer.
CircuitIR qft(std::size_t n);

/// Three-qubit example: CU(a,b,U1) CU(b,c,U2) Toffoli(a,b;c,U3) CU(a,b,U4).
CircuitIR fig2(const SingleQubitUnitary& u1, const SingleQubitUnitary& u2,
               const SingleQubitUnitary& u3, const SingleQubitUnitary& u4);

/// fig2 with fixed generic unitaries.
CircuitIR fig2_default();

/// Marks `marked` with a phase flip and applies the diffusion operator,
/// starting from H^n on |0...0>.
CircuitIR grover_iteration(std::size_t n, std::size_t marked);

}  // namespace circuits

}  // namespace photonlogic
