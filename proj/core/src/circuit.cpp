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

#include "photonlogic/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace photonlogic {

std::vector<Qubit> gate_qubits(const Gate& gate) {
  return std::visit(
      [](const auto& g) -> std::vector<Qubit> {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, SingleQubitGate>) {
          return {g.qubit};
        } else if constexpr (std::is_same_v<T, ControlledGate>) {
          return {g.control, g.target};
        } else {
          std::vector<Qubit> qs = g.controls;
          qs.push_back(g.target);
          return qs;
        }
      },
      gate);
}

void validate(const CircuitIR& circuit) {
  if (circuit.qubits == 0) throw CircuitError("circuit needs at least one qubit");
  for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
    const auto& gate = circuit.gates[i];
    const std::vector<Qubit> qs = gate_qubits(gate);
    for (const Qubit q : qs) {
      if (q >= circuit.qubits) {
        throw CircuitError("gate " + std::to_string(i) + " references qubit " +
                           std::to_string(q) + " but the circuit has " +
                           std::to_string(circuit.qubits));
      }
    }
    if (std::set<Qubit>(qs.begin(), qs.end()).size() != qs.size()) {
      throw CircuitError("gate " + std::to_string(i) +
                         " repeats a qubit between controls and target");
    }
    if (const auto* mcu = std::get_if<MultiControlledGate>(&gate);
        mcu != nullptr && mcu->controls.empty()) {
      throw CircuitError("gate " + std::to_string(i) + " has no controls");
    }
    const SingleQubitUnitary& u = std::visit(
        [](const auto& g) -> const SingleQubitUnitary& { return g.u; }, gate);
    if (!(SingleQubitUnitary::unitarity_defect(u.matrix()) <= 1e-10)) {
      throw CircuitError("gate " + std::to_string(i) + " is not unitary");
    }
  }
  if (!circuit.input.empty() &&
      circuit.input.size() != (std::size_t{1} << circuit.qubits)) {
    throw CircuitError("input vector must have 2^qubits amplitudes");
  }
}

namespace circuits {

namespace {

void on_all(CircuitIR& c, const SingleQubitUnitary& u) {
  for (Qubit q = 0; q < c.qubits; ++q) c.gates.push_back(SingleQubitGate{q, u});
}

MultiControlledGate leading_controls_z(std::size_t n) {
  MultiControlledGate mcz;
  for (Qubit q = 0; q + 1 < n; ++q) mcz.controls.push_back(q);
  mcz.target = n - 1;
  mcz.u = SingleQubitUnitary::pauli_z();
  return mcz;
}

}  // namespace

CircuitIR grover_diffusion(std::size_t n) {
  if (n < 2) throw CircuitError("grover diffusion needs n >= 2");
  CircuitIR c;
  c.qubits = n;
  c.family = CircuitFamily::GroverDiffusion;
  on_all(c, SingleQubitUnitary::hadamard());
  on_all(c, SingleQubitUnitary::pauli_x());
  c.gates.push_back(leading_controls_z(n));
  on_all(c, SingleQubitUnitary::pauli_x());
  on_all(c, SingleQubitUnitary::hadamard());
  return c;
}

CircuitIR qft(std::size_t n) {
  if (n < 1) throw CircuitError("qft needs n >= 1");
  CircuitIR c;
  c.qubits = n;
  c.family = CircuitFamily::Qft;
  for (Qubit k = 0; k < n; ++k) {
    c.gates.push_back(SingleQubitGate{k, SingleQubitUnitary::hadamard()});
    for (Qubit j = k + 1; j < n; ++j) {
      c.gates.push_back(ControlledGate{
          j, k, SingleQubitUnitary::rotation(static_cast<unsigned>(j - k + 1))});
    }
  }
  return c;
}

CircuitIR fig2(const SingleQubitUnitary& u1, const SingleQubitUnitary& u2,
               const SingleQubitUnitary& u3, const SingleQubitUnitary& u4) {
  CircuitIR c;
  c.qubits = 3;
  c.gates = {ControlledGate{0, 1, u1}, ControlledGate{1, 2, u2},
             MultiControlledGate{{0, 1}, 2, u3}, ControlledGate{0, 1, u4}};
  return c;
}

CircuitIR fig2_default() {
  return fig2(SingleQubitUnitary::u3(0.7, 0.3, -1.1),
              SingleQubitUnitary::u3(1.9, -0.4, 0.8),
              SingleQubitUnitary::pauli_x(),
              SingleQubitUnitary::u3(2.4, 1.3, 0.2));
}

CircuitIR grover_iteration(std::size_t n, std::size_t marked) {
  if (n < 2) throw CircuitError("grover iteration needs n >= 2");
  if (marked >= (std::size_t{1} << n)) {
    throw CircuitError("marked item out of range");
  }
  CircuitIR c;
  c.qubits = n;
  on_all(c, SingleQubitUnitary::hadamard());
  auto flip_zero_bits = [&] {
    for (Qubit q = 0; q < n; ++q) {
      const bool bit = (marked >> (n - 1 - q)) & 1U;
      if (!bit) c.gates.push_back(SingleQubitGate{q, SingleQubitUnitary::pauli_x()});
    }
  };
  flip_zero_bits();
  c.gates.push_back(leading_controls_z(n));
  flip_zero_bits();
  const CircuitIR diffusion = grover_diffusion(n);
  c.gates.insert(c.gates.end(), diffusion.gates.begin(), diffusion.gates.end());
  return c;
}

}  // namespace circuits
}  // namespace photonlogic
