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

#include <cstdint>
#include <string>
#include <vector>

#include "photonlogic/compiler.hpp"
#include "photonlogic/gate_params.hpp"
#include "photonlogic/gates.hpp"
#include "photonlogic/oracle.hpp"

namespace photonlogic {

struct SimulationOptions {
  GateParams params;
  gates::BranchMode mode = gates::BranchMode::Enumerate;
  std::uint64_t seed = 0;
  double coalesce_tolerance = 1e-12;
  /// Throw when a gate rejects its input. Otherwise the branch is kept as
  /// failed; branches that went through a detector misread are always kept.
  bool strict = true;
};

struct FinalBranch {
  double probability = 0.0;
  HybridState state;
  /// Measurement record, one entry per measured primitive.
  std::vector<unsigned> outcomes;
  /// Some gate rejected the branch's state (imperfect probes or a misread
  /// readout); `state` is the state that gate received.
  bool failed = false;
  std::string failure;
};

struct SimulationResult {
  std::vector<FinalBranch> branches;
  std::size_t peak_branches = 0;

  double total_probability() const;
};

/// Runs the schedule on `input`, branching on every measurement and
/// folding branches that coincide up to global phase after each step.
SimulationResult simulate(const compiler::PrimitiveSchedule& schedule,
                          const HybridState& input,
                          const SimulationOptions& options = {});

struct Verification {
  std::vector<double> branch_fidelities;
  std::vector<double> branch_probabilities;
  double min_fidelity = 1.0;
  double mean_fidelity = 1.0;  // probability-weighted
  double total_probability = 0.0;
};

/// Lowers and simulates the circuit, then compares every branch with the
/// state-vector oracle.
Verification verify_against_oracle(const CircuitIR& circuit,
                                   const oracle::QubitVector& input,
                                   const SimulationOptions& options = {});

Verification verify_against_oracle(const CircuitIR& circuit,
                                   const compiler::PrimitiveSchedule& schedule,
                                   const oracle::QubitVector& input,
                                   const SimulationOptions& options = {});

/// Input the circuit carries, or |0...0> when it has none.
oracle::QubitVector circuit_input(const CircuitIR& circuit);

}  // namespace photonlogic
