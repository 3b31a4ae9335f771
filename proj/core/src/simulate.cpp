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

#include "photonlogic/simulate.hpp"

#include <algorithm>
#include <random>

namespace photonlogic {

using compiler::PrimitiveSchedule;
using compiler::Step;

double SimulationResult::total_probability() const {
  double total = 0.0;
  for (const FinalBranch& b : branches) total += b.probability;
  return total;
}

namespace {

gates::BranchSet apply_step(const HybridState& state, const Step& step,
                            const GateParams& params, gates::RunMode run) {
  using namespace compiler;
  return std::visit(
      [&](const auto& s) -> gates::BranchSet {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CPathStep>) {
          return gates::cpath(
              state, {s.control, s.target, kFirstPath, kSecondPath, s.active},
              params, run);
        } else if constexpr (std::is_same_v<T, MergingStep>) {
          return gates::merging(state,
                                {s.control, s.target, kFirstPath, kSecondPath,
                                 kFirstPath, s.active},
                                params, run);
        } else if constexpr (std::is_same_v<T, EraserStep>) {
          return gates::eraser(
              state, {s.control, s.target, kFirstPath, kSecondPath, s.active},
              params, run);
        } else {
          gates::BranchSet out;
          gates::MeasurementOutcome none;
          none.probability = 1.0;
          out.branches.push_back(
              {none, apply_single_qubit(state, s.photon, s.u, s.path)});
          return out;
        }
      },
      step);
}

struct Live {
  double probability;
  HybridState state;
  std::vector<unsigned> outcomes;
  bool misread = false;
  bool failed = false;
  std::string failure;
};

/// Folds branches equal up to global phase; keeps the first record.
std::vector<Live> fold(std::vector<Live> live, double tolerance) {
  std::vector<Live> out;
  for (Live& b : live) {
    bool merged = false;
    for (Live& kept : out) {
      if (b.failed || kept.failed) continue;
      if (std::abs(std::abs(inner_product(kept.state, b.state)) - 1.0) <=
          tolerance) {
        kept.probability += b.probability;
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back(std::move(b));
  }
  return out;
}

bool is_measurement(const Step& step) {
  return !std::holds_alternative<compiler::LocalStep>(step);
}

}  // namespace

SimulationResult simulate(const PrimitiveSchedule& schedule,
                          const HybridState& input,
                          const SimulationOptions& options) {
  validate(options.params);
  if (input.photon_count() != schedule.photons) {
    throw std::invalid_argument("input has " +
                                std::to_string(input.photon_count()) +
                                " photons, schedule expects " +
                                std::to_string(schedule.photons));
  }
  std::mt19937_64 rng(options.seed);
  const gates::RunMode run{options.mode, &rng};

  SimulationResult result;
  std::vector<Live> live{{1.0, normalized(input), {}, false, false, {}}};
  result.peak_branches = 1;
  for (const Step& step : schedule.steps) {
    std::vector<Live> next;
    for (Live& b : live) {
      if (b.failed) {
        next.push_back(std::move(b));
        continue;
      }
      gates::BranchSet set;
      try {
        set = apply_step(b.state, step, options.params, run);
      } catch (const gates::GateError& e) {
        if (options.strict && !b.misread) throw;
        b.failed = true;
        b.failure = e.what();
        next.push_back(std::move(b));
        continue;
      }
      for (const gates::Branch& g : set.branches) {
        Live child{b.probability * g.outcome.probability, g.state, b.outcomes,
                   b.misread || g.outcome.reported_n != g.outcome.n, false, {}};
        if (is_measurement(step)) child.outcomes.push_back(g.outcome.reported_n);
        next.push_back(std::move(child));
      }
    }
    live = fold(std::move(next), options.coalesce_tolerance);
    result.peak_branches = std::max(result.peak_branches, live.size());
  }
  for (Live& b : live) {
    result.branches.push_back({b.probability, std::move(b.state),
                               std::move(b.outcomes), b.failed,
                               std::move(b.failure)});
  }
  return result;
}

oracle::QubitVector circuit_input(const CircuitIR& circuit) {
  if (circuit.input.empty()) return oracle::QubitVector(circuit.qubits);
  return oracle::QubitVector(circuit.qubits, circuit.input).normalized();
}

Verification verify_against_oracle(const CircuitIR& circuit,
                                   const oracle::QubitVector& input,
                                   const SimulationOptions& options) {
  return verify_against_oracle(circuit, compiler::lower(circuit), input,
                               options);
}

Verification verify_against_oracle(const CircuitIR& circuit,
                                   const PrimitiveSchedule& schedule,
                                   const oracle::QubitVector& input,
                                   const SimulationOptions& options) {
  const oracle::QubitVector expected = oracle::run(circuit, input);
  const SimulationResult sim =
      simulate(schedule, oracle::qubit_to_photonic(input), options);

  Verification v;
  v.min_fidelity = 1.0;
  double weighted = 0.0;
  for (const FinalBranch& b : sim.branches) {
    const double f = b.failed ? 0.0
                              : oracle::fidelity(
                                    oracle::photonic_to_qubit(
                                        b.state, compiler::kFirstPath,
                                        options.strict ? 1e-9 : 1.0),
                                    expected);
    v.branch_fidelities.push_back(f);
    v.branch_probabilities.push_back(b.probability);
    v.min_fidelity = std::min(v.min_fidelity, f);
    weighted += b.probability * f;
    v.total_probability += b.probability;
  }
  v.mean_fidelity = v.total_probability > 0.0 ? weighted / v.total_probability
                                              : 0.0;
  return v;
}

}  // namespace photonlogic
