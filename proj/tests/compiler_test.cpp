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

#include "photonlogic/compiler.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <string>

#include "photonlogic/simulate.hpp"
#include "test_support.hpp"

namespace photonlogic::compiler {
namespace {

using testing::random_unitary;
using testing::random_vector;

std::string kind(const Step& step) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CPathStep>) {
          return "CPath " + std::to_string(s.control) + ">" + std::to_string(s.target);
        } else if constexpr (std::is_same_v<T, MergingStep>) {
          return "Merging " + std::to_string(s.control) + ">" + std::to_string(s.target);
        } else if constexpr (std::is_same_v<T, EraserStep>) {
          return "Eraser " + std::to_string(s.control) + ">" + std::to_string(s.target);
        } else {
          return "Local " + std::to_string(s.photon);
        }
      },
      step);
}

std::vector<std::string> nonlocal_kinds(const PrimitiveSchedule& s) {
  std::vector<std::string> out;
  for (const Step& step : s.steps) {
    if (!std::holds_alternative<LocalStep>(step)) out.push_back(kind(step));
  }
  return out;
}

TEST(Lower, SingleControlledU) {
  CircuitIR c;
  c.qubits = 2;
  c.gates = {ControlledGate{0, 1, SingleQubitUnitary::hadamard()}};
  const PrimitiveSchedule s = lower(c);
  ASSERT_EQ(s.steps.size(), 3u);
  EXPECT_EQ(kind(s.steps[0]), "CPath 0>1");
  const auto* local = std::get_if<LocalStep>(&s.steps[1]);
  ASSERT_NE(local, nullptr);
  EXPECT_EQ(local->photon, 1u);
  EXPECT_EQ(local->path, std::optional<PathId>(kSecondPath));
  EXPECT_EQ(kind(s.steps[2]), "Merging 0>1");
  EXPECT_EQ(s.tally.cpath_count, 1u);
  EXPECT_EQ(s.tally.merging_count, 1u);
  EXPECT_EQ(s.tally.eraser_count, 0u);
  EXPECT_EQ(s.tally.xpm_cpath, 5);
  EXPECT_TRUE(check_rules(s).empty());
}

TEST(Lower, EmptyCircuit) {
  CircuitIR c;
  c.qubits = 3;
  const PrimitiveSchedule s = lower(c);
  EXPECT_TRUE(s.steps.empty());
  EXPECT_EQ(s.tally.cpath_count + s.tally.merging_count + s.tally.eraser_count, 0u);
  EXPECT_EQ(s.tally.xpm_count, 0);
}

TEST(Lower, SingleQubitGatesStayLocal) {
  CircuitIR c;
  c.qubits = 2;
  c.gates = {SingleQubitGate{0, SingleQubitUnitary::hadamard()},
             SingleQubitGate{1, SingleQubitUnitary::pauli_x()}};
  const PrimitiveSchedule s = lower(c);
  EXPECT_EQ(s.tally.local_count, 2u);
  EXPECT_TRUE(nonlocal_kinds(s).empty());
}

TEST(Lower, Fig2NarrativeOrder) {
  const PrimitiveSchedule s = lower(circuits::fig2_default());
  const std::vector<std::string> expected{
      "CPath 0>1",  "CPath 1>2",   "Eraser 1>2", "CPath 1>2",
      "Merging 1>2", "Eraser 0>1", "CPath 0>1",  "Merging 0>1"};
  EXPECT_EQ(nonlocal_kinds(s), expected);
  EXPECT_EQ(s.tally.cpath_count, 4u);
  EXPECT_EQ(s.tally.eraser_count, 2u);
  EXPECT_EQ(s.tally.merging_count, 2u);
  EXPECT_TRUE(check_rules(s).empty());
}

TEST(Lower, QftCounts) {
  const PrimitiveSchedule one = lower(qft_ir(1));
  EXPECT_EQ(one.tally.cpath_count, 0u);
  for (std::size_t n = 2; n <= 12; ++n) {
    const PrimitiveSchedule s = lower(qft_ir(n));
    EXPECT_EQ(s.tally.cpath_count, n * (n - 1) / 2) << n;
    EXPECT_EQ(s.tally.eraser_count, (n - 1) * (n - 2) / 2) << n;
    EXPECT_EQ(s.tally.merging_count, n - 1) << n;
    EXPECT_TRUE(check_rules(s).empty()) << n;
    EXPECT_EQ(s.family, CircuitFamily::Qft);
  }
}

TEST(Lower, GroverCounts) {
  const PrimitiveSchedule two = lower(grover_diffusion_ir(2));
  EXPECT_EQ(two.tally.cpath_count, 1u);
  EXPECT_EQ(two.tally.merging_count, 1u);
  EXPECT_EQ(two.tally.eraser_count, 0u);
  for (std::size_t n = 3; n <= 12; ++n) {
    const long ln = static_cast<long>(n);
    const PrimitiveSchedule s = lower(grover_diffusion_ir(n));
    EXPECT_EQ(s.tally.cpath_count, n - 1);
    EXPECT_EQ(s.tally.merging_count, n - 1);
    EXPECT_EQ(s.tally.eraser_count, 0u);
    EXPECT_EQ(s.tally.xpm_cpath, 5 + 7 * (ln - 2));
    EXPECT_EQ(grover_cpath_chain(n), 5 + 7 * (ln - 2));
    ASSERT_TRUE(s.tally.xpm_closed_form.has_value());
    EXPECT_EQ(*s.tally.xpm_closed_form, 18 * ln - 20);
    EXPECT_TRUE(check_rules(s).empty());
  }
  EXPECT_EQ(grover_xpm_total(3), 34);
  EXPECT_EQ(grover_xpm_total(5), 70);
}

TEST(CostModel, Arithmetic) {
  const CostModel defaults;
  EXPECT_EQ(defaults.cpath(1), 5);
  EXPECT_EQ(defaults.cpath(2), 7);
  CostModel custom;
  custom.cpath_fixed = 10;
  custom.merging_fixed = 4;
  CircuitIR c;
  c.qubits = 2;
  c.gates = {ControlledGate{0, 1, SingleQubitUnitary::pauli_x()}};
  const PrimitiveSchedule s = lower(c, custom);
  EXPECT_EQ(s.tally.xpm_cpath, 2 + 10 + 1);
  EXPECT_EQ(count_xpm(s, custom).xpm_count, s.tally.xpm_count);
  EXPECT_GT(s.tally.xpm_count, lower(c).tally.xpm_count);
}

TEST(CheckRules, FlagsHandWrittenViolations) {
  // Second control operation on a target still correlated with its control.
  PrimitiveSchedule bad;
  bad.photons = 3;
  bad.steps = {CPathStep{0, 1, RouteCondition::ControlIsV, {{Polarization::V, 0}}, 1},
               CPathStep{2, 1, RouteCondition::ControlIsV, {{Polarization::V, 0}}, 1},
               MergingStep{0, 1, {{Polarization::V, 0}}, 1}};
  EXPECT_FALSE(check_rules(bad).empty());

  // Routed photon left unmerged at the end.
  PrimitiveSchedule open;
  open.photons = 2;
  open.steps = {CPathStep{0, 1, RouteCondition::ControlIsV, {{Polarization::V, 0}}, 1}};
  EXPECT_FALSE(check_rules(open).empty());
}

TEST(Lower, RejectsInvalidCircuits) {
  CircuitIR c;
  c.qubits = 2;
  c.gates = {ControlledGate{0, 2, SingleQubitUnitary::pauli_x()}};
  EXPECT_THROW(lower(c), CircuitError);
  CircuitIR none;
  EXPECT_THROW(lower(none), CircuitError);
}

TEST(Describe, NamesEveryStep) {
  for (const Step& step : lower(circuits::fig2_default()).steps) {
    EXPECT_FALSE(describe(step).empty());
  }
}

CircuitIR random_circuit(std::mt19937_64& rng, std::size_t n, std::size_t gates) {
  std::uniform_int_distribution<int> pick(0, 2);
  CircuitIR c;
  c.qubits = n;
  for (std::size_t g = 0; g < gates; ++g) {
    std::vector<Qubit> order(n);
    for (Qubit q = 0; q < n; ++q) order[q] = q;
    std::shuffle(order.begin(), order.end(), rng);
    const int type = n < 3 ? pick(rng) % 2 : pick(rng);
    if (type == 0) {
      c.gates.push_back(SingleQubitGate{order[0], random_unitary(rng)});
    } else if (type == 1) {
      c.gates.push_back(ControlledGate{order[0], order[1], random_unitary(rng)});
    } else {
      std::uniform_int_distribution<std::size_t> k(2, n - 1);
      const std::size_t controls = k(rng);
      c.gates.push_back(MultiControlledGate{
          {order.begin(), order.begin() + static_cast<std::ptrdiff_t>(controls)},
          order[controls],
          random_unitary(rng)});
    }
  }
  c.input = random_vector(rng, std::size_t{1} << n);
  return c;
}

std::string io_dump(const CircuitIR& c, const PrimitiveSchedule& s) {
  std::string out;
  for (const Gate& g : c.gates) {
    out += std::visit(
        [](const auto& x) -> std::string {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, SingleQubitGate>) {
            return "single " + std::to_string(x.qubit);
          } else if constexpr (std::is_same_v<T, ControlledGate>) {
            return "cu " + std::to_string(x.control) + ">" + std::to_string(x.target);
          } else {
            std::string r = "mcu ";
            for (Qubit q : x.controls) r += std::to_string(q) + ",";
            return r + ">" + std::to_string(x.target);
          }
        },
        g);
    out += "; ";
  }
  out += "\n";
  for (const Step& st : s.steps) out += describe(st) + "\n";
  return out;
}

// The lowered schedule reproduces the dense oracle on every branch.
TEST(Lower, RandomCircuitsMatchTheOracle) {
  std::mt19937_64 rng(71);
  for (int k = 0; k < 90; ++k) {
    const std::size_t n = 2 + static_cast<std::size_t>(k % 3);
    const CircuitIR c = random_circuit(rng, n, 3 + static_cast<std::size_t>(k % 4));
    const PrimitiveSchedule s = lower(c);
    SCOPED_TRACE(io_dump(c, s));
    EXPECT_TRUE(check_rules(s).empty()) << k;
    Verification v;
    try {
      v = verify_against_oracle(c, s, circuit_input(c));
    } catch (const std::exception& e) {
      ADD_FAILURE() << k << ": " << e.what();
      continue;
    }
    EXPECT_GE(v.min_fidelity, 1.0 - 1e-8) << k;
    EXPECT_NEAR(v.total_probability, 1.0, 1e-8) << k;
  }
}

TEST(Lower, FiveQubitRandomCircuitsMatchTheOracle) {
  std::mt19937_64 rng(73);
  for (int k = 0; k < 12; ++k) {
    const CircuitIR c = random_circuit(rng, 5, 5);
    const PrimitiveSchedule s = lower(c);
    SCOPED_TRACE(io_dump(c, s));
    EXPECT_TRUE(check_rules(s).empty()) << k;
    Verification v;
    try {
      v = verify_against_oracle(c, s, circuit_input(c));
    } catch (const std::exception& e) {
      ADD_FAILURE() << k << ": " << e.what();
      continue;
    }
    EXPECT_GE(v.min_fidelity, 1.0 - 1e-8) << k;
    EXPECT_NEAR(v.total_probability, 1.0, 1e-8) << k;
  }
}

TEST(Lower, GroverIterationAndQftSimulate) {
  const CircuitIR g = circuits::grover_iteration(3, 6);
  EXPECT_GE(verify_against_oracle(g, oracle::QubitVector(3)).min_fidelity, 1.0 - 1e-8);
  std::mt19937_64 rng(72);
  CircuitIR q = qft_ir(3);
  q.input = random_vector(rng, 8);
  EXPECT_GE(verify_against_oracle(q, circuit_input(q)).min_fidelity, 1.0 - 1e-8);
}

}  // namespace
}  // namespace photonlogic::compiler
