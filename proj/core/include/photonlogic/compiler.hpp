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
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "photonlogic/circuit.hpp"
#include "photonlogic/gates.hpp"

namespace photonlogic::compiler {

/// Every photon enters on kFirstPath; controlled-path gates open kSecondPath.
inline constexpr PathId kFirstPath = 0;
inline constexpr PathId kSecondPath = 1;

/// When a routed photon sits on its second path.
enum class RouteCondition {
  ControlIsV,            // router polarization V, whatever its path
  ControlIsVOnSecondPath // router V and router on its own second path
};

struct CPathStep {
  PhotonId control = 0;
  PhotonId target = 1;
  RouteCondition condition = RouteCondition::ControlIsV;
  gates::ControlModes active;
  std::size_t control_paths = 1;
};

struct MergingStep {
  PhotonId control = 0;
  PhotonId target = 1;
  gates::ControlModes active;
  std::size_t control_paths = 1;
};

struct EraserStep {
  PhotonId control = 0;
  PhotonId target = 1;
  gates::ControlModes active;
};

struct LocalStep {
  PhotonId photon = 0;
  SingleQubitUnitary u;
  std::optional<PathId> path;
};

using Step = std::variant<CPathStep, MergingStep, EraserStep, LocalStep>;

/// XPM cost per primitive. Defaults: cpath(m) = 2m + 2 + qnd = 2m + 3,
/// merging(m) = qnd, eraser = qnd.
struct CostModel {
  int cpath_per_control_path = 2;
  int cpath_fixed = 2;
  int merging_per_control_path = 0;
  int merging_fixed = 0;
  int eraser_fixed = 0;
  int qnd = 1;

  long cpath(std::size_t m) const;
  long merging(std::size_t m) const;
  long eraser() const;
};

struct ResourceTally {
  std::size_t cpath_count = 0;
  std::size_t merging_count = 0;
  std::size_t eraser_count = 0;
  std::size_t local_count = 0;
  /// Sum of per-primitive costs under the cost model.
  long xpm_count = 0;
  /// XPMs spent in C-path gates alone.
  long xpm_cpath = 0;
  /// Closed-form total for recognised families (Grover diffusion: 18n - 20).
  std::optional<long> xpm_closed_form;
};

struct PrimitiveSchedule {
  std::size_t photons = 0;
  std::vector<Step> steps;
  ResourceTally tally;
  CircuitFamily family = CircuitFamily::Generic;
};

/// Lowers a circuit to C-path / merging / eraser / local steps: erase a
/// target's correlation with its previous control before reusing it as a
/// target, and merge a photon once no further controlled gate touches it.
PrimitiveSchedule lower(const CircuitIR& circuit, const CostModel& cost = {});

ResourceTally count_xpm(const PrimitiveSchedule& schedule,
                        const CostModel& cost = {});

/// Replays the schedule against a correlation tracker and lists every
/// construction-rule violation (empty when the schedule conforms).
std::vector<std::string> check_rules(const PrimitiveSchedule& schedule);

long grover_xpm_total(std::size_t n);
/// 5 + 7(n - 2): one single-path control link, then n - 2 two-path links.
long grover_cpath_chain(std::size_t n);

inline CircuitIR grover_diffusion_ir(std::size_t n) {
  return circuits::grover_diffusion(n);
}
inline CircuitIR qft_ir(std::size_t n) { return circuits::qft(n); }

std::string describe(const Step& step);

}  // namespace photonlogic::compiler
