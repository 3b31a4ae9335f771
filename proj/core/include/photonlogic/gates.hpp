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

#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "photonlogic/gate_params.hpp"
#include "photonlogic/state.hpp"

namespace photonlogic::gates {

/// Precondition violations of the measurement-assisted gates.
class GateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class BranchMode { Enumerate, Sample };

/// Enumerate returns every outcome above the probability floor; Sample
/// draws one outcome from `rng`.
struct RunMode {
  BranchMode mode = BranchMode::Enumerate;
  std::mt19937_64* rng = nullptr;
};

struct Corrections {
  bool path_switch = false;
  bool parity_phase = false;   // pi on the target's second path
  bool control_phase = false;  // pi on the active control modes
};

struct MeasurementOutcome {
  unsigned n = 0;           // photon number actually projected
  unsigned reported_n = 0;  // what the detector chain reported
  double probability = 0.0;
  Corrections corrections;
  /// Threshold-detector miss probability for this n (physical QND only).
  double discrimination_error = 0.0;
  /// Number of raw outcomes folded into this branch by coalesce().
  unsigned merged_outcomes = 1;
};

struct Branch {
  MeasurementOutcome outcome;
  HybridState state;  // normalized
};

struct BranchSet {
  std::vector<Branch> branches;
  /// XPM couplings the gate used, QND probe coupling included.
  int xpm_couplings = 0;

  double total_probability() const;
};

/// (pol, path) modes of the control photon that send the target to path 2.
using ControlModes = std::vector<PhotonConfig>;

/// V on every occupied path of the control: the plain controlled gate.
ControlModes v_on_all_paths(const HybridState& state, PhotonId control);

struct CPathSpec {
  PhotonId control = 0;
  PhotonId target = 1;
  PathId path_1 = 0;  // input path and path taken by inactive control modes
  PathId path_2 = 1;
  std::optional<ControlModes> active;
};

/// Controlled-path gate: routes the target to path_2 exactly when the
/// control sits in an active mode.
BranchSet cpath(const HybridState& state, const CPathSpec& spec,
                const GateParams& params, RunMode run = {});

struct MergingSpec {
  PhotonId control = 0;
  PhotonId target = 1;
  PathId path_1 = 0;
  PathId path_2 = 1;
  PathId out_path = 0;
  std::optional<ControlModes> active;
};

/// Inverse of cpath: recombines the target's two paths on out_path.
BranchSet merging(const HybridState& state, const MergingSpec& spec,
                  const GateParams& params, RunMode run = {});

struct EraserSpec {
  PhotonId control = 0;
  PhotonId target = 1;
  PathId path_1 = 0;
  PathId path_2 = 1;
  std::optional<ControlModes> active;
};

/// Removes the correlation between the control's polarization and the
/// target's paths, leaving the target in (|path_1> + |path_2>)/sqrt2.
BranchSet eraser(const HybridState& state, const EraserSpec& spec,
                 const GateParams& params, RunMode run = {});

/// Photon-number readout of one coherent register.
BranchSet qnd_measure(const HybridState& state, RegisterId reg,
                      const GateParams& params, RunMode run = {});

/// Merges branches whose states agree up to global phase.
BranchSet coalesce(const BranchSet& set, double tolerance = 1e-12);

/// Whether the paths of `other` depend directly on the control's
/// polarization: with every remaining photon's configuration held fixed,
/// the joint (control polarization, other path) state is not a product.
/// Dependence that runs only through a third photon does not count.
bool polarization_path_correlated(const HybridState& state, PhotonId control,
                                  PhotonId other, double tolerance = 1e-9);

}  // namespace photonlogic::gates
