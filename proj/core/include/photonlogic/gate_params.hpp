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

#include <stdexcept>

#include "photonlogic/state.hpp"

namespace photonlogic {

enum class QndModel { Ideal, Physical };

/// Deliberate defects used to check that verification catches them.
enum class Fault { None, FlipTargetSplitterSign };

/// Ancilla and probe settings shared by every measurement-assisted gate.
struct GateParams {
  double alpha = 2000.0;      // ancilla amplitude of each C-path beam
  double theta = 0.003;       // XPM phase per photon, radians
  double gamma = 2000.0;      // QND probe amplitude
  double theta_qnd = 0.005;   // QND XPM phase
  double detector_efficiency = 1.0;
  QndModel qnd = QndModel::Ideal;
  double branch_floor = tolerance::kBranchFloor;
  /// Allowed relative weight of terms violating a gate's input form.
  double form_tolerance = 1e-10;
  Fault fault = Fault::None;
};

class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws ParameterError when no path discrimination is possible.
void validate(const GateParams& params);

}  // namespace photonlogic
