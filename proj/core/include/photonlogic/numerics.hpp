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

#include "photonlogic/gate_params.hpp"

namespace photonlogic::numerics {

/// Threshold-detector readout of the QND probe for n photons in the
/// measured beam.
struct DiscriminationReport {
  unsigned n = 0;
  /// Mean photon number of the difference beam, eta |gamma|^2 (1 - cos n theta).
  double mu = 0.0;
  /// Probability the difference beam registers no click, e^{-mu}.
  double p_miss = 1.0;
  /// Smallest mu for which p_miss stays below `target_error` (if requested).
  double recommended_mu = 0.0;
};

/// 1 - cos(x) without cancellation.
double one_minus_cos(double x);

/// sqrt2 * alpha * |sin theta|, the dark-port amplitude of the C-path gate.
double beta_magnitude(double alpha, double theta);

DiscriminationReport discrimination_error(double gamma, double theta_qnd,
                                          unsigned n,
                                          double detector_efficiency = 1.0,
                                          double target_error = 1e-9);

/// |beta|^2 = 2 alpha^2 sin^2 theta. The n = 0 branch keeps wrong-path
/// terms with probability weight e^{-contamination_exponent}.
double contamination_exponent(double alpha, double theta);

/// Smallest alpha sin(theta) with e^{-2 (alpha sin theta)^2} <= 1 - target.
double required_alpha_sin_theta(double target_fidelity);

/// Parameters meeting the target at the default XPM phases.
GateParams pick_params(double target_fidelity);

}  // namespace photonlogic::numerics
