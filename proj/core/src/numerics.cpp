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

#include "photonlogic/numerics.hpp"

#include <cmath>
#include <numbers>

namespace photonlogic {

void validate(const GateParams& params) {
  if (!(params.alpha > 0.0) || !std::isfinite(params.alpha)) {
    throw ParameterError("alpha must be positive");
  }
  if (!std::isfinite(params.theta) || std::sin(params.theta) == 0.0) {
    throw ParameterError("theta gives no path discrimination (sin theta = 0)");
  }
  if (!(params.gamma > 0.0) || !std::isfinite(params.gamma)) {
    throw ParameterError("gamma must be positive");
  }
  if (!std::isfinite(params.theta_qnd) ||
      numerics::one_minus_cos(params.theta_qnd) == 0.0) {
    throw ParameterError("theta_qnd gives no QND discrimination");
  }
  if (!(params.detector_efficiency > 0.0 && params.detector_efficiency <= 1.0)) {
    throw ParameterError("detector efficiency must lie in (0, 1]");
  }
  if (!(params.branch_floor >= 0.0 && params.branch_floor < 1.0)) {
    throw ParameterError("branch floor must lie in [0, 1)");
  }
}

namespace numerics {

double one_minus_cos(double x) {
  const double s = std::sin(0.5 * x);
  return 2.0 * s * s;
}

double beta_magnitude(double alpha, double theta) {
  return std::numbers::sqrt2 * alpha * std::abs(std::sin(theta));
}

DiscriminationReport discrimination_error(double gamma, double theta_qnd,
                                          unsigned n,
                                          double detector_efficiency,
                                          double target_error) {
  DiscriminationReport report;
  report.n = n;
  report.mu = detector_efficiency * gamma * gamma *
              one_minus_cos(static_cast<double>(n) * theta_qnd);
  report.p_miss = std::exp(-report.mu);
  report.recommended_mu = -std::log(target_error);
  return report;
}

double contamination_exponent(double alpha, double theta) {
  const double s = alpha * std::sin(theta);
  return 2.0 * s * s;
}

double required_alpha_sin_theta(double target_fidelity) {
  if (!(target_fidelity > 0.0 && target_fidelity < 1.0)) {
    throw ParameterError("target fidelity must lie in (0, 1)");
  }
  return std::sqrt(-std::log1p(-target_fidelity) / 2.0);
}

GateParams pick_params(double target_fidelity) {
  const double x = required_alpha_sin_theta(target_fidelity);
  GateParams params;
  params.alpha = x / std::sin(params.theta);
  // e^{-gamma^2 (1 - cos theta_qnd)} <= 1 - target
  params.gamma =
      std::sqrt(-std::log1p(-target_fidelity) / one_minus_cos(params.theta_qnd));
  return params;
}

}  // namespace numerics
}  // namespace photonlogic
