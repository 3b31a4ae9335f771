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

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "photonlogic/optics.hpp"
#include "photonlogic/state.hpp"

namespace photonlogic::testing {

constexpr double kPi = std::numbers::pi;

inline Polarization pol(std::size_t bit) {
  return bit ? Polarization::V : Polarization::H;
}

inline std::vector<Amplitude> random_vector(std::mt19937_64& rng,
                                            std::size_t dim) {
  std::normal_distribution<double> g;
  std::vector<Amplitude> v(dim);
  double n2 = 0.0;
  for (Amplitude& a : v) {
    a = {g(rng), g(rng)};
    n2 += std::norm(a);
  }
  for (Amplitude& a : v) a /= std::sqrt(n2);
  return v;
}

inline SingleQubitUnitary random_unitary(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  return SingleQubitUnitary::u3(0.5 * angle(rng), angle(rng), angle(rng));
}

/// sum_ij c_ij |i>_0 |j>_1 with photon 1 spread uniformly over paths_of(i).
inline HybridState two_photon_state(
    const std::vector<Amplitude>& c,
    const std::function<std::vector<PathId>(std::size_t)>& paths_of) {
  HybridState s(2);
  s.register_path(1, 1);
  for (std::size_t i = 0; i < 2; ++i) {
    const std::vector<PathId> paths = paths_of(i);
    const double w = 1.0 / std::sqrt(static_cast<double>(paths.size()));
    for (std::size_t j = 0; j < 2; ++j) {
      for (const PathId p : paths) {
        s.add_term(c[2 * i + j] * w, {{pol(i), 0}, {pol(j), p}});
      }
    }
  }
  return canonicalize(s);
}

/// Both photons on path 0.
inline HybridState unrouted(const std::vector<Amplitude>& c) {
  return two_photon_state(c, [](std::size_t) { return std::vector<PathId>{0}; });
}

/// Target on path 1 exactly when the control is V.
inline HybridState routed(const std::vector<Amplitude>& c) {
  return two_photon_state(c, [](std::size_t i) {
    return std::vector<PathId>{static_cast<PathId>(i)};
  });
}

/// Target split evenly over both paths, uncorrelated with the control.
inline HybridState erased(const std::vector<Amplitude>& c) {
  return two_photon_state(c, [](std::size_t) { return std::vector<PathId>{0, 1}; });
}

inline Amplitude register_value(const HybridState& s, RegisterId id,
                                std::size_t term = 0) {
  return s.terms().at(term).registers[s.register_slot(id)];
}

}  // namespace photonlogic::testing
