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

#include "photonlogic/optics.hpp"

#include <cmath>
#include <numbers>

namespace photonlogic {

namespace {

constexpr double kUnitarityTolerance = 1e-10;
const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

void require_path(const HybridState& state, PhotonId photon, PathId path) {
  if (!state.has_photon(photon)) {
    throw StateError("unknown photon " + std::to_string(photon));
  }
  if (!state.has_path(photon, path)) {
    throw StateError("photon " + std::to_string(photon) + " has no path " +
                     std::to_string(path));
  }
}

}  // namespace

SingleQubitUnitary::SingleQubitUnitary()
    : m_{Amplitude{1}, Amplitude{0}, Amplitude{0}, Amplitude{1}} {}

SingleQubitUnitary::SingleQubitUnitary(const Matrix& m) : m_(m) {
  if (!(unitarity_defect(m) <= kUnitarityTolerance)) {
    throw StateError("single-qubit operator is not unitary");
  }
}

double SingleQubitUnitary::unitarity_defect(const Matrix& m) {
  double worst = 0.0;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      Amplitude s = m[2 * i] * std::conj(m[2 * j]) +
                    m[2 * i + 1] * std::conj(m[2 * j + 1]);
      if (i == j) s -= 1.0;
      worst = std::max(worst, std::abs(s));
    }
  }
  return worst;
}

SingleQubitUnitary SingleQubitUnitary::pauli_x() {
  return SingleQubitUnitary({0, 1, 1, 0});
}

SingleQubitUnitary SingleQubitUnitary::pauli_z() {
  return SingleQubitUnitary({1, 0, 0, -1});
}

SingleQubitUnitary SingleQubitUnitary::hadamard() {
  return SingleQubitUnitary({kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2});
}

SingleQubitUnitary SingleQubitUnitary::phase(double phi) {
  return SingleQubitUnitary({1, 0, 0, std::polar(1.0, phi)});
}

SingleQubitUnitary SingleQubitUnitary::rotation(unsigned k) {
  return phase(2.0 * std::numbers::pi / std::ldexp(1.0, static_cast<int>(k)));
}

SingleQubitUnitary SingleQubitUnitary::u3(double theta, double phi,
                                          double lambda) {
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  return SingleQubitUnitary({c, -std::polar(s, lambda), std::polar(s, phi),
                             std::polar(c, phi + lambda)});
}

HybridState beam_splitter(const HybridState& state, PhotonId photon,
                          PathId path_a, PathId path_b, int sign) {
  require_path(state, photon, path_a);
  require_path(state, photon, path_b);
  if (path_a == path_b) throw StateError("beam splitter needs two paths");
  HybridState out = state.empty_like();
  const double flip = sign >= 0 ? 1.0 : -1.0;
  for (const auto& term : state.terms()) {
    const PathId path = term.photons[photon].path;
    if (path != path_a && path != path_b) {
      out.mutable_terms().push_back(term);
      continue;
    }
    StateTerm to_a = term;
    StateTerm to_b = term;
    to_a.photons[photon].path = path_a;
    to_b.photons[photon].path = path_b;
    to_a.coeff *= kInvSqrt2;
    to_b.coeff *= flip * (path == path_a ? kInvSqrt2 : -kInvSqrt2);
    out.mutable_terms().push_back(std::move(to_a));
    out.mutable_terms().push_back(std::move(to_b));
  }
  return canonicalize(out);
}

HybridState coherent_beam_splitter(const HybridState& state, RegisterId reg1,
                                   RegisterId reg2) {
  const std::size_t s1 = state.register_slot(reg1);
  const std::size_t s2 = state.register_slot(reg2);
  if (s1 == s2) throw StateError("coherent beam splitter needs two registers");
  HybridState out = state;
  for (auto& term : out.mutable_terms()) {
    const Amplitude b1 = term.registers[s1];
    const Amplitude b2 = term.registers[s2];
    term.registers[s1] = (b1 - b2) * kInvSqrt2;
    term.registers[s2] = (b1 + b2) * kInvSqrt2;
  }
  return canonicalize(out);
}

HybridState cross_phase(const HybridState& state, const XpmCoupling& coupling) {
  const std::size_t slot = state.register_slot(coupling.register_id);
  const XpmSelector& sel = coupling.selector;
  if (!state.has_photon(sel.photon)) {
    throw StateError("unknown photon " + std::to_string(sel.photon));
  }
  if (sel.path) require_path(state, sel.photon, *sel.path);
  const Amplitude kick = std::polar(1.0, coupling.theta);
  HybridState out = state;
  for (auto& term : out.mutable_terms()) {
    if (sel.matches(term.photons[sel.photon])) term.registers[slot] *= kick;
  }
  return canonicalize(out);
}

HybridState phase_shift(const HybridState& state, RegisterId reg, double phi) {
  const std::size_t slot = state.register_slot(reg);
  const Amplitude kick = std::polar(1.0, phi);
  HybridState out = state;
  for (auto& term : out.mutable_terms()) term.registers[slot] *= kick;
  return canonicalize(out);
}

HybridState apply_single_qubit(const HybridState& state, PhotonId photon,
                               const SingleQubitUnitary& u,
                               std::optional<PathId> path_filter) {
  if (!state.has_photon(photon)) {
    throw StateError("unknown photon " + std::to_string(photon));
  }
  if (path_filter) require_path(state, photon, *path_filter);
  if (!(SingleQubitUnitary::unitarity_defect(u.matrix()) <=
        kUnitarityTolerance)) {
    throw StateError("single-qubit operator is not unitary");
  }
  HybridState out = state.empty_like();
  for (const auto& term : state.terms()) {
    const PhotonConfig config = term.photons[photon];
    if (path_filter && config.path != *path_filter) {
      out.mutable_terms().push_back(term);
      continue;
    }
    const std::size_t col = config.pol == Polarization::H ? 0 : 1;
    for (const Polarization pol : {Polarization::H, Polarization::V}) {
      const Amplitude entry = u(pol == Polarization::H ? 0 : 1, col);
      if (entry == Amplitude{0.0}) continue;
      StateTerm image = term;
      image.photons[photon].pol = pol;
      image.coeff *= entry;
      out.mutable_terms().push_back(std::move(image));
    }
  }
  return canonicalize(out);
}

HybridState path_switch(const HybridState& state, PhotonId photon,
                        PathId path_a, PathId path_b) {
  require_path(state, photon, path_a);
  require_path(state, photon, path_b);
  HybridState out = state;
  for (auto& term : out.mutable_terms()) {
    PathId& path = term.photons[photon].path;
    if (path == path_a) {
      path = path_b;
    } else if (path == path_b) {
      path = path_a;
    }
  }
  return canonicalize(out);
}

HybridState conditional_phase(const HybridState& state, PhotonId photon,
                              PathId path, double phi) {
  require_path(state, photon, path);
  const Amplitude kick = std::polar(1.0, phi);
  HybridState out = state;
  for (auto& term : out.mutable_terms()) {
    if (term.photons[photon].path == path) term.coeff *= kick;
  }
  return canonicalize(out);
}

HybridState mode_phase(const HybridState& state, PhotonId photon,
                       PhotonConfig mode, double phi) {
  require_path(state, photon, mode.path);
  const Amplitude kick = std::polar(1.0, phi);
  HybridState out = state;
  for (auto& term : out.mutable_terms()) {
    if (term.photons[photon] == mode) term.coeff *= kick;
  }
  return canonicalize(out);
}

}  // namespace photonlogic
