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

#include <array>
#include <optional>

#include "photonlogic/state.hpp"

namespace photonlogic {

/// 2x2 unitary on the (H, V) polarization basis, row-major.
class SingleQubitUnitary {
 public:
  using Matrix = std::array<Amplitude, 4>;

  /// Identity.
  SingleQubitUnitary();
  /// Throws StateError unless U U^dagger = I within 1e-10.
  explicit SingleQubitUnitary(const Matrix& m);

  static SingleQubitUnitary identity() { return {}; }
  static SingleQubitUnitary pauli_x();
  static SingleQubitUnitary pauli_z();
  static SingleQubitUnitary hadamard();
  /// diag(1, e^{i phi}).
  static SingleQubitUnitary phase(double phi);
  /// QFT rotation R_k = diag(1, e^{2 pi i / 2^k}).
  static SingleQubitUnitary rotation(unsigned k);
  /// General single-qubit rotation, same angle convention as OpenQASM u3.
  static SingleQubitUnitary u3(double theta, double phi, double lambda);

  const Matrix& matrix() const { return m_; }
  Amplitude operator()(std::size_t row, std::size_t col) const {
    return m_[2 * row + col];
  }

  /// max |(U U^dagger - I)_ij|.
  static double unitarity_defect(const Matrix& m);

  friend bool operator==(const SingleQubitUnitary&,
                         const SingleQubitUnitary&) = default;

 private:
  Matrix m_;
};

/// Which excitation an XPM coupling sees. Empty filters match anything.
struct XpmSelector {
  PhotonId photon = 0;
  std::optional<Polarization> pol;
  std::optional<PathId> path;

  bool matches(const PhotonConfig& config) const {
    return (!pol || *pol == config.pol) && (!path || *path == config.path);
  }
};

struct XpmCoupling {
  RegisterId register_id = 0;
  XpmSelector selector;
  double theta = 0.0;
};

/// Photonic 50:50 splitter, |a> -> (|a>+|b>)/sqrt2, |b> -> (|a>-|b>)/sqrt2.
/// `sign = -1` flips the b-port sign (fault injection only).
HybridState beam_splitter(const HybridState& state, PhotonId photon,
                          PathId path_a, PathId path_b, int sign = +1);

/// (beta1, beta2) -> ((beta1 - beta2)/sqrt2, (beta1 + beta2)/sqrt2).
HybridState coherent_beam_splitter(const HybridState& state, RegisterId reg1,
                                   RegisterId reg2);

HybridState cross_phase(const HybridState& state, const XpmCoupling& coupling);

HybridState phase_shift(const HybridState& state, RegisterId reg, double phi);

HybridState apply_single_qubit(const HybridState& state, PhotonId photon,
                               const SingleQubitUnitary& u,
                               std::optional<PathId> path_filter = {});

HybridState path_switch(const HybridState& state, PhotonId photon,
                        PathId path_a, PathId path_b);

/// Multiplies terms with the photon on `path` by e^{i phi}.
HybridState conditional_phase(const HybridState& state, PhotonId photon,
                              PathId path, double phi);

/// Multiplies terms with the photon in the given (pol, path) mode by e^{i phi}.
HybridState mode_phase(const HybridState& state, PhotonId photon,
                       PhotonConfig mode, double phi);

}  // namespace photonlogic
