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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace photonlogic {

using Amplitude = std::complex<double>;

/// Qubit basis of a single photon: H carries logical 0, V logical 1.
enum class Polarization : std::uint8_t { H = 0, V = 1 };

using PhotonId = std::size_t;
using PathId = int;
using RegisterId = int;

/// Raised for malformed states and unknown photons, paths or registers.
class StateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Polarization and spatial path of one photon inside one term.
struct PhotonConfig {
  Polarization pol = Polarization::H;
  PathId path = 0;

  friend bool operator==(const PhotonConfig&, const PhotonConfig&) = default;
  friend auto operator<=>(const PhotonConfig&, const PhotonConfig&) = default;
};

/// One additive component: coefficient, photon modes and one coherent
/// amplitude per register (same order as HybridState::registers()).
struct StateTerm {
  Amplitude coeff;
  std::vector<PhotonConfig> photons;
  std::vector<Amplitude> registers;
};

namespace tolerance {
inline constexpr double kMerge = 1e-12;
inline constexpr double kPrune = 1e-14;
inline constexpr double kBranchFloor = 1e-12;
inline constexpr double kPoissonTail = 1e-12;
}  // namespace tolerance

/// Joint pure state of labeled single photons and coherent ancilla beams.
///
/// Every term assigns each photon exactly one (polarization, path) pair and
/// each registered coherent beam a single complex amplitude. Coherent labels
/// are not orthogonal, so inner products go through coherent_overlap().
class HybridState {
 public:
  HybridState() = default;
  /// Photons start with path 0 registered and no terms.
  explicit HybridState(std::size_t photon_count);

  std::size_t photon_count() const { return paths_.size(); }
  const std::vector<StateTerm>& terms() const { return terms_; }
  const std::vector<RegisterId>& registers() const { return registers_; }
  const std::set<PathId>& paths(PhotonId photon) const;

  bool has_photon(PhotonId photon) const { return photon < paths_.size(); }
  bool has_path(PhotonId photon, PathId path) const;
  bool has_register(RegisterId id) const;
  /// Position of the register inside StateTerm::registers.
  std::size_t register_slot(RegisterId id) const;

  void register_path(PhotonId photon, PathId path);

  /// Adds a coherent beam with the same amplitude in every term.
  RegisterId add_register(Amplitude beta);
  /// Drops a register without projecting it (see the implementation notes).
  void discard_register(RegisterId id);

  void add_term(Amplitude coeff, std::vector<PhotonConfig> photons,
                std::vector<Amplitude> registers = {});
  void add_term(StateTerm term);

  std::vector<StateTerm>& mutable_terms() { return terms_; }

  /// Occupied paths of a photon (paths with at least one term).
  std::set<PathId> occupied_paths(PhotonId photon) const;

  /// Same registry (photons, paths, registers), no terms.
  HybridState empty_like() const;

 private:
  void check_photon(PhotonId photon) const;

  std::vector<std::set<PathId>> paths_;
  std::vector<RegisterId> registers_;
  std::vector<StateTerm> terms_;
  RegisterId next_register_ = 0;
};

/// ⟨beta1|beta2⟩ for coherent states.
Amplitude coherent_overlap(Amplitude beta1, Amplitude beta2);

/// Sums terms with equal photon configuration and register amplitudes and
/// drops terms whose coefficient is below the prune threshold.
HybridState canonicalize(const HybridState& state);

/// ⟨a|b⟩. Both states must share photon count and register set.
Amplitude inner_product(const HybridState& a, const HybridState& b);

double norm(const HybridState& state);

HybridState scaled(const HybridState& state, Amplitude factor);

/// Rescales to unit norm. Throws on a zero state.
HybridState normalized(const HybridState& state);

/// ⟨n|beta⟩ evaluated in log space.
Amplitude fock_amplitude(Amplitude beta, unsigned n);

/// Smallest n whose Poisson(max |beta|^2) upper tail is below kPoissonTail.
unsigned photon_number_cutoff(const HybridState& state, RegisterId id);

struct Projection {
  HybridState state;  // unnormalized, register removed
  double probability = 0.0;
};

/// Applies |n⟩⟨n| to one coherent register.
Projection project_register_number(const HybridState& state, RegisterId id,
                                   unsigned n);

/// |⟨reference|state⟩|^2 for register-free normalized states.
double fidelity(const HybridState& state, const HybridState& reference);

std::string to_string(const HybridState& state);

}  // namespace photonlogic
