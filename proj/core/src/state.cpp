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

#include "photonlogic/state.hpp"

#include <algorithm>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace photonlogic {

namespace {

bool amplitudes_close(Amplitude a, Amplitude b) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= tolerance::kMerge * scale;
}

bool registers_close(const std::vector<Amplitude>& a,
                     const std::vector<Amplitude>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!amplitudes_close(a[i], b[i])) return false;
  }
  return true;
}

Amplitude register_overlap(const std::vector<Amplitude>& a,
                           const std::vector<Amplitude>& b) {
  Amplitude product{1.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) {
    product *= coherent_overlap(a[i], b[i]);
  }
  return product;
}

using PhotonKey = std::vector<PhotonConfig>;

std::map<PhotonKey, std::vector<std::size_t>> group_by_photons(
    const std::vector<StateTerm>& terms) {
  std::map<PhotonKey, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    groups[terms[i].photons].push_back(i);
  }
  return groups;
}

}  // namespace

HybridState::HybridState(std::size_t photon_count)
    : paths_(photon_count, std::set<PathId>{0}) {}

void HybridState::check_photon(PhotonId photon) const {
  if (!has_photon(photon)) {
    throw StateError("unknown photon " + std::to_string(photon));
  }
}

const std::set<PathId>& HybridState::paths(PhotonId photon) const {
  check_photon(photon);
  return paths_[photon];
}

bool HybridState::has_path(PhotonId photon, PathId path) const {
  return has_photon(photon) && paths_[photon].contains(path);
}

bool HybridState::has_register(RegisterId id) const {
  return std::find(registers_.begin(), registers_.end(), id) !=
         registers_.end();
}

std::size_t HybridState::register_slot(RegisterId id) const {
  const auto it = std::find(registers_.begin(), registers_.end(), id);
  if (it == registers_.end()) {
    throw StateError("unknown register " + std::to_string(id));
  }
  return static_cast<std::size_t>(it - registers_.begin());
}

void HybridState::register_path(PhotonId photon, PathId path) {
  check_photon(photon);
  paths_[photon].insert(path);
}

RegisterId HybridState::add_register(Amplitude beta) {
  const RegisterId id = next_register_++;
  registers_.push_back(id);
  for (auto& term : terms_) term.registers.push_back(beta);
  return id;
}

// Tracing out a beam whose amplitude differs between terms leaves a mixed
// state. The register is dropped with the coherences kept, which is exact
// when every term carries the same amplitude.
void HybridState::discard_register(RegisterId id) {
  const std::size_t slot = register_slot(id);
  registers_.erase(registers_.begin() + static_cast<std::ptrdiff_t>(slot));
  for (auto& term : terms_) {
    term.registers.erase(term.registers.begin() +
                         static_cast<std::ptrdiff_t>(slot));
  }
  *this = canonicalize(*this);
}

void HybridState::add_term(Amplitude coeff, std::vector<PhotonConfig> photons,
                           std::vector<Amplitude> registers) {
  add_term(StateTerm{coeff, std::move(photons), std::move(registers)});
}

void HybridState::add_term(StateTerm term) {
  if (term.photons.size() != paths_.size()) {
    throw StateError("term photon count does not match the registry");
  }
  if (term.registers.size() != registers_.size()) {
    throw StateError("term register count does not match the registry");
  }
  for (std::size_t p = 0; p < term.photons.size(); ++p) {
    if (!paths_[p].contains(term.photons[p].path)) {
      throw StateError("photon " + std::to_string(p) + " has no path " +
                       std::to_string(term.photons[p].path));
    }
  }
  terms_.push_back(std::move(term));
}

std::set<PathId> HybridState::occupied_paths(PhotonId photon) const {
  check_photon(photon);
  std::set<PathId> occupied;
  for (const auto& term : terms_) occupied.insert(term.photons[photon].path);
  return occupied;
}

HybridState HybridState::empty_like() const {
  HybridState out = *this;
  out.terms_.clear();
  return out;
}

Amplitude coherent_overlap(Amplitude beta1, Amplitude beta2) {
  // Real part written as -|b1-b2|^2/2 to avoid cancelling two large numbers.
  const double real = -0.5 * std::norm(beta1 - beta2);
  const double imag = std::imag(std::conj(beta1) * beta2);
  return std::polar(std::exp(real), imag);
}

HybridState canonicalize(const HybridState& state) {
  HybridState out = state.empty_like();
  const auto& terms = state.terms();
  for (const auto& [key, indices] : group_by_photons(terms)) {
    std::vector<StateTerm> merged;
    for (const std::size_t i : indices) {
      const StateTerm& term = terms[i];
      auto it = std::find_if(merged.begin(), merged.end(), [&](const auto& m) {
        return registers_close(m.registers, term.registers);
      });
      if (it == merged.end()) {
        merged.push_back(term);
      } else {
        it->coeff += term.coeff;
      }
    }
    for (auto& term : merged) {
      if (std::abs(term.coeff) >= tolerance::kPrune) {
        out.mutable_terms().push_back(std::move(term));
      }
    }
  }
  return out;
}

Amplitude inner_product(const HybridState& a, const HybridState& b) {
  if (a.photon_count() != b.photon_count()) {
    throw StateError("inner product of states with different photon counts");
  }
  if (a.registers().size() != b.registers().size()) {
    throw StateError("inner product of states with different registers");
  }
  const auto groups = group_by_photons(b.terms());
  Amplitude sum{0.0, 0.0};
  for (const auto& ta : a.terms()) {
    const auto it = groups.find(ta.photons);
    if (it == groups.end()) continue;
    for (const std::size_t k : it->second) {
      const auto& tb = b.terms()[k];
      sum += std::conj(ta.coeff) * tb.coeff *
             register_overlap(ta.registers, tb.registers);
    }
  }
  return sum;
}

double norm(const HybridState& state) {
  const double squared = std::real(inner_product(state, state));
  return std::sqrt(std::max(0.0, squared));
}

HybridState scaled(const HybridState& state, Amplitude factor) {
  HybridState out = state;
  for (auto& term : out.mutable_terms()) term.coeff *= factor;
  return out;
}

HybridState normalized(const HybridState& state) {
  const double n = norm(state);
  if (n == 0.0) throw StateError("cannot normalize the zero state");
  return scaled(state, 1.0 / n);
}

Amplitude fock_amplitude(Amplitude beta, unsigned n) {
  const double magnitude = std::abs(beta);
  if (magnitude == 0.0) return n == 0 ? Amplitude{1.0} : Amplitude{0.0};
  const double log_mag = -0.5 * magnitude * magnitude +
                         n * std::log(magnitude) -
                         0.5 * std::lgamma(static_cast<double>(n) + 1.0);
  return std::polar(std::exp(log_mag), n * std::arg(beta));
}

unsigned photon_number_cutoff(const HybridState& state, RegisterId id) {
  const std::size_t slot = state.register_slot(id);
  double lambda = 0.0;
  for (const auto& term : state.terms()) {
    lambda = std::max(lambda, std::norm(term.registers[slot]));
  }
  if (lambda == 0.0) return 0;
  auto n = static_cast<unsigned>(std::floor(lambda));
  // P(X > n) = P(n + 1, lambda), the regularized lower incomplete gamma.
  while (boost::math::gamma_p(static_cast<double>(n) + 1.0, lambda) >=
         tolerance::kPoissonTail) {
    ++n;
  }
  return n;
}

Projection project_register_number(const HybridState& state, RegisterId id,
                                   unsigned n) {
  const std::size_t slot = state.register_slot(id);
  HybridState projected = state;
  for (auto& term : projected.mutable_terms()) {
    term.coeff *= fock_amplitude(term.registers[slot], n);
  }
  projected.discard_register(id);
  const double p = norm(projected);
  return Projection{std::move(projected), p * p};
}

double fidelity(const HybridState& state, const HybridState& reference) {
  if (state.photon_count() != reference.photon_count()) {
    throw StateError("fidelity: photon registries differ");
  }
  if (!state.registers().empty() || !reference.registers().empty()) {
    throw StateError("fidelity: coherent registers must be removed first");
  }
  constexpr double kNormSlack = 1e-9;
  if (std::abs(norm(state) - 1.0) > kNormSlack ||
      std::abs(norm(reference) - 1.0) > kNormSlack) {
    throw StateError("fidelity: inputs must be normalized");
  }
  return std::min(1.0, std::norm(inner_product(reference, state)));
}

std::string to_string(const HybridState& state) {
  std::ostringstream os;
  os.precision(6);
  for (const auto& term : state.terms()) {
    os << "(" << term.coeff.real() << (term.coeff.imag() < 0 ? "" : "+")
       << term.coeff.imag() << "i)";
    for (std::size_t p = 0; p < term.photons.size(); ++p) {
      os << " |" << (term.photons[p].pol == Polarization::H ? 'H' : 'V')
         << ">_" << p << "." << term.photons[p].path;
    }
    for (std::size_t r = 0; r < term.registers.size(); ++r) {
      os << " |" << term.registers[r] << ">_r" << state.registers()[r];
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace photonlogic
