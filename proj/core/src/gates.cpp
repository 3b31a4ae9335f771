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

#include "photonlogic/gates.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "photonlogic/numerics.hpp"
#include "photonlogic/optics.hpp"

namespace photonlogic::gates {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_active(const ControlModes& active, const PhotonConfig& config) {
  return std::find(active.begin(), active.end(), config) != active.end();
}

void require_distinct(const HybridState& state, PhotonId control,
                      PhotonId target) {
  if (!state.has_photon(control) || !state.has_photon(target)) {
    throw GateError("gate references an unknown photon");
  }
  if (control == target) {
    throw GateError("control and target photon must differ");
  }
}

void require_paths_within(const HybridState& state, PhotonId photon,
                          PathId p1, PathId p2) {
  for (const PathId path : state.occupied_paths(photon)) {
    if (path != p1 && path != p2) {
      throw GateError("photon " + std::to_string(photon) +
                      " occupies a path outside the gate's two paths");
    }
  }
}

/// Norm^2 of the sub-state selected by `keep`.
template <typename Pred>
double mass_where(const HybridState& state, Pred keep) {
  HybridState part = state.empty_like();
  for (const auto& term : state.terms()) {
    if (keep(term)) part.mutable_terms().push_back(term);
  }
  const double n = norm(part);
  return n * n;
}

double total_mass(const HybridState& state) {
  const double n = norm(state);
  return n * n;
}

std::size_t draw_index(const std::vector<double>& weights,
                       std::mt19937_64& rng) {
  double total = 0.0;
  for (const double w : weights) total += w;
  std::uniform_real_distribution<double> uniform(0.0, total);
  const double u = uniform(rng);
  double acc = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    acc += weights[i];
    if (u < acc) return i;
  }
  return weights.size() - 1;
}

/// Click / no-click readout of a register. When every nonvacuum term
/// carries the same amplitude the click branch is pure and is built
/// directly; otherwise the photon-number outcomes are enumerated and the
/// identical ones folded.
BranchSet threshold_measure(const HybridState& state, RegisterId reg,
                            const GateParams& params, RunMode run) {
  GateParams ideal = params;
  ideal.qnd = QndModel::Ideal;
  const std::size_t slot = state.register_slot(reg);
  std::optional<Amplitude> lit;
  bool uniform = state.registers().size() == 1;
  for (const StateTerm& t : state.terms()) {
    const Amplitude b = t.registers[slot];
    if (std::abs(b) <= tolerance::kMerge) continue;
    if (!lit) {
      lit = b;
    } else if (std::abs(b - *lit) > tolerance::kMerge * std::max(1.0, std::abs(b))) {
      uniform = false;
    }
  }
  if (!uniform || !lit) {
    BranchSet all = qnd_measure(state, reg, ideal, run);
    if (run.mode == BranchMode::Sample) return all;
    BranchSet folded = coalesce(all);
    return folded;
  }

  const double input_mass = total_mass(state);
  BranchSet out;
  Projection dark = project_register_number(state, reg, 0);
  if (dark.probability / input_mass >= params.branch_floor && dark.probability > 0.0) {
    Branch b;
    b.outcome.probability = dark.probability / input_mass;
    b.state = normalized(dark.state);
    out.branches.push_back(std::move(b));
  }
  HybridState bright = state.empty_like();
  for (const StateTerm& t : state.terms()) {
    if (std::abs(t.registers[slot]) > tolerance::kMerge) bright.add_term(t);
  }
  bright.discard_register(reg);
  const double click = total_mass(bright) * -std::expm1(-std::norm(*lit));
  if (click / input_mass >= params.branch_floor && click > 0.0) {
    Branch b;
    b.outcome.n = 1;  // "at least one photon"
    b.outcome.reported_n = 1;
    b.outcome.probability = click / input_mass;
    b.state = normalized(bright);
    out.branches.push_back(std::move(b));
  }
  if (out.branches.empty()) {
    throw GateError("no measurement outcome above the probability floor");
  }
  if (run.mode == BranchMode::Sample) {
    std::vector<double> weights;
    for (const auto& b : out.branches) weights.push_back(b.outcome.probability);
    Branch chosen = out.branches[draw_index(weights, *run.rng)];
    out.branches = {std::move(chosen)};
  }
  return out;
}

/// Couples a probe beam to one path of a photon, interferes it with a
/// reference beam and reads the difference port. Only the probe coupling
/// is an XPM; n = 0 means the path was found empty.
BranchSet occupancy_measure(const HybridState& state, PhotonId photon,
                            PathId path, const GateParams& params,
                            RunMode run) {
  HybridState s = state;
  const RegisterId probe = s.add_register(params.gamma);
  const RegisterId reference = s.add_register(params.gamma);
  s = cross_phase(s, XpmCoupling{probe, {photon, std::nullopt, path},
                                 params.theta_qnd});
  s = coherent_beam_splitter(s, probe, reference);
  s.discard_register(reference);
  BranchSet out = threshold_measure(s, probe, params, run);
  out.xpm_couplings = 1;
  return out;
}

RunMode checked(RunMode run) {
  if (run.mode == BranchMode::Sample && run.rng == nullptr) {
    throw GateError("sample mode needs a random generator");
  }
  return run;
}

}  // namespace

double BranchSet::total_probability() const {
  double total = 0.0;
  for (const auto& branch : branches) total += branch.outcome.probability;
  return total;
}

ControlModes v_on_all_paths(const HybridState& state, PhotonId control) {
  ControlModes modes;
  for (const PathId path : state.occupied_paths(control)) {
    modes.push_back(PhotonConfig{Polarization::V, path});
  }
  return modes;
}

bool polarization_path_correlated(const HybridState& state, PhotonId control,
                                  PhotonId other, double tolerance) {
  const std::set<PathId> occupied = state.occupied_paths(other);
  if (occupied.size() < 2) return false;
  std::map<PathId, std::size_t> path_index;
  for (const PathId p : occupied) path_index.emplace(p, path_index.size());
  const std::size_t k = occupied.size();
  const std::size_t dim = 2 * k;
  auto index = [&](const StateTerm& t) {
    return static_cast<std::size_t>(t.photons[control].pol) * k +
           path_index.at(t.photons[other].path);
  };
  auto rest_key = [&](const StateTerm& t) {
    std::vector<PhotonConfig> key = t.photons;
    key[control].pol = Polarization::H;
    key[other].path = -1;
    return key;
  };

  std::map<std::vector<PhotonConfig>, std::vector<std::size_t>> groups;
  const auto& terms = state.terms();
  for (std::size_t i = 0; i < terms.size(); ++i) {
    groups[rest_key(terms[i])].push_back(i);
  }

  // Each group's deviation from a product state, weighted by its mass so
  // probe residues of order e^{-mu} stay below the tolerance.
  double total = 0.0;
  double worst = 0.0;
  std::vector<Amplitude> rho(dim * dim);
  for (const auto& [key, members] : groups) {
    std::fill(rho.begin(), rho.end(), Amplitude{0.0});
    for (const std::size_t j : members) {
      for (const std::size_t l : members) {
        Amplitude env{1.0};
        for (std::size_t r = 0; r < terms[j].registers.size(); ++r) {
          env *= coherent_overlap(terms[l].registers[r], terms[j].registers[r]);
        }
        rho[index(terms[j]) * dim + index(terms[l])] +=
            terms[j].coeff * std::conj(terms[l].coeff) * env;
      }
    }
    double trace = 0.0;
    for (std::size_t i = 0; i < dim; ++i) trace += rho[i * dim + i].real();
    total += trace;
    if (trace <= 0.0) continue;

    auto at = [&](std::size_t s, std::size_t p, std::size_t s2, std::size_t p2) {
      return rho[(s * k + p) * dim + (s2 * k + p2)];
    };
    for (std::size_t s = 0; s < 2; ++s) {
      for (std::size_t s2 = 0; s2 < 2; ++s2) {
        for (std::size_t p = 0; p < k; ++p) {
          for (std::size_t p2 = 0; p2 < k; ++p2) {
            Amplitude pol{0.0};
            Amplitude path{0.0};
            for (std::size_t q = 0; q < k; ++q) pol += at(s, q, s2, q);
            for (std::size_t t = 0; t < 2; ++t) path += at(t, p, t, p2);
            worst = std::max(worst, std::abs(at(s, p, s2, p2) - pol * path / trace));
          }
        }
      }
    }
  }
  return total > 0.0 && worst / total > tolerance;
}

BranchSet qnd_measure(const HybridState& state, RegisterId reg,
                      const GateParams& params, RunMode run) {
  run = checked(run);
  if (!state.has_register(reg)) {
    throw GateError("unknown register " + std::to_string(reg));
  }
  const double input_mass = total_mass(state);
  const unsigned n_max = photon_number_cutoff(state, reg);

  BranchSet out;
  out.xpm_couplings = 1;
  for (unsigned n = 0; n <= n_max; ++n) {
    Projection projection = project_register_number(state, reg, n);
    const double probability = projection.probability / input_mass;
    if (probability < params.branch_floor || probability == 0.0) continue;
    Branch branch;
    branch.outcome.n = n;
    branch.outcome.reported_n = n;
    branch.outcome.probability = probability;
    if (params.qnd == QndModel::Physical && n > 0) {
      branch.outcome.discrimination_error =
          numerics::discrimination_error(params.gamma, params.theta_qnd, n,
                                         params.detector_efficiency)
              .p_miss;
    }
    branch.state = normalized(projection.state);
    out.branches.push_back(std::move(branch));
  }
  if (out.branches.empty()) {
    throw GateError("no measurement outcome above the probability floor");
  }

  if (run.mode == BranchMode::Enumerate) {
    // A physical detector misses n >= 1 with probability p_miss and the
    // feed-forward then acts as for n = 0.
    std::vector<Branch> missed;
    for (Branch& b : out.branches) {
      const double p_miss = b.outcome.discrimination_error;
      if (p_miss <= 0.0 || b.outcome.probability * p_miss < params.branch_floor) {
        continue;
      }
      Branch m = b;
      m.outcome.reported_n = 0;
      m.outcome.probability = b.outcome.probability * p_miss;
      b.outcome.probability -= m.outcome.probability;
      missed.push_back(std::move(m));
    }
    for (Branch& m : missed) out.branches.push_back(std::move(m));
  } else {
    std::vector<double> weights;
    for (const auto& b : out.branches) weights.push_back(b.outcome.probability);
    Branch chosen = out.branches[draw_index(weights, *run.rng)];
    if (chosen.outcome.discrimination_error > 0.0) {
      std::bernoulli_distribution miss(chosen.outcome.discrimination_error);
      if (miss(*run.rng)) chosen.outcome.reported_n = 0;
    }
    out.branches = {std::move(chosen)};
  }
  return out;
}

BranchSet cpath(const HybridState& state, const CPathSpec& spec,
                const GateParams& params, RunMode run) {
  validate(params);
  run = checked(run);
  require_distinct(state, spec.control, spec.target);
  if (spec.path_1 == spec.path_2) throw GateError("cpath needs two paths");
  if (!state.has_path(spec.target, spec.path_1)) {
    throw GateError("target has no path " + std::to_string(spec.path_1));
  }

  HybridState s = state;
  s.register_path(spec.target, spec.path_2);

  // Residues of earlier probes (order e^{-mu}) do not change the input form.
  const double off_path = mass_where(s, [&](const StateTerm& t) {
    return t.photons[spec.target].path != spec.path_1;
  });
  if (off_path > params.form_tolerance * total_mass(s)) {
    require_paths_within(s, spec.target, spec.path_1, spec.path_2);
    // An erased target, (|1> + |2>)/sqrt2 in every term, enters as if the
    // gate's own splitter had already acted.
    HybridState unsplit = beam_splitter(s, spec.target, spec.path_1,
                                        spec.path_2);
    const double stray = mass_where(unsplit, [&](const StateTerm& t) {
      return t.photons[spec.target].path == spec.path_2;
    });
    if (stray > params.form_tolerance * total_mass(unsplit)) {
      throw GateError(
          "target occupies multiple paths correlated with other photons; "
          "erase the correlation first");
    }
    s = std::move(unsplit);
  }

  for (PhotonId other = 0; other < s.photon_count(); ++other) {
    if (other == spec.control || other == spec.target) continue;
    if (polarization_path_correlated(s, spec.control, other)) {
      throw GateError("control polarization is correlated with the paths of "
                      "photon " + std::to_string(other) +
                      "; erase or merge it first");
    }
  }

  const ControlModes active =
      spec.active ? *spec.active : v_on_all_paths(s, spec.control);
  const std::set<PathId> control_paths = s.occupied_paths(spec.control);

  s = beam_splitter(s, spec.target, spec.path_1, spec.path_2,
                    params.fault == Fault::FlipTargetSplitterSign ? -1 : +1);
  const RegisterId upper = s.add_register(params.alpha);
  const RegisterId lower = s.add_register(params.alpha);

  std::vector<XpmCoupling> couplings{
      {upper, {spec.target, std::nullopt, spec.path_1}, params.theta},
      {lower, {spec.target, std::nullopt, spec.path_2}, params.theta}};
  for (const PathId path : control_paths) {
    for (const Polarization pol : {Polarization::H, Polarization::V}) {
      const bool on = is_active(active, PhotonConfig{pol, path});
      couplings.push_back({on ? upper : lower, {spec.control, pol, path},
                           params.theta});
    }
  }
  for (const auto& coupling : couplings) s = cross_phase(s, coupling);
  s = phase_shift(s, upper, -params.theta);
  s = phase_shift(s, lower, -params.theta);
  s = coherent_beam_splitter(s, upper, lower);
  // `upper` now holds the difference beam (0 or +-i sqrt2 alpha sin theta).
  s.discard_register(lower);

  BranchSet out = qnd_measure(s, upper, params, run);
  out.xpm_couplings = static_cast<int>(couplings.size()) + 1;
  for (auto& branch : out.branches) {
    const unsigned n = branch.outcome.reported_n;
    if (n == 0) continue;
    branch.state =
        path_switch(branch.state, spec.target, spec.path_1, spec.path_2);
    branch.outcome.corrections.path_switch = true;
    if (n % 2 == 1) {
      branch.state =
          conditional_phase(branch.state, spec.target, spec.path_2, kPi);
      branch.outcome.corrections.parity_phase = true;
    }
  }
  return out;
}

BranchSet merging(const HybridState& state, const MergingSpec& spec,
                  const GateParams& params, RunMode run) {
  validate(params);
  run = checked(run);
  require_distinct(state, spec.control, spec.target);
  if (spec.path_1 == spec.path_2) throw GateError("merging needs two paths");
  HybridState s = state;
  s.register_path(spec.target, spec.path_1);
  s.register_path(spec.target, spec.path_2);
  s.register_path(spec.target, spec.out_path);
  require_paths_within(s, spec.target, spec.path_1, spec.path_2);

  const ControlModes active =
      spec.active ? *spec.active : v_on_all_paths(s, spec.control);
  const double wrong = mass_where(s, [&](const StateTerm& t) {
    const bool on = is_active(active, t.photons[spec.control]);
    const PathId path = t.photons[spec.target].path;
    return on ? path == spec.path_1 : path == spec.path_2;
  });
  if (wrong > params.form_tolerance * total_mass(s)) {
    throw GateError("merging input is not in the correlated controlled-path "
                    "form");
  }

  s = beam_splitter(s, spec.target, spec.path_1, spec.path_2);
  BranchSet out = occupancy_measure(s, spec.target, spec.path_2, params, run);
  for (auto& branch : out.branches) {
    HybridState& b = branch.state;
    if (branch.outcome.reported_n == 0) {
      if (spec.out_path != spec.path_1) {
        b = path_switch(b, spec.target, spec.path_1, spec.out_path);
        branch.outcome.corrections.path_switch = true;
      }
      continue;
    }
    for (const PhotonConfig& mode : active) {
      b = mode_phase(b, spec.control, mode, kPi);
    }
    branch.outcome.corrections.control_phase = !active.empty();
    if (spec.out_path != spec.path_2) {
      b = path_switch(b, spec.target, spec.path_2, spec.out_path);
      branch.outcome.corrections.path_switch = true;
    }
  }
  return out;
}

BranchSet eraser(const HybridState& state, const EraserSpec& spec,
                 const GateParams& params, RunMode run) {
  validate(params);
  run = checked(run);
  require_distinct(state, spec.control, spec.target);
  if (spec.path_1 == spec.path_2) throw GateError("eraser needs two paths");
  HybridState s = state;
  s.register_path(spec.target, spec.path_1);
  s.register_path(spec.target, spec.path_2);
  require_paths_within(s, spec.target, spec.path_1, spec.path_2);

  const ControlModes active =
      spec.active ? *spec.active : v_on_all_paths(s, spec.control);

  s = beam_splitter(s, spec.target, spec.path_1, spec.path_2);
  BranchSet out = occupancy_measure(s, spec.target, spec.path_2, params, run);
  for (auto& branch : out.branches) {
    HybridState& b = branch.state;
    b = beam_splitter(b, spec.target, spec.path_1, spec.path_2);
    if (branch.outcome.reported_n == 0) continue;
    for (const PhotonConfig& mode : active) {
      b = mode_phase(b, spec.control, mode, kPi);
    }
    b = conditional_phase(b, spec.target, spec.path_2, kPi);
    branch.outcome.corrections.control_phase = !active.empty();
    branch.outcome.corrections.parity_phase = true;
  }
  return out;
}

BranchSet coalesce(const BranchSet& set, double tolerance) {
  BranchSet out;
  out.xpm_couplings = set.xpm_couplings;
  std::vector<const Branch*> order;
  for (const auto& branch : set.branches) order.push_back(&branch);
  std::stable_sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
    return a->outcome.probability > b->outcome.probability;
  });
  for (const Branch* branch : order) {
    auto same = std::find_if(out.branches.begin(), out.branches.end(),
                             [&](const Branch& rep) {
                               return fidelity(branch->state, rep.state) >=
                                      1.0 - tolerance;
                             });
    if (same == out.branches.end()) {
      out.branches.push_back(*branch);
    } else {
      same->outcome.probability += branch->outcome.probability;
      same->outcome.merged_outcomes += branch->outcome.merged_outcomes;
    }
  }
  return out;
}

}  // namespace photonlogic::gates
