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

#include "photonlogic/compiler.hpp"

#include <algorithm>
#include <sstream>

namespace photonlogic::compiler {

long CostModel::cpath(std::size_t m) const {
  return cpath_per_control_path * static_cast<long>(m) + cpath_fixed + qnd;
}

long CostModel::merging(std::size_t m) const {
  return merging_per_control_path * static_cast<long>(m) + merging_fixed + qnd;
}

long CostModel::eraser() const { return eraser_fixed + qnd; }

long grover_xpm_total(std::size_t n) {
  return 18 * static_cast<long>(n) - 20;
}

long grover_cpath_chain(std::size_t n) {
  return 5 + 7 * (static_cast<long>(n) - 2);
}

namespace {

enum class Route { Single, Routed, Split };
enum class Involvement { None, Control, Target };

struct Track {
  Route route = Route::Single;
  PhotonId router = 0;
  RouteCondition condition = RouteCondition::ControlIsV;
};

class Lowerer {
 public:
  explicit Lowerer(const CircuitIR& circuit) : circuit_(circuit) {
    track_.resize(circuit.qubits);
    out_.photons = circuit.qubits;
    out_.family = circuit.family;
  }

  PrimitiveSchedule run() {
    for (gate_ = 0; gate_ < circuit_.gates.size(); ++gate_) {
      std::visit([this](const auto& g) { lower(g); }, circuit_.gates[gate_]);
      merge_finished(gate_ + 1);
    }
    merge_finished(circuit_.gates.size());
    for (PhotonId p = 0; p < track_.size(); ++p) {
      if (track_[p].route != Route::Single) {
        throw CircuitError("internal: photon " + std::to_string(p) +
                           " left on two paths");
      }
    }
    return std::move(out_);
  }

 private:
  void lower(const SingleQubitGate& g) {
    resolve_dependents(g.qubit);
    out_.steps.push_back(LocalStep{g.qubit, g.u, std::nullopt});
  }

  void lower(const ControlledGate& g) { lower_controlled({g.control}, g.target, g.u); }

  void lower(const MultiControlledGate& g) {
    lower_controlled(g.controls, g.target, g.u);
  }

  void lower_controlled(std::vector<Qubit> controls, Qubit target,
                        const SingleQubitUnitary& u) {
    resolve_dependents(target);
    if (track_[target].route == Route::Routed) resolve(target);

    // Reuse an existing "router is V" correlation between two controls.
    std::vector<PhotonId> chain;
    for (const Qubit ci : controls) {
      for (const Qubit cj : controls) {
        const Track& t = track_[cj];
        if (chain.empty() && t.route == Route::Routed && t.router == ci &&
            t.condition == RouteCondition::ControlIsV) {
          chain = {ci, cj};
        }
      }
    }
    if (chain.empty()) chain = {controls.front()};
    std::erase_if(controls, [&](Qubit q) {
      return std::find(chain.begin(), chain.end(), q) != chain.end();
    });

    for (const Qubit next : controls) {
      resolve_dependents(next);
      if (track_[next].route == Route::Routed) resolve(next);
      link(chain.back(), next, chain.size() == 1);
      chain.push_back(next);
    }
    link(chain.back(), target, chain.size() == 1);
    out_.steps.push_back(LocalStep{target, u, kSecondPath});
  }

  void link(PhotonId control, PhotonId target, bool chain_head) {
    resolve_dependents(control);
    CPathStep step;
    step.control = control;
    step.target = target;
    step.condition = chain_head ? RouteCondition::ControlIsV
                                : RouteCondition::ControlIsVOnSecondPath;
    step.active = active_modes(control, step.condition);
    step.control_paths = path_count(control);
    out_.steps.push_back(step);
    track_[target] = Track{Route::Routed, control, step.condition};
  }

  std::size_t path_count(PhotonId p) const {
    return track_[p].route == Route::Single ? 1 : 2;
  }

  gates::ControlModes active_modes(PhotonId control,
                                   RouteCondition condition) const {
    if (condition == RouteCondition::ControlIsVOnSecondPath) {
      return {PhotonConfig{Polarization::V, kSecondPath}};
    }
    gates::ControlModes modes{PhotonConfig{Polarization::V, kFirstPath}};
    if (path_count(control) == 2) {
      modes.push_back(PhotonConfig{Polarization::V, kSecondPath});
    }
    return modes;
  }

  Involvement next_involvement(PhotonId p, std::size_t from) const {
    for (std::size_t i = from; i < circuit_.gates.size(); ++i) {
      const Gate& g = circuit_.gates[i];
      if (std::holds_alternative<SingleQubitGate>(g)) continue;
      const std::vector<Qubit> qs = gate_qubits(g);
      if (qs.back() == p) return Involvement::Target;
      if (std::find(qs.begin(), qs.end(), p) != qs.end()) {
        return Involvement::Control;
      }
    }
    return Involvement::None;
  }

  std::vector<PhotonId> dependents(PhotonId router, bool path_bound_only) const {
    std::vector<PhotonId> deps;
    for (PhotonId p = 0; p < track_.size(); ++p) {
      const Track& t = track_[p];
      if (t.route != Route::Routed || t.router != router) continue;
      if (path_bound_only &&
          t.condition != RouteCondition::ControlIsVOnSecondPath) {
        continue;
      }
      deps.push_back(p);
    }
    return deps;
  }

  /// Makes `router`'s polarization uncorrelated with every other photon.
  void resolve_dependents(PhotonId router) {
    for (const PhotonId dep : dependents(router, false)) {
      if (track_[dep].route == Route::Routed && track_[dep].router == router) {
        resolve(dep);
      }
    }
  }

  void resolve(PhotonId p) {
    if (next_involvement(p, gate_) == Involvement::Target) {
      erase(p);
    } else {
      merge(p);
    }
  }

  /// Paths of `p` are about to be interfered: photons routed on p's
  /// second path must be settled first.
  void release_path_bound(PhotonId p) {
    for (const PhotonId dep : dependents(p, true)) {
      if (track_[dep].route == Route::Routed && track_[dep].router == p) {
        resolve(dep);
      }
    }
  }

  void erase(PhotonId p) {
    release_path_bound(p);
    const Track t = track_[p];
    out_.steps.push_back(
        EraserStep{t.router, p, active_modes(t.router, t.condition)});
    track_[p] = Track{Route::Split, 0, RouteCondition::ControlIsV};
  }

  void merge(PhotonId p) {
    release_path_bound(p);
    const Track t = track_[p];
    out_.steps.push_back(MergingStep{t.router, p,
                                     active_modes(t.router, t.condition),
                                     path_count(t.router)});
    track_[p] = Track{};
  }

  void merge_finished(std::size_t from) {
    const std::size_t saved = gate_;
    gate_ = from;
    for (PhotonId p = 0; p < track_.size(); ++p) {
      if (track_[p].route == Route::Routed &&
          next_involvement(p, from) == Involvement::None) {
        merge(p);
      }
    }
    gate_ = saved;
  }

  const CircuitIR& circuit_;
  std::vector<Track> track_;
  PrimitiveSchedule out_;
  std::size_t gate_ = 0;
};

}  // namespace

PrimitiveSchedule lower(const CircuitIR& circuit, const CostModel& cost) {
  validate(circuit);
  PrimitiveSchedule schedule = Lowerer(circuit).run();
  schedule.tally = count_xpm(schedule, cost);
  return schedule;
}

ResourceTally count_xpm(const PrimitiveSchedule& schedule,
                        const CostModel& cost) {
  ResourceTally tally;
  for (const Step& step : schedule.steps) {
    std::visit(
        [&](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, CPathStep>) {
            ++tally.cpath_count;
            tally.xpm_cpath += cost.cpath(s.control_paths);
            tally.xpm_count += cost.cpath(s.control_paths);
          } else if constexpr (std::is_same_v<T, MergingStep>) {
            ++tally.merging_count;
            tally.xpm_count += cost.merging(s.control_paths);
          } else if constexpr (std::is_same_v<T, EraserStep>) {
            ++tally.eraser_count;
            tally.xpm_count += cost.eraser();
          } else {
            ++tally.local_count;
          }
        },
        step);
  }
  if (schedule.family == CircuitFamily::GroverDiffusion) {
    tally.xpm_closed_form = grover_xpm_total(schedule.photons);
  }
  return tally;
}

std::vector<std::string> check_rules(const PrimitiveSchedule& schedule) {
  struct Replay {
    std::size_t paths = 1;
    std::optional<PhotonId> routed_by;
  };
  std::vector<Replay> photons(schedule.photons);
  std::vector<std::string> violations;
  auto routes_someone = [&](PhotonId p) {
    return std::any_of(photons.begin(), photons.end(), [&](const Replay& r) {
      return r.routed_by && *r.routed_by == p;
    });
  };

  for (std::size_t i = 0; i < schedule.steps.size(); ++i) {
    const std::string where = "step " + std::to_string(i) + ": ";
    std::visit(
        [&](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, CPathStep>) {
            if (photons[s.target].routed_by) {
              violations.push_back(where + "cpath target " +
                                   std::to_string(s.target) +
                                   " still correlated with its previous control");
            }
            if (routes_someone(s.control)) {
              violations.push_back(where + "cpath control " +
                                   std::to_string(s.control) +
                                   " polarization correlated with another photon's paths");
            }
            if (s.control_paths != photons[s.control].paths) {
              violations.push_back(where + "control path count mismatch");
            }
            photons[s.target] = Replay{2, s.control};
          } else if constexpr (std::is_same_v<T, EraserStep>) {
            if (photons[s.target].routed_by != s.control) {
              violations.push_back(where + "eraser on an uncorrelated pair");
            }
            photons[s.target] = Replay{2, std::nullopt};
          } else if constexpr (std::is_same_v<T, MergingStep>) {
            if (photons[s.target].routed_by != s.control) {
              violations.push_back(where + "merging on an uncorrelated pair");
            }
            photons[s.target] = Replay{1, std::nullopt};
          } else {
            if (routes_someone(s.photon)) {
              violations.push_back(where + "local operation on photon " +
                                   std::to_string(s.photon) +
                                   " whose polarization routes another photon");
            }
          }
        },
        schedule.steps[i]);
  }
  for (PhotonId p = 0; p < photons.size(); ++p) {
    if (photons[p].paths != 1) {
      violations.push_back("photon " + std::to_string(p) +
                           " ends on more than one path");
    }
  }
  return violations;
}

namespace {

std::string modes_string(const gates::ControlModes& modes) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < modes.size(); ++i) {
    if (i > 0) os << ",";
    os << (modes[i].pol == Polarization::H ? 'H' : 'V') << modes[i].path;
  }
  os << "}";
  return os.str();
}

}  // namespace

std::string describe(const Step& step) {
  std::ostringstream os;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CPathStep>) {
          os << "cpath " << s.control << "->" << s.target
             << " m=" << s.control_paths << " active=" << modes_string(s.active);
        } else if constexpr (std::is_same_v<T, MergingStep>) {
          os << "merging " << s.target << " control=" << s.control
             << " m=" << s.control_paths << " active=" << modes_string(s.active);
        } else if constexpr (std::is_same_v<T, EraserStep>) {
          os << "eraser " << s.control << "," << s.target
             << " active=" << modes_string(s.active);
        } else {
          os << "local " << s.photon;
          if (s.path) os << " path=" << *s.path;
        }
      },
      step);
  return os.str();
}

}  // namespace photonlogic::compiler
