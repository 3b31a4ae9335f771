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

#include "photonlogic/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "photonlogic/compiler.hpp"
#include "photonlogic/gates.hpp"
#include "photonlogic/numerics.hpp"
#include "photonlogic/oracle.hpp"
#include "photonlogic/simulate.hpp"

namespace photonlogic::acceptance {

namespace {

using Clock = std::chrono::steady_clock;
constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool ok = true;
  std::ostringstream measured;
};

std::size_t draws(const Options& o, std::size_t full, std::size_t quick) {
  return o.level == Level::Full ? full : quick;
}

std::vector<Amplitude> random_vector(std::mt19937_64& rng, std::size_t dim) {
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

SingleQubitUnitary random_unitary(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  return SingleQubitUnitary::u3(0.5 * angle(rng), angle(rng), angle(rng));
}

Polarization pol(std::size_t bit) {
  return bit ? Polarization::V : Polarization::H;
}

/// sum_ij c_ij |i>_control |j>_target, target on path_of(i) (times the
/// optional uniform split).
HybridState two_photon_state(const std::vector<Amplitude>& c,
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

HybridState eq1_input(const std::vector<Amplitude>& c) {
  return two_photon_state(c, [](std::size_t) { return std::vector<PathId>{0}; });
}

HybridState eq4_output(const std::vector<Amplitude>& c) {
  return two_photon_state(c, [](std::size_t i) {
    return std::vector<PathId>{static_cast<PathId>(i)};
  });
}

HybridState eq9_output(const std::vector<Amplitude>& c) {
  return two_photon_state(c, [](std::size_t) { return std::vector<PathId>{0, 1}; });
}

GateParams params_for(const Options& o) {
  GateParams p;
  p.fault = o.fault;
  return p;
}

/// Per-branch check shared by the single-gate contracts.
void check_branches(const gates::BranchSet& set, const HybridState& expected,
                    double& min_fidelity) {
  for (const gates::Branch& b : set.branches) {
    if (b.outcome.probability < tolerance::kBranchFloor) continue;
    min_fidelity = std::min(min_fidelity, fidelity(b.state, expected));
  }
}

void cpath_contract(const Options& o, Outcome& out) {
  std::mt19937_64 rng(o.seed + 1);
  GateParams p = params_for(o);
  p.alpha = 6.0 / std::sin(p.theta);
  double min_f = 1.0;
  double worst_sum = 0.0;
  for (std::size_t k = 0; k < draws(o, 100, 25); ++k) {
    const std::vector<Amplitude> c = random_vector(rng, 4);
    const gates::BranchSet set = gates::cpath(eq1_input(c), {}, p);
    check_branches(set, eq4_output(c), min_f);
    worst_sum = std::max(worst_sum, std::abs(set.total_probability() - 1.0));
  }
  out.ok = min_f >= 1.0 - 1e-9 && worst_sum <= 1e-10;
  out.measured << "min_fidelity=" << min_f << " max_infidelity=" << 1.0 - min_f << " max|sum_p-1|=" << worst_sum;
}

void merging_roundtrip(const Options& o, Outcome& out) {
  std::mt19937_64 rng(o.seed + 2);
  const GateParams p = params_for(o);
  double min_f = 1.0;
  for (std::size_t k = 0; k < draws(o, 100, 25); ++k) {
    const std::vector<Amplitude> c = random_vector(rng, 4);
    const HybridState input = eq1_input(c);
    for (const gates::Branch& b : gates::cpath(input, {}, p).branches) {
      check_branches(gates::merging(b.state, {}, p), input, min_f);
    }
  }
  out.ok = min_f >= 1.0 - 1e-9;
  out.measured << "min_roundtrip_fidelity=" << min_f << " max_infidelity=" << 1.0 - min_f;
}

void eraser_contract(const Options& o, Outcome& out) {
  std::mt19937_64 rng(o.seed + 3);
  const GateParams p = params_for(o);
  double min_f = 1.0;
  std::size_t branches = 0;
  for (std::size_t k = 0; k < draws(o, 100, 25); ++k) {
    const std::vector<Amplitude> c = random_vector(rng, 4);
    const gates::BranchSet set = gates::eraser(eq4_output(c), {}, p);
    check_branches(set, eq9_output(c), min_f);
    branches = std::max(branches, set.branches.size());
  }
  out.ok = min_f >= 1.0 - 1e-9;
  out.measured << "min_fidelity=" << min_f << " max_infidelity=" << 1.0 - min_f << " max_branches=" << branches;
}

void fig2_end_to_end(const Options& o, Outcome& out) {
  std::mt19937_64 rng(o.seed + 4);
  SimulationOptions sim;
  sim.params = params_for(o);
  double min_f = 1.0;
  double worst_sum = 0.0;
  bool counts_ok = true;
  for (std::size_t k = 0; k < draws(o, 50, 5); ++k) {
    CircuitIR c = circuits::fig2(random_unitary(rng), random_unitary(rng),
                                 random_unitary(rng), random_unitary(rng));
    c.input = random_vector(rng, 8);
    const compiler::PrimitiveSchedule s = compiler::lower(c);
    counts_ok = counts_ok && s.tally.cpath_count == 4 &&
                s.tally.eraser_count == 2 && s.tally.merging_count == 2 &&
                compiler::check_rules(s).empty();
    const Verification v = verify_against_oracle(c, s, circuit_input(c), sim);
    min_f = std::min(min_f, v.min_fidelity);
    worst_sum = std::max(worst_sum, std::abs(v.total_probability - 1.0));
  }
  out.ok = counts_ok && min_f >= 1.0 - 1e-8 && worst_sum <= 1e-8;
  out.measured << "counts(4/2/2)=" << (counts_ok ? "ok" : "MISMATCH")
               << " min_fidelity=" << min_f << " max_infidelity=" << 1.0 - min_f << " max|sum_p-1|=" << worst_sum;
}

void grover_counts(const Options& o, Outcome& out) {
  bool counts_ok = true;
  long n3 = 0;
  for (std::size_t n = 3; n <= 12; ++n) {
    const compiler::PrimitiveSchedule s =
        compiler::lower(compiler::grover_diffusion_ir(n));
    const long aggregate = s.tally.xpm_closed_form.value_or(-1);
    if (n == 3) n3 = aggregate;
    counts_ok = counts_ok &&
                aggregate == 18 * static_cast<long>(n) - 20 &&
                s.tally.xpm_cpath == 5 + 7 * (static_cast<long>(n) - 2) &&
                compiler::check_rules(s).empty();
  }
  counts_ok = counts_ok && n3 == 34;

  // One full iteration at n = 3, marked item 5.
  SimulationOptions sim;
  sim.params = params_for(o);
  const CircuitIR iteration = circuits::grover_iteration(3, 5);
  const oracle::QubitVector input(3);
  const oracle::QubitVector expected = oracle::run(iteration, input);
  const SimulationResult r =
      simulate(compiler::lower(iteration), oracle::qubit_to_photonic(input), sim);
  double worst = 0.0;
  for (const FinalBranch& b : r.branches) {
    worst = std::max(worst, oracle::phase_aligned_distance(
                                oracle::photonic_to_qubit(b.state), expected));
  }
  out.ok = counts_ok && worst <= 1e-8 && !r.branches.empty();
  out.measured << "counts(18n-20, 5+7(n-2), n=3 -> " << n3 << ")="
               << (counts_ok ? "ok" : "MISMATCH")
               << " iteration_max_amplitude_error=" << worst;
}

void qft_counts(const Options& o, Outcome& out) {
  bool counts_ok = true;
  for (std::size_t n = 2; n <= 12; ++n) {
    const compiler::PrimitiveSchedule s = compiler::lower(compiler::qft_ir(n));
    counts_ok = counts_ok && s.tally.cpath_count == n * (n - 1) / 2 &&
                s.tally.eraser_count == (n - 1) * (n - 2) / 2 &&
                s.tally.merging_count == n - 1 &&
                compiler::check_rules(s).empty();
  }
  const compiler::PrimitiveSchedule q4 = compiler::lower(compiler::qft_ir(4));
  counts_ok = counts_ok && q4.tally.cpath_count == 6 &&
              q4.tally.eraser_count == 3 && q4.tally.merging_count == 3;

  std::mt19937_64 rng(o.seed + 6);
  SimulationOptions sim;
  sim.params = params_for(o);
  const CircuitIR c = compiler::qft_ir(3);
  const compiler::PrimitiveSchedule s = compiler::lower(c);
  const Eigen::MatrixXcd m = oracle::qft_matrix(3);
  double min_f = 1.0;
  for (std::size_t k = 0; k < draws(o, 10, 2); ++k) {
    const oracle::QubitVector input(3, random_vector(rng, 8));
    const oracle::QubitVector expected = oracle::apply_matrix(m, input);
    for (const FinalBranch& b :
         simulate(s, oracle::qubit_to_photonic(input), sim).branches) {
      min_f = std::min(min_f, oracle::fidelity(
                                  oracle::photonic_to_qubit(b.state), expected));
    }
  }
  out.ok = counts_ok && min_f >= 1.0 - 1e-8;
  out.measured << "counts(n(n-1)/2,(n-1)(n-2)/2,n-1; n=4 -> "
               << q4.tally.cpath_count << "/" << q4.tally.eraser_count << "/"
               << q4.tally.merging_count << ")=" << (counts_ok ? "ok" : "MISMATCH")
               << " qft3_min_fidelity=" << min_f << " max_infidelity=" << 1.0 - min_f;
}

void contamination_law(const Options& o, Outcome& out) {
  GateParams p = params_for(o);
  double worst = 0.0;
  for (const double x : {2.0, 3.0, 4.0}) {
    p.alpha = x / std::sin(p.theta);
    const double expected =
        std::exp(-numerics::contamination_exponent(p.alpha, p.theta));
    const std::vector<Amplitude> c{0.5, 0.5, 0.5, 0.5};
    const gates::BranchSet set = gates::cpath(eq1_input(c), {}, p);
    double ratio = -1.0;
    for (const gates::Branch& b : set.branches) {
      if (b.outcome.n != 0) continue;
      double right = 0.0;
      double wrong = 0.0;
      for (const StateTerm& t : b.state.terms()) {
        const bool routed = t.photons[1].path == 1;
        const bool should = t.photons[0].pol == Polarization::V;
        (routed == should ? right : wrong) += std::norm(t.coeff);
      }
      ratio = wrong / right;
    }
    const double rel = std::abs(ratio / expected - 1.0);
    worst = std::max(worst, ratio < 0.0 ? 1.0 : rel);
    out.measured << "x=" << x << ":" << ratio << "/" << expected << " ";
  }
  out.ok = worst <= 1e-6;
  out.measured << "max_rel_error=" << worst;
}

void numerics_identities(const Options& o, Outcome& out) {
  std::mt19937_64 rng(o.seed + 8);
  std::uniform_real_distribution<double> alpha_d(1.0, 5000.0);
  std::uniform_real_distribution<double> theta_d(1e-4, 0.1);
  std::uniform_int_distribution<unsigned> n_d(1, 5);
  const auto close = [](double a, double b) {
    return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a));
  };
  std::size_t failures = 0;
  double worst = 0.0;
  const std::size_t count = draws(o, 1000, 1000);
  for (std::size_t k = 0; k < count; ++k) {
    const double alpha = alpha_d(rng);
    const double theta = theta_d(rng);

    // C-path ancilla pair, both couplings on the upper beam.
    HybridState s(1);
    s.add_term(1.0, {{Polarization::H, 0}});
    const RegisterId upper = s.add_register(alpha);
    const RegisterId lower = s.add_register(alpha);
    s = cross_phase(s, {upper, {0, std::nullopt, 0}, theta});
    s = cross_phase(s, {upper, {0, std::nullopt, std::nullopt}, theta});
    s = phase_shift(s, upper, -theta);
    s = phase_shift(s, lower, -theta);
    s = coherent_beam_splitter(s, upper, lower);
    const double beta = std::abs(s.terms().front().registers[s.register_slot(upper)]);
    const double beta_ref = numerics::beta_magnitude(alpha, theta);

    // QND probe against its reference.
    const double gamma = alpha_d(rng);
    const unsigned n = n_d(rng);
    HybridState q(1);
    q.add_term(1.0, {{Polarization::H, 0}});
    const RegisterId probe = q.add_register(gamma);
    const RegisterId ref = q.add_register(gamma);
    q = cross_phase(q, {probe, {0, std::nullopt, 0}, n * theta});
    q = coherent_beam_splitter(q, probe, ref);
    const double mu = std::norm(q.terms().front().registers[q.register_slot(probe)]);
    const double mu_ref = numerics::discrimination_error(gamma, theta, n).mu;

    if (!close(beta_ref, beta) || !close(mu_ref, mu)) ++failures;
    worst = std::max({worst, std::abs(beta - beta_ref) / std::max(1.0, beta_ref),
                      std::abs(mu - mu_ref) / std::max(1.0, mu_ref)});
  }
  out.ok = failures == 0;
  out.measured << "draws=" << count << " failures=" << failures
               << " max_rel_error=" << worst;
}

struct Criterion {
  const char* name;
  double time_limit;
  void (*run)(const Options&, Outcome&);
};

constexpr Criterion kCriteria[kCriterionCount] = {
    {"cpath-contract", 5.0, cpath_contract},
    {"merging-inverts-cpath", 5.0, merging_roundtrip},
    {"eraser-contract", 5.0, eraser_contract},
    {"fig2-end-to-end", 60.0, fig2_end_to_end},
    {"grover-counts", 1.0, grover_counts},
    {"qft-counts", 60.0, qft_counts},
    {"contamination-law", 5.0, contamination_law},
    {"numerics-identities", 1.0, numerics_identities},
};

}  // namespace

CriterionResult run_criterion(int id, const Options& options) {
  if (id < 1 || id > kCriterionCount) {
    throw std::out_of_range("no acceptance criterion " + std::to_string(id));
  }
  const Criterion& c = kCriteria[id - 1];
  CriterionResult result;
  result.id = id;
  result.name = c.name;
  result.time_limit = c.time_limit;

  Outcome outcome;
  outcome.measured.precision(12);
  const auto start = Clock::now();
  try {
    c.run(options, outcome);
  } catch (const std::exception& e) {
    outcome.ok = false;
    outcome.measured << "error: " << e.what();
  }
  result.seconds =
      std::chrono::duration<double>(Clock::now() - start).count();
  result.measured = outcome.measured.str();
  result.passed = outcome.ok && result.seconds < result.time_limit;
  if (outcome.ok && !result.passed) result.measured += " (over time limit)";
  return result;
}

std::vector<CriterionResult> run_all(const Options& options) {
  std::vector<CriterionResult> results;
  for (int id = 1; id <= kCriterionCount; ++id) {
    results.push_back(run_criterion(id, options));
  }
  return results;
}

std::string format(const CriterionResult& r) {
  std::ostringstream os;
  os.precision(3);
  os << "criterion " << r.id << " " << r.name << ": "
     << (r.passed ? "PASS" : "FAIL") << "  " << r.measured << " ("
     << std::fixed << r.seconds << " s, limit " << std::defaultfloat
     << r.time_limit << " s)";
  return os.str();
}

}  // namespace photonlogic::acceptance
