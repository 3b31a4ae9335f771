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

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "photonlogic/acceptance.hpp"
#include "photonlogic/circuit_io.hpp"
#include "photonlogic/compiler.hpp"
#include "photonlogic/numerics.hpp"
#include "photonlogic/oracle.hpp"
#include "photonlogic/simulate.hpp"

namespace photonlogic::cli {

using Json = nlohmann::ordered_json;

namespace {

/// Carries an exit code out of a subcommand.
struct Exit {
  int code;
  std::string message;
};

struct CircuitSource {
  std::string path;
  std::string builtin;
};

struct Loaded {
  CircuitIR circuit;
  std::string name;
};

Loaded load(const CircuitSource& src, std::ostream& err) {
  if (src.path.empty() == src.builtin.empty()) {
    throw Exit{kParseError, "give exactly one of a circuit file or --builtin"};
  }
  try {
    if (!src.builtin.empty()) {
      return {io::builtin_circuit(src.builtin), src.builtin};
    }
    io::LoadedCircuit lc = io::load_circuit_file(src.path);
    for (const std::string& w : lc.warnings) err << "warning: " << w << "\n";
    return {std::move(lc.circuit), src.path};
  } catch (const io::SyntaxError& e) {
    throw Exit{kParseError, std::string("parse error: ") + e.what()};
  } catch (const io::SchemaError& e) {
    throw Exit{kSemanticError, std::string("invalid circuit: ") + e.what()};
  } catch (const CircuitError& e) {
    throw Exit{kSemanticError, std::string("invalid circuit: ") + e.what()};
  } catch (const std::runtime_error& e) {
    throw Exit{kParseError, e.what()};
  }
}

compiler::CostModel load_cost_model(const std::string& path) {
  if (path.empty()) return {};
  try {
    return io::load_cost_model_file(path);
  } catch (const io::SyntaxError& e) {
    throw Exit{kParseError, std::string("cost model parse error: ") + e.what()};
  } catch (const io::SchemaError& e) {
    throw Exit{kSemanticError, e.what()};
  } catch (const std::runtime_error& e) {
    throw Exit{kParseError, e.what()};
  }
}

Json modes_json(const gates::ControlModes& modes) {
  Json out = Json::array();
  for (const PhotonConfig& m : modes) {
    out.push_back(Json::array({m.pol == Polarization::H ? "H" : "V", m.path}));
  }
  return out;
}

Json step_json(const compiler::Step& step) {
  return std::visit(
      [](const auto& s) -> Json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, compiler::CPathStep>) {
          return {{"op", "cpath"},        {"control", s.control},
                  {"target", s.target},   {"control_paths", s.control_paths},
                  {"active", modes_json(s.active)}};
        } else if constexpr (std::is_same_v<T, compiler::MergingStep>) {
          return {{"op", "merging"},      {"control", s.control},
                  {"target", s.target},   {"control_paths", s.control_paths},
                  {"active", modes_json(s.active)}};
        } else if constexpr (std::is_same_v<T, compiler::EraserStep>) {
          return {{"op", "eraser"},
                  {"control", s.control},
                  {"target", s.target},
                  {"active", modes_json(s.active)}};
        } else {
          Json u = Json::array();
          for (std::size_t r = 0; r < 2; ++r) {
            for (std::size_t c = 0; c < 2; ++c) {
              u.push_back(Json::array({s.u(r, c).real(), s.u(r, c).imag()}));
            }
          }
          Json j = {{"op", "local"}, {"photon", s.photon}, {"u", u}};
          j["path"] = s.path ? Json(*s.path) : Json(nullptr);
          return j;
        }
      },
      step);
}

Json tally_json(const compiler::ResourceTally& t) {
  Json j = {{"cpath", t.cpath_count},     {"merging", t.merging_count},
            {"eraser", t.eraser_count},   {"local", t.local_count},
            {"xpm_model", t.xpm_count},   {"xpm_cpath", t.xpm_cpath}};
  j["xpm_closed_form"] =
      t.xpm_closed_form ? Json(*t.xpm_closed_form) : Json(nullptr);
  return j;
}

Json schedule_json(const compiler::PrimitiveSchedule& s) {
  Json steps = Json::array();
  for (const compiler::Step& step : s.steps) steps.push_back(step_json(step));
  return steps;
}

void print_tally_text(const compiler::ResourceTally& t, std::ostream& out) {
  out << "cpath " << t.cpath_count << ", merging " << t.merging_count
      << ", eraser " << t.eraser_count << ", local " << t.local_count << "\n"
      << "xpm (model) " << t.xpm_count << ", xpm (cpath) " << t.xpm_cpath;
  if (t.xpm_closed_form) {
    out << ", xpm (closed form) " << *t.xpm_closed_form;
  }
  out << "\n";
}

// ---- compile ---------------------------------------------------------------

struct CompileArgs {
  CircuitSource src;
  std::string cost_model;
  std::string format = "json";
};

int cmd_compile(const CompileArgs& a, std::ostream& out, std::ostream& err) {
  const Loaded l = load(a.src, err);
  const compiler::CostModel cost = load_cost_model(a.cost_model);
  const compiler::PrimitiveSchedule s = compiler::lower(l.circuit, cost);
  if (a.format == "text") {
    for (const compiler::Step& step : s.steps) {
      out << compiler::describe(step) << "\n";
    }
    print_tally_text(s.tally, out);
    return kOk;
  }
  Json report = {{"command", "compile"},
                 {"circuit", l.name},
                 {"qubits", l.circuit.qubits},
                 {"schedule", schedule_json(s)},
                 {"tally", tally_json(s.tally)}};
  out << report.dump(2) << "\n";
  return kOk;
}

// ---- simulate --------------------------------------------------------------

struct SimulateArgs {
  CircuitSource src;
  GateParams params;
  std::string mode = "enumerate";
  std::string qnd = "ideal";
  std::uint64_t seed = 0;
  std::string format = "json";
  bool timing = false;
};

int cmd_simulate(const SimulateArgs& a, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  const Loaded l = load(a.src, err);

  SimulationOptions opt;
  opt.params = a.params;
  opt.params.qnd = a.qnd == "physical" ? QndModel::Physical : QndModel::Ideal;
  opt.mode = a.mode == "sample" ? gates::BranchMode::Sample
                                : gates::BranchMode::Enumerate;
  opt.seed = a.seed;
  // Let imperfect probes show up as lost fidelity instead of rejected input.
  opt.params.form_tolerance = 1.0;
  opt.strict = false;
  try {
    validate(opt.params);
  } catch (const ParameterError& e) {
    throw Exit{kParameterError, std::string("parameter error: ") + e.what()};
  }
  const std::size_t limit = opt.mode == gates::BranchMode::Sample ? 10 : 8;
  if (l.circuit.qubits > limit) {
    throw Exit{kParameterError, "simulate supports at most " +
                                    std::to_string(limit) + " qubits in " +
                                    a.mode + " mode"};
  }

  const compiler::PrimitiveSchedule s = compiler::lower(l.circuit);
  const oracle::QubitVector input = circuit_input(l.circuit);
  const oracle::QubitVector expected = oracle::run(l.circuit, input);
  const SimulationResult r =
      simulate(s, oracle::qubit_to_photonic(input), opt);

  Json branches = Json::array();
  double min_f = 1.0;
  double weighted = 0.0;
  for (const FinalBranch& b : r.branches) {
    const double f =
        b.failed ? 0.0
                 : std::clamp(oracle::fidelity(
                                  oracle::photonic_to_qubit(b.state, 0, 1.0),
                                  expected),
                              0.0, 1.0);
    min_f = std::min(min_f, f);
    weighted += b.probability * f;
    Json branch = {
        {"probability", b.probability}, {"fidelity", f}, {"outcomes", b.outcomes}};
    if (b.failed) branch["failure"] = b.failure;
    branches.push_back(branch);
  }
  const double total = r.total_probability();
  const double mean_f = total > 0.0 ? weighted / total : 0.0;
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  if (a.format == "text") {
    print_tally_text(s.tally, out);
    out << "branches " << r.branches.size() << ", total probability " << total
        << "\nmin fidelity " << min_f << ", mean fidelity " << mean_f << "\n";
  } else {
    Json report = {
        {"command", "simulate"},
        {"circuit", l.name},
        {"qubits", l.circuit.qubits},
        {"parameters",
         {{"alpha", opt.params.alpha},
          {"theta", opt.params.theta},
          {"gamma", opt.params.gamma},
          {"theta_qnd", opt.params.theta_qnd},
          {"branch_floor", opt.params.branch_floor},
          {"qnd", a.qnd},
          {"mode", a.mode},
          {"seed", a.seed}}},
        {"schedule", schedule_json(s)},
        {"tally", tally_json(s.tally)},
        {"branches", branches},
        {"min_fidelity", min_f},
        {"mean_fidelity", mean_f},
        {"total_probability", total}};
    if (a.timing) report["wall_time_s"] = seconds;
    out << report.dump(2) << "\n";
  }
  err << "wall time " << seconds << " s\n";
  return kOk;
}

// ---- sweep -----------------------------------------------------------------

struct SweepArgs {
  std::string alpha_range = "2000";
  std::string theta_range = "0.003";
  std::string gamma_range = "2000";
  double theta_qnd = 0.005;
  std::string out;
};

/// Controlled-U on two photons from a fixed entangled input.
double cu_min_fidelity(const GateParams& params) {
  CircuitIR c;
  c.qubits = 2;
  c.gates.push_back(ControlledGate{0, 1, SingleQubitUnitary::u3(1.1, 0.3, 0.7)});
  c.input = {{0.5, 0.1}, {0.3, -0.4}, {-0.2, 0.35}, {0.45, 0.2}};
  SimulationOptions opt;
  opt.params = params;
  // Far outside the design regime the gates still act physically; do not
  // reject contaminated inputs.
  opt.params.form_tolerance = 1.0;
  opt.strict = false;
  const Verification v = verify_against_oracle(c, circuit_input(c), opt);
  return v.min_fidelity;
}

std::string csv_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

int cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
  const std::vector<double> alphas = parse_range(a.alpha_range);
  const std::vector<double> thetas = parse_range(a.theta_range);
  const std::vector<double> gammas = parse_range(a.gamma_range);

  std::ofstream file;
  std::ostream* sink = &out;
  if (!a.out.empty()) {
    file.open(a.out, std::ios::binary);
    if (!file) throw Exit{kParseError, "cannot write " + a.out};
    sink = &file;
  }
  *sink << kSweepHeader << "\n";
  for (const double alpha : alphas) {
    for (const double theta : thetas) {
      for (const double gamma : gammas) {
        GateParams p;
        p.alpha = alpha;
        p.theta = theta;
        p.gamma = gamma;
        p.theta_qnd = a.theta_qnd;
        try {
          validate(p);
        } catch (const ParameterError& e) {
          throw Exit{kParameterError, std::string("parameter error: ") + e.what()};
        }
        const double f = cu_min_fidelity(p);
        *sink << csv_number(alpha) << "," << csv_number(theta) << ","
              << csv_number(gamma) << ","
              << csv_number(numerics::beta_magnitude(alpha, theta)) << ","
              << csv_number(numerics::contamination_exponent(alpha, theta)) << ","
              << csv_number(numerics::discrimination_error(gamma, a.theta_qnd, 1).p_miss)
              << "," << csv_number(f) << "\n";
      }
    }
  }
  err << "sweep: " << alphas.size() * thetas.size() * gammas.size()
      << " grid points\n";
  return kOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string level = "quick";
  std::string fault = "none";
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  acceptance::Options opt;
  opt.level = a.level == "full" ? acceptance::Level::Full
                                : acceptance::Level::Quick;
  opt.fault = a.fault == "bs-sign" ? Fault::FlipTargetSplitterSign : Fault::None;
  bool all = true;
  for (int id = 1; id <= acceptance::kCriterionCount; ++id) {
    const acceptance::CriterionResult r = acceptance::run_criterion(id, opt);
    out << acceptance::format(r) << std::endl;
    all = all && r.passed;
  }
  out << (all ? "all criteria passed" : "some criteria FAILED") << "\n";
  return all ? kOk : kFailed;
}

void add_source(CLI::App* app, CircuitSource& src) {
  app->add_option("circuit", src.path, "Circuit JSON file");
  app->add_option("--builtin", src.builtin, "Builtin circuit: qftN, groverN, fig2");
}

}  // namespace

std::vector<double> parse_range(const std::string& spec) {
  std::vector<std::string> parts;
  std::size_t begin = 0;
  for (;;) {
    const std::size_t colon = spec.find(':', begin);
    parts.push_back(spec.substr(begin, colon - begin));
    if (colon == std::string::npos) break;
    begin = colon + 1;
  }
  const auto number = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (s.empty() || used != s.size() || !std::isfinite(v)) {
      throw ParameterError("bad range \"" + spec + "\"");
    }
    return v;
  };
  if (parts.size() == 1) return {number(parts[0])};
  if (parts.size() != 3) {
    throw ParameterError("range \"" + spec + "\" is not start:stop:count");
  }
  const double start = number(parts[0]);
  const double stop = number(parts[1]);
  const double count = number(parts[2]);
  if (count < 1 || count != std::floor(count)) {
    throw ParameterError("range \"" + spec + "\" is empty");
  }
  const auto n = static_cast<std::size_t>(count);
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) {
    values[i] = n == 1 ? start
                       : start + (stop - start) * static_cast<double>(i) /
                                     static_cast<double>(n - 1);
  }
  return values;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Simulator and compiler for single-photon logic circuits",
               "photon-logic"};
  app.require_subcommand(1);

  CompileArgs compile_args;
  CLI::App* compile = app.add_subcommand("compile", "Lower a circuit to primitives");
  add_source(compile, compile_args.src);
  compile->add_option("--cost-model", compile_args.cost_model,
                      "JSON file with XPM cost coefficients");
  compile->add_option("--format", compile_args.format)
      ->check(CLI::IsMember({"json", "text"}));

  SimulateArgs sim_args;
  CLI::App* simulate_cmd =
      app.add_subcommand("simulate", "Run the lowered circuit against the oracle");
  add_source(simulate_cmd, sim_args.src);
  simulate_cmd->add_option("--alpha", sim_args.params.alpha);
  simulate_cmd->add_option("--theta", sim_args.params.theta);
  simulate_cmd->add_option("--gamma", sim_args.params.gamma);
  simulate_cmd->add_option("--theta-qnd", sim_args.params.theta_qnd);
  simulate_cmd->add_option("--detector-efficiency",
                           sim_args.params.detector_efficiency);
  simulate_cmd->add_option("--branch-floor", sim_args.params.branch_floor);
  simulate_cmd->add_option("--mode", sim_args.mode)
      ->check(CLI::IsMember({"enumerate", "sample"}));
  simulate_cmd->add_option("--qnd", sim_args.qnd)
      ->check(CLI::IsMember({"ideal", "physical"}));
  simulate_cmd->add_option("--seed", sim_args.seed);
  simulate_cmd->add_option("--format", sim_args.format)
      ->check(CLI::IsMember({"json", "text"}));
  simulate_cmd->add_flag("--timing", sim_args.timing,
                         "Include wall time in the JSON report");

  SweepArgs sweep_args;
  CLI::App* sweep = app.add_subcommand("sweep", "Parameter sweep to CSV");
  sweep->add_option("--alpha-range", sweep_args.alpha_range, "start:stop:count");
  sweep->add_option("--theta-range", sweep_args.theta_range, "start:stop:count");
  sweep->add_option("--gamma-range", sweep_args.gamma_range, "start:stop:count");
  sweep->add_option("--theta-qnd", sweep_args.theta_qnd);
  sweep->add_option("--out", sweep_args.out, "CSV file (default stdout)");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "Run the acceptance suite");
  verify->add_option("--level", verify_args.level)
      ->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("--inject-fault", verify_args.fault,
                     "Negative control: bs-sign flips the target splitter")
      ->check(CLI::IsMember({"none", "bs-sign"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  try {
    if (*compile) return cmd_compile(compile_args, out, err);
    if (*simulate_cmd) return cmd_simulate(sim_args, out, err);
    if (*sweep) return cmd_sweep(sweep_args, out, err);
    return cmd_verify(verify_args, out);
  } catch (const Exit& e) {
    err << "error: " << e.message << "\n";
    return e.code;
  } catch (const ParameterError& e) {
    err << "parameter error: " << e.what() << "\n";
    return kParameterError;
  } catch (const gates::GateError& e) {
    err << "gate error: " << e.what() << "\n";
    return kParameterError;
  }
}

}  // namespace photonlogic::cli
