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

#include "photonlogic/circuit_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace photonlogic::io {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    const std::size_t offset =
        std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw SyntaxError("line " + std::to_string(line) + ", column " +
                          std::to_string(column) + ": " + e.what(),
                      line, column);
  }
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw SchemaError(where + ": missing \"" + key + "\"");
  }
  return obj.at(key);
}

std::size_t as_index(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw SchemaError(where + ": expected a non-negative integer");
  }
  return j.get<std::size_t>();
}

Amplitude as_complex(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw SchemaError(where + ": expected a [re, im] pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json to_json(Amplitude a) { return json::array({a.real(), a.imag()}); }

SingleQubitUnitary as_unitary(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) {
    throw SchemaError(where + ": expected a 2x2 complex matrix");
  }
  SingleQubitUnitary::Matrix m;
  for (std::size_t r = 0; r < 2; ++r) {
    if (!j[r].is_array() || j[r].size() != 2) {
      throw SchemaError(where + ": expected a 2x2 complex matrix");
    }
    for (std::size_t c = 0; c < 2; ++c) {
      m[2 * r + c] = as_complex(j[r][c], where);
    }
  }
  try {
    return SingleQubitUnitary(m);
  } catch (const StateError& e) {
    throw SchemaError(where + ": " + e.what());
  }
}

json to_json(const SingleQubitUnitary& u) {
  json rows = json::array();
  for (std::size_t r = 0; r < 2; ++r) {
    rows.push_back(json::array({to_json(u(r, 0)), to_json(u(r, 1))}));
  }
  return rows;
}

const char* family_name(CircuitFamily f) {
  switch (f) {
    case CircuitFamily::GroverDiffusion: return "grover_diffusion";
    case CircuitFamily::Qft: return "qft";
    case CircuitFamily::Generic: break;
  }
  return "generic";
}

CircuitFamily parse_family(const json& j) {
  const std::string s = j.is_string() ? j.get<std::string>() : "";
  if (s == "generic") return CircuitFamily::Generic;
  if (s == "grover_diffusion") return CircuitFamily::GroverDiffusion;
  if (s == "qft") return CircuitFamily::Qft;
  throw SchemaError("family: expected generic, grover_diffusion or qft");
}

Gate parse_gate(const json& g, std::size_t index) {
  const std::string where = "gates[" + std::to_string(index) + "]";
  const json& type = field(g, "type", where);
  if (!type.is_string()) throw SchemaError(where + ".type: expected a string");
  const std::string t = type.get<std::string>();
  if (t == "single") {
    return SingleQubitGate{as_index(field(g, "q", where), where + ".q"),
                           as_unitary(field(g, "u", where), where + ".u")};
  }
  if (t == "cu") {
    return ControlledGate{
        as_index(field(g, "control", where), where + ".control"),
        as_index(field(g, "target", where), where + ".target"),
        as_unitary(field(g, "u", where), where + ".u")};
  }
  if (t == "mcu") {
    const json& cs = field(g, "controls", where);
    if (!cs.is_array()) throw SchemaError(where + ".controls: expected a list");
    MultiControlledGate m;
    for (const json& c : cs) m.controls.push_back(as_index(c, where + ".controls"));
    m.target = as_index(field(g, "target", where), where + ".target");
    m.u = as_unitary(field(g, "u", where), where + ".u");
    return m;
  }
  throw SchemaError(where + ".type: unknown gate type \"" + t + "\"");
}

std::size_t builtin_size(std::string_view name, std::string_view prefix) {
  const std::string_view digits = name.substr(prefix.size());
  std::size_t n = 0;
  const auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw SchemaError("unknown builtin \"" + std::string(name) + "\"");
  }
  return n;
}

}  // namespace

LoadedCircuit parse_circuit(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw SchemaError("circuit file must be a JSON object");

  LoadedCircuit out;
  CircuitIR& c = out.circuit;
  c.qubits = as_index(field(doc, "qubits", "circuit"), "qubits");
  const json& gates = field(doc, "gates", "circuit");
  if (!gates.is_array()) throw SchemaError("gates: expected a list");
  for (std::size_t i = 0; i < gates.size(); ++i) {
    c.gates.push_back(parse_gate(gates[i], i));
  }
  if (doc.contains("family")) c.family = parse_family(doc.at("family"));

  if (doc.contains("input")) {
    const json& in = doc.at("input");
    if (!in.is_array()) throw SchemaError("input: expected a list");
    for (std::size_t i = 0; i < in.size(); ++i) {
      c.input.push_back(as_complex(in[i], "input[" + std::to_string(i) + "]"));
    }
    double norm2 = 0.0;
    for (const Amplitude& a : c.input) norm2 += std::norm(a);
    const double norm = std::sqrt(norm2);
    if (norm == 0.0) throw SchemaError("input: zero vector");
    if (std::abs(norm - 1.0) > 1e-6) {
      for (Amplitude& a : c.input) a /= norm;
      out.warnings.push_back("input vector had norm " + std::to_string(norm) +
                             "; renormalized");
    }
  }

  try {
    validate(c);
  } catch (const CircuitError& e) {
    throw SchemaError(e.what());
  }
  return out;
}

LoadedCircuit load_circuit_file(const std::string& path) {
  return parse_circuit(read_file(path));
}

std::string serialize_circuit(const CircuitIR& circuit, int indent) {
  json doc;
  doc["qubits"] = circuit.qubits;
  if (circuit.family != CircuitFamily::Generic) {
    doc["family"] = family_name(circuit.family);
  }
  if (!circuit.input.empty()) {
    json in = json::array();
    for (const Amplitude& a : circuit.input) in.push_back(to_json(a));
    doc["input"] = in;
  }
  json gates = json::array();
  for (const Gate& gate : circuit.gates) {
    std::visit(
        [&](const auto& g) {
          using T = std::decay_t<decltype(g)>;
          json j;
          if constexpr (std::is_same_v<T, SingleQubitGate>) {
            j = {{"type", "single"}, {"q", g.qubit}};
          } else if constexpr (std::is_same_v<T, ControlledGate>) {
            j = {{"type", "cu"}, {"control", g.control}, {"target", g.target}};
          } else {
            j = {{"type", "mcu"}, {"controls", g.controls}, {"target", g.target}};
          }
          j["u"] = to_json(g.u);
          gates.push_back(j);
        },
        gate);
  }
  doc["gates"] = gates;
  return doc.dump(indent);
}

CircuitIR builtin_circuit(std::string_view name) {
  if (name == "fig2") return circuits::fig2_default();
  if (name.starts_with("qft")) {
    const std::size_t n = builtin_size(name, "qft");
    if (n < 1) throw SchemaError("qft needs at least one qubit");
    return circuits::qft(n);
  }
  if (name.starts_with("grover")) {
    const std::size_t n = builtin_size(name, "grover");
    if (n < 2) throw SchemaError("grover needs at least two qubits");
    return circuits::grover_diffusion(n);
  }
  throw SchemaError("unknown builtin \"" + std::string(name) + "\"");
}

compiler::CostModel parse_cost_model(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw SchemaError("cost model must be a JSON object");
  compiler::CostModel m;
  const std::pair<const char*, int*> keys[] = {
      {"cpath_per_control_path", &m.cpath_per_control_path},
      {"cpath_fixed", &m.cpath_fixed},
      {"merging_per_control_path", &m.merging_per_control_path},
      {"merging_fixed", &m.merging_fixed},
      {"eraser_fixed", &m.eraser_fixed},
      {"qnd", &m.qnd},
  };
  for (const auto& [key, dst] : keys) {
    if (!doc.contains(key)) continue;
    const json& v = doc.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 0) {
      throw SchemaError(std::string("cost model \"") + key +
                        "\": expected a non-negative integer");
    }
    *dst = v.get<int>();
  }
  for (const auto& item : doc.items()) {
    const bool known = std::any_of(std::begin(keys), std::end(keys),
                                   [&](const auto& k) { return item.key() == k.first; });
    if (!known) throw SchemaError("cost model: unknown key \"" + item.key() + "\"");
  }
  return m;
}

compiler::CostModel load_cost_model_file(const std::string& path) {
  return parse_cost_model(read_file(path));
}

}  // namespace photonlogic::io
