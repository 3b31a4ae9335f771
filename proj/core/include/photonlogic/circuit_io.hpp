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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "photonlogic/circuit.hpp"
#include "photonlogic/compiler.hpp"

namespace photonlogic::io {

/// Malformed JSON text. Line and column are 1-based.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed JSON that does not describe a circuit (missing keys, wrong
/// types, bad qubit indices, non-unitary matrices).
class SchemaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct LoadedCircuit {
  CircuitIR circuit;
  std::vector<std::string> warnings;
};

/// Input vectors off by more than 1e-6 in norm are renormalized with a warning.
LoadedCircuit parse_circuit(std::string_view text);
LoadedCircuit load_circuit_file(const std::string& path);

std::string serialize_circuit(const CircuitIR& circuit, int indent = 2);

/// "qftN", "groverN" (diffusion operator) or "fig2".
CircuitIR builtin_circuit(std::string_view name);

compiler::CostModel parse_cost_model(std::string_view text);
compiler::CostModel load_cost_model_file(const std::string& path);

}  // namespace photonlogic::io
