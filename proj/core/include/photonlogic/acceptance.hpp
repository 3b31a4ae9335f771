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

#include <cstdint>
#include <string>
#include <vector>

#include "photonlogic/gate_params.hpp"

namespace photonlogic::acceptance {

/// Quick uses fewer random draws per criterion; full uses the contract counts.
enum class Level { Quick, Full };

struct Options {
  Level level = Level::Quick;
  Fault fault = Fault::None;
  std::uint64_t seed = 0x5eed2026;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  /// Measured values, human readable.
  std::string measured;
  double seconds = 0.0;
  double time_limit = 0.0;
};

inline constexpr int kCriterionCount = 8;

CriterionResult run_criterion(int id, const Options& options = {});
std::vector<CriterionResult> run_all(const Options& options = {});

/// "criterion 3 eraser-contract: PASS  min_fidelity=... (0.12 s, limit 5 s)"
std::string format(const CriterionResult& result);

}  // namespace photonlogic::acceptance
