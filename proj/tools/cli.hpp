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

#include <ostream>
#include <string>
#include <vector>

namespace photonlogic::cli {

enum ExitCode : int {
  kOk = 0,
  kFailed = 1,         // verify: some criterion failed
  kParseError = 2,     // unreadable file, malformed JSON, bad command line
  kSemanticError = 3,  // well-formed file that is not a valid circuit
  kParameterError = 4, // physical parameters or ranges out of range
};

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

/// "start:stop:count", inclusive, evenly spaced; a lone number is one point.
/// Throws ParameterError on an empty or malformed range.
std::vector<double> parse_range(const std::string& spec);

inline constexpr const char* kSweepHeader =
    "alpha,theta,gamma,beta_magnitude,contamination_exponent,p_miss_n1,"
    "min_fidelity";

}  // namespace photonlogic::cli
