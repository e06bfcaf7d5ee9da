// Copyright 2026 The mlbalance Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MLBALANCE_TOOLS_CLI_H_
#define MLBALANCE_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace mlbalance::cli {

// Exit codes of the mlbalance tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitParameterError = 3;
inline constexpr int kExitInternalError = 4;

// Environment variable holding the default --seed.
inline constexpr const char* kSeedEnvVar = "MLBALANCE_SEED";

inline constexpr const char* kToolVersion = "1.0.0";

// Runs one command line (program name excluded), e.g.
// {"resample", "data.arff", "--method", "mlros", "--out", "out/data"}.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace mlbalance::cli

#endif  // MLBALANCE_TOOLS_CLI_H_
