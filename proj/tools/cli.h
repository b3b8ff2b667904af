/*
 * Copyright 2026 The skirental Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Command-line front end. Lives in a library so tests can drive it without
// spawning processes.

#ifndef SKIRENTAL_TOOLS_CLI_H_
#define SKIRENTAL_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace skirental::cli {

// Process exit codes.
inline constexpr int kOk = 0;  // success, or "is an equilibrium"
inline constexpr int kVerificationFailed = 1;
inline constexpr int kOracleDisagreement = 2;
inline constexpr int kUsageError = 3;

// Environment variable naming the default directory for experiment CSVs.
inline constexpr char kRunsDirEnv[] = "SKIRENTAL_RUNS_DIR";

// `args` excludes the program name.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace skirental::cli

#endif  // SKIRENTAL_TOOLS_CLI_H_
