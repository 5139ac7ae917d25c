// Copyright 2026 The expoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef EXPOLY_TOOLS_COMMANDS_H_
#define EXPOLY_TOOLS_COMMANDS_H_

#include <ostream>
#include <string_view>
#include <vector>

#include "expoly/run_config.h"

namespace expoly::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitLimit = 2;

const std::vector<std::string_view>& command_names();

// Runs one subcommand. Reports go to config.out when set, otherwise to
// `out`; diagnostics go to `err`. Returns the process exit code: 0 on
// success, 2 for cap and hypothesis failures, 1 for invalid input.
int run_command(std::string_view name, const RunConfig& config, std::ostream& out,
                std::ostream& err);

}  // namespace expoly::cli

#endif  // EXPOLY_TOOLS_COMMANDS_H_
