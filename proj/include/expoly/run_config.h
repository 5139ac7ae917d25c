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
#ifndef EXPOLY_RUN_CONFIG_H_
#define EXPOLY_RUN_CONFIG_H_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "expoly/charsum.h"
#include "expoly/common.h"

namespace expoly {

// One key=value assignment and where it came from ("line 4", "--p").
struct Setting {
  std::string key;
  std::string value;
  std::string origin;
};

struct RunConfig {
  uint64_t p = 0;
  unsigned nu = 1;
  // "a1,g1;a2,g2;..." with field elements as packed integers.
  std::optional<std::string> terms;
  std::optional<uint64_t> b;
  // Random instance generator, used when no terms are given.
  std::optional<std::size_t> n;
  uint64_t seed = 1;
  std::optional<double> delta;
  LogBase log_base = LogBase::kNatural;
  std::string mode = "thm2";
  std::optional<uint64_t> r;
  unsigned n_max = 3;
  Caps caps;
  double eps_slack = 3;
  uint64_t trials = 1000;
  std::string out;
  std::string format = "text";
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<uint64_t> bench_q = {101, 257, 521, 1031};
  std::vector<std::size_t> bench_n = {2, 3};
};

// Every key a config file or flag may set, in the dashed flag spelling.
const std::vector<std::string>& config_keys();

// Plain key=value lines; '#' starts a comment, blank lines are skipped, and
// underscores in keys are read as dashes. Throws kInvalidArgument naming the
// line for malformed lines and unknown keys.
std::vector<Setting> parse_config_text(std::string_view text);

// Applies settings in order, so later ones (flags) override earlier ones
// (the file). Errors name the key and its origin.
void apply_settings(RunConfig& config, const std::vector<Setting>& settings);

std::vector<std::pair<uint64_t, uint64_t>> parse_terms(std::string_view text);

// The equation described by the config: explicit terms, or a seeded random
// instance when only n is given. `description` receives a replayable
// one-line account of the instance.
ExpEquation equation_from_config(const RunConfig& config, std::string* description = nullptr);

}  // namespace expoly

#endif  // EXPOLY_RUN_CONFIG_H_
