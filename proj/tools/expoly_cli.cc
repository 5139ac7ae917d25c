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
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "commands.h"
#include "expoly/run_config.h"

namespace {

const std::map<std::string, std::string>& key_help() {
  static const std::map<std::string, std::string> help = {
      {"p", "field characteristic (prime)"},
      {"nu", "extension degree, q = p^nu"},
      {"terms", "coefficient/base pairs 'a1,g1;a2,g2', elements as packed integers"},
      {"b", "right-hand side (packed integer)"},
      {"n", "number of terms of a random instance, used without --terms"},
      {"seed", "RNG seed for random instances and BBHT trials"},
      {"delta", "census parameter, 0 < delta <= sqrt(q)"},
      {"log-base", "natural or base2"},
      {"mode", "qmodel mode: thm2 (any orders) or thm3 (large orders)"},
      {"r", "box side; defaults to the full box"},
      {"n-max", "largest n in the exponent table"},
      {"out", "write the report to this path"},
      {"format", "text, json or csv"},
      {"workers", "worker threads"},
      {"enum-cap", "largest q for whole-field scans"},
      {"compute-cap", "largest number of brute-force box points"},
      {"mem-cap", "largest baby-step table"},
      {"list-cap", "largest box whose solutions are listed"},
      {"max-terms", "largest number of terms"},
      {"eps-slack", "exponent of the log q slack in bounds"},
      {"trials", "BBHT simulation trials, 0 disables"},
      {"bench-q", "comma-separated field sizes for bench"},
      {"bench-n", "comma-separated term counts for bench"},
  };
  return help;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exponential-polynomial equations over finite fields"};
  app.require_subcommand(1);
  app.footer(
      "bench CSV columns: q,n,classical_mults,modeled_quantum_queries,classical_exp_fit,\n"
      "quantum_exp_fit,classical_exp,quantum_exp,status\n"
      "exit codes: 0 ok, 1 invalid input, 2 cap exceeded or hypothesis failed");

  std::string config_path;
  app.add_option("--config", config_path, "key = value file; flags override it")
      ->check(CLI::ExistingFile);
  std::map<std::string, std::string> values;
  for (const std::string& key : expoly::config_keys()) {
    auto it = key_help().find(key);
    app.add_option("--" + key, values[key], it == key_help().end() ? "" : it->second);
  }
  for (std::string_view name : expoly::cli::command_names()) {
    app.add_subcommand(std::string(name))->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : expoly::cli::kExitInvalid;
  }

  expoly::RunConfig config;
  try {
    std::vector<expoly::Setting> settings;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      std::stringstream text;
      text << in.rdbuf();
      settings = expoly::parse_config_text(text.str());
      for (auto& s : settings) s.origin = config_path + ":" + s.origin;
    }
    for (const std::string& key : expoly::config_keys()) {
      if (app.count("--" + key) > 0) settings.push_back({key, values[key], "--" + key});
    }
    expoly::apply_settings(config, settings);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return expoly::cli::kExitInvalid;
  }
  const std::string command = app.get_subcommands().front()->get_name();
  return expoly::cli::run_command(command, config, std::cout, std::cerr);
}
