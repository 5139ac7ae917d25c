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
#include "expoly/run_config.h"

#include <algorithm>
#include <charconv>
#include <random>
#include <sstream>

#include "expoly/instances.h"

namespace expoly {
namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::string normalize_key(std::string key) {
  std::replace(key.begin(), key.end(), '_', '-');
  return key;
}

[[noreturn]] void bad_value(const Setting& s, std::string_view why) {
  throw Error(ErrorCode::kInvalidArgument, s.origin + ": bad value '" + s.value + "' for key '" +
                                               s.key + "' (" + std::string(why) + ")");
}

uint64_t to_u64(const Setting& s) {
  uint64_t v = 0;
  const std::string t = trim(s.value);
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
    bad_value(s, "expected a nonnegative integer");
  }
  return v;
}

double to_double(const Setting& s) {
  try {
    std::size_t used = 0;
    const std::string t = trim(s.value);
    double v = std::stod(t, &used);
    if (used != t.size()) bad_value(s, "expected a number");
    return v;
  } catch (const std::logic_error&) {
    bad_value(s, "expected a number");
  }
}

template <class T>
std::vector<T> to_list(const Setting& s) {
  std::vector<T> out;
  std::stringstream in(s.value);
  std::string item;
  while (std::getline(in, item, ',')) {
    Setting one{s.key, item, s.origin};
    out.push_back(static_cast<T>(to_u64(one)));
  }
  if (out.empty()) bad_value(s, "expected a comma-separated list");
  return out;
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "p",         "nu",          "terms",    "b",        "n",         "seed",
      "delta",     "log-base",    "mode",     "r",        "n-max",     "out",
      "format",    "workers",     "enum-cap", "compute-cap", "mem-cap", "list-cap",
      "max-terms", "eps-slack",   "trials",   "bench-q",  "bench-n"};
  return keys;
}

std::vector<Setting> parse_config_text(std::string_view text) {
  std::vector<Setting> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const std::string content = trim(line);
    if (content.empty()) continue;
    const std::string origin = "config line " + std::to_string(line_no);
    const auto eq = content.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::kInvalidArgument, origin + ": expected key=value, got '" + content + "'");
    }
    const std::string key = normalize_key(trim(content.substr(0, eq)));
    const auto& keys = config_keys();
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw Error(ErrorCode::kInvalidArgument, origin + ": unknown key '" + key + "'");
    }
    out.push_back(Setting{key, trim(content.substr(eq + 1)), origin});
    if (end == text.size()) break;
  }
  return out;
}

void apply_settings(RunConfig& c, const std::vector<Setting>& settings) {
  for (const Setting& s : settings) {
    const std::string& k = s.key;
    if (k == "p") {
      c.p = to_u64(s);
    } else if (k == "nu") {
      c.nu = static_cast<unsigned>(to_u64(s));
    } else if (k == "terms") {
      c.terms = s.value;
    } else if (k == "b") {
      c.b = to_u64(s);
    } else if (k == "n") {
      c.n = to_u64(s);
    } else if (k == "seed") {
      c.seed = to_u64(s);
    } else if (k == "delta") {
      c.delta = to_double(s);
    } else if (k == "log-base") {
      auto base = parse_log_base(trim(s.value));
      if (!base) bad_value(s, "expected natural or base2");
      c.log_base = *base;
    } else if (k == "mode") {
      const std::string m = trim(s.value);
      if (m != "thm2" && m != "thm3") bad_value(s, "expected thm2 or thm3");
      c.mode = m;
    } else if (k == "r") {
      c.r = to_u64(s);
    } else if (k == "n-max") {
      c.n_max = static_cast<unsigned>(to_u64(s));
    } else if (k == "out") {
      c.out = trim(s.value);
    } else if (k == "format") {
      const std::string f = trim(s.value);
      if (f != "json" && f != "csv" && f != "text") bad_value(s, "expected json, csv or text");
      c.format = f;
    } else if (k == "workers") {
      c.workers = std::max<unsigned>(1, static_cast<unsigned>(to_u64(s)));
    } else if (k == "enum-cap") {
      c.caps.enumeration = to_u64(s);
    } else if (k == "compute-cap") {
      c.caps.compute = to_u64(s);
    } else if (k == "mem-cap") {
      c.caps.memory = to_u64(s);
    } else if (k == "list-cap") {
      c.caps.solution_list = to_u64(s);
    } else if (k == "max-terms") {
      c.caps.max_terms = to_u64(s);
    } else if (k == "eps-slack") {
      c.eps_slack = to_double(s);
    } else if (k == "trials") {
      c.trials = to_u64(s);
    } else if (k == "bench-q") {
      c.bench_q = to_list<uint64_t>(s);
    } else if (k == "bench-n") {
      c.bench_n = to_list<std::size_t>(s);
    } else {
      throw Error(ErrorCode::kInvalidArgument, s.origin + ": unknown key '" + k + "'");
    }
  }
}

std::vector<std::pair<uint64_t, uint64_t>> parse_terms(std::string_view text) {
  std::vector<std::pair<uint64_t, uint64_t>> out;
  std::stringstream in{std::string(text)};
  std::string item;
  while (std::getline(in, item, ';')) {
    if (trim(item).empty()) continue;
    const auto comma = item.find(',');
    if (comma == std::string::npos) {
      throw Error(ErrorCode::kInvalidArgument, "term '" + trim(item) + "' is not of the form a,g");
    }
    Setting a{"terms", item.substr(0, comma), "--terms"};
    Setting g{"terms", item.substr(comma + 1), "--terms"};
    out.emplace_back(to_u64(a), to_u64(g));
  }
  if (out.empty()) throw Error(ErrorCode::kInvalidArgument, "no terms given");
  return out;
}

ExpEquation equation_from_config(const RunConfig& c, std::string* description) {
  if (c.p == 0) throw Error(ErrorCode::kInvalidArgument, "missing field: set p (and nu)");
  FieldSpec field = make_field(c.p, c.nu);
  std::ostringstream desc;
  desc << "field p=" << c.p << " nu=" << c.nu;
  if (c.nu > 1) {
    desc << " modulus=";
    for (std::size_t i = 0; i < field.modulus_poly().size(); ++i) {
      desc << (i ? "," : "") << field.modulus_poly()[i];
    }
  }
  if (c.terms) {
    std::vector<Term> terms;
    for (auto [a, g] : parse_terms(*c.terms)) terms.push_back({field.element(a), field.element(g)});
    const FieldElement b = field.element(c.b.value_or(0));
    ExpEquation eq = ExpEquation::create(field, std::move(terms), b, c.caps);
    desc << " terms=" << *c.terms << " b=" << b.value();
    if (description) *description = desc.str();
    return eq;
  }
  if (!c.n) throw Error(ErrorCode::kInvalidArgument, "give either terms or n (random instance)");
  std::mt19937_64 rng(c.seed);
  ExpEquation eq = random_equation(field, *c.n, rng, c.caps);
  if (c.b) eq = eq.with_b(field.element(*c.b));
  desc << " seed=" << c.seed << " terms=";
  for (std::size_t i = 0; i < eq.n(); ++i) {
    desc << (i ? ";" : "") << eq.terms()[i].a.value() << "," << eq.terms()[i].g.value();
  }
  desc << " b=" << eq.b().value();
  if (description) *description = desc.str();
  return eq;
}

}  // namespace expoly
