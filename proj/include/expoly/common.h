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
#ifndef EXPOLY_COMMON_H_
#define EXPOLY_COMMON_H_

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

#include "expoly/error.h"

namespace expoly {

// Desk-scale limits. Every enumeration in the library is checked against one
// of these before it starts.
struct Caps {
  // Largest q for which whole-field scans (unit lists, character sums over
  // all of F_q, b-sweeps) are allowed.
  uint64_t enumeration = uint64_t{1} << 20;
  // Largest number of box points visited by a brute-force pass.
  uint64_t compute = uint64_t{1} << 30;
  // Largest baby-step table.
  uint64_t memory = uint64_t{1} << 24;
  // Solution lists are materialized only for boxes up to this size.
  uint64_t solution_list = uint64_t{1} << 16;
  // Largest number of terms in an equation.
  std::size_t max_terms = 16;
};

// Base of the "log q" that appears in box sizes and thresholds.
enum class LogBase { kNatural, kBase2 };

std::string_view log_base_name(LogBase base);
std::optional<LogBase> parse_log_base(std::string_view name);

inline long double log_q(uint64_t q, LogBase base) {
  const long double x = static_cast<long double>(q);
  return base == LogBase::kNatural ? std::log(x) : std::log2(x);
}

// Overflow-checked helpers; nullopt on overflow.
inline std::optional<uint64_t> checked_mul(uint64_t a, uint64_t b) {
  uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) return std::nullopt;
  return out;
}

inline std::optional<uint64_t> checked_add(uint64_t a, uint64_t b) {
  uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) return std::nullopt;
  return out;
}

// Uniform integer in [0, bound) from a std::mt19937_64 stream. The engine
// output is fixed by the standard, and rejection sampling keeps the mapping
// identical on every platform (std::uniform_int_distribution does not).
inline uint64_t uniform_below(std::mt19937_64& rng, uint64_t bound) {
  if (bound <= 1) return 0;
  const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace expoly

#endif  // EXPOLY_COMMON_H_
