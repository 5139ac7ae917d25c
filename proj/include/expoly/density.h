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
#ifndef EXPOLY_DENSITY_H_
#define EXPOLY_DENSITY_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "expoly/charsum.h"
#include "expoly/common.h"

namespace expoly {

// Plain-integer snapshot of an equation family (everything but b), with
// field elements in their packed encoding.
struct EquationSummary {
  uint64_t p = 0;
  unsigned nu = 0;
  std::vector<uint64_t> modulus;
  std::vector<uint64_t> a;
  std::vector<uint64_t> g;
  std::vector<uint64_t> orders;

  static EquationSummary of(const ExpEquation& eq);
  friend bool operator==(const EquationSummary&, const EquationSummary&) = default;
};

struct PerBRow {
  uint64_t b = 0;  // packed encoding
  uint64_t count = 0;
  // Main term r * prod_{l<n} s_l / q as a reduced fraction.
  uint64_t main_num = 0;
  uint64_t main_den = 1;
  double delta = 0;  // count - main term
  bool exceptional = false;

  friend bool operator==(const PerBRow&, const PerBRow&) = default;
};

struct DensityReport {
  EquationSummary family;
  SearchBox box;
  std::vector<PerBRow> per_b;  // indexed by packed b
  // sum_b N_b^2. With card = sum_b N_b the energy is exactly
  //   E(r) = sum_sq - card^2 / q.
  uint64_t sum_sq = 0;
  double energy = 0;
  std::optional<double> delta_param;
  std::vector<uint64_t> exceptional_b;

  uint64_t q() const { return per_b.size(); }
  friend bool operator==(const DensityReport&, const DensityReport&) = default;
};

// N_{f_b}(r) for every b in one pass over the box: histogram the value of
// a_1 g_1^{x_1} + ... + a_n g_n^{x_n}. The b of eq is ignored. Box enumeration
// is sharded over the first coordinate and merged by integer addition.
DensityReport sweep_b(const ExpEquation& eq, const SearchBox& box, const Caps& caps = {},
                      unsigned workers = 1);

struct EnergyCheck {
  bool holds = false;   // E(r) < q^{n-1} r
  double margin = 0;    // q^{n-1} r - E(r)
  double bound = 0;     // q^{n-1} r
};

EnergyCheck energy_bound_check(const DensityReport& report);

struct Census {
  double delta = 0;
  double threshold = 0;          // delta * sqrt(r q^{n-2})
  double size_bound = 0;         // q / delta^2
  std::vector<uint64_t> exceptional_b;
  std::vector<bool> flags;       // indexed by packed b
  bool within_bound = false;     // |exceptional_b| <= q / delta^2
};

// The b with |Delta_b(r)| >= delta sqrt(r q^{n-2}). Throws kBadDelta unless
// 0 < delta <= sqrt(q).
Census exceptional_census(const DensityReport& report, double delta);

// Runs the census and records it in the report (flags, delta, set).
Census apply_census(DensityReport& report, double delta);

// q^n (prod_{l<n} s_l)^{-2} log q, the quantity behind both the box cutoff and
// the non-emptiness threshold. sorted_orders must be non-increasing.
long double box_size_value(uint64_t q, std::span<const uint64_t> sorted_orders, LogBase base);

struct CorollaryR {
  uint64_t r0 = 0;
  bool guaranteed = false;  // r0 <= s_n
};

// Least r with q^n (prod_{l<n} s_l)^{-2} log q < r. Throws kOverflow when it
// does not fit in 63 bits, kInvalidArgument if the orders are not sorted.
CorollaryR corollary_min_r(uint64_t q, std::span<const uint64_t> sorted_orders,
                           LogBase base = LogBase::kNatural);

// delta = (log q)^eps; eps = 1/2 is the census default.
double corollary_delta(uint64_t q, double eps = 0.5, LogBase base = LogBase::kNatural);

}  // namespace expoly

#endif  // EXPOLY_DENSITY_H_
