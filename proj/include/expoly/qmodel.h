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
#ifndef EXPOLY_QMODEL_H_
#define EXPOLY_QMODEL_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "expoly/charsum.h"
#include "expoly/common.h"
#include "expoly/rational.h"
#include "expoly/solver.h"

namespace expoly {

// ---------------------------------------------------------------------------
// Grover dynamics
// ---------------------------------------------------------------------------

// sin^2((2k+1) theta) with sin^2 theta = m/t. Throws kBadCounts unless
// 1 <= m <= t.
double grover_success(uint64_t t, uint64_t m, uint64_t k);

struct GroverSimulation {
  double probability = 0;     // mass on the marked set after k iterations
  double max_norm_drift = 0;  // max |1 - ||state||^2| over all iterations
};

// k Grover iterations on an explicit real state vector of dimension t: sign
// flip on the marked indices, then inversion about the mean. Throws
// kCapExceeded when t > cap, kBadCounts for empty, repeated or out-of-range
// marked indices.
GroverSimulation grover_simulate(uint64_t t, std::span<const uint64_t> marked, uint64_t k,
                                 uint64_t cap = uint64_t{1} << 14);

struct BbhtStats {
  double mean_queries = 0;
  uint64_t max_queries = 0;
  uint64_t trials = 0;
};

// Growth factor of the iteration-count bound in the unknown-m schedule.
inline constexpr double kBbhtGrowth = 6.0 / 5.0;

// Unknown-m amplitude amplification: in round j draw k uniformly from
// [0, ceil(min(c^j, sqrt t))), run k iterations, measure (one more query to
// check the outcome) and stop on success. A measurement succeeds with
// probability grover_success(t, m, k). Trial i uses its own mt19937_64 seeded
// with seed + i, so results do not depend on the worker count.
BbhtStats bbht_expected_queries(uint64_t t, uint64_t m, uint64_t trials, uint64_t seed,
                                unsigned workers = 1);

// ---------------------------------------------------------------------------
// Exponent table
// ---------------------------------------------------------------------------

// n/2: exponent of the classical search.
Rational classical_exponent(unsigned n);
// n(n+1)/(2(2n-1)): the classical exponent as stated alongside the
// algorithm, which disagrees with n/2 for n >= 3.
Rational stated_classical_exponent(unsigned n);
// n(n-1)/(2(2n-1)).
Rational quantum_exponent(unsigned n);

struct ExponentRow {
  unsigned n = 0;
  Rational classical;
  Rational classical_stated;
  Rational quantum;
  Rational ratio;  // classical / quantum = (2n-1)/(n-1)

  friend bool operator==(const ExponentRow&, const ExponentRow&) = default;
};

struct ExponentTable {
  std::vector<ExponentRow> rows;

  // Aligned text: variables, classical, quantum, ratio, followed by one
  // line per n where the stated classical exponent differs from n/2.
  std::string to_text() const;
  friend bool operator==(const ExponentTable&, const ExponentTable&) = default;
};

// Rows n = 2..n_max. Throws kInvalidArgument for n_max < 2.
ExponentTable exponent_table(unsigned n_max);

// ---------------------------------------------------------------------------
// Query-cost model of the quantum searches
// ---------------------------------------------------------------------------

enum class QuantumMode {
  // Grover over the outer grid of the ceiling box; charged sqrt(t) queries.
  kGrover,
  // Large orders: floor box, unknown-m search charged sqrt(t / M).
  kBbht,
};

// "thm2" / "thm3" on the wire.
std::string_view quantum_mode_name(QuantumMode mode);
std::optional<QuantumMode> parse_quantum_mode(std::string_view name);

struct QuantumModelOptions {
  LogBase log_base = LogBase::kNatural;
  // Bounds are multiplied by (ln q)^slack_exponent.
  double slack_exponent = 3;
  // Also run the BBHT schedule on (t, M) and record the empirical mean.
  bool simulate_bbht = false;
  uint64_t bbht_trials = 1000;
  uint64_t seed = 1;
  unsigned workers = 1;
  Caps caps;
};

// r prod_{l=2}^{n-1} s_l <= ((prod_{l<n} s_l)^2 r)^{(n-1)/(2n-1)}, evaluated on
// the searched grid.
struct ChainCheck {
  double lhs = 0;
  double rhs = 0;
  bool holds = false;
  friend bool operator==(const ChainCheck&, const ChainCheck&) = default;
};

ChainCheck grid_chain_check(const SearchBox& box);

struct QueryCostReport {
  QuantumMode mode = QuantumMode::kGrover;
  SearchBox box;
  uint64_t r_raw = 0;
  // Outer grid size.
  uint64_t t = 0;
  // Marked outer points (= solutions in the box), when counted exactly.
  std::optional<uint64_t> m_exact;
  double m_estimate = 0;  // r prod_{l<n} s_l / q
  // Order findings plus one discrete logarithm per oracle query.
  uint64_t shor_calls = 0;
  // Each Shor call is charged (ln q)^3.
  double shor_unit_cost = 0;
  double modeled_time = 0;
  uint64_t grover_oracle_queries = 0;
  std::optional<double> empirical_queries;
  double slack = 0;
  double theoretical_bound = 0;  // includes the slack factor
  bool within_bound = false;
  ChainCheck chain;

  friend bool operator==(const QueryCostReport&, const QueryCostReport&) = default;
};

// Box for the large-order search: r = floor(q^n (prod s_l)^{-2} log q),
// clamped to [1, s_n].
BoxChoice build_box_floor(const ExpEquation& eq, LogBase base = LogBase::kNatural);

// Large-order hypothesis (prod_{l<n} s_l)^2 s_n > q^n log q.
bool large_order_hypothesis(const ExpEquation& eq, LogBase base = LogBase::kNatural);

// Throws kHypothesisFailed in kBbht mode when the large-order hypothesis is
// false.
QueryCostReport model_quantum_solve(const ExpEquation& eq, QuantumMode mode,
                                    const QuantumModelOptions& options = {});

}  // namespace expoly

#endif  // EXPOLY_QMODEL_H_
