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
#include "expoly/qmodel.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>

#include "expoly/density.h"
#include "expoly/parallel.h"

namespace expoly {

double grover_success(uint64_t t, uint64_t m, uint64_t k) {
  if (t == 0 || m == 0 || m > t) {
    throw Error(ErrorCode::kBadCounts, "need 1 <= m <= t (t=" + std::to_string(t) +
                                           ", m=" + std::to_string(m) + ")");
  }
  const double theta = std::asin(std::sqrt(static_cast<double>(m) / static_cast<double>(t)));
  const double s = std::sin((2.0 * static_cast<double>(k) + 1.0) * theta);
  return s * s;
}

GroverSimulation grover_simulate(uint64_t t, std::span<const uint64_t> marked, uint64_t k,
                                 uint64_t cap) {
  if (t > cap) {
    throw Error(ErrorCode::kCapExceeded, "state dimension " + std::to_string(t) +
                                             " exceeds cap " + std::to_string(cap));
  }
  if (t == 0 || marked.empty()) throw Error(ErrorCode::kBadCounts, "need t >= 1 and a marked item");
  std::vector<char> is_marked(t, 0);
  for (uint64_t i : marked) {
    if (i >= t || is_marked[i]) {
      throw Error(ErrorCode::kBadCounts, "marked indices must be distinct and below t");
    }
    is_marked[i] = 1;
  }
  std::vector<double> amp(t, 1.0 / std::sqrt(static_cast<double>(t)));
  GroverSimulation out;
  for (uint64_t it = 0; it < k; ++it) {
    long double sum = 0;
    for (uint64_t i = 0; i < t; ++i) {
      if (is_marked[i]) amp[i] = -amp[i];
      sum += amp[i];
    }
    const double twice_mean = static_cast<double>(2 * sum / t);
    long double norm = 0;
    for (uint64_t i = 0; i < t; ++i) {
      amp[i] = twice_mean - amp[i];
      norm += static_cast<long double>(amp[i]) * amp[i];
    }
    out.max_norm_drift = std::max(out.max_norm_drift, static_cast<double>(std::fabs(norm - 1)));
  }
  long double mass = 0;
  for (uint64_t i : marked) mass += static_cast<long double>(amp[i]) * amp[i];
  out.probability = static_cast<double>(mass);
  return out;
}

BbhtStats bbht_expected_queries(uint64_t t, uint64_t m, uint64_t trials, uint64_t seed,
                                unsigned workers) {
  if (t == 0 || m == 0 || m > t || trials == 0) {
    throw Error(ErrorCode::kBadCounts, "need 1 <= m <= t and trials >= 1");
  }
  // Success probabilities only depend on k, and k < sqrt(t) + 1.
  const double cap = std::sqrt(static_cast<double>(t));
  const uint64_t k_max = static_cast<uint64_t>(std::ceil(cap)) + 1;
  std::vector<double> success(k_max);
  for (uint64_t k = 0; k < k_max; ++k) success[k] = grover_success(t, m, k);

  std::vector<uint64_t> totals(trials);
  run_chunks(trials, workers, [&](std::size_t, uint64_t lo, uint64_t hi) {
    for (uint64_t trial = lo; trial < hi; ++trial) {
      std::mt19937_64 rng(seed + trial);
      double bound = 1.0;
      uint64_t queries = 0;
      while (true) {
        const uint64_t k = uniform_below(rng, static_cast<uint64_t>(std::ceil(bound)));
        queries += k + 1;
        if (uniform_unit(rng) < success[k]) break;
        bound = std::min(bound * kBbhtGrowth, cap);
      }
      totals[trial] = queries;
    }
  });
  BbhtStats stats;
  stats.trials = trials;
  long double sum = 0;
  for (uint64_t q : totals) {
    sum += q;
    stats.max_queries = std::max(stats.max_queries, q);
  }
  stats.mean_queries = static_cast<double>(sum / trials);
  return stats;
}

Rational classical_exponent(unsigned n) { return Rational(n, 2); }

Rational stated_classical_exponent(unsigned n) {
  return Rational(static_cast<int64_t>(n) * (n + 1), 2 * (2 * static_cast<int64_t>(n) - 1));
}

Rational quantum_exponent(unsigned n) {
  return Rational(static_cast<int64_t>(n) * (n - 1), 2 * (2 * static_cast<int64_t>(n) - 1));
}

ExponentTable exponent_table(unsigned n_max) {
  if (n_max < 2) throw Error(ErrorCode::kInvalidArgument, "n_max must be >= 2");
  ExponentTable table;
  for (unsigned n = 2; n <= n_max; ++n) {
    ExponentRow row;
    row.n = n;
    row.classical = classical_exponent(n);
    row.classical_stated = stated_classical_exponent(n);
    row.quantum = quantum_exponent(n);
    row.ratio = row.classical / row.quantum;
    table.rows.push_back(row);
  }
  return table;
}

std::string ExponentTable::to_text() const {
  std::ostringstream out;
  auto line = [&out](const std::string& a, const std::string& b, const std::string& c,
                     const std::string& d) {
    out << std::left << std::setw(16) << a << " | " << std::setw(10) << b << " | "
        << std::setw(10) << c << " | " << d << "\n";
  };
  line("# of variables", "Classical", "Quantum", "ratio (C/Q)");
  out << std::string(16, '-') << "-+-" << std::string(10, '-') << "-+-" << std::string(10, '-')
      << "-+-" << std::string(11, '-') << "\n";
  for (const ExponentRow& row : rows) {
    line(std::to_string(row.n), row.classical.to_string(), row.quantum.to_string(),
         row.ratio.to_string());
  }
  for (const ExponentRow& row : rows) {
    if (row.classical_stated != row.classical) {
      out << "n=" << row.n << ": stated classical exponent n(n+1)/(2(2n-1)) = "
          << row.classical_stated.to_string() << " differs from the search bound n/2 = "
          << row.classical.to_string() << "\n";
    }
  }
  return out.str();
}

std::string_view quantum_mode_name(QuantumMode mode) {
  return mode == QuantumMode::kGrover ? "thm2" : "thm3";
}

std::optional<QuantumMode> parse_quantum_mode(std::string_view name) {
  if (name == "thm2") return QuantumMode::kGrover;
  if (name == "thm3") return QuantumMode::kBbht;
  return std::nullopt;
}

ChainCheck grid_chain_check(const SearchBox& box) {
  const std::size_t n = box.n();
  long double prod = 1;
  for (std::size_t l = 0; l + 1 < n; ++l) prod *= box.sorted_orders[l];
  const long double exponent = static_cast<long double>(n - 1) / (2.0L * n - 1);
  ChainCheck c;
  c.lhs = static_cast<double>(box.outer_size());
  c.rhs = static_cast<double>(std::pow(prod * prod * box.r, exponent));
  c.holds = c.lhs <= c.rhs * (1 + 1e-12);
  return c;
}

namespace {

std::vector<uint64_t> sorted_orders_of(const ExpEquation& eq) {
  std::vector<uint64_t> sorted;
  for (std::size_t i : sort_by_order_desc(eq.orders())) sorted.push_back(eq.orders()[i]);
  return sorted;
}

}  // namespace

BoxChoice build_box_floor(const ExpEquation& eq, LogBase base) {
  const auto sorted = sorted_orders_of(eq);
  const long double v = box_size_value(eq.field().q(), sorted, base);
  if (!(v < 0x1p62L)) throw Error(ErrorCode::kOverflow, "box cutoff r exceeds 2^62");
  BoxChoice out;
  out.r_raw = static_cast<uint64_t>(std::floor(v));
  out.box = SearchBox::make(eq, std::clamp<uint64_t>(out.r_raw, 1, sorted.back()));
  return out;
}

bool large_order_hypothesis(const ExpEquation& eq, LogBase base) {
  const auto sorted = sorted_orders_of(eq);
  // (prod s)^2 s_n > q^n log q  <=>  s_n > q^n (prod s)^{-2} log q.
  return static_cast<long double>(sorted.back()) > box_size_value(eq.field().q(), sorted, base);
}

QueryCostReport model_quantum_solve(const ExpEquation& eq, QuantumMode mode,
                                    const QuantumModelOptions& options) {
  const uint64_t q = eq.field().q();
  const auto sorted = sorted_orders_of(eq);
  const std::size_t n = eq.n();
  if (mode == QuantumMode::kBbht && !large_order_hypothesis(eq, options.log_base)) {
    throw Error(ErrorCode::kHypothesisFailed, "hypothesis (∏s)²sₙ > qⁿ log q failed");
  }
  const BoxChoice choice =
      mode == QuantumMode::kGrover ? build_box(eq, options.log_base) : build_box_floor(eq, options.log_base);

  QueryCostReport rep;
  rep.mode = mode;
  rep.box = choice.box;
  rep.r_raw = choice.r_raw;
  rep.t = choice.box.outer_size();
  rep.m_estimate = static_cast<double>(choice.box.card) / static_cast<double>(q);
  if (choice.box.card <= options.caps.compute) {
    rep.m_exact = brute_count(eq, choice.box, options.caps).count;
  }
  const double lq = std::log(static_cast<double>(q));
  rep.slack = std::pow(lq, options.slack_exponent);
  rep.chain = grid_chain_check(choice.box);

  if (mode == QuantumMode::kGrover) {
    rep.grover_oracle_queries = ceil_sqrt(rep.t);
    rep.theoretical_bound = std::pow(static_cast<double>(q), quantum_exponent(n).to_double()) * rep.slack;
  } else {
    const double m = rep.m_exact ? static_cast<double>(*rep.m_exact) : rep.m_estimate;
    if (m >= 1) {
      rep.grover_oracle_queries =
          static_cast<uint64_t>(std::ceil(std::sqrt(static_cast<double>(rep.t) / m) - 1e-12));
    } else {
      // Nothing to find: the search runs to its sqrt(t) cutoff.
      rep.grover_oracle_queries = ceil_sqrt(rep.t);
    }
    long double prod = 1;
    for (std::size_t l = 0; l + 1 < n; ++l) prod *= sorted[l];
    const long double weight = prod * prod * sorted.back();
    rep.theoretical_bound = static_cast<double>(
        std::sqrt(static_cast<long double>(q)) *
        std::pow(weight, -1.0L / (2.0L * (2.0L * n - 1))) * rep.slack);
    if (options.simulate_bbht && rep.m_exact && *rep.m_exact >= 1) {
      rep.empirical_queries =
          bbht_expected_queries(rep.t, std::min(*rep.m_exact, rep.t), options.bbht_trials,
                                options.seed, options.workers)
              .mean_queries;
    }
  }
  rep.shor_calls = n + rep.grover_oracle_queries;
  rep.shor_unit_cost = lq * lq * lq;
  rep.modeled_time = static_cast<double>(rep.shor_calls) * rep.shor_unit_cost;
  rep.within_bound = static_cast<double>(rep.grover_oracle_queries) <= rep.theoretical_bound;
  return rep;
}

}  // namespace expoly
