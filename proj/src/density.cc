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
#include "expoly/density.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "expoly/parallel.h"

namespace expoly {
namespace {

using u128 = unsigned __int128;

void require_sorted(std::span<const uint64_t> orders) {
  if (orders.empty()) throw Error(ErrorCode::kInvalidArgument, "no orders given");
  if (!std::is_sorted(orders.begin(), orders.end(), std::greater<>())) {
    throw Error(ErrorCode::kInvalidArgument, "orders must be sorted in decreasing order");
  }
}

// q * sum_sq - card^2, i.e. q^2 E(r) / q = q E(r). Nonnegative by
// Cauchy-Schwarz.
u128 scaled_energy(const DensityReport& report) {
  const u128 card = report.box.card;
  return static_cast<u128>(report.q()) * report.sum_sq - card * card;
}

}  // namespace

EquationSummary EquationSummary::of(const ExpEquation& eq) {
  EquationSummary s;
  s.p = eq.field().p();
  s.nu = eq.field().nu();
  s.modulus = eq.field().modulus_poly();
  for (const Term& t : eq.terms()) {
    s.a.push_back(t.a.value());
    s.g.push_back(t.g.value());
  }
  s.orders = eq.orders();
  return s;
}

DensityReport sweep_b(const ExpEquation& eq, const SearchBox& box, const Caps& caps,
                      unsigned workers) {
  const FieldSpec& f = eq.field();
  const uint64_t q = f.q();
  if (q > caps.enumeration) throw Error(ErrorCode::kCapExceeded, "q exceeds enumeration cap");
  if (box.card > caps.compute) {
    throw Error(ErrorCode::kCapExceeded, "box of " + std::to_string(box.card) +
                                             " points exceeds compute cap");
  }
  const auto tables = coordinate_tables(eq, box);
  const unsigned chunks = chunk_count(box.extent(0), workers);
  std::vector<std::vector<uint64_t>> hist(chunks);
  run_chunks(box.extent(0), workers, [&](std::size_t chunk, uint64_t lo, uint64_t hi) {
    std::vector<uint64_t> h(q, 0);
    walk_box(f, tables, lo, hi,
             [&h](std::span<const uint64_t>, const FieldElement& sum) { ++h[sum.value()]; });
    hist[chunk] = std::move(h);
  });

  DensityReport report;
  report.family = EquationSummary::of(eq);
  report.box = box;
  report.per_b.resize(q);
  const uint64_t g = std::gcd(box.card, q);
  u128 sum_sq = 0;
  for (uint64_t b = 0; b < q; ++b) {
    uint64_t count = 0;
    for (const auto& h : hist) count += h[b];
    PerBRow& row = report.per_b[b];
    row.b = b;
    row.count = count;
    row.main_num = box.card / g;
    row.main_den = q / g;
    const long double scaled = static_cast<long double>(count) * q - box.card;
    row.delta = static_cast<double>(scaled / q);
    sum_sq += static_cast<u128>(count) * count;
  }
  if (sum_sq > UINT64_MAX) throw Error(ErrorCode::kOverflow, "sum of squared counts overflows");
  report.sum_sq = static_cast<uint64_t>(sum_sq);
  report.energy = static_cast<double>(static_cast<long double>(scaled_energy(report)) / q);
  return report;
}

EnergyCheck energy_bound_check(const DensityReport& report) {
  const uint64_t q = report.q();
  const std::size_t n = report.box.n();
  const u128 lhs = scaled_energy(report);
  // Compare q E(r) against q^n r exactly when it fits in 128 bits.
  u128 rhs = report.box.r;
  bool exact = true;
  for (std::size_t i = 0; i < n && exact; ++i) {
    if (rhs > static_cast<u128>(-1) / q) {
      exact = false;
    } else {
      rhs *= q;
    }
  }
  EnergyCheck out;
  const long double bound =
      std::pow(static_cast<long double>(q), static_cast<long double>(n) - 1) * report.box.r;
  const long double energy = static_cast<long double>(lhs) / q;
  out.bound = static_cast<double>(bound);
  out.margin = static_cast<double>(bound - energy);
  out.holds = exact ? lhs < rhs : energy < bound;
  return out;
}

Census exceptional_census(const DensityReport& report, double delta) {
  const uint64_t q = report.q();
  if (!(delta > 0) || static_cast<long double>(delta) * delta > q) {
    throw Error(ErrorCode::kBadDelta, "delta must satisfy 0 < delta <= sqrt(q)");
  }
  const std::size_t n = report.box.n();
  const long double r = report.box.r;
  const long double qn = std::pow(static_cast<long double>(q), static_cast<long double>(n));
  // |Delta_b| >= delta sqrt(r q^{n-2})  <=>  (q N_b - card)^2 >= delta^2 r q^n.
  const long double rhs = static_cast<long double>(delta) * delta * r * qn;

  Census c;
  c.delta = delta;
  c.threshold = static_cast<double>(
      delta * std::sqrt(r * std::pow(static_cast<long double>(q), static_cast<long double>(n) - 2)));
  c.size_bound = static_cast<double>(q) / (delta * delta);
  c.flags.assign(q, false);
  for (const PerBRow& row : report.per_b) {
    const __int128 diff = static_cast<__int128>(row.count) * q - static_cast<__int128>(report.box.card);
    const unsigned __int128 mag = diff < 0 ? -diff : diff;
    const long double sq = static_cast<long double>(mag) * static_cast<long double>(mag);
    if (sq >= rhs) {
      c.flags[row.b] = true;
      c.exceptional_b.push_back(row.b);
    }
  }
  c.within_bound = static_cast<long double>(c.exceptional_b.size()) * delta * delta <= q;
  return c;
}

Census apply_census(DensityReport& report, double delta) {
  Census c = exceptional_census(report, delta);
  report.delta_param = delta;
  report.exceptional_b = c.exceptional_b;
  for (PerBRow& row : report.per_b) row.exceptional = c.flags[row.b];
  return c;
}

long double box_size_value(uint64_t q, std::span<const uint64_t> sorted_orders, LogBase base) {
  require_sorted(sorted_orders);
  // Direct products stay far inside long double range for q <= 2^62 and
  // n <= 16, and are more accurate than going through logarithms.
  const std::size_t n = sorted_orders.size();
  long double num = 1;
  for (std::size_t i = 0; i < n; ++i) num *= static_cast<long double>(q);
  long double den = 1;
  for (std::size_t l = 0; l + 1 < n; ++l) den *= static_cast<long double>(sorted_orders[l]);
  return num / (den * den) * log_q(q, base);
}

CorollaryR corollary_min_r(uint64_t q, std::span<const uint64_t> sorted_orders, LogBase base) {
  const long double v = box_size_value(q, sorted_orders, base);
  if (!(v < 0x1p62L)) throw Error(ErrorCode::kOverflow, "guaranteed cutoff exceeds 2^62");
  CorollaryR out;
  out.r0 = static_cast<uint64_t>(std::floor(v)) + 1;
  out.guaranteed = out.r0 <= sorted_orders.back();
  return out;
}

double corollary_delta(uint64_t q, double eps, LogBase base) {
  return static_cast<double>(std::pow(log_q(q, base), static_cast<long double>(eps)));
}

}  // namespace expoly
