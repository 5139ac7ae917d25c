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
#include "expoly/solver.h"

#include <cmath>
#include <string>

#include "expoly/density.h"
#include "expoly/parallel.h"

namespace expoly {

std::string_view solve_status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::kFound: return "Found";
    case SolveStatus::kNoSolutionCertified: return "NoSolutionCertified";
    case SolveStatus::kBoxExhausted: return "BoxExhausted";
  }
  return "Unknown";
}

std::optional<SolveStatus> parse_solve_status(std::string_view name) {
  for (SolveStatus s : {SolveStatus::kFound, SolveStatus::kNoSolutionCertified,
                        SolveStatus::kBoxExhausted}) {
    if (solve_status_name(s) == name) return s;
  }
  return std::nullopt;
}

BoxChoice build_box(const ExpEquation& eq, LogBase base) {
  const auto perm = sort_by_order_desc(eq.orders());
  std::vector<uint64_t> sorted;
  for (std::size_t i : perm) sorted.push_back(eq.orders()[i]);
  const long double v = box_size_value(eq.field().q(), sorted, base);
  if (!(v < 0x1p62L)) throw Error(ErrorCode::kOverflow, "box cutoff r exceeds 2^62");
  BoxChoice out;
  out.r_raw = static_cast<uint64_t>(std::ceil(v));
  if (out.r_raw == 0) out.r_raw = 1;
  out.box = SearchBox::make(eq, std::min(out.r_raw, sorted.back()));
  return out;
}

ClassicalSolver::ClassicalSolver(const ExpEquation& eq, const Caps& caps, LogBase base)
    : eq_(eq), caps_(caps), choice_(build_box(eq, base)) {
  const FieldSpec& f = eq_.field();
  const SearchBox& box = choice_.box;
  const Term& first = eq_.terms()[box.perm[0]];
  a1_inv_ = f.inv(first.a);
  setup_.group_mults += 1;
  table_.emplace(f, first.g, box.sorted_orders[0], caps_.memory, &setup_);
  outer_tables_.resize(box.n() - 1);
  for (std::size_t k = 1; k < box.n(); ++k) {
    const Term& term = eq_.terms()[box.perm[k]];
    auto& table = outer_tables_[k - 1];
    const uint64_t len = box.extent(k);
    table.reserve(len);
    FieldElement v = term.a;
    for (uint64_t x = 0; x < len; ++x) {
      table.push_back(v);
      v = f.mul(v, term.g);
    }
    setup_.group_mults += len;
  }
}

FieldElement ClassicalSolver::outer_sum(std::span<const uint64_t> outer) const {
  const FieldSpec& f = eq_.field();
  FieldElement sum = f.zero();
  for (std::size_t k = 0; k < outer.size(); ++k) sum = f.add(sum, outer_tables_[k][outer[k]]);
  return sum;
}

std::optional<uint64_t> ClassicalSolver::resolve(const FieldElement& outer_sum,
                                                 OpCounter* counter) const {
  const FieldSpec& f = eq_.field();
  const FieldElement t = f.mul(a1_inv_, f.sub(eq_.b(), outer_sum));
  if (counter != nullptr) counter->group_mults += 1;
  if (t.is_zero()) return std::nullopt;
  const Term& first = eq_.terms()[choice_.box.perm[0]];
  if (!subgroup_membership(f, first.g, table_->order(), t, counter)) return std::nullopt;
  return table_->find(t, counter);
}

std::optional<uint64_t> ClassicalSolver::subroutine_s(std::span<const uint64_t> outer,
                                                      OpCounter* counter) const {
  const SearchBox& box = choice_.box;
  if (outer.size() + 1 != box.n()) {
    throw Error(ErrorCode::kIndexOutOfRange, "outer point needs n - 1 coordinates");
  }
  for (std::size_t k = 0; k < outer.size(); ++k) {
    if (outer[k] >= box.extent(k + 1)) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "outer coordinate " + std::to_string(k + 2) + " outside the box");
    }
  }
  return resolve(outer_sum(outer), counter);
}

SolutionReport ClassicalSolver::solve(unsigned workers) const {
  const SearchBox& box = choice_.box;
  const uint64_t outer_total = box.outer_size();
  if (outer_total > caps_.compute) {
    throw Error(ErrorCode::kCapExceeded, "outer grid of " + std::to_string(outer_total) +
                                             " points exceeds compute cap");
  }
  const std::size_t dims = box.n() - 1;

  struct ChunkResult {
    OpCounter counter;
    uint64_t visited = 0;
    std::optional<std::pair<std::vector<uint64_t>, uint64_t>> hit;
  };
  std::vector<ChunkResult> results(chunk_count(outer_total, workers));
  run_chunks(outer_total, workers, [&](std::size_t chunk, uint64_t lo, uint64_t hi) {
    ChunkResult& res = results[chunk];
    std::vector<uint64_t> outer(dims, 0);
    // Mixed-radix decode of lo, last coordinate fastest.
    uint64_t rest = lo;
    for (std::size_t k = dims; k-- > 0;) {
      outer[k] = rest % box.extent(k + 1);
      rest /= box.extent(k + 1);
    }
    for (uint64_t idx = lo; idx < hi; ++idx) {
      ++res.visited;
      if (auto x1 = resolve(outer_sum(outer), &res.counter)) {
        res.hit.emplace(outer, *x1);
        return;
      }
      for (std::size_t k = dims; k-- > 0;) {
        if (++outer[k] < box.extent(k + 1)) break;
        outer[k] = 0;
      }
    }
  });

  SolutionReport report;
  report.box_used = box;
  report.r_raw = choice_.r_raw;
  OpCounter total = setup_;
  for (const ChunkResult& res : results) {
    total += res.counter;
    report.queries.outer_points_visited += res.visited;
  }
  for (const ChunkResult& res : results) {
    if (!res.hit) continue;
    report.status = SolveStatus::kFound;
    report.solution_sorted.push_back(res.hit->second);
    report.solution_sorted.insert(report.solution_sorted.end(), res.hit->first.begin(),
                                  res.hit->first.end());
    report.solution = box.to_original(report.solution_sorted);
    break;
  }
  if (report.status != SolveStatus::kFound) {
    report.status = choice_.r_raw > box.sorted_orders.back() ? SolveStatus::kNoSolutionCertified
                                                             : SolveStatus::kBoxExhausted;
  }
  report.queries.group_mults = total.group_mults;
  report.queries.dlog_calls = total.dlog_calls;
  report.queries.model_point_mults =
      report.queries.outer_points_visited * 2 * ceil_sqrt(box.sorted_orders[0]);
  report.queries.setup_factor_steps = eq_.setup_cost().factor_steps;
  report.queries.setup_order_mults = eq_.setup_cost().group_mults;
  const double lq = std::log(static_cast<double>(eq_.field().q()));
  const double denom = std::sqrt(static_cast<double>(box.sorted_orders[0])) *
                       static_cast<double>(std::max<uint64_t>(1, report.queries.outer_points_visited)) *
                       std::max(1.0, lq * lq);
  report.cost_constant = static_cast<double>(report.queries.group_mults) / denom;
  return report;
}

SolutionReport solve_classical(const ExpEquation& eq, const Caps& caps, LogBase base,
                               unsigned workers) {
  return ClassicalSolver(eq, caps, base).solve(workers);
}

bool verify_solution(const ExpEquation& eq, std::span<const uint64_t> x) {
  if (x.size() != eq.n()) {
    throw Error(ErrorCode::kIndexOutOfRange, "assignment has the wrong number of coordinates");
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] >= eq.orders()[i]) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "x_" + std::to_string(i + 1) + "=" + std::to_string(x[i]) +
                      " is not below its order " + std::to_string(eq.orders()[i]));
    }
  }
  return eq.lhs(x) == eq.b();
}

}  // namespace expoly
