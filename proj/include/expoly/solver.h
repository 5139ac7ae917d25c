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
#ifndef EXPOLY_SOLVER_H_
#define EXPOLY_SOLVER_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "expoly/arith.h"
#include "expoly/charsum.h"
#include "expoly/common.h"

namespace expoly {

enum class SolveStatus {
  kFound,
  // The whole domain was searched (the cutoff exceeded s_n).
  kNoSolutionCertified,
  // The truncated box X^n(r), r <= s_n, holds no solution. Either b is
  // exceptional or solutions lie beyond the cutoff; nothing is certified.
  kBoxExhausted,
};

std::string_view solve_status_name(SolveStatus s);
std::optional<SolveStatus> parse_solve_status(std::string_view name);

struct SolveCounts {
  // Work actually performed by the search, baby-step table included.
  uint64_t group_mults = 0;
  uint64_t dlog_calls = 0;
  uint64_t outer_points_visited = 0;
  // Cost the analysis charges: a fresh 2 ceil(sqrt(s_1)) baby-step
  // giant-step run at every visited outer point.
  uint64_t model_point_mults = 0;
  // Factoring q - 1 and computing the orders, reported on its own.
  uint64_t setup_factor_steps = 0;
  uint64_t setup_order_mults = 0;

  friend bool operator==(const SolveCounts&, const SolveCounts&) = default;
};

struct SolutionReport {
  SolveStatus status = SolveStatus::kBoxExhausted;
  // Found only: original variable order, and the same point in sorted order.
  std::vector<uint64_t> solution;
  std::vector<uint64_t> solution_sorted;
  SolveCounts queries;
  SearchBox box_used;
  uint64_t r_raw = 0;
  // group_mults / (sqrt(s_1) * outer points * (ln q)^2).
  double cost_constant = 0;

  friend bool operator==(const SolutionReport&, const SolutionReport&) = default;
};

struct BoxChoice {
  SearchBox box;
  // ceil(q^n (prod_{l<n} s_l)^{-2} log q) before clamping to s_n.
  uint64_t r_raw = 0;
};

// Sorted box with r = min(r_raw, s_n). Throws kOverflow if r_raw does not fit
// in 63 bits.
BoxChoice build_box(const ExpEquation& eq, LogBase base = LogBase::kNatural);

// The search of the classical algorithm: walk X_2 x ... x X_n(r) and resolve
// x_1 at each point by a discrete logarithm to base g_1. One baby-step table
// for g_1 is shared by every point.
class ClassicalSolver {
 public:
  explicit ClassicalSolver(const ExpEquation& eq, const Caps& caps = {},
                           LogBase base = LogBase::kNatural);
  // The baby-step table points into eq_.
  ClassicalSolver(const ClassicalSolver&) = delete;
  ClassicalSolver& operator=(const ClassicalSolver&) = delete;

  const SearchBox& box() const { return choice_.box; }
  uint64_t r_raw() const { return choice_.r_raw; }
  // Baby-step table, coefficient tables and a_1^{-1}.
  const OpCounter& setup_cost() const { return setup_; }

  // x_1 in X_1 solving g_1^{x_1} = a_1^{-1}(b - sum_{j>=2} a_j g_j^{x_j}) for
  // the outer point (x_2, ..., x_n) in sorted coordinates, or nullopt.
  // Throws kIndexOutOfRange for points outside the box.
  std::optional<uint64_t> subroutine_s(std::span<const uint64_t> outer,
                                       OpCounter* counter = nullptr) const;

  // Lexicographic search returning the first solution. With workers > 1 the
  // outer grid is split into contiguous chunks; each chunk stops at its own
  // first hit and the lowest chunk with a hit wins, so the solution is the
  // same as a serial run. Counts then include the work of every chunk.
  SolutionReport solve(unsigned workers = 1) const;

 private:
  std::optional<uint64_t> resolve(const FieldElement& outer_sum, OpCounter* counter) const;
  FieldElement outer_sum(std::span<const uint64_t> outer) const;

  ExpEquation eq_;
  Caps caps_;
  BoxChoice choice_;
  FieldElement a1_inv_;
  // a_k g_k^x for sorted coordinates k >= 1.
  std::vector<std::vector<FieldElement>> outer_tables_;
  std::optional<BabyStepTable> table_;
  OpCounter setup_;
};

SolutionReport solve_classical(const ExpEquation& eq, const Caps& caps = {},
                               LogBase base = LogBase::kNatural, unsigned workers = 1);

// Exact evaluation of f_b at x (original order). Throws kIndexOutOfRange
// unless 0 <= x_i < s_i for all i.
bool verify_solution(const ExpEquation& eq, std::span<const uint64_t> x);

}  // namespace expoly

#endif  // EXPOLY_SOLVER_H_
