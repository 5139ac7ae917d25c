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
#ifndef EXPOLY_ARITH_H_
#define EXPOLY_ARITH_H_

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "expoly/common.h"
#include "expoly/ff_core.h"

namespace expoly {

// Work tallies. Callers own their counters; parallel workers use private ones
// and merge with +=.
struct OpCounter {
  uint64_t group_mults = 0;
  uint64_t dlog_calls = 0;
  // Trial divisions plus Pollard rho iterations.
  uint64_t factor_steps = 0;

  OpCounter& operator+=(const OpCounter& o) {
    group_mults += o.group_mults;
    dlog_calls += o.dlog_calls;
    factor_steps += o.factor_steps;
    return *this;
  }
  friend bool operator==(const OpCounter&, const OpCounter&) = default;
};

struct Factorization {
  uint64_t value = 1;
  // (prime, exponent), primes strictly increasing.
  std::vector<std::pair<uint64_t, unsigned>> prime_powers;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

struct OrderInfo {
  FieldElement element;
  uint64_t order = 0;
};

// Trial division up to 10^6, then Brent's variant of Pollard rho with
// polynomials x^2 + c, c = 1, 2, 3, ... Deterministic. m must be in [1, 2^62].
Factorization factorize(uint64_t m, OpCounter* counter = nullptr);

// Strips prime factors from s = q - 1 while g^(s/l) = 1. Throws kZeroElement.
OrderInfo multiplicative_order(const FieldSpec& field, const FieldElement& g,
                               const Factorization& q_minus_1, OpCounter* counter = nullptr);

// Convenience overload that factors q - 1 itself.
OrderInfo multiplicative_order(const FieldSpec& field, const FieldElement& g);

// d(m) = prod (e_i + 1).
uint64_t divisor_count(uint64_t m);

// True iff target lies in the subgroup of order s, i.e. target^s = 1. The
// multiplicative group is cyclic so this is exact.
bool subgroup_membership(const FieldSpec& field, const FieldElement& g, uint64_t s,
                         const FieldElement& target, OpCounter* counter = nullptr);

// Baby-step table for <g>, |<g>| = s, reusable across many targets.
//
// Construction costs m + 1 group operations with m = ceil(sqrt(s)): m - 1
// baby steps, one multiplication for g^m and one inversion. A lookup that
// succeeds in giant step i costs i multiplications, a failed lookup costs m.
class BabyStepTable {
 public:
  BabyStepTable(const FieldSpec& field, const FieldElement& g, uint64_t s,
                uint64_t memory_cap = Caps{}.memory, OpCounter* counter = nullptr);

  // x in [0, s) with g^x = target, or nullopt when target is not in <g>.
  std::optional<uint64_t> find(const FieldElement& target, OpCounter* counter = nullptr) const;

  uint64_t order() const { return s_; }
  uint64_t stride() const { return m_; }

 private:
  const FieldSpec* field_;
  uint64_t s_;
  uint64_t m_;
  FieldElement giant_;  // g^{-m}
  std::unordered_map<uint64_t, uint64_t> baby_;
};

// One-shot discrete logarithm. Throws kMemoryCap if ceil(sqrt(s)) exceeds
// memory_cap.
std::optional<uint64_t> bsgs_dlog(const FieldSpec& field, const FieldElement& g, uint64_t s,
                                  const FieldElement& target, OpCounter* counter = nullptr,
                                  uint64_t memory_cap = Caps{}.memory);

// ceil(sqrt(n)) for 64-bit n.
uint64_t ceil_sqrt(uint64_t n);

}  // namespace expoly

#endif  // EXPOLY_ARITH_H_
