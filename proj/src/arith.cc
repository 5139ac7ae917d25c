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
#include "expoly/arith.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "expoly/modular.h"

namespace expoly {
namespace {

constexpr uint64_t kTrialDivisionBound = 1'000'000;

// Brent cycle detection on x -> x^2 + c mod n. Returns a nontrivial factor of
// the composite n, or n itself when this c fails.
uint64_t brent_rho(uint64_t n, uint64_t c, uint64_t* steps) {
  auto f = [n, c](uint64_t x) { return add_mod(mul_mod(x, x, n), c % n, n); };
  uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
  constexpr uint64_t kBatch = 128;
  for (uint64_t r = 1; g == 1; r <<= 1) {
    x = y;
    for (uint64_t i = 0; i < r; ++i) y = f(y);
    for (uint64_t k = 0; k < r && g == 1; k += kBatch) {
      ys = y;
      const uint64_t lim = std::min(kBatch, r - k);
      for (uint64_t i = 0; i < lim; ++i) {
        y = f(y);
        q = mul_mod(q, x > y ? x - y : y - x, n);
        ++*steps;
      }
      g = std::gcd(q, n);
    }
  }
  if (g == n) {
    // Batched product hit zero; back up one step at a time.
    do {
      ys = f(ys);
      ++*steps;
      g = std::gcd(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g;
}

void split_large(uint64_t n, std::map<uint64_t, unsigned>& out, uint64_t* steps) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    ++out[n];
    return;
  }
  uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  if (r * r == n) {
    split_large(r, out, steps);
    split_large(r, out, steps);
    return;
  }
  for (uint64_t c = 1;; ++c) {
    const uint64_t d = brent_rho(n, c, steps);
    if (d != n && d != 1) {
      split_large(d, out, steps);
      split_large(n / d, out, steps);
      return;
    }
  }
}

}  // namespace

uint64_t ceil_sqrt(uint64_t n) {
  if (n == 0) return 0;
  uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<unsigned __int128>(r) * r >= n) --r;
  while (static_cast<unsigned __int128>(r) * r < n) ++r;
  return r;
}

Factorization factorize(uint64_t m, OpCounter* counter) {
  if (m == 0 || m > (uint64_t{1} << 62)) {
    throw Error(ErrorCode::kInvalidArgument, "factorize needs 1 <= m <= 2^62");
  }
  Factorization result;
  result.value = m;
  uint64_t steps = 0;
  std::map<uint64_t, unsigned> primes;
  for (uint64_t d = 2; d <= kTrialDivisionBound && d * d <= m; d += (d == 2 ? 1 : 2)) {
    ++steps;
    while (m % d == 0) {
      ++primes[d];
      m /= d;
    }
  }
  if (m > 1) {
    if (m <= kTrialDivisionBound * kTrialDivisionBound) {
      // No factor below the trial bound and m < bound^2, so m is prime.
      ++primes[m];
    } else {
      split_large(m, primes, &steps);
    }
  }
  result.prime_powers.assign(primes.begin(), primes.end());
  if (counter != nullptr) counter->factor_steps += steps;
  return result;
}

OrderInfo multiplicative_order(const FieldSpec& field, const FieldElement& g,
                               const Factorization& q_minus_1, OpCounter* counter) {
  field.check(g);
  if (g.is_zero()) throw Error(ErrorCode::kZeroElement, "zero has no multiplicative order");
  if (q_minus_1.value != field.q() - 1) {
    throw Error(ErrorCode::kInvalidArgument, "factorization is not of q - 1");
  }
  uint64_t mults = 0;
  uint64_t s = q_minus_1.value;
  for (const auto& [ell, e] : q_minus_1.prime_powers) {
    for (unsigned i = 0; i < e; ++i) {
      if (field.pow(g, s / ell, &mults) != field.one()) break;
      s /= ell;
    }
  }
  if (counter != nullptr) counter->group_mults += mults;
  return OrderInfo{g, s};
}

OrderInfo multiplicative_order(const FieldSpec& field, const FieldElement& g) {
  return multiplicative_order(field, g, factorize(field.q() - 1));
}

uint64_t divisor_count(uint64_t m) {
  uint64_t d = 1;
  for (const auto& pe : factorize(m).prime_powers) d *= pe.second + 1;
  return d;
}

bool subgroup_membership(const FieldSpec& field, const FieldElement& g, uint64_t s,
                         const FieldElement& target, OpCounter* counter) {
  field.check(g);
  if (target.is_zero()) {
    field.check(target);
    return false;
  }
  uint64_t mults = 0;
  const bool member = field.pow(target, s, &mults) == field.one();
  if (counter != nullptr) counter->group_mults += mults;
  return member;
}

BabyStepTable::BabyStepTable(const FieldSpec& field, const FieldElement& g, uint64_t s,
                             uint64_t memory_cap, OpCounter* counter)
    : field_(&field), s_(s), m_(ceil_sqrt(s)) {
  field.check(g);
  if (g.is_zero()) throw Error(ErrorCode::kZeroElement, "baby-step base must be a unit");
  if (s == 0) throw Error(ErrorCode::kInvalidArgument, "order must be positive");
  if (m_ > memory_cap) {
    throw Error(ErrorCode::kMemoryCap, "baby-step table of " + std::to_string(m_) +
                                           " entries exceeds cap " +
                                           std::to_string(memory_cap));
  }
  baby_.reserve(m_);
  FieldElement cur = field.one();
  uint64_t mults = 0;
  for (uint64_t j = 0; j < m_; ++j) {
    baby_.emplace(cur.value(), j);
    if (j + 1 < m_) {
      cur = field.mul(cur, g);
      ++mults;
    }
  }
  giant_ = field.inv(field.mul(cur, g));
  mults += 2;
  if (counter != nullptr) counter->group_mults += mults;
}

std::optional<uint64_t> BabyStepTable::find(const FieldElement& target,
                                            OpCounter* counter) const {
  field_->check(target);
  if (counter != nullptr) ++counter->dlog_calls;
  if (target.is_zero()) return std::nullopt;
  FieldElement y = target;
  uint64_t mults = 0;
  std::optional<uint64_t> found;
  for (uint64_t i = 0; i < m_; ++i) {
    auto it = baby_.find(y.value());
    if (it != baby_.end()) {
      const uint64_t x = i * m_ + it->second;
      // x < s whenever target is in <g>; a hit past s would mean s was not
      // the order of g.
      if (x < s_) found = x;
      break;
    }
    y = field_->mul(y, giant_);
    ++mults;
  }
  if (counter != nullptr) counter->group_mults += mults;
  return found;
}

std::optional<uint64_t> bsgs_dlog(const FieldSpec& field, const FieldElement& g, uint64_t s,
                                  const FieldElement& target, OpCounter* counter,
                                  uint64_t memory_cap) {
  BabyStepTable table(field, g, s, memory_cap, counter);
  return table.find(target, counter);
}

}  // namespace expoly
