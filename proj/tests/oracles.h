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
// Slow, independent reference implementations used only by tests. None of
// them calls into the algorithms they check.
#ifndef EXPOLY_TESTS_ORACLES_H_
#define EXPOLY_TESTS_ORACLES_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "expoly/charsum.h"
#include "expoly/ff_core.h"

namespace expoly::oracle {

inline uint64_t order_by_repetition(const FieldSpec& f, const FieldElement& g) {
  FieldElement x = g;
  uint64_t s = 1;
  while (!(x == f.one())) {
    x = f.mul(x, g);
    ++s;
  }
  return s;
}

inline std::vector<uint64_t> divisors(uint64_t m) {
  std::vector<uint64_t> out;
  for (uint64_t d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      out.push_back(d);
      if (d * d != m) out.push_back(m / d);
    }
  }
  return out;
}

inline std::optional<uint64_t> dlog_by_scan(const FieldSpec& f, const FieldElement& g, uint64_t s,
                                            const FieldElement& target) {
  FieldElement x = f.one();
  for (uint64_t e = 0; e < s; ++e) {
    if (x == target) return e;
    x = f.mul(x, g);
  }
  return std::nullopt;
}

inline FieldElement power_by_repetition(const FieldSpec& f, const FieldElement& g, uint64_t k) {
  FieldElement x = f.one();
  for (uint64_t i = 0; i < k; ++i) x = f.mul(x, g);
  return x;
}

// Tr(x) = x + x^p + ... + x^{p^{nu-1}} with each Frobenius step done as p
// repeated multiplications.
inline uint64_t trace_by_definition(const FieldSpec& f, const FieldElement& x) {
  FieldElement sum = f.zero();
  FieldElement frob = x;
  for (unsigned i = 0; i < f.nu(); ++i) {
    sum = f.add(sum, frob);
    frob = power_by_repetition(f, frob, f.p());
  }
  const std::vector<uint64_t> c = f.coefficients(sum);
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c[i] != 0) return UINT64_MAX;  // not in the prime field
  }
  return c[0];
}

// Remainder of a by monic b over F_p, coefficients low to high.
inline std::vector<uint64_t> poly_rem(std::vector<uint64_t> a, const std::vector<uint64_t>& b,
                                      uint64_t p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const uint64_t lead = a.back() % p;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = (a[shift + i] + (p - lead) * b[i]) % p;
    }
    a.pop_back();
  }
  return a;
}

// Trial division by every monic polynomial of degree 1..deg/2.
inline bool irreducible_by_trial(const std::vector<uint64_t>& f, uint64_t p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (uint64_t code = 0; code < count; ++code) {
      std::vector<uint64_t> g(d + 1, 0);
      uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = c % p;
        c /= p;
      }
      g[d] = 1;
      const std::vector<uint64_t> rem = poly_rem(f, g, p);
      bool zero = true;
      for (uint64_t v : rem) zero = zero && v == 0;
      if (zero) return false;
    }
  }
  return true;
}

// Nested loops over the box with powers computed from scratch.
inline uint64_t count_by_scan(const ExpEquation& eq, const SearchBox& box) {
  const FieldSpec& f = eq.field();
  const std::size_t n = eq.n();
  std::vector<uint64_t> extent(n);
  for (std::size_t k = 0; k < n; ++k) extent[box.perm[k]] = box.extent(k);
  std::vector<uint64_t> x(n, 0);
  uint64_t count = 0;
  while (true) {
    FieldElement sum = f.zero();
    for (std::size_t i = 0; i < n; ++i) {
      sum = f.add(sum, f.mul(eq.terms()[i].a, f.pow(eq.terms()[i].g, x[i])));
    }
    if (sum == eq.b()) ++count;
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++x[i] < extent[i]) break;
      x[i] = 0;
      if (i == 0) return count;
    }
  }
}

}  // namespace expoly::oracle

#endif  // EXPOLY_TESTS_ORACLES_H_
