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
#ifndef EXPOLY_REDUCTION_H_
#define EXPOLY_REDUCTION_H_

#include <cstdint>
#include <vector>

#include "expoly/arith.h"
#include "expoly/charsum.h"

namespace expoly {

// l in [1, s) with gcd(l, s) = 1 and g1^l = g2, where both elements have
// order s. Same-order elements generate the same cyclic subgroup, so the
// discrete logarithm always exists. For s = 1 the answer is l = 1. Throws
// kOrderMismatch when either element does not have order s.
uint64_t relate_same_order(const FieldSpec& field, const FieldElement& g1, const FieldElement& g2,
                           uint64_t s);

struct OrderGroup {
  uint64_t order = 0;
  // Original term indices, increasing; the first is the representative h.
  std::vector<std::size_t> members;
  // relations[i]: g_{members[i]} = h^{relations[i]}; 1 for the representative.
  std::vector<uint64_t> relations;

  friend bool operator==(const OrderGroup&, const OrderGroup&) = default;
};

// Terms grouped by multiplicative order. Variables are not merged: every
// member keeps its own exponent, and mu counts the distinct orders.
struct ReducedEquation {
  std::vector<OrderGroup> groups;  // by first appearance
  std::size_t mu = 0;
  uint64_t divisor_bound = 0;  // d(q - 1)
  bool bound_holds = false;    // mu <= d(q - 1)

  friend bool operator==(const ReducedEquation&, const ReducedEquation&) = default;
};

ReducedEquation reduce(const ExpEquation& eq);

struct MuBoundReport {
  uint64_t q = 0;
  uint64_t divisor_bound = 0;
  std::vector<std::size_t> sampled_mu;
  std::size_t max_mu = 0;
  bool bound_holds = false;
};

// Reduces `samples` random equations over the field (n uniform in
// [1, max_terms], coefficients and bases uniform units, seeded) and records
// each mu.
MuBoundReport mu_bound_report(const FieldSpec& field, uint64_t samples, uint64_t seed,
                              std::size_t max_terms = 16);

}  // namespace expoly

#endif  // EXPOLY_REDUCTION_H_
