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
#include "expoly/reduction.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>

#include "expoly/instances.h"

namespace expoly {

uint64_t relate_same_order(const FieldSpec& field, const FieldElement& g1, const FieldElement& g2,
                           uint64_t s) {
  const Factorization fact = factorize(field.q() - 1);
  const uint64_t s1 = multiplicative_order(field, g1, fact).order;
  const uint64_t s2 = multiplicative_order(field, g2, fact).order;
  if (s1 != s || s2 != s) {
    throw Error(ErrorCode::kOrderMismatch, "orders " + std::to_string(s1) + " and " +
                                               std::to_string(s2) + " do not both equal " +
                                               std::to_string(s));
  }
  if (s == 1) return 1;
  auto l = bsgs_dlog(field, g1, s, g2);
  if (!l || std::gcd(*l, s) != 1) {
    throw Error(ErrorCode::kOrderMismatch, "same-order elements failed to relate");
  }
  return *l;
}

ReducedEquation reduce(const ExpEquation& eq) {
  ReducedEquation out;
  std::map<uint64_t, std::size_t> group_of_order;
  for (std::size_t i = 0; i < eq.n(); ++i) {
    const uint64_t s = eq.orders()[i];
    auto [it, inserted] = group_of_order.emplace(s, out.groups.size());
    if (inserted) out.groups.push_back(OrderGroup{s, {}, {}});
    OrderGroup& group = out.groups[it->second];
    if (group.members.empty()) {
      group.members.push_back(i);
      group.relations.push_back(1);
      continue;
    }
    const FieldElement& h = eq.terms()[group.members.front()].g;
    const FieldElement& g = eq.terms()[i].g;
    uint64_t l = 1;
    if (s > 1) {
      auto found = bsgs_dlog(eq.field(), h, s, g);
      if (!found) throw Error(ErrorCode::kOrderMismatch, "same-order bases failed to relate");
      l = *found;
    }
    group.members.push_back(i);
    group.relations.push_back(l);
  }
  out.mu = out.groups.size();
  out.divisor_bound = divisor_count(eq.field().q() - 1);
  out.bound_holds = out.mu <= out.divisor_bound;
  return out;
}

MuBoundReport mu_bound_report(const FieldSpec& field, uint64_t samples, uint64_t seed,
                              std::size_t max_terms) {
  MuBoundReport rep;
  rep.q = field.q();
  rep.divisor_bound = divisor_count(field.q() - 1);
  std::mt19937_64 rng(seed);
  Caps caps;
  caps.max_terms = std::max(caps.max_terms, max_terms);
  for (uint64_t i = 0; i < samples; ++i) {
    const std::size_t n = 1 + uniform_below(rng, max_terms);
    const ExpEquation eq = random_equation(field, n, rng, caps);
    const ReducedEquation red = reduce(eq);
    rep.sampled_mu.push_back(red.mu);
    rep.max_mu = std::max(rep.max_mu, red.mu);
  }
  rep.bound_holds = rep.max_mu <= rep.divisor_bound;
  return rep;
}

}  // namespace expoly
