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
#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "expoly/instances.h"
#include "expoly/reduction.h"
#include "oracles.h"

namespace expoly {
namespace {

ExpEquation with_bases(uint64_t p, const std::vector<uint64_t>& gs) {
  const FieldSpec f = make_field(p, 1);
  std::vector<Term> terms;
  for (uint64_t g : gs) terms.push_back({f.one(), f.element(g)});
  return ExpEquation::create(f, terms, f.one());
}

TEST(Relate, Examples) {
  const FieldSpec f = make_field(7, 1);
  EXPECT_EQ(relate_same_order(f, f.element(3), f.element(5), 6), 5u);
  EXPECT_EQ(relate_same_order(f, f.element(3), f.element(3), 6), 1u);
  EXPECT_EQ(relate_same_order(f, f.element(2), f.element(4), 3), 2u);
  EXPECT_EQ(relate_same_order(f, f.one(), f.one(), 1), 1u);
  try {
    relate_same_order(f, f.element(3), f.element(2), 6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOrderMismatch);
  }
}

TEST(Relate, RoundTripForCoprimeExponents) {
  const FieldSpec f = make_field(1031, 1);  // 1030 = 2 * 5 * 103
  for (FieldElement g : enumerate_units(f)) {
    const uint64_t s = oracle::order_by_repetition(f, g);
    if (s > 1024 || s < 2) continue;
    for (uint64_t k = 1; k < s; ++k) {
      if (std::gcd(k, s) != 1) continue;
      ASSERT_EQ(relate_same_order(f, g, f.pow(g, k), s), k);
    }
  }
}

TEST(Reduce, Examples) {
  const ReducedEquation r = reduce(with_bases(7, {3, 5, 2}));
  ASSERT_EQ(r.groups.size(), 2u);
  EXPECT_EQ(r.groups[0].order, 6u);
  EXPECT_EQ(r.groups[0].members, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(r.groups[0].relations, (std::vector<uint64_t>{1, 5}));
  EXPECT_EQ(r.groups[1].order, 3u);
  EXPECT_EQ(r.mu, 2u);
  EXPECT_EQ(r.divisor_bound, 4u);
  EXPECT_TRUE(r.bound_holds);
  EXPECT_EQ(reduce(with_bases(31, {3, 3, 3})).mu, 1u);
  EXPECT_EQ(reduce(with_bases(31, {17})).mu, 1u);
}

TEST(Reduce, RelationsReproduceEveryTerm) {
  std::mt19937_64 rng(51);
  for (uint64_t p : {7u, 31u, 257u}) {
    const FieldSpec f = make_field(p, 1);
    for (int i = 0; i < 30; ++i) {
      const ExpEquation eq = random_equation(f, 1 + rng() % 6, rng);
      const ReducedEquation r = reduce(eq);
      EXPECT_LE(r.mu, oracle::divisors(p - 1).size());
      for (const OrderGroup& g : r.groups) {
        const FieldElement h = eq.terms()[g.members[0]].g;
        for (std::size_t j = 0; j < g.members.size(); ++j) {
          const Term& t = eq.terms()[g.members[j]];
          ASSERT_EQ(eq.orders()[g.members[j]], g.order);
          for (uint64_t x = 0; x < g.order; ++x) {
            ASSERT_EQ(f.mul(t.a, f.pow(t.g, x)),
                      f.mul(t.a, f.pow(h, (g.relations[j] * x) % g.order)));
          }
        }
      }
    }
  }
}

TEST(MuBound, Examples) {
  EXPECT_EQ(mu_bound_report(make_field(7, 1), 10, 1).divisor_bound, 4u);
  const MuBoundReport two = mu_bound_report(make_field(2, 1), 10, 1);
  EXPECT_EQ(two.divisor_bound, 1u);
  EXPECT_EQ(two.max_mu, 1u);
  const MuBoundReport big = mu_bound_report(make_field(257, 1), 100, 1);
  EXPECT_EQ(big.divisor_bound, 9u);
  EXPECT_EQ(big.sampled_mu.size(), 100u);
  EXPECT_TRUE(big.bound_holds);
}

TEST(MuBound, HoldsUpToSixteenBits) {
  for (uint64_t p : {3u, 13u, 97u, 1009u, 7919u, 65521u, 65537u}) {
    const MuBoundReport r = mu_bound_report(make_field(p, 1), 20, p);
    EXPECT_TRUE(r.bound_holds) << p;
    EXPECT_LE(r.max_mu, r.divisor_bound);
  }
}

}  // namespace
}  // namespace expoly
