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

#include <cmath>
#include <numbers>
#include <random>

#include "expoly/charsum.h"
#include "expoly/instances.h"
#include "oracles.h"

namespace expoly {
namespace {

ExpEquation demo(uint64_t b = 3) {
  const FieldSpec f = make_field(7, 1);
  return ExpEquation::create(f, {{f.one(), f.element(3)}, {f.one(), f.element(2)}}, f.element(b));
}

TEST(Equation, Validation) {
  const FieldSpec f = make_field(7, 1);
  EXPECT_THROW(ExpEquation::create(f, {}, f.one()), Error);
  try {
    ExpEquation::create(f, {{f.zero(), f.element(3)}}, f.one());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroElement);
  }
  Caps caps;
  caps.max_terms = 2;
  std::vector<Term> three(3, Term{f.one(), f.element(3)});
  EXPECT_THROW(ExpEquation::create(f, three, f.one(), caps), Error);
  EXPECT_EQ(demo().orders(), (std::vector<uint64_t>{6, 3}));
}

TEST(SearchBox, SortsAndTruncates) {
  const ExpEquation eq = demo();
  const SearchBox full = SearchBox::full(eq);
  EXPECT_EQ(full.sorted_orders, (std::vector<uint64_t>{6, 3}));
  EXPECT_EQ(full.card, 18u);
  EXPECT_TRUE(full.is_full());
  const SearchBox b2 = SearchBox::make(eq, 2);
  EXPECT_EQ(b2.card, 12u);
  EXPECT_EQ(b2.outer_size(), 2u);
  EXPECT_THROW(SearchBox::make(eq, 0), Error);
  EXPECT_THROW(SearchBox::make(eq, 4), Error);
  const std::vector<uint64_t> x = {1, 2};
  EXPECT_EQ(full.to_sorted(full.to_original(x)), x);
}

TEST(SearchBox, StableSortByOrder) {
  const std::vector<uint64_t> orders = {3, 6, 3, 6, 1};
  EXPECT_EQ(sort_by_order_desc(orders), (std::vector<std::size_t>{1, 3, 0, 2, 4}));
}

TEST(Psi, Examples) {
  const FieldSpec f7 = make_field(7, 1);
  const ComplexVal z = psi(f7, f7.zero());
  EXPECT_NEAR(z.real(), 1.0, 1e-15);
  EXPECT_NEAR(z.imag(), 0.0, 1e-15);
  const ComplexVal w = psi(f7, f7.one());
  EXPECT_NEAR(w.real(), std::cos(2 * std::numbers::pi / 7), 1e-12);
  EXPECT_NEAR(w.imag(), std::sin(2 * std::numbers::pi / 7), 1e-12);
  EXPECT_NEAR(w.real(), 0.6235, 1e-4);
  EXPECT_NEAR(w.imag(), 0.7818, 1e-4);
  const FieldSpec f4 = make_field(2, 2);
  EXPECT_NEAR(std::abs(psi(f4, f4.one()) - ComplexVal(1, 0)), 0.0, 1e-15);
}

TEST(Psi, IsAdditive) {
  for (auto [p, nu] : std::vector<std::pair<uint64_t, unsigned>>{{1009, 1}, {3, 5}, {2, 10}}) {
    const FieldSpec f = make_field(p, nu);
    const AdditiveCharacter chi(f);
    std::mt19937_64 rng(p);
    for (int i = 0; i < 2000; ++i) {
      const FieldElement u = f.element(rng() % f.q()), v = f.element(rng() % f.q());
      ASSERT_LT(std::abs(chi(f.add(u, v)) - chi(u) * chi(v)), 1e-12);
    }
  }
}

TEST(DeltaIndicator, IsExactIndicator) {
  for (auto [p, nu] : std::vector<std::pair<uint64_t, unsigned>>{
           {7, 1}, {7, 2}, {2, 6}, {1009, 1}, {2, 12}, {4093, 1}, {3, 7}}) {
    const FieldSpec f = make_field(p, nu);
    for (uint64_t v = 0; v < f.q(); ++v) {
      const double want = v == 0 ? 1.0 : 0.0;
      ASSERT_NEAR(delta_indicator(f, f.element(v)), want, 1e-9) << p << "^" << nu << " u=" << v;
    }
  }
}

TEST(Counting, DemoInstance) {
  const ExpEquation eq = demo();
  const SearchBox box = SearchBox::full(eq);
  const BruteCount bc = brute_count(eq, box);
  EXPECT_EQ(bc.count, 3u);
  ASSERT_TRUE(bc.listed);
  EXPECT_EQ(bc.solutions, (std::vector<std::vector<uint64_t>>{{0, 1}, {2, 0}, {3, 2}}));
  EXPECT_NEAR(count_via_charsum(eq, box), 3.0, 1e-9);
}

TEST(Counting, EmptyRightHandSide) {
  // Scan for a b with no solutions in the full box; orders (2, 2) leave gaps.
  const FieldSpec f = make_field(7, 1);
  const ExpEquation base =
      ExpEquation::create(f, {{f.one(), f.element(6)}, {f.element(2), f.element(6)}}, f.one());
  bool found = false;
  for (uint64_t b = 0; b < 7 && !found; ++b) {
    const ExpEquation eq = base.with_b(base.field().element(b));
    if (oracle::count_by_scan(eq, SearchBox::full(eq)) == 0) {
      found = true;
      EXPECT_EQ(brute_count(eq, SearchBox::full(eq)).count, 0u);
      EXPECT_NEAR(count_via_charsum(eq, SearchBox::full(eq)), 0.0, 1e-9);
    }
  }
  EXPECT_TRUE(found);
}

TEST(Counting, SingleVariable) {
  const FieldSpec f = make_field(7, 1);
  const ExpEquation eq = ExpEquation::create(f, {{f.one(), f.element(3)}}, f.element(2));
  EXPECT_NEAR(count_via_charsum(eq, SearchBox::make(eq, 6)), 1.0, 1e-9);
  EXPECT_EQ(brute_count(eq, SearchBox::make(eq, 6)).count, 1u);
  // b outside a_1 <g_1> with g_1 = 2 of order 3.
  const ExpEquation eq2 = ExpEquation::create(f, {{f.one(), f.element(2)}}, f.element(3));
  EXPECT_EQ(brute_count(eq2, SearchBox::full(eq2)).count, 0u);
}

TEST(Counting, ZeroExponentsSolveSumOfCoefficients) {
  const FieldSpec f = make_field(31, 1);
  std::mt19937_64 rng(2);
  const ExpEquation tmp = random_equation(f, 3, rng);
  FieldElement sum = f.zero();
  for (const Term& t : tmp.terms()) sum = f.add(sum, t.a);
  const ExpEquation eq = tmp.with_b(sum);
  const BruteCount bc = brute_count(eq, SearchBox::make(eq, 1));
  EXPECT_GE(bc.count, 1u);
  EXPECT_EQ(bc.solutions.front(), (std::vector<uint64_t>{0, 0, 0}));
}

TEST(Counting, RandomInstancesAgreeWithScanAndCharsum) {
  std::mt19937_64 rng(77);
  const std::vector<std::pair<uint64_t, unsigned>> fields = {
      {7, 1}, {13, 1}, {101, 1}, {2, 4}, {3, 3}, {5, 2}, {257, 1}};
  for (int i = 0; i < 60; ++i) {
    const auto [p, nu] = fields[i % fields.size()];
    const FieldSpec f = make_field(p, nu);
    const std::size_t n = 1 + rng() % 3;
    const ExpEquation eq = random_equation(f, n, rng);
    const uint64_t sn = SearchBox::full(eq).sorted_orders.back();
    const SearchBox box = SearchBox::make(eq, 1 + rng() % sn);
    if (box.card > 20000) continue;
    const uint64_t want = oracle::count_by_scan(eq, box);
    EXPECT_EQ(brute_count(eq, box).count, want);
    EXPECT_NEAR(count_via_charsum(eq, box), static_cast<double>(want), 1e-6);
  }
}

TEST(Counting, ParallelMatchesSerial) {
  std::mt19937_64 rng(8);
  const FieldSpec f = make_field(1009, 1);
  const ExpEquation eq = random_equation(f, 2, rng);
  const SearchBox box = SearchBox::full(eq);
  const double serial = count_via_charsum(eq, box, {}, 1);
  EXPECT_NEAR(count_via_charsum(eq, box, {}, 4), serial, 1e-12 * std::max(1.0, serial));
}

TEST(Counting, BruteCountRespectsComputeCap) {
  std::mt19937_64 rng(9);
  const FieldSpec f = make_field(101, 1);
  const ExpEquation eq = random_max_order_equation(f, 3, rng);
  Caps caps;
  caps.compute = 1000;
  try {
    brute_count(eq, SearchBox::full(eq), caps);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCapExceeded);
  }
}

TEST(GaussSum, Examples) {
  const FieldSpec f = make_field(7, 1);
  const ComplexVal single = gauss_partial_sum(f, f.element(3), f.element(5), f.one(), 1);
  EXPECT_LT(std::abs(single - psi(f, f.element(1))), 1e-12);
  EXPECT_LE(std::abs(gauss_partial_sum(f, f.one(), f.one(), f.element(3), 6)), std::sqrt(7.0));
  EXPECT_THROW(gauss_partial_sum(f, f.one(), f.one(), f.element(2), 4), Error);
  EXPECT_THROW(gauss_partial_sum(f, f.one(), f.one(), f.element(2), 0), Error);
}

TEST(GaussSum, FullOrderBoundOnSmallFields) {
  for (auto [p, nu] : std::vector<std::pair<uint64_t, unsigned>>{{61, 1}, {2, 6}, {5, 3}, {127, 1}}) {
    const FieldSpec f = make_field(p, nu);
    const double bound = std::sqrt(static_cast<double>(f.q())) + 1e-9;
    for (FieldElement g : enumerate_units(f)) {
      const uint64_t s = oracle::order_by_repetition(f, g);
      for (FieldElement am : enumerate_units(f)) {
        ASSERT_LE(std::abs(gauss_partial_sum(f, am, f.one(), g, s)), bound);
      }
    }
  }
}

TEST(GaussSum, FullSweepAtOneThousand) {
  const FieldSpec f = make_field(2, 10);
  const double bound = std::sqrt(1024.0) + 1e-9;
  std::mt19937_64 rng(10);
  for (int i = 0; i < 8; ++i) {
    const FieldElement g = f.element(1 + rng() % 1023);
    const uint64_t s = oracle::order_by_repetition(f, g);
    for (FieldElement am : enumerate_units(f)) {
      ASSERT_LE(std::abs(gauss_partial_sum(f, am, f.one(), g, s)), bound);
    }
  }
}

}  // namespace
}  // namespace expoly
