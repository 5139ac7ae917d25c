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
#include "expoly/charsum.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "expoly/parallel.h"

namespace expoly {
namespace {

constexpr uint64_t kCharacterTableLimit = uint64_t{1} << 20;

ComplexVal root_of_unity(uint64_t k, uint64_t p) {
  if (k == 0) return {1.0, 0.0};
  const long double angle =
      2.0L * std::numbers::pi_v<long double> * static_cast<long double>(k) /
      static_cast<long double>(p);
  return {static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle))};
}

}  // namespace

ExpEquation ExpEquation::create(FieldSpec field, std::vector<Term> terms, FieldElement b,
                                const Caps& caps) {
  if (terms.empty()) throw Error(ErrorCode::kInvalidArgument, "equation needs n >= 1 terms");
  if (terms.size() > caps.max_terms) {
    throw Error(ErrorCode::kInvalidArgument, "n=" + std::to_string(terms.size()) +
                                                 " exceeds term cap " +
                                                 std::to_string(caps.max_terms));
  }
  field.check(b);
  ExpEquation eq(std::move(field));
  const FieldSpec& f = eq.field_;
  eq.q_minus_1_ = factorize(f.q() - 1, &eq.setup_cost_);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    f.check(terms[i].a);
    f.check(terms[i].g);
    if (terms[i].a.is_zero() || terms[i].g.is_zero()) {
      throw Error(ErrorCode::kZeroElement,
                  "term " + std::to_string(i + 1) + " has a zero coefficient or base");
    }
    eq.orders_.push_back(
        multiplicative_order(f, terms[i].g, eq.q_minus_1_, &eq.setup_cost_).order);
  }
  eq.terms_ = std::move(terms);
  eq.b_ = b;
  return eq;
}

ExpEquation ExpEquation::with_b(const FieldElement& b) const {
  field_.check(b);
  ExpEquation copy = *this;
  copy.b_ = b;
  return copy;
}

FieldElement ExpEquation::lhs(std::span<const uint64_t> x) const {
  if (x.size() != terms_.size()) {
    throw Error(ErrorCode::kIndexOutOfRange, "assignment has the wrong number of coordinates");
  }
  FieldElement sum = field_.zero();
  for (std::size_t i = 0; i < x.size(); ++i) {
    sum = field_.add(sum, field_.mul(terms_[i].a, field_.pow(terms_[i].g, x[i])));
  }
  return sum;
}

std::vector<std::size_t> sort_by_order_desc(std::span<const uint64_t> orders) {
  std::vector<std::size_t> perm(orders.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t i, std::size_t j) { return orders[i] > orders[j]; });
  return perm;
}

SearchBox SearchBox::make(const ExpEquation& eq, uint64_t r) {
  SearchBox box;
  box.perm = sort_by_order_desc(eq.orders());
  for (std::size_t i : box.perm) box.sorted_orders.push_back(eq.orders()[i]);
  const uint64_t last = box.sorted_orders.back();
  if (r == 0 || r > last) {
    throw Error(ErrorCode::kInvalidArgument,
                "cutoff r=" + std::to_string(r) + " outside [1, s_n=" + std::to_string(last) + "]");
  }
  box.r = r;
  uint64_t card = r;
  for (std::size_t k = 0; k + 1 < box.n(); ++k) {
    auto next = checked_mul(card, box.sorted_orders[k]);
    if (!next) throw Error(ErrorCode::kOverflow, "box cardinality exceeds 64 bits");
    card = *next;
  }
  box.card = card;
  return box;
}

SearchBox SearchBox::full(const ExpEquation& eq) {
  uint64_t smallest = *std::min_element(eq.orders().begin(), eq.orders().end());
  return make(eq, smallest);
}

uint64_t SearchBox::outer_size() const {
  uint64_t t = 1;
  for (std::size_t k = 1; k < n(); ++k) t *= extent(k);
  return t;
}

std::vector<uint64_t> SearchBox::to_original(std::span<const uint64_t> sorted_x) const {
  std::vector<uint64_t> out(n());
  for (std::size_t k = 0; k < n(); ++k) out[perm[k]] = sorted_x[k];
  return out;
}

std::vector<uint64_t> SearchBox::to_sorted(std::span<const uint64_t> original_x) const {
  std::vector<uint64_t> out(n());
  for (std::size_t k = 0; k < n(); ++k) out[k] = original_x[perm[k]];
  return out;
}

AdditiveCharacter::AdditiveCharacter(const FieldSpec& field) : field_(field) {
  if (field_.p() <= kCharacterTableLimit) {
    table_.reserve(field_.p());
    for (uint64_t k = 0; k < field_.p(); ++k) table_.push_back(root_of_unity(k, field_.p()));
  }
}

ComplexVal AdditiveCharacter::of_residue(uint64_t k) const {
  if (!table_.empty()) return table_[k];
  return root_of_unity(k, field_.p());
}

ComplexVal psi(const FieldSpec& field, const FieldElement& u) {
  return root_of_unity(field.trace(u), field.p());
}

double delta_indicator(const FieldSpec& field, const FieldElement& u, const Caps& caps) {
  field.check(u);
  if (field.q() > caps.enumeration) {
    throw Error(ErrorCode::kCapExceeded, "q exceeds enumeration cap");
  }
  AdditiveCharacter chi(field);
  CompensatedSum sum;
  for (uint64_t v = 0; v < field.q(); ++v) sum.add(chi(field.mul(u, field.element(v))));
  return sum.value().real() / static_cast<double>(field.q());
}

std::vector<std::vector<FieldElement>> coordinate_tables(const ExpEquation& eq,
                                                         const SearchBox& box) {
  const FieldSpec& f = eq.field();
  std::vector<std::vector<FieldElement>> tables(box.n());
  for (std::size_t k = 0; k < box.n(); ++k) {
    const Term& term = eq.terms()[box.perm[k]];
    const uint64_t len = box.extent(k);
    tables[k].reserve(len);
    FieldElement v = term.a;
    for (uint64_t x = 0; x < len; ++x) {
      tables[k].push_back(v);
      v = f.mul(v, term.g);
    }
  }
  return tables;
}

double count_via_charsum(const ExpEquation& eq, const SearchBox& box, const Caps& caps,
                         unsigned workers) {
  const FieldSpec& f = eq.field();
  if (f.q() > caps.enumeration) throw Error(ErrorCode::kCapExceeded, "q exceeds enumeration cap");
  if (box.card > caps.compute) throw Error(ErrorCode::kCapExceeded, "box exceeds compute cap");
  const auto tables = coordinate_tables(eq, box);
  const AdditiveCharacter chi(f);
  const FieldElement minus_b = f.neg(eq.b());

  std::vector<CompensatedSum> partial(chunk_count(f.q(), workers));
  run_chunks(f.q(), workers, [&](std::size_t chunk, uint64_t lo, uint64_t hi) {
    CompensatedSum acc;
    for (uint64_t v = lo; v < hi; ++v) {
      const FieldElement mu = f.element(v);
      ComplexVal term = chi(f.mul(mu, minus_b));
      for (const auto& table : tables) {
        CompensatedSum inner;
        for (const FieldElement& c : table) inner.add(chi(f.mul(mu, c)));
        term *= inner.value();
      }
      acc.add(term);
    }
    partial[chunk] = acc;
  });
  CompensatedSum total;
  for (const auto& p : partial) total.add(p);
  return total.value().real() / static_cast<double>(f.q());
}

BruteCount brute_count(const ExpEquation& eq, const SearchBox& box, const Caps& caps) {
  if (box.card > caps.compute) {
    throw Error(ErrorCode::kCapExceeded, "box of " + std::to_string(box.card) +
                                             " points exceeds compute cap");
  }
  BruteCount out;
  out.listed = box.card <= caps.solution_list;
  const auto tables = coordinate_tables(eq, box);
  const uint64_t target = eq.b().value();
  walk_box(eq.field(), tables, 0, box.extent(0),
           [&](std::span<const uint64_t> x, const FieldElement& sum) {
             if (sum.value() != target) return;
             ++out.count;
             if (out.listed) out.solutions.emplace_back(x.begin(), x.end());
           });
  return out;
}

ComplexVal gauss_partial_sum(const FieldSpec& field, const FieldElement& a,
                             const FieldElement& mu, const FieldElement& g, uint64_t limit) {
  if (limit == 0) throw Error(ErrorCode::kInvalidArgument, "limit must be >= 1");
  field.check(g);
  if (g.is_zero()) throw Error(ErrorCode::kZeroElement, "g must be a unit");
  const AdditiveCharacter chi(field);
  const FieldElement base = field.mul(a, mu);
  FieldElement power = field.one();
  CompensatedSum sum;
  for (uint64_t x = 0; x < limit; ++x) {
    if (x > 0 && power == field.one()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "limit " + std::to_string(limit) + " exceeds the order of g");
    }
    sum.add(chi(field.mul(base, power)));
    power = field.mul(power, g);
  }
  return sum.value();
}

}  // namespace expoly
