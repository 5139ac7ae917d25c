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
#ifndef EXPOLY_CHARSUM_H_
#define EXPOLY_CHARSUM_H_

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "expoly/arith.h"
#include "expoly/common.h"
#include "expoly/ff_core.h"

namespace expoly {

using ComplexVal = std::complex<double>;

struct Term {
  FieldElement a;
  FieldElement g;
  friend bool operator==(const Term&, const Term&) = default;
};

// f_b(x_1, ..., x_n) = a_1 g_1^{x_1} + ... + a_n g_n^{x_n} - b with the
// multiplicative orders of the g_i computed and cached at construction.
class ExpEquation {
 public:
  // Throws kZeroElement for a zero a_i or g_i, kInvalidArgument when n is 0
  // or above caps.max_terms, kFieldMismatch for foreign elements.
  static ExpEquation create(FieldSpec field, std::vector<Term> terms, FieldElement b,
                            const Caps& caps = {});

  const FieldSpec& field() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }
  const FieldElement& b() const { return b_; }
  const std::vector<uint64_t>& orders() const { return orders_; }
  std::size_t n() const { return terms_.size(); }
  const Factorization& q_minus_1() const { return q_minus_1_; }
  // Factoring q - 1 and finding the orders.
  const OpCounter& setup_cost() const { return setup_cost_; }

  // Same terms and orders, different right-hand side.
  ExpEquation with_b(const FieldElement& b) const;

  // sum a_i g_i^{x_i} in original variable order (without the -b).
  FieldElement lhs(std::span<const uint64_t> x) const;

 private:
  ExpEquation(FieldSpec field) : field_(std::move(field)) {}

  FieldSpec field_;
  std::vector<Term> terms_;
  FieldElement b_;
  std::vector<uint64_t> orders_;
  Factorization q_minus_1_;
  OpCounter setup_cost_;
};

// The domain X_1 x ... x X_{n-1} x X_n(r) after sorting the terms so that
// s_1 >= ... >= s_n (stable in the original index).
struct SearchBox {
  // perm[k] is the original index of sorted coordinate k.
  std::vector<std::size_t> perm;
  std::vector<uint64_t> sorted_orders;
  uint64_t r = 0;
  uint64_t card = 0;

  // Throws kInvalidArgument unless 1 <= r <= s_n, kOverflow if the
  // cardinality does not fit in 64 bits.
  static SearchBox make(const ExpEquation& eq, uint64_t r);
  // r = s_n: the whole domain.
  static SearchBox full(const ExpEquation& eq);

  std::size_t n() const { return perm.size(); }
  // Range of sorted coordinate k: s_k, except r for the last one.
  uint64_t extent(std::size_t k) const { return k + 1 == n() ? r : sorted_orders[k]; }
  // Points of X_2 x ... x X_n(r); 1 for a single variable.
  uint64_t outer_size() const;
  bool is_full() const { return r == sorted_orders.back(); }

  std::vector<uint64_t> to_original(std::span<const uint64_t> sorted_x) const;
  std::vector<uint64_t> to_sorted(std::span<const uint64_t> original_x) const;

  friend bool operator==(const SearchBox&, const SearchBox&) = default;
};

// Stable permutation ordering the indices by decreasing order.
std::vector<std::size_t> sort_by_order_desc(std::span<const uint64_t> orders);

// Canonical additive character psi(u) = exp(2 pi i Tr(u) / p). Values are
// cached per residue when p <= 2^20.
class AdditiveCharacter {
 public:
  explicit AdditiveCharacter(const FieldSpec& field);

  ComplexVal operator()(const FieldElement& u) const { return of_residue(field_.trace(u)); }
  ComplexVal of_residue(uint64_t k) const;

 private:
  FieldSpec field_;
  std::vector<ComplexVal> table_;
};

ComplexVal psi(const FieldSpec& field, const FieldElement& u);

// Neumaier-compensated complex accumulator.
class CompensatedSum {
 public:
  void add(ComplexVal v) {
    add_part(v.real(), sum_re_, comp_re_);
    add_part(v.imag(), sum_im_, comp_im_);
  }
  void add(const CompensatedSum& other) {
    add(other.value());
  }
  ComplexVal value() const { return {sum_re_ + comp_re_, sum_im_ + comp_im_}; }

 private:
  static void add_part(double x, double& sum, double& comp) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  double sum_re_ = 0, sum_im_ = 0, comp_re_ = 0, comp_im_ = 0;
};

// (1/q) sum_{mu in F_q} psi(u mu): 1 for u = 0, 0 otherwise, up to rounding.
// Throws kCapExceeded if q exceeds the enumeration cap.
double delta_indicator(const FieldSpec& field, const FieldElement& u, const Caps& caps = {});

// N_{f_b}(r) through the character sum
//   (1/q) sum_mu psi(-mu b) prod_j sum_{x_j} psi(mu a_j g_j^{x_j}),
// accumulated in unit-enumeration order. With workers > 1 the mu range is
// split into contiguous chunks whose partial sums are combined in order.
double count_via_charsum(const ExpEquation& eq, const SearchBox& box, const Caps& caps = {},
                         unsigned workers = 1);

struct BruteCount {
  uint64_t count = 0;
  // Solutions in sorted coordinates, lexicographic; filled only when the box
  // is within caps.solution_list.
  bool listed = false;
  std::vector<std::vector<uint64_t>> solutions;
};

// Exhaustive count of f_b = 0 over the box.
BruteCount brute_count(const ExpEquation& eq, const SearchBox& box, const Caps& caps = {});

// sum_{x=0}^{limit-1} psi(a mu g^x). Throws kInvalidArgument if limit is 0
// or exceeds the order of g.
ComplexVal gauss_partial_sum(const FieldSpec& field, const FieldElement& a,
                             const FieldElement& mu, const FieldElement& g, uint64_t limit);

// a_k g_k^x for every sorted coordinate k and x below its extent.
std::vector<std::vector<FieldElement>> coordinate_tables(const ExpEquation& eq,
                                                         const SearchBox& box);

// Visits the box points whose first sorted coordinate lies in [lo, hi), in
// lexicographic order, calling fn(x, sum) with x in sorted coordinates and
// sum = sum_k tables[k][x_k].
template <class Fn>
void walk_box(const FieldSpec& field, const std::vector<std::vector<FieldElement>>& tables,
              uint64_t lo, uint64_t hi, Fn&& fn) {
  const std::size_t n = tables.size();
  if (n == 0 || lo >= hi) return;
  std::vector<uint64_t> x(n, 0);
  x[0] = lo;
  std::vector<FieldElement> partial(n + 1, field.zero());
  for (std::size_t k = 0; k < n; ++k) {
    if (tables[k].empty()) return;
    partial[k + 1] = field.add(partial[k], tables[k][x[k]]);
  }
  while (true) {
    fn(std::span<const uint64_t>(x), partial[n]);
    std::size_t k = n - 1;
    while (true) {
      ++x[k];
      const uint64_t limit = k == 0 ? hi : tables[k].size();
      if (x[k] < limit) break;
      if (k == 0) return;
      x[k] = 0;
      --k;
    }
    for (std::size_t j = k; j < n; ++j) partial[j + 1] = field.add(partial[j], tables[j][x[j]]);
  }
}

}  // namespace expoly

#endif  // EXPOLY_CHARSUM_H_
