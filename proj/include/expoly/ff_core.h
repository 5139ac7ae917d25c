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
#ifndef EXPOLY_FF_CORE_H_
#define EXPOLY_FF_CORE_H_

#include <cstdint>
#include <iterator>
#include <span>
#include <vector>

#include "expoly/common.h"

namespace expoly {

class FieldSpec;

// An element of F_q in polynomial basis. The coefficients (c_0, ..., c_{nu-1})
// are stored packed as sum c_i p^i, which is also the integer wire encoding.
// Packing is a bijection onto [0, q), so equality is coefficient-wise.
class FieldElement {
 public:
  FieldElement() = default;

  uint64_t value() const { return value_; }
  uint64_t field_tag() const { return tag_; }
  bool is_zero() const { return value_ == 0; }

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  friend class FieldSpec;
  FieldElement(uint64_t value, uint64_t tag) : value_(value), tag_(tag) {}

  uint64_t value_ = 0;
  uint64_t tag_ = 0;
};

// Forward range over the q-1 units of a field in packed (coefficient
// lexicographic) order.
class UnitRange {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = FieldElement;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(const FieldSpec* field, uint64_t value) : field_(field), value_(value) {}
    FieldElement operator*() const;
    iterator& operator++() {
      ++value_;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++value_;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.value_ == b.value_;
    }

   private:
    const FieldSpec* field_ = nullptr;
    uint64_t value_ = 0;
  };

  UnitRange(const FieldSpec* field, uint64_t q) : field_(field), q_(q) {}
  iterator begin() const { return iterator(field_, 1); }
  iterator end() const { return iterator(field_, q_); }
  uint64_t size() const { return q_ - 1; }

 private:
  const FieldSpec* field_;
  uint64_t q_;
};

// The field F_q, q = p^nu, together with its arithmetic. Immutable after
// construction; all members are const and safe to share between threads.
class FieldSpec {
 public:
  // Largest supported cardinality.
  static constexpr uint64_t kMaxCardinality = uint64_t{1} << 62;

  // Builds F_{p^nu} using the first monic irreducible of degree nu in packed
  // order of its lower coefficients. Throws kNotPrime, kFieldTooLarge.
  static FieldSpec make(uint64_t p, unsigned nu);

  // Builds a field from an explicit modulus (low-to-high, monic, length
  // nu+1). Throws kInvalidArgument when the modulus is not irreducible.
  static FieldSpec with_modulus(uint64_t p, std::vector<uint64_t> modulus);

  uint64_t p() const { return p_; }
  unsigned nu() const { return nu_; }
  uint64_t q() const { return q_; }
  bool is_prime_field() const { return nu_ == 1; }
  // Coefficients of the modulus, constant term first; X for prime fields.
  const std::vector<uint64_t>& modulus_poly() const { return modulus_; }
  uint64_t tag() const { return tag_; }

  FieldElement zero() const { return FieldElement(0, tag_); }
  FieldElement one() const { return FieldElement(1, tag_); }
  // Packed integer encoding -> element. Throws kInvalidArgument if >= q.
  FieldElement element(uint64_t packed) const;
  FieldElement from_coefficients(std::span<const uint64_t> coeffs) const;
  std::vector<uint64_t> coefficients(const FieldElement& x) const;

  FieldElement add(const FieldElement& x, const FieldElement& y) const;
  FieldElement sub(const FieldElement& x, const FieldElement& y) const;
  FieldElement neg(const FieldElement& x) const;
  FieldElement mul(const FieldElement& x, const FieldElement& y) const;
  // Throws kDivisionByZero for zero.
  FieldElement inv(const FieldElement& x) const;

  // Square-and-multiply, 0^0 = 1. When `mults` is given it is incremented by
  // the number of field multiplications performed, which is
  // (bit_width(k) - 1) + (popcount(k) - 1) for k > 0.
  FieldElement pow(const FieldElement& x, uint64_t k, uint64_t* mults = nullptr) const;

  // Absolute trace to F_p, returned as a residue in [0, p).
  uint64_t trace(const FieldElement& x) const;

  // Throws kFieldMismatch unless x belongs to this field.
  void check(const FieldElement& x) const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.p_ == b.p_ && a.nu_ == b.nu_ && a.modulus_ == b.modulus_;
  }

 private:
  FieldSpec(uint64_t p, unsigned nu, std::vector<uint64_t> modulus);

  uint64_t mul_p(uint64_t a, uint64_t b) const {
    return small_p_ ? a * b % p_
                    : static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
  }
  FieldElement mul_unchecked(uint64_t x, uint64_t y) const;
  void unpack(uint64_t v, uint64_t* out) const;
  uint64_t pack(const uint64_t* coeffs) const;

  uint64_t p_ = 0;
  unsigned nu_ = 0;
  uint64_t q_ = 0;
  bool small_p_ = false;
  std::vector<uint64_t> modulus_;
  // Tr(X^i) for i < nu; trace is linear over F_p.
  std::vector<uint64_t> trace_basis_;
  uint64_t tag_ = 0;
};

inline FieldSpec make_field(uint64_t p, unsigned nu) { return FieldSpec::make(p, nu); }

// All q-1 units in packed order. Throws kCapExceeded if q > cap.
UnitRange enumerate_units(const FieldSpec& field, uint64_t cap = Caps{}.enumeration);

inline FieldElement UnitRange::iterator::operator*() const {
  return field_->element(value_);
}

// Deterministic polynomial helpers over F_p, exposed for tests.
namespace poly {
// True iff the monic polynomial f (low-to-high) of degree >= 1 is irreducible
// over F_p, by Rabin's test.
bool is_irreducible(std::span<const uint64_t> f, uint64_t p);
}  // namespace poly

}  // namespace expoly

#endif  // EXPOLY_FF_CORE_H_
