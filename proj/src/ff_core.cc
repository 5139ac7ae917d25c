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
#include "expoly/ff_core.h"

#include <algorithm>
#include <array>
#include <bit>
#include <string>

#include "expoly/modular.h"

namespace expoly {
namespace {

// ν is at most 62 because p >= 2 and q <= 2^62.
constexpr std::size_t kMaxDegree = 64;

using Poly = std::vector<uint64_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod f for monic f.
Poly poly_mod(Poly a, std::span<const uint64_t> f, uint64_t p) {
  trim(a);
  const std::size_t n = f.size() - 1;
  while (a.size() > n) {
    const uint64_t c = a.back();
    const std::size_t shift = a.size() - 1 - n;
    for (std::size_t j = 0; j < n; ++j) {
      a[shift + j] = sub_mod(a[shift + j], mul_mod(c, f[j], p), p);
    }
    a.pop_back();
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, std::span<const uint64_t> f, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = add_mod(prod[i + j], mul_mod(a[i], b[j], p), p);
    }
  }
  return poly_mod(std::move(prod), f, p);
}

Poly poly_powmod(Poly base, uint64_t e, std::span<const uint64_t> f, uint64_t p) {
  Poly result{1};
  base = poly_mod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) result = poly_mulmod(result, base, f, p);
    e >>= 1;
    if (e > 0) base = poly_mulmod(base, base, f, p);
  }
  return result;
}

// Remainder of a by b for arbitrary nonzero b.
Poly poly_rem(Poly a, Poly b, uint64_t p) {
  trim(a);
  trim(b);
  const uint64_t lead_inv = pow_mod(b.back(), p - 2, p);
  while (a.size() >= b.size()) {
    const uint64_t c = mul_mod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) {
      a[shift + j] = sub_mod(a[shift + j], mul_mod(c, b[j], p), p);
    }
    trim(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b, uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<uint64_t> prime_divisors(uint64_t n) {
  std::vector<uint64_t> out;
  for (uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

uint64_t fingerprint(uint64_t p, unsigned nu, const std::vector<uint64_t>& modulus) {
  uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(p);
  mix(nu);
  for (uint64_t c : modulus) mix(c);
  return h == 0 ? 1 : h;
}

}  // namespace

namespace poly {

bool is_irreducible(std::span<const uint64_t> f, uint64_t p) {
  if (f.size() < 2 || f.back() != 1) {
    throw Error(ErrorCode::kInvalidArgument, "irreducibility test needs a monic polynomial");
  }
  const std::size_t n = f.size() - 1;
  if (n == 1) return true;
  // frob[k] = X^{p^k} mod f.
  std::vector<Poly> frob(n + 1);
  frob[0] = poly_mod(Poly{0, 1}, f, p);
  for (std::size_t k = 1; k <= n; ++k) {
    frob[k] = poly_powmod(frob[k - 1], p, f, p);
  }
  if (frob[n] != frob[0]) return false;
  for (uint64_t ell : prime_divisors(n)) {
    Poly h = frob[n / ell];
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = sub_mod(h[1], 1, p);
    trim(h);
    if (h.empty()) return false;
    Poly g = poly_gcd(Poly(f.begin(), f.end()), h, p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace poly

FieldSpec::FieldSpec(uint64_t p, unsigned nu, std::vector<uint64_t> modulus)
    : p_(p), nu_(nu), small_p_(p < (uint64_t{1} << 32)), modulus_(std::move(modulus)) {
  q_ = 1;
  for (unsigned i = 0; i < nu_; ++i) q_ *= p_;
  tag_ = fingerprint(p_, nu_, modulus_);
  trace_basis_.assign(nu_, 0);
  if (nu_ == 1) {
    trace_basis_[0] = 1;
    return;
  }
  uint64_t basis = 1;
  for (unsigned i = 0; i < nu_; ++i, basis *= p_) {
    FieldElement conj(basis, tag_);
    FieldElement sum = zero();
    for (unsigned j = 0; j < nu_; ++j) {
      sum = add(sum, conj);
      conj = pow(conj, p_);
    }
    // The trace lies in the prime subfield, i.e. packs to a value below p.
    trace_basis_[i] = sum.value();
  }
}

FieldSpec FieldSpec::make(uint64_t p, unsigned nu) {
  if (nu == 0) throw Error(ErrorCode::kInvalidArgument, "extension degree must be >= 1");
  if (!is_prime_u64(p)) {
    throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  }
  uint64_t q = 1;
  for (unsigned i = 0; i < nu; ++i) {
    auto next = checked_mul(q, p);
    if (!next || *next > kMaxCardinality) {
      throw Error(ErrorCode::kFieldTooLarge,
                  std::to_string(p) + "^" + std::to_string(nu) + " exceeds 2^62");
    }
    q = *next;
  }
  if (nu == 1) return FieldSpec(p, 1, {0, 1});

  const uint64_t lower_count = q;  // p^nu choices of (c_0, ..., c_{nu-1})
  std::vector<uint64_t> f(nu + 1, 0);
  f[nu] = 1;
  for (uint64_t k = 0; k < lower_count; ++k) {
    uint64_t v = k;
    for (unsigned i = 0; i < nu; ++i) {
      f[i] = v % p;
      v /= p;
    }
    if (f[0] == 0) continue;  // divisible by X
    if (poly::is_irreducible(f, p)) return FieldSpec(p, nu, f);
  }
  // Irreducibles exist in every degree.
  throw Error(ErrorCode::kInvalidArgument, "no irreducible polynomial found");
}

FieldSpec FieldSpec::with_modulus(uint64_t p, std::vector<uint64_t> modulus) {
  if (modulus.size() < 2) throw Error(ErrorCode::kInvalidArgument, "modulus degree must be >= 1");
  const unsigned nu = static_cast<unsigned>(modulus.size() - 1);
  FieldSpec canonical = make(p, nu);
  if (nu == 1) {
    if (modulus != std::vector<uint64_t>{0, 1}) {
      throw Error(ErrorCode::kInvalidArgument, "prime field modulus must be X");
    }
    return canonical;
  }
  for (uint64_t c : modulus) {
    if (c >= p) throw Error(ErrorCode::kInvalidArgument, "modulus coefficient out of range");
  }
  if (!poly::is_irreducible(modulus, p)) {
    throw Error(ErrorCode::kInvalidArgument, "modulus is not monic irreducible");
  }
  return FieldSpec(p, nu, std::move(modulus));
}

void FieldSpec::check(const FieldElement& x) const {
  if (x.tag_ != tag_) throw Error(ErrorCode::kFieldMismatch, "element from a different field");
}

FieldElement FieldSpec::element(uint64_t packed) const {
  if (packed >= q_) {
    throw Error(ErrorCode::kInvalidArgument,
                "element encoding " + std::to_string(packed) + " is not below q=" +
                    std::to_string(q_));
  }
  return FieldElement(packed, tag_);
}

FieldElement FieldSpec::from_coefficients(std::span<const uint64_t> coeffs) const {
  if (coeffs.size() != nu_) {
    throw Error(ErrorCode::kInvalidArgument, "expected exactly nu coefficients");
  }
  for (uint64_t c : coeffs) {
    if (c >= p_) throw Error(ErrorCode::kInvalidArgument, "coefficient not reduced mod p");
  }
  return FieldElement(pack(coeffs.data()), tag_);
}

std::vector<uint64_t> FieldSpec::coefficients(const FieldElement& x) const {
  check(x);
  std::vector<uint64_t> out(nu_);
  unpack(x.value_, out.data());
  return out;
}

void FieldSpec::unpack(uint64_t v, uint64_t* out) const {
  for (unsigned i = 0; i < nu_; ++i) {
    out[i] = v % p_;
    v /= p_;
  }
}

uint64_t FieldSpec::pack(const uint64_t* coeffs) const {
  uint64_t v = 0;
  for (unsigned i = nu_; i-- > 0;) v = v * p_ + coeffs[i];
  return v;
}

FieldElement FieldSpec::add(const FieldElement& x, const FieldElement& y) const {
  check(x);
  check(y);
  if (nu_ == 1) return FieldElement(add_mod(x.value_, y.value_, p_), tag_);
  if (p_ == 2) return FieldElement(x.value_ ^ y.value_, tag_);
  std::array<uint64_t, kMaxDegree> a, b;
  unpack(x.value_, a.data());
  unpack(y.value_, b.data());
  for (unsigned i = 0; i < nu_; ++i) a[i] = add_mod(a[i], b[i], p_);
  return FieldElement(pack(a.data()), tag_);
}

FieldElement FieldSpec::neg(const FieldElement& x) const {
  check(x);
  if (nu_ == 1) return FieldElement(x.value_ == 0 ? 0 : p_ - x.value_, tag_);
  if (p_ == 2) return x;
  std::array<uint64_t, kMaxDegree> a;
  unpack(x.value_, a.data());
  for (unsigned i = 0; i < nu_; ++i) a[i] = a[i] == 0 ? 0 : p_ - a[i];
  return FieldElement(pack(a.data()), tag_);
}

FieldElement FieldSpec::sub(const FieldElement& x, const FieldElement& y) const {
  return add(x, neg(y));
}

FieldElement FieldSpec::mul_unchecked(uint64_t x, uint64_t y) const {
  if (nu_ == 1) return FieldElement(mul_p(x, y), tag_);
  std::array<uint64_t, kMaxDegree> a, b;
  std::array<uint64_t, 2 * kMaxDegree> prod{};
  unpack(x, a.data());
  unpack(y, b.data());
  for (unsigned i = 0; i < nu_; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < nu_; ++j) {
      prod[i + j] = add_mod(prod[i + j], mul_p(a[i], b[j]), p_);
    }
  }
  // Reduce with X^nu = -(m_0 + m_1 X + ... + m_{nu-1} X^{nu-1}).
  for (unsigned i = 2 * nu_ - 2; i >= nu_; --i) {
    const uint64_t c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    const unsigned shift = i - nu_;
    for (unsigned j = 0; j < nu_; ++j) {
      prod[shift + j] = sub_mod(prod[shift + j], mul_p(c, modulus_[j]), p_);
    }
  }
  return FieldElement(pack(prod.data()), tag_);
}

FieldElement FieldSpec::mul(const FieldElement& x, const FieldElement& y) const {
  check(x);
  check(y);
  return mul_unchecked(x.value_, y.value_);
}

FieldElement FieldSpec::pow(const FieldElement& x, uint64_t k, uint64_t* mults) const {
  check(x);
  if (k == 0) return one();
  FieldElement result = x;
  uint64_t count = 0;
  for (int bit = std::bit_width(k) - 2; bit >= 0; --bit) {
    result = mul_unchecked(result.value_, result.value_);
    ++count;
    if ((k >> bit) & 1) {
      result = mul_unchecked(result.value_, x.value_);
      ++count;
    }
  }
  if (mults != nullptr) *mults += count;
  return result;
}

FieldElement FieldSpec::inv(const FieldElement& x) const {
  check(x);
  if (x.is_zero()) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  if (nu_ > 1) return pow(x, q_ - 2);
  // Extended Euclid on (p, x) with signed 128-bit Bezout coefficients.
  __int128 r0 = static_cast<__int128>(p_), r1 = x.value_;
  __int128 t0 = 0, t1 = 1;
  while (r1 != 0) {
    const __int128 quot = r0 / r1;
    __int128 tmp = r0 - quot * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - quot * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t0 < 0) t0 += p_;
  return FieldElement(static_cast<uint64_t>(t0), tag_);
}

uint64_t FieldSpec::trace(const FieldElement& x) const {
  check(x);
  if (nu_ == 1) return x.value_;
  std::array<uint64_t, kMaxDegree> a;
  unpack(x.value_, a.data());
  uint64_t t = 0;
  for (unsigned i = 0; i < nu_; ++i) t = add_mod(t, mul_p(a[i], trace_basis_[i]), p_);
  return t;
}

UnitRange enumerate_units(const FieldSpec& field, uint64_t cap) {
  if (field.q() > cap) {
    throw Error(ErrorCode::kCapExceeded, "q=" + std::to_string(field.q()) +
                                             " exceeds enumeration cap " + std::to_string(cap));
  }
  return UnitRange(&field, field.q());
}

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kFieldTooLarge: return "FieldTooLarge";
    case ErrorCode::kFieldMismatch: return "FieldMismatch";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kZeroElement: return "ZeroElement";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kMemoryCap: return "MemoryCap";
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kBadDelta: return "BadDelta";
    case ErrorCode::kBadCounts: return "BadCounts";
    case ErrorCode::kHypothesisFailed: return "HypothesisFailed";
    case ErrorCode::kOrderMismatch: return "OrderMismatch";
  }
  return "Unknown";
}

std::string_view log_base_name(LogBase base) {
  return base == LogBase::kNatural ? "natural" : "base2";
}

std::optional<LogBase> parse_log_base(std::string_view name) {
  if (name == "natural" || name == "ln" || name == "e") return LogBase::kNatural;
  if (name == "base2" || name == "2" || name == "log2") return LogBase::kBase2;
  return std::nullopt;
}

}  // namespace expoly
