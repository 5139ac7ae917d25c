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
#include "expoly/instances.h"

#include <vector>

namespace expoly {

FieldElement random_element(const FieldSpec& field, std::mt19937_64& rng) {
  return field.element(uniform_below(rng, field.q()));
}

FieldElement random_unit(const FieldSpec& field, std::mt19937_64& rng) {
  return field.element(1 + uniform_below(rng, field.q() - 1));
}

FieldElement random_primitive(const FieldSpec& field, std::mt19937_64& rng) {
  const Factorization fact = factorize(field.q() - 1);
  while (true) {
    FieldElement g = random_unit(field, rng);
    if (multiplicative_order(field, g, fact).order == field.q() - 1) return g;
  }
}

ExpEquation random_equation(const FieldSpec& field, std::size_t n, std::mt19937_64& rng,
                            const Caps& caps) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < n; ++i) {
    FieldElement a = random_unit(field, rng);
    FieldElement g = random_unit(field, rng);
    terms.push_back({a, g});
  }
  FieldElement b = random_element(field, rng);
  return ExpEquation::create(field, std::move(terms), b, caps);
}

ExpEquation random_max_order_equation(const FieldSpec& field, std::size_t n,
                                      std::mt19937_64& rng, const Caps& caps) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < n; ++i) {
    FieldElement a = random_unit(field, rng);
    FieldElement g = random_primitive(field, rng);
    terms.push_back({a, g});
  }
  FieldElement b = random_element(field, rng);
  return ExpEquation::create(field, std::move(terms), b, caps);
}

}  // namespace expoly
