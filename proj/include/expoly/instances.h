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
#ifndef EXPOLY_INSTANCES_H_
#define EXPOLY_INSTANCES_H_

#include <cstdint>
#include <random>

#include "expoly/charsum.h"

namespace expoly {

// Seeded instance generation. Draws go through uniform_below on a
// std::mt19937_64, so a seed names the same instance on every platform.

FieldElement random_element(const FieldSpec& field, std::mt19937_64& rng);
FieldElement random_unit(const FieldSpec& field, std::mt19937_64& rng);
// Rejection-samples a generator of the unit group.
FieldElement random_primitive(const FieldSpec& field, std::mt19937_64& rng);

// a_i, g_i uniform units, b uniform in F_q.
ExpEquation random_equation(const FieldSpec& field, std::size_t n, std::mt19937_64& rng,
                            const Caps& caps = {});

// Same, with every g_i a generator so that all orders equal q - 1.
ExpEquation random_max_order_equation(const FieldSpec& field, std::size_t n,
                                      std::mt19937_64& rng, const Caps& caps = {});

}  // namespace expoly

#endif  // EXPOLY_INSTANCES_H_
