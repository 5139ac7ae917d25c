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
#ifndef EXPOLY_REPORTS_H_
#define EXPOLY_REPORTS_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "expoly/density.h"
#include "expoly/qmodel.h"
#include "expoly/reduction.h"
#include "expoly/solver.h"

namespace expoly {

inline constexpr int kSchemaVersion = 1;

struct OrderRow {
  std::size_t index = 0;  // 1-based term index
  uint64_t g = 0;
  uint64_t order = 0;
  friend bool operator==(const OrderRow&, const OrderRow&) = default;
};

struct OrdersReport {
  EquationSummary equation;
  std::vector<std::pair<uint64_t, unsigned>> q_minus_1;
  std::vector<OrderRow> rows;

  static OrdersReport of(const ExpEquation& eq);
  friend bool operator==(const OrdersReport&, const OrdersReport&) = default;
};

// Exhaustive count next to the character-sum evaluation.
struct CountReport {
  EquationSummary equation;
  uint64_t b = 0;
  SearchBox box;
  uint64_t brute = 0;
  // Original variable order; present when the box is small enough to list.
  std::optional<std::vector<std::vector<uint64_t>>> solutions;
  std::optional<double> charsum;
  bool agree = false;
  friend bool operator==(const CountReport&, const CountReport&) = default;
};

using nlohmann::json;

void to_json(json& j, const SearchBox& v);
void from_json(const json& j, SearchBox& v);
void to_json(json& j, const EquationSummary& v);
void from_json(const json& j, EquationSummary& v);
void to_json(json& j, const PerBRow& v);
void from_json(const json& j, PerBRow& v);
void to_json(json& j, const DensityReport& v);
void from_json(const json& j, DensityReport& v);
void to_json(json& j, const SolveCounts& v);
void from_json(const json& j, SolveCounts& v);
void to_json(json& j, const SolutionReport& v);
void from_json(const json& j, SolutionReport& v);
void to_json(json& j, const Rational& v);
void from_json(const json& j, Rational& v);
void to_json(json& j, const ExponentRow& v);
void from_json(const json& j, ExponentRow& v);
void to_json(json& j, const ExponentTable& v);
void from_json(const json& j, ExponentTable& v);
void to_json(json& j, const ChainCheck& v);
void from_json(const json& j, ChainCheck& v);
void to_json(json& j, const QueryCostReport& v);
void from_json(const json& j, QueryCostReport& v);
void to_json(json& j, const OrderGroup& v);
void from_json(const json& j, OrderGroup& v);
void to_json(json& j, const ReducedEquation& v);
void from_json(const json& j, ReducedEquation& v);
void to_json(json& j, const OrderRow& v);
void from_json(const json& j, OrderRow& v);
void to_json(json& j, const OrdersReport& v);
void from_json(const json& j, OrdersReport& v);
void to_json(json& j, const CountReport& v);
void from_json(const json& j, CountReport& v);

// Top-level document: {"schema": 1, "kind": kind, "report": ...}.
template <class T>
json make_document(std::string_view kind, const T& report) {
  json doc;
  doc["schema"] = kSchemaVersion;
  doc["kind"] = std::string(kind);
  doc["report"] = report;
  return doc;
}

// Inverse of make_document. Throws kInvalidArgument on a schema or kind
// mismatch.
template <class T>
T parse_document(const json& doc, std::string_view kind) {
  if (doc.value("schema", 0) != kSchemaVersion) {
    throw Error(ErrorCode::kInvalidArgument, "unsupported report schema");
  }
  if (doc.value("kind", std::string()) != kind) {
    throw Error(ErrorCode::kInvalidArgument, "expected a " + std::string(kind) + " report");
  }
  return doc.at("report").get<T>();
}

// Columns: b_index,N,main_num,main_den,delta,exceptional_flag
void write_per_b_csv(std::ostream& out, const DensityReport& report);

}  // namespace expoly

#endif  // EXPOLY_REPORTS_H_
