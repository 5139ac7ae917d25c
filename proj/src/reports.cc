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
#include "expoly/reports.h"

#include <iomanip>

namespace expoly {
namespace {

template <class T>
void put_optional(json& j, const char* key, const std::optional<T>& v) {
  j[key] = v ? json(*v) : json(nullptr);
}

template <class T>
void get_optional(const json& j, const char* key, std::optional<T>& v) {
  if (!j.contains(key) || j.at(key).is_null()) {
    v.reset();
  } else {
    v = j.at(key).get<T>();
  }
}

}  // namespace

void to_json(json& j, const SearchBox& v) {
  j = json{{"perm", v.perm}, {"sorted_orders", v.sorted_orders}, {"r", v.r}, {"card", v.card}};
}
void from_json(const json& j, SearchBox& v) {
  j.at("perm").get_to(v.perm);
  j.at("sorted_orders").get_to(v.sorted_orders);
  j.at("r").get_to(v.r);
  j.at("card").get_to(v.card);
}

void to_json(json& j, const EquationSummary& v) {
  j = json{{"p", v.p}, {"nu", v.nu}, {"modulus", v.modulus}, {"a", v.a}, {"g", v.g},
           {"orders", v.orders}};
}
void from_json(const json& j, EquationSummary& v) {
  j.at("p").get_to(v.p);
  j.at("nu").get_to(v.nu);
  j.at("modulus").get_to(v.modulus);
  j.at("a").get_to(v.a);
  j.at("g").get_to(v.g);
  j.at("orders").get_to(v.orders);
}

void to_json(json& j, const PerBRow& v) {
  j = json{{"b", v.b},           {"N", v.count},     {"main_num", v.main_num},
           {"main_den", v.main_den}, {"delta", v.delta}, {"exceptional", v.exceptional}};
}
void from_json(const json& j, PerBRow& v) {
  j.at("b").get_to(v.b);
  j.at("N").get_to(v.count);
  j.at("main_num").get_to(v.main_num);
  j.at("main_den").get_to(v.main_den);
  j.at("delta").get_to(v.delta);
  j.at("exceptional").get_to(v.exceptional);
}

void to_json(json& j, const DensityReport& v) {
  j = json{{"family", v.family}, {"box", v.box},       {"per_b", v.per_b},
           {"sum_sq", v.sum_sq}, {"energy", v.energy}, {"exceptional_b", v.exceptional_b}};
  put_optional(j, "delta", v.delta_param);
}
void from_json(const json& j, DensityReport& v) {
  j.at("family").get_to(v.family);
  j.at("box").get_to(v.box);
  j.at("per_b").get_to(v.per_b);
  j.at("sum_sq").get_to(v.sum_sq);
  j.at("energy").get_to(v.energy);
  j.at("exceptional_b").get_to(v.exceptional_b);
  get_optional(j, "delta", v.delta_param);
}

void to_json(json& j, const SolveCounts& v) {
  j = json{{"group_mults", v.group_mults},
           {"dlog_calls", v.dlog_calls},
           {"outer_points_visited", v.outer_points_visited},
           {"model_point_mults", v.model_point_mults},
           {"setup_factor_steps", v.setup_factor_steps},
           {"setup_order_mults", v.setup_order_mults}};
}
void from_json(const json& j, SolveCounts& v) {
  j.at("group_mults").get_to(v.group_mults);
  j.at("dlog_calls").get_to(v.dlog_calls);
  j.at("outer_points_visited").get_to(v.outer_points_visited);
  j.at("model_point_mults").get_to(v.model_point_mults);
  j.at("setup_factor_steps").get_to(v.setup_factor_steps);
  j.at("setup_order_mults").get_to(v.setup_order_mults);
}

void to_json(json& j, const SolutionReport& v) {
  j = json{{"status", solve_status_name(v.status)},
           {"solution", v.solution},
           {"solution_sorted", v.solution_sorted},
           {"queries", v.queries},
           {"box", v.box_used},
           {"r_raw", v.r_raw},
           {"cost_constant", v.cost_constant}};
}
void from_json(const json& j, SolutionReport& v) {
  auto status = parse_solve_status(j.at("status").get<std::string>());
  if (!status) throw Error(ErrorCode::kInvalidArgument, "unknown solve status");
  v.status = *status;
  j.at("solution").get_to(v.solution);
  j.at("solution_sorted").get_to(v.solution_sorted);
  j.at("queries").get_to(v.queries);
  j.at("box").get_to(v.box_used);
  j.at("r_raw").get_to(v.r_raw);
  j.at("cost_constant").get_to(v.cost_constant);
}

void to_json(json& j, const Rational& v) { j = v.to_string(); }
void from_json(const json& j, Rational& v) {
  const std::string s = j.get<std::string>();
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      v = Rational(std::stoll(s));
    } else {
      v = Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    }
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::kInvalidArgument, "bad rational '" + s + "'");
  }
}

void to_json(json& j, const ExponentRow& v) {
  j = json{{"n", v.n},
           {"classical", v.classical},
           {"classical_stated", v.classical_stated},
           {"quantum", v.quantum},
           {"ratio", v.ratio}};
}
void from_json(const json& j, ExponentRow& v) {
  j.at("n").get_to(v.n);
  j.at("classical").get_to(v.classical);
  j.at("classical_stated").get_to(v.classical_stated);
  j.at("quantum").get_to(v.quantum);
  j.at("ratio").get_to(v.ratio);
}

void to_json(json& j, const ExponentTable& v) { j = json{{"rows", v.rows}}; }
void from_json(const json& j, ExponentTable& v) { j.at("rows").get_to(v.rows); }

void to_json(json& j, const ChainCheck& v) {
  j = json{{"lhs", v.lhs}, {"rhs", v.rhs}, {"holds", v.holds}};
}
void from_json(const json& j, ChainCheck& v) {
  j.at("lhs").get_to(v.lhs);
  j.at("rhs").get_to(v.rhs);
  j.at("holds").get_to(v.holds);
}

void to_json(json& j, const QueryCostReport& v) {
  j = json{{"mode", quantum_mode_name(v.mode)},
           {"box", v.box},
           {"r_raw", v.r_raw},
           {"t", v.t},
           {"m_estimate", v.m_estimate},
           {"shor_calls", v.shor_calls},
           {"shor_unit_cost", v.shor_unit_cost},
           {"modeled_time", v.modeled_time},
           {"grover_oracle_queries", v.grover_oracle_queries},
           {"slack", v.slack},
           {"theoretical_bound", v.theoretical_bound},
           {"within_bound", v.within_bound},
           {"chain", v.chain}};
  put_optional(j, "m_exact", v.m_exact);
  put_optional(j, "empirical_queries", v.empirical_queries);
}
void from_json(const json& j, QueryCostReport& v) {
  auto mode = parse_quantum_mode(j.at("mode").get<std::string>());
  if (!mode) throw Error(ErrorCode::kInvalidArgument, "unknown quantum mode");
  v.mode = *mode;
  j.at("box").get_to(v.box);
  j.at("r_raw").get_to(v.r_raw);
  j.at("t").get_to(v.t);
  j.at("m_estimate").get_to(v.m_estimate);
  j.at("shor_calls").get_to(v.shor_calls);
  j.at("shor_unit_cost").get_to(v.shor_unit_cost);
  j.at("modeled_time").get_to(v.modeled_time);
  j.at("grover_oracle_queries").get_to(v.grover_oracle_queries);
  j.at("slack").get_to(v.slack);
  j.at("theoretical_bound").get_to(v.theoretical_bound);
  j.at("within_bound").get_to(v.within_bound);
  j.at("chain").get_to(v.chain);
  get_optional(j, "m_exact", v.m_exact);
  get_optional(j, "empirical_queries", v.empirical_queries);
}

void to_json(json& j, const OrderGroup& v) {
  j = json{{"order", v.order}, {"members", v.members}, {"relations", v.relations}};
}
void from_json(const json& j, OrderGroup& v) {
  j.at("order").get_to(v.order);
  j.at("members").get_to(v.members);
  j.at("relations").get_to(v.relations);
}

void to_json(json& j, const ReducedEquation& v) {
  j = json{{"groups", v.groups},
           {"mu", v.mu},
           {"divisor_bound", v.divisor_bound},
           {"bound_holds", v.bound_holds}};
}
void from_json(const json& j, ReducedEquation& v) {
  j.at("groups").get_to(v.groups);
  j.at("mu").get_to(v.mu);
  j.at("divisor_bound").get_to(v.divisor_bound);
  j.at("bound_holds").get_to(v.bound_holds);
}

void to_json(json& j, const OrderRow& v) {
  j = json{{"index", v.index}, {"g", v.g}, {"order", v.order}};
}
void from_json(const json& j, OrderRow& v) {
  j.at("index").get_to(v.index);
  j.at("g").get_to(v.g);
  j.at("order").get_to(v.order);
}

OrdersReport OrdersReport::of(const ExpEquation& eq) {
  OrdersReport rep;
  rep.equation = EquationSummary::of(eq);
  rep.q_minus_1 = eq.q_minus_1().prime_powers;
  for (std::size_t i = 0; i < eq.n(); ++i) {
    rep.rows.push_back(OrderRow{i + 1, eq.terms()[i].g.value(), eq.orders()[i]});
  }
  return rep;
}

void to_json(json& j, const OrdersReport& v) {
  j = json{{"equation", v.equation}, {"q_minus_1", v.q_minus_1}, {"rows", v.rows}};
}
void from_json(const json& j, OrdersReport& v) {
  j.at("equation").get_to(v.equation);
  j.at("q_minus_1").get_to(v.q_minus_1);
  j.at("rows").get_to(v.rows);
}

void to_json(json& j, const CountReport& v) {
  j = json{{"equation", v.equation}, {"b", v.b}, {"box", v.box}, {"brute", v.brute},
           {"agree", v.agree}};
  put_optional(j, "solutions", v.solutions);
  put_optional(j, "charsum", v.charsum);
}
void from_json(const json& j, CountReport& v) {
  j.at("equation").get_to(v.equation);
  j.at("b").get_to(v.b);
  j.at("box").get_to(v.box);
  j.at("brute").get_to(v.brute);
  j.at("agree").get_to(v.agree);
  get_optional(j, "solutions", v.solutions);
  get_optional(j, "charsum", v.charsum);
}

void write_per_b_csv(std::ostream& out, const DensityReport& report) {
  out << "b_index,N,main_num,main_den,delta,exceptional_flag\n";
  out << std::setprecision(17);
  for (const PerBRow& row : report.per_b) {
    out << row.b << ',' << row.count << ',' << row.main_num << ',' << row.main_den << ','
        << row.delta << ',' << (row.exceptional ? 1 : 0) << '\n';
  }
}

}  // namespace expoly
