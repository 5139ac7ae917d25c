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
#include "commands.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>

#include "expoly/density.h"
#include "expoly/instances.h"
#include "expoly/qmodel.h"
#include "expoly/reduction.h"
#include "expoly/reports.h"
#include "expoly/solver.h"

namespace expoly::cli {
namespace {

std::string join(const std::vector<uint64_t>& v, const char* sep = ",") {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? sep : "") << v[i];
  return out.str();
}

void emit_json(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

SearchBox box_for(const ExpEquation& eq, const RunConfig& c) {
  return c.r ? SearchBox::make(eq, *c.r) : SearchBox::full(eq);
}

void cmd_orders(const RunConfig& c, std::ostream& out) {
  std::string desc;
  const ExpEquation eq = equation_from_config(c, &desc);
  const OrdersReport rep = OrdersReport::of(eq);
  if (c.format == "json") return emit_json(out, make_document("orders", rep));
  if (c.format == "csv") {
    out << "index,g,order\n";
    for (const OrderRow& row : rep.rows) out << row.index << ',' << row.g << ',' << row.order << '\n';
    return;
  }
  out << desc << "\n";
  out << "q-1 = " << eq.field().q() - 1 << " =";
  for (std::size_t i = 0; i < rep.q_minus_1.size(); ++i) {
    out << (i ? " *" : "") << " " << rep.q_minus_1[i].first;
    if (rep.q_minus_1[i].second > 1) out << "^" << rep.q_minus_1[i].second;
  }
  out << "\n";
  for (const OrderRow& row : rep.rows) {
    out << "term " << row.index << ": g=" << row.g << " order=" << row.order << "\n";
  }
}

void cmd_count(const RunConfig& c, std::ostream& out) {
  std::string desc;
  const ExpEquation eq = equation_from_config(c, &desc);
  const SearchBox box = box_for(eq, c);
  const BruteCount brute = brute_count(eq, box, c.caps);
  CountReport rep;
  rep.equation = EquationSummary::of(eq);
  rep.b = eq.b().value();
  rep.box = box;
  rep.brute = brute.count;
  if (brute.listed) {
    rep.solutions.emplace();
    for (const auto& x : brute.solutions) rep.solutions->push_back(box.to_original(x));
  }
  if (eq.field().q() <= c.caps.enumeration) {
    rep.charsum = count_via_charsum(eq, box, c.caps, c.workers);
  }
  rep.agree = rep.charsum && std::llround(*rep.charsum) == static_cast<long long>(rep.brute);
  if (c.format == "json") return emit_json(out, make_document("count", rep));
  if (c.format == "csv") {
    out << "b,r,card,brute,charsum\n"
        << rep.b << ',' << box.r << ',' << box.card << ',' << rep.brute << ','
        << std::setprecision(12) << rep.charsum.value_or(NAN) << '\n';
    return;
  }
  out << desc << "\n";
  out << "box: r=" << box.r << " card=" << box.card << "\n";
  out << "brute=" << rep.brute << "\n";
  if (rep.charsum) {
    out << "charsum=" << std::fixed << std::setprecision(9) << *rep.charsum << "\n";
    out << "agree=" << (rep.agree ? "yes" : "no") << "\n";
  }
  if (rep.solutions) {
    for (const auto& x : *rep.solutions) out << "solution: (" << join(x) << ")\n";
  }
}

void cmd_density(const RunConfig& c, std::ostream& out) {
  std::string desc;
  const ExpEquation eq = equation_from_config(c, &desc);
  const SearchBox box = box_for(eq, c);
  DensityReport rep = sweep_b(eq, box, c.caps, c.workers);
  const uint64_t q = eq.field().q();
  const double delta = c.delta.value_or(corollary_delta(q, 0.5, c.log_base));
  const Census census = apply_census(rep, delta);
  const EnergyCheck energy = energy_bound_check(rep);
  if (c.format == "json") return emit_json(out, make_document("density", rep));
  if (c.format == "csv") return write_per_b_csv(out, rep);
  out << desc << "\n";
  out << "box: r=" << box.r << " card=" << box.card << " main term=" << rep.per_b[0].main_num
      << "/" << rep.per_b[0].main_den << "\n";
  out << std::setprecision(10);
  out << "energy E(r)=" << rep.energy << " bound q^(n-1) r=" << energy.bound
      << " holds=" << (energy.holds ? "yes" : "no") << " margin=" << energy.margin << "\n";
  out << "delta=" << delta << " threshold=" << census.threshold << " exceptional="
      << census.exceptional_b.size() << " (bound q/delta^2=" << census.size_bound
      << ", within=" << (census.within_bound ? "yes" : "no") << ")\n";
  if (!census.exceptional_b.empty()) out << "exceptional b: " << join(census.exceptional_b, " ") << "\n";
  const std::vector<uint64_t> sorted(box.sorted_orders.begin(), box.sorted_orders.end());
  try {
    const CorollaryR r0 = corollary_min_r(q, sorted, c.log_base);
    out << "guaranteed cutoff r0=" << r0.r0 << " guaranteed=" << (r0.guaranteed ? "yes" : "no") << "\n";
  } catch (const Error& e) {
    out << "guaranteed cutoff unavailable: " << e.what() << "\n";
  }
}

void cmd_solve(const RunConfig& c, std::ostream& out) {
  std::string desc;
  const ExpEquation eq = equation_from_config(c, &desc);
  const SolutionReport rep = solve_classical(eq, c.caps, c.log_base, c.workers);
  if (rep.status == SolveStatus::kFound && !verify_solution(eq, rep.solution)) {
    throw Error(ErrorCode::kInvalidArgument, "internal error: reported solution does not verify");
  }
  if (c.format == "json") return emit_json(out, make_document("solve", rep));
  if (c.format == "csv") {
    out << "status,solution,group_mults,dlog_calls,outer_points_visited,r_raw,r\n"
        << solve_status_name(rep.status) << ",\"" << join(rep.solution) << "\","
        << rep.queries.group_mults << ',' << rep.queries.dlog_calls << ','
        << rep.queries.outer_points_visited << ',' << rep.r_raw << ',' << rep.box_used.r << '\n';
    return;
  }
  out << desc << "\n";
  out << "orders (sorted): " << join(rep.box_used.sorted_orders) << "\n";
  out << "r_raw=" << rep.r_raw << " r=" << rep.box_used.r << " case="
      << (rep.r_raw <= rep.box_used.sorted_orders.back() ? "r<=s_n" : "r>s_n") << "\n";
  out << "status=" << solve_status_name(rep.status) << "\n";
  if (rep.status == SolveStatus::kFound) out << "solution=(" << join(rep.solution) << ")\n";
  out << "group_mults=" << rep.queries.group_mults << " dlog_calls=" << rep.queries.dlog_calls
      << " outer_points_visited=" << rep.queries.outer_points_visited
      << " model_point_mults=" << rep.queries.model_point_mults << "\n";
  out << "setup: factor_steps=" << rep.queries.setup_factor_steps
      << " order_mults=" << rep.queries.setup_order_mults << "\n";
  out << "cost_constant=" << std::setprecision(6) << rep.cost_constant << "\n";
}

void cmd_qmodel(const RunConfig& c, std::ostream& out) {
  std::string desc;
  const ExpEquation eq = equation_from_config(c, &desc);
  QuantumModelOptions opt;
  opt.log_base = c.log_base;
  opt.slack_exponent = c.eps_slack;
  opt.simulate_bbht = c.trials > 0;
  opt.bbht_trials = std::max<uint64_t>(1, c.trials);
  opt.seed = c.seed;
  opt.workers = c.workers;
  opt.caps = c.caps;
  const QueryCostReport rep = model_quantum_solve(eq, *parse_quantum_mode(c.mode), opt);
  if (c.format == "json") return emit_json(out, make_document("qmodel", rep));
  if (c.format == "csv") {
    out << "mode,t,m_exact,m_estimate,grover_oracle_queries,theoretical_bound,within_bound\n"
        << quantum_mode_name(rep.mode) << ',' << rep.t << ','
        << (rep.m_exact ? std::to_string(*rep.m_exact) : "") << ',' << rep.m_estimate << ','
        << rep.grover_oracle_queries << ',' << rep.theoretical_bound << ','
        << (rep.within_bound ? 1 : 0) << '\n';
    return;
  }
  out << desc << "\n";
  out << "mode=" << quantum_mode_name(rep.mode) << " r_raw=" << rep.r_raw << " r=" << rep.box.r
      << " t=" << rep.t << "\n";
  out << "M exact=" << (rep.m_exact ? std::to_string(*rep.m_exact) : "n/a")
      << " estimate=" << std::setprecision(6) << rep.m_estimate << "\n";
  out << "grover_oracle_queries=" << rep.grover_oracle_queries;
  if (rep.empirical_queries) out << " (bbht empirical mean " << *rep.empirical_queries << ")";
  out << "\n";
  out << "shor_calls=" << rep.shor_calls << " modeled_time=" << rep.modeled_time << "\n";
  out << "bound=" << rep.theoretical_bound << " within_bound=" << (rep.within_bound ? "yes" : "no")
      << "\n";
  out << "grid chain: " << rep.chain.lhs << " <= " << rep.chain.rhs << " "
      << (rep.chain.holds ? "holds" : "VIOLATED") << "\n";
}

void cmd_exponents(const RunConfig& c, std::ostream& out) {
  const ExponentTable table = exponent_table(c.n_max);
  if (c.format == "json") return emit_json(out, make_document("exponents", table));
  if (c.format == "csv") {
    out << "n,classical,classical_stated,quantum,ratio\n";
    for (const ExponentRow& row : table.rows) {
      out << row.n << ',' << row.classical.to_string() << ',' << row.classical_stated.to_string()
          << ',' << row.quantum.to_string() << ',' << row.ratio.to_string() << '\n';
    }
    return;
  }
  out << table.to_text();
}

void cmd_reduce(const RunConfig& c, std::ostream& out) {
  std::string desc;
  const ExpEquation eq = equation_from_config(c, &desc);
  const ReducedEquation rep = reduce(eq);
  if (c.format == "json") return emit_json(out, make_document("reduce", rep));
  if (c.format == "csv") {
    out << "order,member,relation\n";
    for (const OrderGroup& g : rep.groups) {
      for (std::size_t i = 0; i < g.members.size(); ++i) {
        out << g.order << ',' << g.members[i] + 1 << ',' << g.relations[i] << '\n';
      }
    }
    return;
  }
  out << desc << "\n";
  for (const OrderGroup& g : rep.groups) {
    out << "order " << g.order << ": h=g_" << g.members.front() + 1;
    for (std::size_t i = 1; i < g.members.size(); ++i) {
      out << ", g_" << g.members[i] + 1 << "=h^" << g.relations[i];
    }
    out << "\n";
  }
  out << "mu=" << rep.mu << " d(q-1)=" << rep.divisor_bound
      << " bound=" << (rep.bound_holds ? "holds" : "VIOLATED") << "\n";
}

FieldSpec field_of_order(uint64_t q) {
  const Factorization f = factorize(q);
  if (f.prime_powers.size() != 1) {
    throw Error(ErrorCode::kInvalidArgument, "bench q=" + std::to_string(q) + " is not a prime power");
  }
  return make_field(f.prime_powers[0].first, f.prime_powers[0].second);
}

void cmd_bench(const RunConfig& c, std::ostream& out) {
  std::vector<uint64_t> qs = c.bench_q;
  std::vector<std::size_t> ns = c.bench_n;
  std::sort(qs.begin(), qs.end());
  std::sort(ns.begin(), ns.end());
  json rows = json::array();
  std::ostringstream csv;
  csv << "q,n,classical_mults,modeled_quantum_queries,classical_exp_fit,quantum_exp_fit,"
         "classical_exp,quantum_exp,status\n";
  csv << std::setprecision(6) << std::fixed;
  for (uint64_t q : qs) {
    const FieldSpec field = field_of_order(q);
    for (std::size_t n : ns) {
      std::mt19937_64 rng(c.seed * 1000003 + q * 31 + n);
      const ExpEquation eq = random_max_order_equation(field, n, rng, c.caps);
      const SolutionReport sol = solve_classical(eq, c.caps, c.log_base, 1);
      QuantumModelOptions opt;
      opt.log_base = c.log_base;
      opt.slack_exponent = c.eps_slack;
      opt.caps = c.caps;
      const QueryCostReport qm = model_quantum_solve(eq, QuantumMode::kGrover, opt);
      const double lq = std::log(static_cast<double>(q));
      const double cfit = std::log(static_cast<double>(std::max<uint64_t>(1, sol.queries.group_mults))) / lq;
      const double qfit = std::log(static_cast<double>(std::max<uint64_t>(1, qm.grover_oracle_queries))) / lq;
      const unsigned nn = static_cast<unsigned>(n);
      csv << q << ',' << n << ',' << sol.queries.group_mults << ',' << qm.grover_oracle_queries << ','
          << cfit << ',' << qfit << ',' << classical_exponent(nn).to_string() << ','
          << (n >= 2 ? quantum_exponent(nn).to_string() : "0") << ','
          << solve_status_name(sol.status) << '\n';
      rows.push_back(json{{"q", q},
                          {"n", n},
                          {"classical_mults", sol.queries.group_mults},
                          {"modeled_quantum_queries", qm.grover_oracle_queries},
                          {"classical_exp_fit", cfit},
                          {"quantum_exp_fit", qfit},
                          {"status", solve_status_name(sol.status)}});
    }
  }
  if (c.format == "json") {
    json doc;
    doc["schema"] = kSchemaVersion;
    doc["kind"] = "bench";
    doc["report"] = rows;
    return emit_json(out, doc);
  }
  out << csv.str();
}

}  // namespace

const std::vector<std::string_view>& command_names() {
  static const std::vector<std::string_view> names = {
      "orders", "count", "density", "solve", "qmodel", "exponents", "reduce", "bench"};
  return names;
}

int run_command(std::string_view name, const RunConfig& config, std::ostream& out,
                std::ostream& err) {
  static const std::map<std::string_view, void (*)(const RunConfig&, std::ostream&)> table = {
      {"orders", cmd_orders},       {"count", cmd_count},   {"density", cmd_density},
      {"solve", cmd_solve},         {"qmodel", cmd_qmodel}, {"exponents", cmd_exponents},
      {"reduce", cmd_reduce},       {"bench", cmd_bench}};
  auto it = table.find(name);
  if (it == table.end()) {
    err << "unknown command '" << name << "'\n";
    return kExitInvalid;
  }
  try {
    if (config.out.empty()) {
      it->second(config, out);
    } else {
      std::ostringstream buffer;
      it->second(config, buffer);
      std::ofstream file(config.out, std::ios::binary | std::ios::trunc);
      if (!file) throw Error(ErrorCode::kInvalidArgument, "cannot open output file " + config.out);
      file << buffer.str();
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_limit_error(e.code()) ? kExitLimit : kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}

}  // namespace expoly::cli
