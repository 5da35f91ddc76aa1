// Copyright 2026 The Privgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "privgame/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "privgame/numeric.hpp"

namespace privgame {

namespace {

std::vector<SweepRow> rows_at(const ValueDistribution& dist, const TypeModel& g,
                              const GameParams& params, double q) {
  std::vector<SweepRow> rows;
  const double eps = epsilon_from_q(q);
  const bool capped = eps > kEpsilonCap;
  const double eps_col = std::min(eps, kEpsilonCap);

  const auto points = classify(dist, g, params, q);
  if (points.empty()) {
    SweepRow row;
    row.q = q;
    row.epsilon = eps_col;
    row.epsilon_capped = capped;
    row.kind = "none";
    rows.push_back(row);
    return rows;
  }
  for (const EquilibriumPoint& pt : points) {
    const MetricsRow m = metrics_for(pt, dist, g, params);
    SweepRow row;
    row.q = q;
    row.epsilon = eps_col;
    row.epsilon_capped = capped;
    row.kind = to_string(pt.kind);
    row.price = pt.price;
    row.cutoff = pt.cutoff;
    row.r1 = pt.posteriors.r1;
    row.r0 = pt.posteriors.r0;
    row.posterior_gap = m.posterior_gap;
    row.cs = m.consumer_surplus;
    row.profit = m.seller_profit;
    row.adv_utility = m.advertiser_utility;
    row.mi_bits = m.mi_bits;
    row.boundary_flag = pt.boundary_flag;
    row.limit_flag = pt.posteriors.limit_flag;
    rows.push_back(row);
  }
  return rows;
}

bool kind_present(const std::vector<SweepRow>& rows, const std::string& kind) {
  for (const auto& r : rows) {
    if (r.kind == kind) return true;
  }
  return false;
}

}  // namespace

SweepTable run_sweep(const ValueDistribution& dist, const TypeModel& g,
                     const GameParams& params, double q_min, double q_max,
                     int steps) {
  if (!(q_min >= 0.5 && q_max <= 1.0 && q_min <= q_max) || steps < 2) {
    throw std::invalid_argument("run_sweep: invalid grid");
  }
  std::vector<double> qs(steps);
  for (int i = 0; i < steps; ++i) {
    qs[i] = q_min + (q_max - q_min) * static_cast<double>(i) / (steps - 1);
  }
  std::vector<std::vector<SweepRow>> per_point(steps);
  parallel_for(steps, [&](std::size_t i) {
    per_point[i] = rows_at(dist, g, params, qs[i]);
  });

  // Refine every kind transition between adjacent grid points to 1e-6 and
  // add a row at the surviving side of the final bracket.
  static const char* kKinds[] = {"discriminatory", "uniform_A", "uniform_B"};
  std::vector<SweepRow> extra;
  for (int i = 0; i + 1 < steps; ++i) {
    for (const char* kind : kKinds) {
      const bool lo_has = kind_present(per_point[i], kind);
      const bool hi_has = kind_present(per_point[i + 1], kind);
      if (lo_has == hi_has) continue;
      double q_out = lo_has ? qs[i + 1] : qs[i];
      double q_in = lo_has ? qs[i] : qs[i + 1];
      while (std::abs(q_in - q_out) > 1e-6) {
        const double mid = 0.5 * (q_in + q_out);
        if (kind_present(rows_at(dist, g, params, mid), kind)) {
          q_in = mid;
        } else {
          q_out = mid;
        }
      }
      for (SweepRow& row : rows_at(dist, g, params, q_in)) {
        if (row.kind == kind) extra.push_back(row);
      }
    }
  }

  SweepTable table;
  for (auto& rows : per_point) {
    table.rows.insert(table.rows.end(), rows.begin(), rows.end());
  }
  table.rows.insert(table.rows.end(), extra.begin(), extra.end());
  std::stable_sort(table.rows.begin(), table.rows.end(),
                   [](const SweepRow& a, const SweepRow& b) {
                     if (a.q != b.q) return a.q < b.q;
                     return a.kind < b.kind;
                   });
  // Drop duplicate (q, kind) records a refinement may have re-added.
  table.rows.erase(std::unique(table.rows.begin(), table.rows.end(),
                               [](const SweepRow& a, const SweepRow& b) {
                                 return a.q == b.q && a.kind == b.kind;
                               }),
                   table.rows.end());
  return table;
}

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

std::string cell(const std::optional<double>& x) {
  return x ? fmt(*x) : std::string();
}

constexpr const char* kHeader =
    "q,epsilon,kind,price,cutoff,r1,r0,posterior_gap,cs,profit,adv_utility,"
    "mi_bits,boundary_flag,limit_flag,epsilon_capped";

constexpr const char* kEmpiricHeader =
    ",emp_r1,emp_r1_se,emp_r0,emp_r0_se,emp_p_sig1,emp_p_sig1_se,emp_cs,"
    "emp_cs_se,emp_profit,emp_profit_se,emp_adv_utility,emp_adv_utility_se";

}  // namespace

std::string sweep_to_csv(const SweepTable& table,
                         const std::vector<SweepEmpirics>* empirics) {
  if (empirics && empirics->size() != table.rows.size()) {
    throw std::invalid_argument("sweep_to_csv: empirics size mismatch");
  }
  std::ostringstream out;
  out << kHeader;
  if (empirics) out << kEmpiricHeader;
  out << "\n";
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const SweepRow& r = table.rows[i];
    out << fmt(r.q) << ',' << fmt(r.epsilon) << ',' << r.kind << ','
        << cell(r.price) << ',' << cell(r.cutoff) << ',' << cell(r.r1) << ','
        << cell(r.r0) << ',' << cell(r.posterior_gap) << ',' << cell(r.cs)
        << ',' << cell(r.profit) << ',' << cell(r.adv_utility) << ','
        << cell(r.mi_bits) << ',' << (r.boundary_flag ? 1 : 0) << ','
        << (r.limit_flag ? 1 : 0) << ',' << (r.epsilon_capped ? 1 : 0);
    if (empirics) {
      const SweepEmpirics& e = (*empirics)[i];
      for (const auto& v : {e.r1, e.r1_se, e.r0, e.r0_se, e.p_sig1,
                            e.p_sig1_se, e.cs, e.cs_se, e.profit, e.profit_se,
                            e.adv, e.adv_se}) {
        out << ',' << cell(v);
      }
    }
    out << "\n";
  }
  return out.str();
}

SweepTable sweep_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error("sweep_from_csv: empty input");
  }
  if (line.rfind(kHeader, 0) != 0) {
    throw std::runtime_error("sweep_from_csv: unexpected header");
  }
  SweepTable table;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ls(line);
    while (std::getline(ls, field, ',')) fields.push_back(field);
    if (line.back() == ',') fields.push_back("");
    if (fields.size() < 15) {
      throw std::runtime_error("sweep_from_csv: short row: " + line);
    }
    const auto opt = [&](int i) -> std::optional<double> {
      if (fields[i].empty()) return std::nullopt;
      return std::stod(fields[i]);
    };
    SweepRow row;
    row.q = std::stod(fields[0]);
    row.epsilon = std::stod(fields[1]);
    row.kind = fields[2];
    row.price = opt(3);
    row.cutoff = opt(4);
    row.r1 = opt(5);
    row.r0 = opt(6);
    row.posterior_gap = opt(7);
    row.cs = opt(8);
    row.profit = opt(9);
    row.adv_utility = opt(10);
    row.mi_bits = opt(11);
    row.boundary_flag = fields[12] == "1";
    row.limit_flag = fields[13] == "1";
    row.epsilon_capped = fields[14] == "1";
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace privgame
