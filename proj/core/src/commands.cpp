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
#include "privgame/commands.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>

#include "privgame/metrics.hpp"
#include "privgame/oracle.hpp"
#include "privgame/svg.hpp"
#include "privgame/sweep.hpp"
#include "privgame/verify.hpp"

namespace privgame {

namespace {

struct Game {
  ValueDistribution dist = ValueDistribution::uniform01();
  TypeModel type_model = TypeModel::identity();
  GameParams params;
};

// Builds and validates the game; on failure reports and signals exit 2.
int build_game(const RunConfig& config, std::ostream& err, Game* game) {
  try {
    game->dist = config.make_distribution();
    game->type_model = config.make_type_model();
    game->params = config.make_params();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  const ValidationReport report =
      validate(game->dist, game->type_model, game->params);
  if (!report.ok()) {
    err << "model validation failed:\n" << report.to_string();
    return 2;
  }
  return 0;
}

bool write_file(const std::string& path, const std::string& content,
                std::ostream& err) {
  std::error_code ec;
  const auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent, ec);
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    err << "error: cannot write " << path << "\n";
    return false;
  }
  out << content;
  return out.good();
}

void print_model_line(const Game& game, std::ostream& out) {
  out << "model: values ~ " << game.dist.label() << ", g = "
      << game.type_model.label() << ", delta = " << game.params.delta
      << ", eta = " << game.params.eta() << "\n";
}

}  // namespace

int cmd_solve(const RunConfig& config, double q, bool write_csv,
              std::ostream& out, std::ostream& err) {
  Game game;
  if (int rc = build_game(config, err, &game)) return rc;
  if (!(q >= 0.5 && q <= 1.0)) {
    err << "error: q must lie in [1/2,1], got " << q << "\n";
    return 2;
  }

  print_model_line(game, out);
  out << "q = " << std::setprecision(12) << q
      << " (epsilon = " << std::min(epsilon_from_q(q), kEpsilonCap) << ")\n";

  const auto points = classify(game.dist, game.type_model, game.params, q);
  if (points.empty()) {
    out << "no equilibrium\n";
    return 3;
  }
  SweepTable table;
  for (const auto& pt : points) {
    const MetricsRow m = metrics_for(pt, game.dist, game.type_model, game.params);
    out << to_string(pt.kind) << ": price = " << pt.price
        << ", cutoff = " << pt.cutoff << ", r1 = " << pt.posteriors.r1
        << ", r0 = " << pt.posteriors.r0 << "\n"
        << "  cs = " << m.consumer_surplus
        << " (ad component " << m.cs_ad_component << ")"
        << ", profit = " << m.seller_profit
        << ", adv_utility = " << m.advertiser_utility
        << ", mi_bits = " << m.mi_bits;
    if (m.cs_derivative) out << ", dcs/dq = " << *m.cs_derivative;
    if (pt.boundary_flag) out << " [boundary]";
    if (pt.posteriors.limit_flag) out << " [limit]";
    out << "\n";

    SweepRow row;
    row.q = q;
    row.epsilon = std::min(epsilon_from_q(q), kEpsilonCap);
    row.epsilon_capped = epsilon_from_q(q) > kEpsilonCap;
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
    table.rows.push_back(row);
  }
  if (write_csv) {
    const std::string path = config.out_dir + "/solve.csv";
    if (!write_file(path, sweep_to_csv(table), err)) return 2;
    out << "wrote " << path << "\n";
  }
  return 0;
}

int cmd_sweep(const RunConfig& config, bool emit_svg, std::ostream& out,
              std::ostream& err) {
  Game game;
  if (int rc = build_game(config, err, &game)) return rc;

  print_model_line(game, out);
  const SweepTable table =
      run_sweep(game.dist, game.type_model, game.params, config.q_min,
                config.q_max, config.steps);
  const std::string csv_path = config.out_dir + "/sweep.csv";
  if (!write_file(csv_path, sweep_to_csv(table), err)) return 2;
  out << "wrote " << csv_path << " (" << table.rows.size() << " rows)\n";

  if (emit_svg) {
    const std::pair<const char*, std::string (*)(const SweepTable&)> figures[] =
        {{"fig_prices_cutoffs.svg", svg_prices_figure},
         {"fig_posteriors.svg", svg_posteriors_figure},
         {"fig_mutual_information.svg", svg_mutual_information_figure},
         {"fig_advertiser_utility.svg", svg_advertiser_utility_figure},
         {"fig_welfare.svg", svg_welfare_figure},
         {"fig_discontinuities.svg", svg_discontinuity_figure}};
    for (const auto& [name, emit] : figures) {
      const std::string path = config.out_dir + "/" + name;
      if (!write_file(path, emit(table), err)) return 2;
      out << "wrote " << path << "\n";
    }
  }
  return 0;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Game game;
  if (int rc = build_game(config, err, &game)) return rc;

  print_model_line(game, out);
  const auto results =
      run_property_suite(game.dist, game.type_model, game.params);
  bool all_pass = true;
  for (const auto& r : results) {
    out << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
    if (!r.detail.empty()) out << "  (" << r.detail << ")";
    out << "\n";
    all_pass = all_pass && r.pass;
  }
  out << (all_pass ? "all properties hold\n" : "property failures found\n");
  return all_pass ? 0 : 1;
}

int cmd_simulate(const RunConfig& config, long long n, std::uint64_t seed,
                 std::ostream& out, std::ostream& err) {
  Game game;
  if (int rc = build_game(config, err, &game)) return rc;
  if (n < 1) {
    err << "error: n must be >= 1\n";
    return 2;
  }

  print_model_line(game, out);
  const SweepTable table =
      run_sweep(game.dist, game.type_model, game.params, config.q_min,
                config.q_max, config.steps);
  std::vector<SweepEmpirics> empirics(table.rows.size());
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const SweepRow& row = table.rows[i];
    if (row.kind == "none") continue;
    AdvertiserStrategy rule = AdvertiserStrategy::kDiscriminate;
    if (row.kind == "uniform_A") rule = AdvertiserStrategy::kAlwaysA;
    if (row.kind == "uniform_B") rule = AdvertiserStrategy::kAlwaysB;
    const StrategyProfile profile{*row.price, *row.cutoff, rule};
    const SimReport sim = simulate(game.dist, game.type_model, game.params,
                                   row.q, profile, n, seed);
    SweepEmpirics& e = empirics[i];
    if (sim.n_sig1 > 0) {
      e.r1 = sim.r1;
      e.r1_se = sim.r1_se;
    }
    if (sim.n_sig0 > 0) {
      e.r0 = sim.r0;
      e.r0_se = sim.r0_se;
    }
    e.p_sig1 = sim.p_sig1;
    e.p_sig1_se = sim.p_sig1_se;
    e.cs = sim.consumer_surplus;
    e.cs_se = sim.consumer_surplus_se;
    e.profit = sim.seller_profit;
    e.profit_se = sim.seller_profit_se;
    e.adv = sim.advertiser_utility;
    e.adv_se = sim.advertiser_utility_se;
  }
  const std::string path = config.out_dir + "/simulate.csv";
  if (!write_file(path, sweep_to_csv(table, &empirics), err)) return 2;
  out << "wrote " << path << " (" << table.rows.size() << " rows, n = " << n
      << ", seed = " << seed << ")\n";
  return 0;
}

}  // namespace privgame
