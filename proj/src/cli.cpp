// Copyright 2026 The qgame Authors
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


#include "qgame/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iostream>
#include <memory>
#include <set>
#include <stdexcept>
#include <vector>

#include "CLI11.hpp"
#include "qgame/equilibrium.hpp"
#include "qgame/records_io.hpp"
#include "qgame/svg_plot.hpp"

namespace qgame {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t") - first + 1);
}

double parse_plain(std::string_view s, std::string_view whole) {
  double x = 0.0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, x);
  if (s.empty() || ec != std::errc() || ptr != end) {
    throw ConfigError("cannot parse angle '" + std::string(whole) + "'");
  }
  return x;
}

// Runs a subcommand body and maps exceptions to exit codes.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

std::shared_ptr<const StrategyGrid> make_grid(const SteppingParams& steps) {
  return std::make_shared<const StrategyGrid>(build_grid(steps));
}

std::vector<double> gamma_grid(std::size_t n) {
  if (n == 0) throw ConfigError("--gamma-grid must be at least 1");
  return uniform_points(0.0, kPi / 2.0, n);
}

std::vector<double> prior_grid(std::size_t n) {
  if (n == 0) throw ConfigError("--p-grid must be at least 1");
  return uniform_points(0.0, 1.0, n);
}

void emit(const std::string& path, const std::string& content,
          std::ostream& out) {
  if (path.empty()) {
    out << content;
  } else {
    write_text_file(path, content);
  }
}

std::string render_dataset(const SweepDataset& data, OutputFormat format) {
  return format == OutputFormat::kJson ? sweep_json(data) : sweep_csv(data);
}

// Sorted points with near-duplicates (1e-9) removed.
std::vector<std::pair<double, double>> distinct(
    std::vector<std::pair<double, double>> pts) {
  std::sort(pts.begin(), pts.end());
  auto close = [](const auto& u, const auto& v) {
    return std::abs(u.first - v.first) <= 1e-9 &&
           std::abs(u.second - v.second) <= 1e-9;
  };
  pts.erase(std::unique(pts.begin(), pts.end(), close), pts.end());
  return pts;
}

std::string sweep_plot(const SweepDataset& data) {
  const std::string& title = data.bayesian()
                                 ? data.metadata.games[0] + " / " +
                                       data.metadata.games[1] +
                                       " (player A, Bayesian)"
                                 : data.metadata.games[0];
  SvgPlot plot(title, "gamma", "payoff at Nash equilibrium");
  if (!data.bayesian()) {
    std::vector<std::pair<double, double>> a, b;
    for (const SweepRecord& r : data.records) {
      a.emplace_back(r.gamma, r.equilibrium.payoffs[0]);
      b.emplace_back(r.gamma, r.equilibrium.payoffs[1]);
    }
    plot.add_series({"player A", "#1f77b4", SvgPlot::Style::kPoints,
                     distinct(std::move(a))});
    plot.add_series({"player B", "#d62728", SvgPlot::Style::kPoints,
                     distinct(std::move(b))});
    return plot.render();
  }
  // A handful of p slices spread across the prior grid.
  std::set<double> slices;
  const std::vector<double>& ps = data.metadata.p_values;
  for (double target : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    if (ps.empty()) break;
    slices.insert(*std::min_element(ps.begin(), ps.end(), [&](double u, double v) {
      return std::abs(u - target) < std::abs(v - target);
    }));
  }
  std::size_t color = 0;
  for (double p : slices) {
    std::vector<std::pair<double, double>> pts;
    for (const SweepRecord& r : data.records) {
      if (r.p == p) pts.emplace_back(r.gamma, r.equilibrium.payoffs[0]);
    }
    plot.add_series({"p = " + format_number(p), palette_color(color++),
                     SvgPlot::Style::kPoints, distinct(std::move(pts))});
  }
  return plot.render();
}

// "out.svg" -> "out"; plot and CSV prefixes share one rule.
std::string strip_suffix(std::string path, std::string_view suffix) {
  if (path.size() > suffix.size() &&
      path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0) {
    path.resize(path.size() - suffix.size());
  }
  return path;
}

SweepDataset run_gamma_sweep(const RunConfig& config, const char* command,
                             std::vector<double> gammas) {
  const GameCatalogue catalogue = resolve_catalogue(config);
  const GameDefinition& game = catalogue.get(config.game);
  const auto grid = make_grid(config.steps);
  SweepDataset data;
  data.records = gamma_sweep(game, grid, gammas,
                             SweepOptions{config.epsilon, config.threads});
  data.metadata.command = command;
  data.metadata.games = {game.name};
  data.metadata.steps = config.steps;
  data.metadata.epsilon = config.epsilon;
  data.metadata.strategy_count = grid->size();
  data.metadata.gamma_values = std::move(gammas);
  return data;
}

void require_game(const RunConfig& config) {
  if (config.game.empty()) throw ConfigError("--game is required");
}

}  // namespace

double parse_angle(std::string_view text) {
  const std::string_view whole = text;
  text = trim(text);
  const auto pi_pos = text.find("pi");
  if (pi_pos == std::string_view::npos) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return parse_plain(text, whole);
    const double den = parse_plain(trim(text.substr(slash + 1)), whole);
    if (den == 0.0) throw ConfigError("division by zero in '" + std::string(whole) + "'");
    return parse_plain(trim(text.substr(0, slash)), whole) / den;
  }
  std::string_view coef = trim(text.substr(0, pi_pos));
  if (!coef.empty() && coef.back() == '*') coef = trim(coef.substr(0, coef.size() - 1));
  double value = kPi * (coef.empty() ? 1.0 : parse_plain(coef, whole));
  std::string_view rest = trim(text.substr(pi_pos + 2));
  if (!rest.empty()) {
    if (rest.front() != '/') {
      throw ConfigError("cannot parse angle '" + std::string(whole) + "'");
    }
    const double den = parse_plain(trim(rest.substr(1)), whole);
    if (den == 0.0) throw ConfigError("division by zero in '" + std::string(whole) + "'");
    value /= den;
  }
  return value;
}

SteppingParams parse_steps(std::string_view text) {
  std::vector<double> parts;
  while (true) {
    const auto comma = text.find(',');
    parts.push_back(parse_angle(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (parts.size() != 3) {
    throw ConfigError("--steps needs three values T,P,A");
  }
  SteppingParams steps{parts[0], parts[1], parts[2]};
  try {
    steps.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return steps;
}

GameCatalogue resolve_catalogue(const RunConfig& config) {
  return config.catalogue_path.empty() ? default_catalogue()
                                       : load_catalogue(config.catalogue_path);
}

int cmd_solve(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_game(config);
    EntanglementParam(config.gamma);  // range check before any work
    const SweepDataset data = run_gamma_sweep(config, "solve", {config.gamma});
    emit(config.out_path, render_dataset(data, config.format), out);
    err << data.records.size() << " equilibria for " << config.game
        << " at gamma=" << format_number(config.gamma) << " over "
        << data.metadata.strategy_count << " strategies\n";
    return kExitOk;
  });
}

int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_game(config);
    const SweepDataset data =
        run_gamma_sweep(config, "sweep", gamma_grid(config.gamma_points));
    emit(config.out_path, render_dataset(data, config.format), out);
    if (!config.plot_path.empty()) {
      write_text_file(config.plot_path, sweep_plot(data));
    }
    err << data.records.size() << " equilibrium records over "
        << data.metadata.gamma_values.size() << " gamma points\n";
    return kExitOk;
  });
}

int cmd_bayes_sweep(const RunConfig& config, std::ostream& out,
                    std::ostream& err) {
  return guarded(err, [&] {
    require_game(config);
    if (config.game2.empty()) throw ConfigError("--game2 is required");
    const GameCatalogue catalogue = resolve_catalogue(config);
    const GameDefinition& g1 = catalogue.get(config.game);
    const GameDefinition& g2 = catalogue.get(config.game2);
    const auto grid = make_grid(config.steps);
    SweepDataset data;
    data.metadata.command = "bayes-sweep";
    data.metadata.games = {g1.name, g2.name};
    data.metadata.steps = config.steps;
    data.metadata.epsilon = config.epsilon;
    data.metadata.strategy_count = grid->size();
    data.metadata.gamma_values = gamma_grid(config.gamma_points);
    data.metadata.p_values = prior_grid(config.p_points);
    data.records = bayes_sweep(g1, g2, grid, data.metadata.gamma_values,
                               data.metadata.p_values,
                               SweepOptions{config.epsilon, config.threads});
    emit(config.out_path, render_dataset(data, config.format), out);
    if (!config.plot_path.empty()) {
      write_text_file(config.plot_path, sweep_plot(data));
    }
    err << data.records.size() << " equilibrium records over "
        << data.metadata.gamma_values.size() << " x "
        << data.metadata.p_values.size() << " (gamma, p) points\n";
    return kExitOk;
  });
}

int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    SweepDataset data;
    if (!config.input_path.empty()) {
      data = parse_sweep_json(read_text_file(config.input_path));
    } else {
      require_game(config);
      data = run_gamma_sweep(config, "sweep", gamma_grid(config.gamma_points));
    }
    const std::vector<double>& gammas = data.metadata.gamma_values;
    if (gammas.empty()) throw ConfigError("sweep has no gamma points");
    const auto [lo, hi] = std::minmax_element(gammas.begin(), gammas.end());
    if (!(config.gamma_slice >= *lo - 1e-12 && config.gamma_slice <= *hi + 1e-12)) {
      throw ConfigError("gamma slice " + format_number(config.gamma_slice) +
                        " outside sweep range [" + format_number(*lo) + ", " +
                        format_number(*hi) + "]");
    }

    const auto theta = scatter_theta(data.records);
    const std::vector<HistogramBin> hist =
        payoff_histogram(data.records, config.gamma_slice, config.bin_width);
    // theta_A against payoff at the same slice as the histogram.
    std::vector<SweepRecord> at_slice;
    if (!data.records.empty()) {
      double nearest = data.records.front().gamma;
      for (const SweepRecord& r : data.records) {
        if (std::abs(r.gamma - config.gamma_slice) <
            std::abs(nearest - config.gamma_slice)) {
          nearest = r.gamma;
        }
      }
      for (const SweepRecord& r : data.records) {
        if (r.gamma == nearest) at_slice.push_back(r);
      }
    }
    const auto theta_payoff = scatter_theta_payoff(at_slice);

    const std::string theta_csv = pairs_csv("theta_a", "theta_b", theta);
    const std::string theta_payoff_csv =
        pairs_csv("theta_a", "payoff_a", theta_payoff);
    const std::string hist_csv = histogram_csv(hist);
    if (config.out_path.empty()) {
      out << "# theta_scatter\n" << theta_csv << "\n# theta_payoff\n"
          << theta_payoff_csv << "\n# payoff_histogram\n" << hist_csv;
    } else {
      const std::string prefix = strip_suffix(config.out_path, ".csv");
      write_text_file(prefix + ".theta.csv", theta_csv);
      write_text_file(prefix + ".theta_payoff.csv", theta_payoff_csv);
      write_text_file(prefix + ".histogram.csv", hist_csv);
    }
    if (!config.plot_path.empty()) {
      const std::string prefix = strip_suffix(config.plot_path, ".svg");
      SvgPlot scatter("equilibrium strategies", "theta_A", "theta_B");
      scatter.add_series({"equilibria", "#1f77b4", SvgPlot::Style::kPoints,
                          distinct(theta)});
      write_text_file(prefix + ".theta.svg", scatter.render());

      SvgPlot tp("theta_A vs payoff at gamma = " +
                     format_number(config.gamma_slice),
                 "theta_A", "payoff A");
      tp.add_series({"equilibria", "#1f77b4", SvgPlot::Style::kPoints,
                     distinct(theta_payoff)});
      write_text_file(prefix + ".theta_payoff.svg", tp.render());

      SvgPlot hp("payoff histogram at gamma = " +
                     format_number(config.gamma_slice),
                 "payoff A", "count");
      hp.set_bar_width(config.bin_width);
      std::vector<std::pair<double, double>> bars;
      for (const HistogramBin& b : hist) {
        bars.emplace_back(b.center, static_cast<double>(b.count));
      }
      hp.add_series({"equilibria", "#1f77b4", SvgPlot::Style::kBars, bars});
      write_text_file(prefix + ".histogram.svg", hp.render());
    }
    err << data.records.size() << " records analyzed, " << hist.size()
        << " histogram bins\n";
    return kExitOk;
  });
}

int cmd_strategies(const RunConfig& config, std::ostream& out,
                   std::ostream& err) {
  return guarded(err, [&] {
    const StrategyGrid grid = build_grid(config.steps);
    emit(config.out_path, strategies_csv(grid), out);
    return kExitOk;
  });
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Nash equilibria of EWL-quantized two-player and Bayesian games",
               "qgame"};
  app.set_config("--config", "", "INI/TOML run configuration; flags override");
  app.set_version_flag("--version", QGAME_VERSION);
  app.require_subcommand(1);
  app.fallthrough();  // so `qgame sweep --config run.ini` works too

  RunConfig config;
  // Config files split "a,b,c" into three values; accept either shape.
  std::vector<std::string> steps_parts{"pi,pi/2,pi/2"};
  std::string gamma_text = "0";
  std::string slice_text = "0.7";
  std::string format_text = "csv";

  auto common = [&](CLI::App* sub) {
    sub->configurable();
    sub->add_option("--catalogue", config.catalogue_path,
                    "Game catalogue file (default: built-in)");
    sub->add_option("--steps", steps_parts,
                    "Stepping parameters T,P,A in radians, e.g. pi/8,pi/8,pi/8")
        ->expected(1, 3)
        ->capture_default_str();
    sub->add_option("--epsilon", config.epsilon, "Best-response tie tolerance")
        ->capture_default_str();
    sub->add_option("--out", config.out_path, "Output path (default: stdout)");
    sub->add_option("--threads", config.threads,
                    "Worker threads for payoff tensors (0 = all cores)")
        ->capture_default_str();
  };
  auto with_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_text, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
  };

  CLI::App* solve = app.add_subcommand("solve", "Equilibria at one gamma");
  common(solve);
  with_format(solve);
  solve->add_option("--game", config.game, "Game name")->required();
  solve->add_option("--gamma", gamma_text, "Entanglement in [0, pi/2]")
      ->capture_default_str();

  CLI::App* sweep = app.add_subcommand("sweep", "Equilibria across gamma");
  common(sweep);
  with_format(sweep);
  sweep->add_option("--game", config.game, "Game name")->required();
  sweep->add_option("--gamma-grid", config.gamma_points,
                    "Uniform gamma points on [0, pi/2]")
      ->capture_default_str();
  sweep->add_option("--plot", config.plot_path, "SVG plot path");

  CLI::App* bayes = app.add_subcommand(
      "bayes-sweep", "Bayesian equilibria across gamma and prior p");
  common(bayes);
  with_format(bayes);
  bayes->add_option("--game", config.game, "Game played with prob. p")
      ->required();
  bayes->add_option("--game2", config.game2, "Game played with prob. 1-p")
      ->required();
  bayes->add_option("--gamma-grid", config.gamma_points,
                    "Uniform gamma points on [0, pi/2]")
      ->capture_default_str();
  bayes->add_option("--p-grid", config.p_points, "Uniform p points on [0, 1]")
      ->capture_default_str();
  bayes->add_option("--plot", config.plot_path, "SVG plot path");

  CLI::App* analyze = app.add_subcommand(
      "analyze", "Theta scatter and payoff histogram of a sweep");
  common(analyze);
  analyze->add_option("--input", config.input_path,
                      "Sweep JSON from a previous run (else sweeps --game)");
  analyze->add_option("--game", config.game, "Game name for an inline sweep");
  analyze->add_option("--gamma-grid", config.gamma_points,
                      "Uniform gamma points for an inline sweep")
      ->capture_default_str();
  analyze->add_option("--gamma-slice", slice_text, "Gamma of the histogram")
      ->capture_default_str();
  analyze->add_option("--bin-width", config.bin_width, "Histogram bin width")
      ->capture_default_str();
  analyze->add_option("--plot", config.plot_path, "SVG plot path prefix");

  CLI::App* strategies =
      app.add_subcommand("strategies", "List the deduplicated strategy grid");
  strategies->configurable();
  strategies->add_option("--steps", steps_parts, "Stepping parameters T,P,A")
      ->expected(1, 3)
      ->capture_default_str();
  strategies->add_option("--out", config.out_path,
                         "Output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  return guarded(err, [&] {
    std::string steps_text;
    for (const std::string& part : steps_parts) {
      steps_text += (steps_text.empty() ? "" : ",") + part;
    }
    config.steps = parse_steps(steps_text);
    config.gamma = parse_angle(gamma_text);
    config.gamma_slice = parse_angle(slice_text);
    config.format =
        format_text == "json" ? OutputFormat::kJson : OutputFormat::kCsv;
    if (solve->parsed()) {
      config.command = "solve";
      return cmd_solve(config, out, err);
    }
    if (sweep->parsed()) {
      config.command = "sweep";
      return cmd_sweep(config, out, err);
    }
    if (bayes->parsed()) {
      config.command = "bayes-sweep";
      return cmd_bayes_sweep(config, out, err);
    }
    if (analyze->parsed()) {
      config.command = "analyze";
      return cmd_analyze(config, out, err);
    }
    config.command = "strategies";
    return cmd_strategies(config, out, err);
  });
}

}  // namespace qgame
