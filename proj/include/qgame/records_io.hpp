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


#ifndef QGAME_RECORDS_IO_HPP_
#define QGAME_RECORDS_IO_HPP_

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qgame/strategy_grid.hpp"
#include "qgame/sweep.hpp"

namespace qgame {

struct SweepMetadata {
  std::string command;             // solve, sweep or bayes-sweep
  std::vector<std::string> games;  // one or two names
  SteppingParams steps;
  double epsilon = kDefaultEpsilon;
  std::size_t strategy_count = 0;
  std::vector<double> gamma_values;
  std::vector<double> p_values;  // empty unless Bayesian
  std::string version = QGAME_VERSION;
};

struct SweepDataset {
  SweepMetadata metadata;
  std::vector<SweepRecord> records;

  bool bayesian() const { return metadata.games.size() == 2; }
};

// 12 significant digits, '.' decimal separator regardless of locale, no
// negative zero.
std::string format_number(double x);

// CSV text with a header row and LF line endings. Column sets:
//   two-player: gamma, eq_index, a_index, b_index, theta_a, phi_a, alpha_a,
//               theta_b, phi_b, alpha_b, payoff_a, payoff_b
//   Bayesian:   gamma, p, eq_index, a_index, b_index, b2_index, theta_a,
//               phi_a, alpha_a, theta_b, phi_b, alpha_b, theta_b2, phi_b2,
//               alpha_b2, payoff_a, payoff_b, payoff_b2
// eq_index counts equilibria within one (gamma, p) point.
std::string sweep_csv(const SweepDataset& data);

// Same fields as the CSV at full double precision, under a metadata header.
std::string sweep_json(const SweepDataset& data);

// Inverse of sweep_json. Throws ConfigError on malformed input.
SweepDataset parse_sweep_json(std::string_view text);

std::string strategies_csv(const StrategyGrid& grid);

std::string pairs_csv(std::string_view x_name, std::string_view y_name,
                      std::span<const std::pair<double, double>> rows);

std::string histogram_csv(std::span<const HistogramBin> bins);

std::string read_text_file(const std::filesystem::path& path);

// Throws IoError on failure.
void write_text_file(const std::filesystem::path& path,
                     std::string_view content);

}  // namespace qgame

#endif  // QGAME_RECORDS_IO_HPP_
