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


#ifndef QGAME_CLI_HPP_
#define QGAME_CLI_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "qgame/catalogue.hpp"
#include "qgame/strategy_grid.hpp"
#include "qgame/sweep.hpp"

namespace qgame {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitIo = 2 };

enum class OutputFormat { kCsv, kJson };

// Everything a subcommand needs, after flags and the optional config file
// have been merged.
struct RunConfig {
  std::string command;
  std::string game;
  std::string game2;
  std::string catalogue_path;  // empty: built-in catalogue
  SteppingParams steps;
  double gamma = 0.0;
  std::size_t gamma_points = kDefaultGammaPoints;
  std::size_t p_points = kDefaultPriorPoints;
  double epsilon = kDefaultEpsilon;
  std::string out_path;   // empty: stdout
  OutputFormat format = OutputFormat::kCsv;
  std::string plot_path;  // empty: no plot
  unsigned threads = 0;   // 0: hardware concurrency
  std::string input_path;  // analyze: prior sweep JSON
  double gamma_slice = 0.7;
  double bin_width = kDefaultBinWidth;
};

// Parses "0.3927", "pi", "pi/8", "3pi/4", "3*pi/4" or "1/8" as radians.
// Throws ConfigError.
double parse_angle(std::string_view text);

// "T,P,A" with each component accepted by parse_angle.
SteppingParams parse_steps(std::string_view text);

// Catalogue named by the config, or the built-in one.
GameCatalogue resolve_catalogue(const RunConfig& config);

int cmd_solve(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_bayes_sweep(const RunConfig& config, std::ostream& out,
                    std::ostream& err);
int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_strategies(const RunConfig& config, std::ostream& out,
                   std::ostream& err);

// Full command line: subcommand, flags and --config FILE. Errors are reported
// on err and mapped to ExitCode values.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace qgame

#endif  // QGAME_CLI_HPP_
