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


#ifndef QGAME_STRATEGY_GRID_HPP_
#define QGAME_STRATEGY_GRID_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qgame/ewl.hpp"
#include "qgame/qmatrix.hpp"

namespace qgame {

// Two strategy matrices closer than this (max entrywise) are the same grid
// entry.
inline constexpr double kGridDedupTol = 1e-9;

struct SteppingParams {
  double d_theta = kPi;
  double d_phi = kPi / 2.0;
  double d_alpha = kPi / 2.0;

  // Each step must be positive and no larger than its parameter interval.
  // Throws std::invalid_argument.
  void validate() const;
};

struct GridEntry {
  StrategyParams params;
  ComplexMatrix2 matrix;
};

// The deduplicated strategy set. Entries are ordered lexicographically by the
// (theta, phi, alpha) of the representative kept for each distinct matrix;
// U(0,0,0) is always entry 0.
class StrategyGrid {
 public:
  StrategyGrid(std::vector<GridEntry> entries, SteppingParams steps)
      : entries_(std::move(entries)), steps_(steps) {}

  std::size_t size() const { return entries_.size(); }
  const GridEntry& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const GridEntry> entries() const { return entries_; }
  const SteppingParams& source_steps() const { return steps_; }

 private:
  std::vector<GridEntry> entries_;
  SteppingParams steps_;
};

// Enumerates every (j d_theta, k d_phi, l d_alpha) inside the closed parameter
// box, endpoints included, and keeps the first triple for each entrywise
// distinct matrix. Matrices that differ only by a global phase stay separate.
StrategyGrid build_grid(const SteppingParams& steps);

std::optional<std::size_t> grid_lookup(const StrategyGrid& grid,
                                       const StrategyParams& params);

}  // namespace qgame

#endif  // QGAME_STRATEGY_GRID_HPP_
