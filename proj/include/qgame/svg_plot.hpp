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


#ifndef QGAME_SVG_PLOT_HPP_
#define QGAME_SVG_PLOT_HPP_

#include <string>
#include <utility>
#include <vector>

namespace qgame {

// Static 2D chart written as a standalone SVG document: axes with ticks, a
// legend and any number of point, line or bar series.
class SvgPlot {
 public:
  enum class Style { kPoints, kLine, kBars };

  struct Series {
    std::string label;
    std::string color;  // any SVG color
    Style style = Style::kPoints;
    std::vector<std::pair<double, double>> points;
  };

  SvgPlot(std::string title, std::string x_label, std::string y_label)
      : title_(std::move(title)),
        x_label_(std::move(x_label)),
        y_label_(std::move(y_label)) {}

  void add_series(Series s) { series_.push_back(std::move(s)); }

  // Bars are drawn centered on x with this width in data units.
  void set_bar_width(double w) { bar_width_ = w; }

  std::string render(int width = 720, int height = 480) const;

 private:
  std::string title_;
  std::string x_label_;
  std::string y_label_;
  std::vector<Series> series_;
  double bar_width_ = 0.05;
};

// Colors cycled across series.
const std::string& palette_color(std::size_t i);

}  // namespace qgame

#endif  // QGAME_SVG_PLOT_HPP_
