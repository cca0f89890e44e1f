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


#include "qgame/svg_plot.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "qgame/records_io.hpp"

namespace qgame {
namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string fmt(double x) {
  // Pixel coordinates do not need more than 2 decimals.
  return format_number(std::round(x * 100.0) / 100.0);
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void include(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void pad() {
    if (!std::isfinite(lo)) {
      lo = 0.0;
      hi = 1.0;
    }
    if (hi - lo < 1e-12) {
      lo -= 0.5;
      hi += 0.5;
    } else {
      const double m = 0.05 * (hi - lo);
      lo -= m;
      hi += m;
    }
  }
};

// About five round-numbered ticks across [lo, hi].
std::vector<double> ticks(double lo, double hi) {
  const double raw = (hi - lo) / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    step = m * mag;
    if (step >= raw) break;
  }
  std::vector<double> out;
  for (double t = std::ceil(lo / step) * step; t <= hi + 1e-12; t += step) {
    out.push_back(std::abs(t) < step * 1e-9 ? 0.0 : t);
  }
  return out;
}

}  // namespace

const std::string& palette_color(std::size_t i) {
  static const std::array<std::string, 8> kColors = {
      "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
      "#9467bd", "#8c564b", "#e377c2", "#17becf"};
  return kColors[i % kColors.size()];
}

std::string SvgPlot::render(int width, int height) const {
  const double left = 70, right = 160, top = 40, bottom = 55;
  const double plot_w = width - left - right;
  const double plot_h = height - top - bottom;

  Range xr, yr;
  for (const Series& s : series_) {
    for (const auto& [x, y] : s.points) {
      if (s.style == Style::kBars) {
        xr.include(x - bar_width_ / 2.0);
        xr.include(x + bar_width_ / 2.0);
        yr.include(0.0);
      } else {
        xr.include(x);
      }
      yr.include(y);
    }
  }
  xr.pad();
  yr.pad();
  auto px = [&](double x) { return left + (x - xr.lo) / (xr.hi - xr.lo) * plot_w; };
  auto py = [&](double y) { return top + (yr.hi - y) / (yr.hi - yr.lo) * plot_h; };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(width) + "\" height=\"" + std::to_string(height) +
         "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<text x=\"" + fmt(left + plot_w / 2) +
         "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" +
         escape(title_) + "</text>\n";

  // Axes box and ticks.
  out += "<rect x=\"" + fmt(left) + "\" y=\"" + fmt(top) + "\" width=\"" +
         fmt(plot_w) + "\" height=\"" + fmt(plot_h) +
         "\" fill=\"none\" stroke=\"black\"/>\n";
  for (double t : ticks(xr.lo, xr.hi)) {
    const std::string x = fmt(px(t));
    out += "<line x1=\"" + x + "\" y1=\"" + fmt(top + plot_h) + "\" x2=\"" + x +
           "\" y2=\"" + fmt(top + plot_h + 5) + "\" stroke=\"black\"/>\n";
    out += "<text x=\"" + x + "\" y=\"" + fmt(top + plot_h + 18) +
           "\" text-anchor=\"middle\">" + format_number(t) + "</text>\n";
  }
  for (double t : ticks(yr.lo, yr.hi)) {
    const std::string y = fmt(py(t));
    out += "<line x1=\"" + fmt(left - 5) + "\" y1=\"" + y + "\" x2=\"" +
           fmt(left) + "\" y2=\"" + y + "\" stroke=\"black\"/>\n";
    out += "<text x=\"" + fmt(left - 8) + "\" y=\"" + y +
           "\" text-anchor=\"end\" dominant-baseline=\"middle\">" +
           format_number(t) + "</text>\n";
  }
  out += "<text x=\"" + fmt(left + plot_w / 2) + "\" y=\"" +
         fmt(height - 12.0) + "\" text-anchor=\"middle\">" + escape(x_label_) +
         "</text>\n";
  out += "<text transform=\"translate(18," + fmt(top + plot_h / 2) +
         ") rotate(-90)\" text-anchor=\"middle\">" + escape(y_label_) +
         "</text>\n";

  for (std::size_t si = 0; si < series_.size(); ++si) {
    const Series& s = series_[si];
    const std::string color = escape(s.color);
    switch (s.style) {
      case Style::kPoints:
        for (const auto& [x, y] : s.points) {
          out += "<circle cx=\"" + fmt(px(x)) + "\" cy=\"" + fmt(py(y)) +
                 "\" r=\"2.5\" fill=\"" + color + "\"/>\n";
        }
        break;
      case Style::kLine: {
        if (s.points.empty()) break;
        out += "<polyline fill=\"none\" stroke=\"" + color +
               "\" stroke-width=\"1.5\" points=\"";
        for (const auto& [x, y] : s.points) {
          out += fmt(px(x)) + "," + fmt(py(y)) + " ";
        }
        out.back() = '"';
        out += "/>\n";
        break;
      }
      case Style::kBars:
        for (const auto& [x, y] : s.points) {
          const double x0 = px(x - bar_width_ / 2.0);
          const double x1 = px(x + bar_width_ / 2.0);
          const double y0 = py(std::max(y, 0.0));
          const double y1 = py(std::min(y, 0.0));
          out += "<rect x=\"" + fmt(x0) + "\" y=\"" + fmt(y0) + "\" width=\"" +
                 fmt(x1 - x0) + "\" height=\"" + fmt(y1 - y0) + "\" fill=\"" +
                 color + "\" stroke=\"black\" stroke-width=\"0.5\"/>\n";
        }
        break;
    }
    // Legend entry.
    const double ly = top + 10 + 18.0 * static_cast<double>(si);
    out += "<rect x=\"" + fmt(left + plot_w + 12) + "\" y=\"" + fmt(ly - 5) +
           "\" width=\"10\" height=\"10\" fill=\"" + color + "\"/>\n";
    out += "<text x=\"" + fmt(left + plot_w + 28) + "\" y=\"" + fmt(ly) +
           "\" dominant-baseline=\"middle\">" + escape(s.label) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace qgame
