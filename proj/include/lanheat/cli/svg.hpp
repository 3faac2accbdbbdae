#pragma once

#include <string>
#include <vector>

namespace lanheat::cli {

struct PlotLine {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<PlotLine> lines;
};

/// Self-contained SVG line chart with axes, ticks and a legend.
std::string render_svg(const PlotSpec& spec);

}  // namespace lanheat::cli
