#include "lanheat/cli/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace lanheat::cli {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 500.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 180.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

constexpr std::array<const char*, 8> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                              "#9467bd", "#8c564b", "#e377c2", "#17becf"};

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

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", std::abs(v) < 1e-12 ? 0.0 : v);
  return buf;
}

// 1-2-5 step giving roughly `target` intervals over the span.
double nice_step(double span, int target) {
  const double raw = span / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    if (raw <= m * mag) return m * mag;
  }
  return 10.0 * mag;
}

}  // namespace

std::string render_svg(const PlotSpec& spec) {
  double x_min = std::numeric_limits<double>::infinity();
  double x_max = -x_min;
  double y_min = x_min;
  double y_max = -x_min;
  for (const auto& line : spec.lines) {
    for (double v : line.x) x_min = std::min(x_min, v), x_max = std::max(x_max, v);
    for (double v : line.y) y_min = std::min(y_min, v), y_max = std::max(y_max, v);
  }
  if (!std::isfinite(x_min)) x_min = 0.0, x_max = 1.0, y_min = 0.0, y_max = 1.0;
  if (x_max <= x_min) x_max = x_min + 1.0;
  if (y_max <= y_min) y_max = y_min + 1.0;

  const double x_step = nice_step(x_max - x_min, 8);
  const double y_step = nice_step(y_max - y_min, 6);
  x_min = std::floor(x_min / x_step) * x_step;
  x_max = std::ceil(x_max / x_step) * x_step;
  y_min = std::floor(y_min / y_step) * y_step;
  y_max = std::ceil(y_max / y_step) * y_step;

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const auto px = [&](double x) { return kLeft + (x - x_min) / (x_max - x_min) * plot_w; };
  const auto py = [&](double y) { return kTop + plot_h - (y - y_min) / (y_max - y_min) * plot_h; };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
    << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s << "<text x=\"" << num(kLeft + plot_w / 2) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">"
    << escape(spec.title) << "</text>\n";

  for (double x = x_min; x <= x_max + 0.5 * x_step; x += x_step) {
    s << "<line x1=\"" << num(px(x)) << "\" y1=\"" << num(kTop) << "\" x2=\"" << num(px(x)) << "\" y2=\""
      << num(kTop + plot_h) << "\" stroke=\"#e0e0e0\"/>\n";
    s << "<text x=\"" << num(px(x)) << "\" y=\"" << num(kTop + plot_h + 18) << "\" text-anchor=\"middle\">"
      << tick_label(x) << "</text>\n";
  }
  for (double y = y_min; y <= y_max + 0.5 * y_step; y += y_step) {
    s << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(py(y)) << "\" x2=\"" << num(kLeft + plot_w) << "\" y2=\""
      << num(py(y)) << "\" stroke=\"#e0e0e0\"/>\n";
    s << "<text x=\"" << num(kLeft - 8) << "\" y=\"" << num(py(y) + 4) << "\" text-anchor=\"end\">"
      << tick_label(y) << "</text>\n";
  }
  s << "<rect x=\"" << num(kLeft) << "\" y=\"" << num(kTop) << "\" width=\"" << num(plot_w) << "\" height=\""
    << num(plot_h) << "\" fill=\"none\" stroke=\"black\"/>\n";
  s << "<text x=\"" << num(kLeft + plot_w / 2) << "\" y=\"" << num(kHeight - 15)
    << "\" text-anchor=\"middle\">" << escape(spec.x_label) << "</text>\n";
  s << "<text transform=\"translate(20," << num(kTop + plot_h / 2) << ") rotate(-90)\" text-anchor=\"middle\">"
    << escape(spec.y_label) << "</text>\n";

  for (std::size_t i = 0; i < spec.lines.size(); ++i) {
    const auto& line = spec.lines[i];
    const char* color = kPalette[i % kPalette.size()];
    s << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t k = 0; k < std::min(line.x.size(), line.y.size()); ++k) {
      if (k > 0) s << ' ';
      s << num(px(line.x[k])) << ',' << num(py(line.y[k]));
    }
    s << "\"/>\n";
    const double ly = kTop + 10 + 20.0 * static_cast<double>(i);
    s << "<line x1=\"" << num(kLeft + plot_w + 12) << "\" y1=\"" << num(ly) << "\" x2=\""
      << num(kLeft + plot_w + 36) << "\" y2=\"" << num(ly) << "\" stroke=\"" << color
      << "\" stroke-width=\"2\"/>\n";
    s << "<text x=\"" << num(kLeft + plot_w + 42) << "\" y=\"" << num(ly + 4) << "\">" << escape(line.label)
      << "</text>\n";
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace lanheat::cli
