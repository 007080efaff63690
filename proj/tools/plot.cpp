#include "plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace dcalc::cli {
namespace {

constexpr double kWidth = 800, kHeight = 500, kMargin = 40;

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '&':
        out += "&amp;";
        break;
      default:
        out += ch;
    }
  }
  return out;
}

}  // namespace

std::string comparison_svg(const Series& discrete, const Series& classical, const std::string& title, double y_min,
                           double y_max) {
  auto clip = [&](double y) {
    if (std::isfinite(y_min)) y = std::max(y, y_min);
    if (std::isfinite(y_max)) y = std::min(y, y_max);
    return y;
  };
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, lo = x0, hi = -x0;
  for (const Series* s : {&discrete, &classical})
    for (const auto& [x, y] : *s) {
      if (!std::isfinite(y)) continue;
      x0 = std::min(x0, x);
      x1 = std::max(x1, x);
      lo = std::min(lo, clip(y));
      hi = std::max(hi, clip(y));
    }
  if (!std::isfinite(x0)) x0 = 0, x1 = 1, lo = 0, hi = 1;
  if (x1 == x0) x1 = x0 + 1;
  if (hi == lo) hi = lo + 1;

  auto px = [&](double x) { return kMargin + (x - x0) / (x1 - x0) * (kWidth - 2 * kMargin); };
  auto py = [&](double y) { return kHeight - kMargin - (clip(y) - lo) / (hi - lo) * (kHeight - 2 * kMargin); };
  auto points = [&](const Series& s) {
    std::string out;
    for (const auto& [x, y] : s) {
      if (!std::isfinite(y)) continue;
      if (!out.empty()) out += ' ';
      out += fixed(px(x)) + "," + fixed(py(y));
    }
    return out;
  };

  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 500\" width=\"800\" height=\"500\">\n";
  svg += "<title>" + escape(title) + "</title>\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"500\" fill=\"white\"/>\n";
  const double axis_y = lo <= 0 && hi >= 0 ? py(0) : kHeight - kMargin;
  const double axis_x = x0 <= 0 && x1 >= 0 ? px(0) : kMargin;
  svg += "<line x1=\"" + fixed(kMargin) + "\" y1=\"" + fixed(axis_y) + "\" x2=\"" + fixed(kWidth - kMargin) + "\" y2=\"" +
         fixed(axis_y) + "\" stroke=\"#999\"/>\n";
  svg += "<line x1=\"" + fixed(axis_x) + "\" y1=\"" + fixed(kMargin) + "\" x2=\"" + fixed(axis_x) + "\" y2=\"" +
         fixed(kHeight - kMargin) + "\" stroke=\"#999\"/>\n";
  svg += "<polyline class=\"discrete\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2\" points=\"" + points(discrete) +
         "\"/>\n";
  svg += "<polyline class=\"classical\" fill=\"none\" stroke=\"#2c3e50\" stroke-width=\"1\" points=\"" +
         points(classical) + "\"/>\n";
  svg += "<text x=\"" + fixed(kMargin) + "\" y=\"24\" font-family=\"sans-serif\" font-size=\"14\">" + escape(title) +
         "</text>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace dcalc::cli
