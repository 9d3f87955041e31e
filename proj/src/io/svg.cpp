#include "diffcast/io/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace diffcast::io {
namespace {

constexpr double kLeft = 70;
constexpr double kRight = 20;
constexpr double kTop = 40;
constexpr double kBottom = 50;

std::string fmt(double v, int decimals = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  std::string s(buf);
  if (s == "-0.00" || s == "-0") s.erase(0, 1);
  return s;
}

std::string tick_label(double v, double step) {
  const int decimals = step >= 1 ? 0 : std::min(8, static_cast<int>(std::ceil(-std::log10(step))));
  return fmt(v, decimals);
}

struct Extent {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void include(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void finish() {
    if (!std::isfinite(lo)) {
      lo = 0;
      hi = 1;
    } else if (hi - lo <= 0) {
      const double pad = lo == 0 ? 1 : std::abs(lo) * 0.05;
      lo -= pad;
      hi += pad;
    }
  }
};

}  // namespace

std::string xml_escape(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (const char c : text) {
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

std::vector<double> nice_ticks(double lo, double hi, int target_count) {
  if (!(hi > lo) || target_count < 2) return {lo};
  const double raw = (hi - lo) / (target_count - 1);
  const double magnitude = std::pow(10.0, std::floor(std::log10(raw)));
  double step = magnitude;
  for (const double m : {1.0, 2.0, 2.5, 5.0, 10.0}) {
    step = m * magnitude;
    if (step >= raw) break;
  }
  std::vector<double> ticks;
  for (double t = std::ceil(lo / step) * step; t <= hi + step * 1e-9; t += step) {
    ticks.push_back(std::abs(t) < step * 1e-9 ? 0.0 : t);
  }
  return ticks;
}

SvgChart::SvgChart(std::string title, double width, double height)
    : title_(std::move(title)), width_(width), height_(height) {}

SvgChart& SvgChart::add(LineSeries line) {
  lines_.push_back(std::move(line));
  return *this;
}

SvgChart& SvgChart::add(BandSeries band) {
  bands_.push_back(std::move(band));
  return *this;
}

SvgChart& SvgChart::add(MarkerSeries markers) {
  markers_.push_back(std::move(markers));
  return *this;
}

SvgChart& SvgChart::x_axis(std::string label, std::function<std::string(double)> tick_format) {
  x_label_ = std::move(label);
  x_format_ = std::move(tick_format);
  return *this;
}

SvgChart& SvgChart::y_axis(std::string label) {
  y_label_ = std::move(label);
  return *this;
}

std::string SvgChart::render(const std::string& metadata) const {
  Extent xs;
  Extent ys;
  for (const auto& l : lines_) {
    for (std::size_t i = 0; i < l.x.size() && i < l.y.size(); ++i) {
      if (std::isfinite(l.y[i])) {
        xs.include(l.x[i]);
        ys.include(l.y[i]);
      }
    }
  }
  for (const auto& b : bands_) {
    for (std::size_t i = 0; i < b.x.size(); ++i) {
      xs.include(b.x[i]);
      ys.include(b.lower[i]);
      ys.include(b.upper[i]);
    }
  }
  for (const auto& m : markers_) {
    for (std::size_t i = 0; i < m.x.size() && i < m.y.size(); ++i) {
      xs.include(m.x[i]);
      ys.include(m.y[i]);
    }
  }
  xs.finish();
  ys.finish();
  const double y_pad = 0.04 * (ys.hi - ys.lo);
  ys.lo -= y_pad;
  ys.hi += y_pad;

  const double plot_w = width_ - kLeft - kRight;
  const double plot_h = height_ - kTop - kBottom;
  const auto px = [&](double x) { return kLeft + (x - xs.lo) / (xs.hi - xs.lo) * plot_w; };
  const auto py = [&](double y) { return kTop + (ys.hi - y) / (ys.hi - ys.lo) * plot_h; };

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt(width_, 0) + "\" height=\"" +
       fmt(height_, 0) + "\" viewBox=\"0 0 " + fmt(width_, 0) + " " + fmt(height_, 0) + "\">\n";
  if (!metadata.empty()) s += "<metadata>" + xml_escape(metadata) + "</metadata>\n";
  s += "<title>" + xml_escape(title_) + "</title>\n";
  s += "<rect x=\"0\" y=\"0\" width=\"" + fmt(width_, 0) + "\" height=\"" + fmt(height_, 0) + "\" fill=\"white\"/>\n";
  s += "<text x=\"" + fmt(width_ / 2) + "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
       "font-size=\"15\">" + xml_escape(title_) + "</text>\n";

  // Axes, grid and ticks.
  s += "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333\">\n";
  const auto x_ticks = nice_ticks(xs.lo, xs.hi, 8);
  const double x_step = x_ticks.size() > 1 ? x_ticks[1] - x_ticks[0] : 1.0;
  for (const double t : x_ticks) {
    const std::string x = fmt(px(t));
    s += "<line x1=\"" + x + "\" y1=\"" + fmt(kTop) + "\" x2=\"" + x + "\" y2=\"" + fmt(kTop + plot_h) +
         "\" stroke=\"#e4e4e4\"/>\n";
    const std::string label = x_format_ ? x_format_(t) : tick_label(t, x_step);
    s += "<text x=\"" + x + "\" y=\"" + fmt(kTop + plot_h + 16) + "\" text-anchor=\"middle\">" +
         xml_escape(label) + "</text>\n";
  }
  const auto y_ticks = nice_ticks(ys.lo, ys.hi, 6);
  const double y_step = y_ticks.size() > 1 ? y_ticks[1] - y_ticks[0] : 1.0;
  for (const double t : y_ticks) {
    const std::string y = fmt(py(t));
    s += "<line x1=\"" + fmt(kLeft) + "\" y1=\"" + y + "\" x2=\"" + fmt(kLeft + plot_w) + "\" y2=\"" + y +
         "\" stroke=\"#e4e4e4\"/>\n";
    s += "<text x=\"" + fmt(kLeft - 6) + "\" y=\"" + fmt(py(t) + 4) + "\" text-anchor=\"end\">" +
         tick_label(t, y_step) + "</text>\n";
  }
  s += "<rect x=\"" + fmt(kLeft) + "\" y=\"" + fmt(kTop) + "\" width=\"" + fmt(plot_w) + "\" height=\"" +
       fmt(plot_h) + "\" fill=\"none\" stroke=\"#555\"/>\n";
  if (!x_label_.empty()) {
    s += "<text x=\"" + fmt(kLeft + plot_w / 2) + "\" y=\"" + fmt(height_ - 10) + "\" text-anchor=\"middle\">" +
         xml_escape(x_label_) + "</text>\n";
  }
  if (!y_label_.empty()) {
    s += "<text x=\"16\" y=\"" + fmt(kTop + plot_h / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
         fmt(kTop + plot_h / 2) + ")\">" + xml_escape(y_label_) + "</text>\n";
  }
  s += "</g>\n";

  for (const auto& b : bands_) {
    // One polygon per run of finite samples.
    std::size_t i = 0;
    while (i < b.x.size()) {
      while (i < b.x.size() && !(std::isfinite(b.lower[i]) && std::isfinite(b.upper[i]))) ++i;
      const std::size_t from = i;
      while (i < b.x.size() && std::isfinite(b.lower[i]) && std::isfinite(b.upper[i])) ++i;
      if (i - from < 2) continue;
      std::string points;
      for (std::size_t k = from; k < i; ++k) points += fmt(px(b.x[k])) + "," + fmt(py(b.upper[k])) + " ";
      for (std::size_t k = i; k-- > from;) points += fmt(px(b.x[k])) + "," + fmt(py(b.lower[k])) + " ";
      points.pop_back();
      s += "<polygon points=\"" + points + "\" fill=\"" + b.color + "\" fill-opacity=\"" + fmt(b.opacity) +
           "\" stroke=\"none\"/>\n";
    }
  }

  for (const auto& l : lines_) {
    std::string d;
    bool pen_down = false;
    for (std::size_t i = 0; i < l.x.size() && i < l.y.size(); ++i) {
      if (!std::isfinite(l.y[i])) {
        pen_down = false;
        continue;
      }
      d += (pen_down ? "L" : "M") + fmt(px(l.x[i])) + "," + fmt(py(l.y[i]));
      pen_down = true;
    }
    if (d.empty()) continue;
    s += "<path d=\"" + d + "\" fill=\"none\" stroke=\"" + l.color + "\" stroke-width=\"" + fmt(l.width) + "\"" +
         (l.dashed ? " stroke-dasharray=\"6,4\"" : "") + "/>\n";
  }

  for (const auto& m : markers_) {
    s += "<g fill=\"" + m.color + "\">\n";
    for (std::size_t i = 0; i < m.x.size() && i < m.y.size(); ++i) {
      if (!std::isfinite(m.y[i])) continue;
      const double cx = px(m.x[i]);
      const double cy = py(m.y[i]);
      const double r = m.size;
      const double tip = m.shape == Marker::TriangleDown ? cy + r : cy - r;
      const double base = m.shape == Marker::TriangleDown ? cy - r : cy + r;
      s += "<polygon points=\"" + fmt(cx - r) + "," + fmt(base) + " " + fmt(cx + r) + "," + fmt(base) + " " +
           fmt(cx) + "," + fmt(tip) + "\"/>\n";
    }
    s += "</g>\n";
  }

  // Legend.
  double ly = kTop + 14;
  s += "<g font-family=\"sans-serif\" font-size=\"11\">\n";
  const double lx = kLeft + 10;
  for (const auto& l : lines_) {
    if (l.label.empty()) continue;
    s += "<line x1=\"" + fmt(lx) + "\" y1=\"" + fmt(ly - 4) + "\" x2=\"" + fmt(lx + 24) + "\" y2=\"" + fmt(ly - 4) +
         "\" stroke=\"" + l.color + "\" stroke-width=\"" + fmt(l.width + 0.6) + "\"" +
         (l.dashed ? " stroke-dasharray=\"6,4\"" : "") + "/>\n";
    s += "<text x=\"" + fmt(lx + 30) + "\" y=\"" + fmt(ly) + "\">" + xml_escape(l.label) + "</text>\n";
    ly += 16;
  }
  for (const auto& b : bands_) {
    if (b.label.empty()) continue;
    s += "<rect x=\"" + fmt(lx) + "\" y=\"" + fmt(ly - 10) + "\" width=\"24\" height=\"10\" fill=\"" + b.color +
         "\" fill-opacity=\"" + fmt(b.opacity) + "\"/>\n";
    s += "<text x=\"" + fmt(lx + 30) + "\" y=\"" + fmt(ly) + "\">" + xml_escape(b.label) + "</text>\n";
    ly += 16;
  }
  for (const auto& m : markers_) {
    if (m.label.empty()) continue;
    const double cx = lx + 12;
    const double cy = ly - 4;
    const double tip = m.shape == Marker::TriangleDown ? cy + 4 : cy - 4;
    const double base = m.shape == Marker::TriangleDown ? cy - 4 : cy + 4;
    s += "<polygon points=\"" + fmt(cx - 4) + "," + fmt(base) + " " + fmt(cx + 4) + "," + fmt(base) + " " +
         fmt(cx) + "," + fmt(tip) + "\" fill=\"" + m.color + "\"/>\n";
    s += "<text x=\"" + fmt(lx + 30) + "\" y=\"" + fmt(ly) + "\">" + xml_escape(m.label) + "</text>\n";
    ly += 16;
  }
  s += "</g>\n";
  s += "</svg>\n";
  return s;
}

}  // namespace diffcast::io
