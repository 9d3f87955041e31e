#pragma once

#include <functional>
#include <string>
#include <vector>

namespace diffcast::io {

struct LineSeries {
  std::vector<double> x;
  std::vector<double> y;
  std::string color = "#1f4e9c";
  bool dashed = false;
  double width = 1.2;
  std::string label;
};

struct BandSeries {
  std::vector<double> x;
  std::vector<double> lower;
  std::vector<double> upper;
  std::string color = "#d04040";
  double opacity = 0.15;
  std::string label;
};

enum class Marker { TriangleDown, TriangleUp };

struct MarkerSeries {
  std::vector<double> x;
  std::vector<double> y;
  Marker shape = Marker::TriangleDown;
  std::string color = "#202020";
  double size = 4.0;
  std::string label;
};

/**
 * Minimal deterministic SVG 1.1 chart. Coordinates are printed with a fixed
 * number of decimals so identical inputs give identical bytes. Non-finite
 * points break a line rather than being drawn.
 */
class SvgChart {
 public:
  SvgChart(std::string title, double width = 960, double height = 420);

  SvgChart& add(LineSeries line);
  SvgChart& add(BandSeries band);
  SvgChart& add(MarkerSeries markers);
  SvgChart& x_axis(std::string label, std::function<std::string(double)> tick_format = {});
  SvgChart& y_axis(std::string label);

  /// `metadata` is embedded verbatim (XML-escaped) in a <metadata> element.
  std::string render(const std::string& metadata = {}) const;

 private:
  std::string title_;
  double width_;
  double height_;
  std::string x_label_;
  std::string y_label_;
  std::function<std::string(double)> x_format_;
  std::vector<BandSeries> bands_;
  std::vector<LineSeries> lines_;
  std::vector<MarkerSeries> markers_;
};

std::string xml_escape(const std::string& text);

/// Round-number tick positions covering [lo, hi].
std::vector<double> nice_ticks(double lo, double hi, int target_count = 6);

}  // namespace diffcast::io
