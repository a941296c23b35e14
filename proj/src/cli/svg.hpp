#pragma once

#include <string>
#include <vector>

#include "poncelet/conic.hpp"

namespace poncelet::cli {

/// Minimal SVG builder. The viewBox is the bounding box of every layer added
/// with fit = true, padded by 5% on each side; y is flipped so that the
/// imaginary axis points up.
class SvgPlot {
 public:
  void polyline(std::vector<cplx> points, std::string stroke, double width, bool closed, bool fit = true);
  void segment(cplx a, cplx b, std::string stroke, double width, bool fit = true);
  void dots(std::vector<cplx> points, std::string fill, double radius, bool fit = true);

  std::string render() const;

 private:
  struct Layer {
    enum class Kind { polyline, segment, dots } kind;
    std::vector<cplx> points;
    std::string color;
    double size = 1.0;
    bool closed = false;
  };

  void extend(const std::vector<cplx>& points);

  std::vector<Layer> layers_;
  bool has_bounds_ = false;
  double min_x_ = 0.0, max_x_ = 0.0, min_y_ = 0.0, max_y_ = 0.0;
};

inline constexpr const char* kBoundaryColor = "#000000";
inline constexpr const char* kChordColor = "#d0d0d0";
inline constexpr const char* kCurveColor = "#d62728";
inline constexpr const char* kDotColor = "#1f77b4";

/// Polyline through an ellipse in general form, for drawing.
std::vector<cplx> sample_ellipse(const ConicGeneral& c, int n = 256);

}  // namespace poncelet::cli
