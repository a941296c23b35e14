#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace poncelet::cli {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

}  // namespace

void SvgPlot::extend(const std::vector<cplx>& points) {
  for (const cplx z : points) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) continue;
    if (!has_bounds_) {
      min_x_ = max_x_ = z.real();
      min_y_ = max_y_ = z.imag();
      has_bounds_ = true;
      continue;
    }
    min_x_ = std::min(min_x_, z.real());
    max_x_ = std::max(max_x_, z.real());
    min_y_ = std::min(min_y_, z.imag());
    max_y_ = std::max(max_y_, z.imag());
  }
}

void SvgPlot::polyline(std::vector<cplx> points, std::string stroke, double width, bool closed, bool fit) {
  if (fit) extend(points);
  layers_.push_back({Layer::Kind::polyline, std::move(points), std::move(stroke), width, closed});
}

void SvgPlot::segment(cplx a, cplx b, std::string stroke, double width, bool fit) {
  if (fit) extend({a, b});
  layers_.push_back({Layer::Kind::segment, {a, b}, std::move(stroke), width, false});
}

void SvgPlot::dots(std::vector<cplx> points, std::string fill, double radius, bool fit) {
  if (fit) extend(points);
  layers_.push_back({Layer::Kind::dots, std::move(points), std::move(fill), radius, false});
}

std::string SvgPlot::render() const {
  double x0 = has_bounds_ ? min_x_ : -1.0, x1 = has_bounds_ ? max_x_ : 1.0;
  double y0 = has_bounds_ ? min_y_ : -1.0, y1 = has_bounds_ ? max_y_ : 1.0;
  const double span = std::max({x1 - x0, y1 - y0, 1e-9});
  const double mx = 0.05 * std::max(x1 - x0, 1e-3 * span);
  const double my = 0.05 * std::max(y1 - y0, 1e-3 * span);
  x0 -= mx, x1 += mx, y0 -= my, y1 += my;
  // Stroke widths are given as fractions of the larger side.
  const double unit = std::max(x1 - x0, y1 - y0) / 1000.0;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\""
     << num(800.0 * (y1 - y0) / (x1 - x0)) << "\" viewBox=\"" << num(x0) << ' ' << num(-y1) << ' '
     << num(x1 - x0) << ' ' << num(y1 - y0) << "\">\n";
  os << "<rect x=\"" << num(x0) << "\" y=\"" << num(-y1) << "\" width=\"" << num(x1 - x0) << "\" height=\""
     << num(y1 - y0) << "\" fill=\"#ffffff\"/>\n";
  for (const Layer& l : layers_) {
    switch (l.kind) {
      case Layer::Kind::polyline: {
        os << (l.closed ? "<polygon" : "<polyline") << " fill=\"none\" stroke=\"" << l.color
           << "\" stroke-width=\"" << num(l.size * unit) << "\" points=\"";
        for (const cplx z : l.points) {
          if (std::isfinite(z.real()) && std::isfinite(z.imag())) os << num(z.real()) << ',' << num(-z.imag()) << ' ';
        }
        os << "\"/>\n";
        break;
      }
      case Layer::Kind::segment:
        os << "<line x1=\"" << num(l.points[0].real()) << "\" y1=\"" << num(-l.points[0].imag()) << "\" x2=\""
           << num(l.points[1].real()) << "\" y2=\"" << num(-l.points[1].imag()) << "\" stroke=\"" << l.color
           << "\" stroke-width=\"" << num(l.size * unit) << "\"/>\n";
        break;
      case Layer::Kind::dots:
        for (const cplx z : l.points) {
          if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) continue;
          os << "<circle cx=\"" << num(z.real()) << "\" cy=\"" << num(-z.imag()) << "\" r=\""
             << num(l.size * unit) << "\" fill=\"" << l.color << "\"/>\n";
        }
        break;
    }
  }
  os << "</svg>\n";
  return os.str();
}

std::vector<cplx> sample_ellipse(const ConicGeneral& c, int n) {
  const EllipseStandard e = general_to_standard(c);
  std::vector<cplx> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(e.point_at(2.0 * std::numbers::pi * i / n));
  return out;
}

}  // namespace poncelet::cli
