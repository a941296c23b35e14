#pragma once

// Real conics written in complex coordinates, the focal form of an ellipse,
// and lines in the plane.

#include <complex>
#include <string_view>
#include <utility>

namespace poncelet {

using cplx = std::complex<double>;

/// Real conic conj(u) z^2 + p z conj(z) + u conj(z)^2 + conj(v) z + v conj(z) + q = 0.
///
/// The z^2 and z coefficients are the conjugates of u and v, so the left side
/// is real for every z. Coefficients are meaningful only up to a nonzero real
/// scale; use normalized() or conic_distance() to compare two conics.
struct ConicGeneral {
  cplx u{};
  double p = 0.0;
  cplx v{};
  double q = 0.0;

  /// Largest coefficient magnitude; zero only for the zero polynomial.
  double scale() const;
  /// Scaled copy whose largest coefficient has magnitude 1, sign fixed so that
  /// p >= 0 (or Re u >= 0 when p = 0, or Re v >= 0 when both vanish).
  ConicGeneral normalized() const;
  ConicGeneral scaled(double factor) const { return {u * factor, p * factor, v * factor, q * factor}; }
};

/// Ellipse |z - f1| + |z - f2| = r. Circles have f1 == f2 and radius r / 2.
struct EllipseStandard {
  cplx f1{};
  cplx f2{};
  double r = 0.0;

  cplx center() const { return 0.5 * (f1 + f2); }
  double semi_major() const { return 0.5 * r; }
  double semi_minor() const;
  /// Point of the ellipse at eccentric angle theta.
  cplx point_at(double theta) const;
};

/// Line beta z + conj(beta) conj(z) + gamma = 0 with |beta| = 1, gamma real.
///
/// Canonical sign: gamma >= 0; when gamma = 0, Im(beta) > 0, or Re(beta) > 0
/// when beta is real.
class RealLine {
 public:
  /// Normalizes any nonzero (beta, gamma) pair into canonical form.
  static RealLine from_coefficients(cplx beta, double gamma);

  cplx beta() const { return beta_; }
  double gamma() const { return gamma_; }

  /// beta z + conj(beta z) + gamma, i.e. twice the signed distance.
  double evaluate(cplx z) const;
  /// Foot of the perpendicular from the origin.
  cplx foot() const { return -0.5 * gamma_ * std::conj(beta_); }
  /// Unit direction vector along the line.
  cplx direction() const { return cplx(0.0, 1.0) * std::conj(beta_); }

 private:
  RealLine(cplx beta, double gamma) : beta_(beta), gamma_(gamma) {}

  cplx beta_{1.0, 0.0};
  double gamma_ = 0.0;
};

enum class ConicClass {
  ellipse,
  circle,
  parabola,
  hyperbola,
  degenerate_point,
  degenerate_lines,
  empty,
};

std::string_view to_string(ConicClass c) noexcept;

ConicGeneral standard_to_general(const EllipseStandard& e);
EllipseStandard general_to_standard(const ConicGeneral& c);
ConicClass classify_conic(const ConicGeneral& c);
double evaluate_conic(const ConicGeneral& c, cplx z);

/// Derivative of the defining polynomial with respect to conj(z), i.e.
/// 2 u conj(z) + p z + v. The real gradient (d/dx, d/dy) is twice its
/// (Re, Im) parts.
cplx conic_gradient(const ConicGeneral& c, cplx z);

RealLine line_through(cplx z1, cplx z2);
RealLine tangent_line_at(const ConicGeneral& c, cplx z0);
double tangency_residual(const RealLine& line, const ConicGeneral& c);

/// Intersection of two non-parallel lines.
cplx intersect(const RealLine& a, const RealLine& b);

/// Maximum coefficient deviation after normalizing both conics.
double conic_distance(const ConicGeneral& a, const ConicGeneral& b);

/// Real quadratic A x^2 + B x y + C y^2 + D x + E y + F rewritten in complex form.
ConicGeneral conic_from_real(double a, double b, double c, double d, double e, double f);

/// Center of a central conic (ellipse, circle, hyperbola).
cplx conic_center(const ConicGeneral& c);

/// Sign of the defining polynomial on the convex side of an ellipse or parabola.
double interior_sign(const ConicGeneral& c);

}  // namespace poncelet
