#include "poncelet/conic.hpp"

#include <algorithm>
#include <cmath>

#include "poncelet/error.hpp"

namespace poncelet {

namespace {

constexpr double kParabolaTol = 1e-10;
constexpr double kCircleTol = 1e-12;
constexpr double kDegenerateTol = 1e-12;

double sqr(double x) { return x * x; }

// Determinant of the symmetric 3x3 matrix of the projective quadratic form.
double form_determinant(const ConicGeneral& c, double* frob) {
  const double a11 = c.p + 2.0 * c.u.real();
  const double a22 = c.p - 2.0 * c.u.real();
  const double a12 = 2.0 * c.u.imag();
  const double a13 = c.v.real();
  const double a23 = c.v.imag();
  const double a33 = c.q;
  if (frob != nullptr) {
    *frob = std::sqrt(sqr(a11) + sqr(a22) + sqr(a33) +
                      2.0 * (sqr(a12) + sqr(a13) + sqr(a23)));
  }
  return a11 * (a22 * a33 - a23 * a23) - a12 * (a12 * a33 - a23 * a13) +
         a13 * (a12 * a23 - a22 * a13);
}

// Roots of a z^2 + b z + c with a != 0, avoiding cancellation.
std::pair<cplx, cplx> solve_quadratic(cplx a, cplx b, cplx c) {
  const cplx disc = std::sqrt(b * b - 4.0 * a * c);
  // Pick the sign that makes |b + s| as large as possible.
  const cplx s = (std::real(std::conj(b) * disc) >= 0.0) ? disc : -disc;
  const cplx qq = -0.5 * (b + s);
  if (std::abs(qq) == 0.0) return {cplx{}, cplx{}};
  return {qq / a, c / qq};
}

}  // namespace

std::string_view to_string(ConicClass c) noexcept {
  switch (c) {
    case ConicClass::ellipse: return "ellipse";
    case ConicClass::circle: return "circle";
    case ConicClass::parabola: return "parabola";
    case ConicClass::hyperbola: return "hyperbola";
    case ConicClass::degenerate_point: return "degenerate-point";
    case ConicClass::degenerate_lines: return "degenerate-lines";
    case ConicClass::empty: return "empty";
  }
  return "unknown";
}

double ConicGeneral::scale() const {
  return std::max({std::abs(u), std::abs(p), std::abs(v), std::abs(q)});
}

ConicGeneral ConicGeneral::normalized() const {
  const double s = scale();
  if (s == 0.0) throw Error(Errc::invalid_argument, "zero conic polynomial");
  const double tiny = 1e-14 * s;
  double sign = 1.0;
  if (std::abs(p) > tiny) {
    sign = p > 0.0 ? 1.0 : -1.0;
  } else if (std::abs(u.real()) > tiny) {
    sign = u.real() > 0.0 ? 1.0 : -1.0;
  } else if (std::abs(v.real()) > tiny) {
    sign = v.real() > 0.0 ? 1.0 : -1.0;
  }
  return scaled(sign / s);
}

double EllipseStandard::semi_minor() const {
  const double a = 0.5 * r;
  const double c = 0.5 * std::abs(f1 - f2);
  return std::sqrt(std::max(0.0, a * a - c * c));
}

cplx EllipseStandard::point_at(double theta) const {
  const cplx axis = f1 == f2 ? cplx(1.0, 0.0) : (f1 - f2) / std::abs(f1 - f2);
  return center() + axis * cplx(semi_major() * std::cos(theta), semi_minor() * std::sin(theta));
}

RealLine RealLine::from_coefficients(cplx beta, double gamma) {
  const double n = std::abs(beta);
  if (n == 0.0 || !std::isfinite(n)) {
    throw Error(Errc::invalid_argument, "line with vanishing normal");
  }
  beta /= n;
  gamma /= n;
  bool flip = false;
  if (std::abs(gamma) > 1e-14) {
    flip = gamma < 0.0;
  } else {
    gamma = 0.0;
    if (std::abs(beta.imag()) > 1e-14) {
      flip = beta.imag() < 0.0;
    } else {
      flip = beta.real() < 0.0;
    }
  }
  if (flip) {
    beta = -beta;
    gamma = -gamma;
  }
  return RealLine(beta, gamma);
}

double RealLine::evaluate(cplx z) const {
  return 2.0 * std::real(beta_ * z) + gamma_;
}

ConicGeneral standard_to_general(const EllipseStandard& e) {
  const cplx f1 = e.f1;
  const cplx f2 = e.f2;
  const double r2 = e.r * e.r;
  const cplx d = f1 - f2;
  const double n = std::norm(f1) - std::norm(f2);
  ConicGeneral c;
  c.u = d * d;
  c.p = 2.0 * (std::norm(d) - 2.0 * r2);
  c.v = -2.0 * (d * n - r2 * (f1 + f2));
  c.q = n * n - 2.0 * (std::norm(f1) + std::norm(f2)) * r2 + r2 * r2;
  return c;
}

ConicClass classify_conic(const ConicGeneral& c) {
  const double quad_scale = sqr(c.p) + 4.0 * std::norm(c.u);
  double frob = 0.0;
  const double det = form_determinant(c, &frob);
  const bool degenerate = frob == 0.0 || std::abs(det) <= kDegenerateTol * frob * frob * frob;
  if (quad_scale == 0.0) return ConicClass::degenerate_lines;

  const double disc = sqr(c.p) - 4.0 * std::norm(c.u);
  if (std::abs(disc) < kParabolaTol * quad_scale) {
    return degenerate ? ConicClass::degenerate_lines : ConicClass::parabola;
  }
  if (disc < 0.0) {
    return degenerate ? ConicClass::degenerate_lines : ConicClass::hyperbola;
  }
  if (degenerate) return ConicClass::degenerate_point;
  const double shape = c.p * (c.p * std::norm(c.v) - 2.0 * std::real(c.u * std::conj(c.v * c.v)) +
                              c.q * (4.0 * std::norm(c.u) - sqr(c.p)));
  if (shape <= 0.0) return ConicClass::empty;
  return std::abs(c.u) <= kCircleTol * std::abs(c.p) ? ConicClass::circle : ConicClass::ellipse;
}

EllipseStandard general_to_standard(const ConicGeneral& c) {
  const ConicClass cls = classify_conic(c);
  if (cls == ConicClass::degenerate_point || cls == ConicClass::empty) {
    throw Error(Errc::degenerate, "conic degenerates to a point or the empty set");
  }
  if (cls != ConicClass::ellipse && cls != ConicClass::circle) {
    throw Error(Errc::not_an_ellipse,
                "conic is a " + std::string(to_string(cls)) + ", not an ellipse");
  }
  if (cls == ConicClass::circle) {
    const cplx f = -c.v / c.p;
    const double r2 = 4.0 * (std::norm(c.v) - c.p * c.q) / sqr(c.p);
    return {f, f, std::sqrt(r2)};
  }
  // Foci are the roots of (4|u|^2 - p^2) z^2 + (4 u conj(v) - 2 p v) z + 4 q u - v^2.
  const auto [f1, f2] = solve_quadratic(cplx(4.0 * std::norm(c.u) - sqr(c.p)),
                                        4.0 * c.u * std::conj(c.v) - 2.0 * c.p * c.v,
                                        4.0 * c.q * c.u - c.v * c.v);
  const double r = 0.5 * std::abs(f1 - f2) * std::sqrt(2.0 + std::abs(c.p / c.u));
  return {f1, f2, r};
}

double evaluate_conic(const ConicGeneral& c, cplx z) {
  return 2.0 * std::real(std::conj(c.u) * z * z) + c.p * std::norm(z) +
         2.0 * std::real(std::conj(c.v) * z) + c.q;
}

cplx conic_gradient(const ConicGeneral& c, cplx z) {
  return 2.0 * c.u * std::conj(z) + c.p * z + c.v;
}

RealLine line_through(cplx z1, cplx z2) {
  if (std::abs(z1 - z2) <= 1e-15 * std::max({1.0, std::abs(z1), std::abs(z2)})) {
    throw Error(Errc::coincident_points, "line_through needs two distinct points");
  }
  // i * [(conj z1 - conj z2) z - (z1 - z2) conj z + z1 conj z2 - conj z1 z2] = 0
  const cplx beta = cplx(0.0, 1.0) * std::conj(z1 - z2);
  const double gamma = -2.0 * std::imag(z1 * std::conj(z2));
  return RealLine::from_coefficients(beta, gamma);
}

RealLine tangent_line_at(const ConicGeneral& c, cplx z0) {
  const double s = c.scale();
  const double mag = 1.0 + std::norm(z0);
  if (std::abs(evaluate_conic(c, z0)) > 1e-8 * s * mag) {
    throw Error(Errc::not_on_conic, "tangent point is not on the conic");
  }
  const cplx g = conic_gradient(c, z0);
  if (std::abs(g) <= 1e-14 * s * std::sqrt(mag)) {
    throw Error(Errc::singular_point, "conic gradient vanishes at the tangent point");
  }
  const double gamma = 2.0 * std::real(std::conj(c.v) * z0) + 2.0 * c.q;
  return RealLine::from_coefficients(std::conj(g), gamma);
}

double tangency_residual(const RealLine& line, const ConicGeneral& c) {
  const ConicClass cls = classify_conic(c);
  if (cls != ConicClass::ellipse && cls != ConicClass::circle && cls != ConicClass::parabola) {
    throw Error(Errc::degenerate_conic,
                "tangency needs an ellipse, circle or parabola, got " + std::string(to_string(cls)));
  }
  const cplx z0 = line.foot();
  const cplx d = line.direction();
  const double a = 2.0 * std::real(std::conj(c.u) * d * d) + c.p * std::norm(d);
  const double b = 4.0 * std::real(std::conj(c.u) * z0 * d) + 2.0 * c.p * std::real(z0 * std::conj(d)) +
                   2.0 * std::real(std::conj(c.v) * d);
  const double k = evaluate_conic(c, z0);
  if (std::abs(a) <= 1e-14 * c.scale()) {
    throw Error(Errc::degenerate_conic, "line meets the conic at most once");
  }
  return (b * b - 4.0 * a * k) / (a * a);
}

cplx intersect(const RealLine& a, const RealLine& b) {
  // Re(beta z) = -gamma / 2 for both lines.
  const double a11 = a.beta().real(), a12 = -a.beta().imag();
  const double a21 = b.beta().real(), a22 = -b.beta().imag();
  const double det = a11 * a22 - a12 * a21;
  if (std::abs(det) < 1e-15) throw Error(Errc::invalid_argument, "parallel lines");
  const double r1 = -0.5 * a.gamma();
  const double r2 = -0.5 * b.gamma();
  return {(r1 * a22 - a12 * r2) / det, (a11 * r2 - a21 * r1) / det};
}

double conic_distance(const ConicGeneral& a, const ConicGeneral& b) {
  const ConicGeneral na = a.normalized();
  const ConicGeneral nb = b.normalized();
  return std::max({std::abs(na.u - nb.u), std::abs(na.p - nb.p), std::abs(na.v - nb.v),
                   std::abs(na.q - nb.q)});
}

ConicGeneral conic_from_real(double a, double b, double c, double d, double e, double f) {
  ConicGeneral out;
  out.u = cplx(0.25 * (a - c), 0.25 * b);
  out.p = 0.5 * (a + c);
  out.v = cplx(0.5 * d, 0.5 * e);
  out.q = f;
  return out;
}

cplx conic_center(const ConicGeneral& c) {
  const double a11 = c.p + 2.0 * c.u.real();
  const double a22 = c.p - 2.0 * c.u.real();
  const double a12 = 2.0 * c.u.imag();
  const double det = a11 * a22 - a12 * a12;
  if (std::abs(det) <= 1e-14 * (sqr(c.p) + 4.0 * std::norm(c.u))) {
    throw Error(Errc::degenerate_conic, "conic has no center");
  }
  const double b1 = -c.v.real();
  const double b2 = -c.v.imag();
  return {(b1 * a22 - a12 * b2) / det, (a11 * b2 - a12 * b1) / det};
}

double interior_sign(const ConicGeneral& c) {
  // The quadratic part dominates far away, where points lie on the non-convex side.
  return c.p > 0.0 ? -1.0 : 1.0;
}

}  // namespace poncelet
