#include "poncelet/cayley.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "poncelet/error.hpp"

namespace poncelet {

namespace {

Eigen::Matrix3d adjugate(const Eigen::Matrix3d& m) {
  Eigen::Matrix3d adj;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      adj(i, j) = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
    }
  }
  return adj;
}

Eigen::Vector3d homogeneous(cplx z) { return {z.real(), z.imag(), 1.0}; }

void require_ellipse(const ConicGeneral& c, const char* what) {
  const ConicClass k = classify_conic(c);
  if (k != ConicClass::ellipse && k != ConicClass::circle) {
    throw Error(Errc::degenerate_conic, std::string(what) + " must be a nondegenerate ellipse");
  }
}

void require_contained(const ConicGeneral& outer, const ConicGeneral& inner) {
  const EllipseStandard e = general_to_standard(inner);
  const double side = interior_sign(outer);
  for (int i = 0; i < 64; ++i) {
    const cplx z = e.point_at(2.0 * std::numbers::pi * i / 64);
    if (side * evaluate_conic(outer, z) <= 0.0) {
      throw Error(Errc::not_contained, "inner conic is not strictly inside the outer conic");
    }
  }
}

// Next vertex: the other intersection with `outer` of the tangent from z0 to
// `inner` that leaves the inner conic on its left.
cplx tangent_step(const ConicMatrix& outer, const ConicMatrix& inner, cplx inner_center, cplx z0) {
  const Eigen::Vector3d pt = homogeneous(z0);
  const Eigen::Vector3d mp = inner.a * pt;
  const double pmp = pt.dot(mp);
  // Directions d with (p^T M d)^2 = (p^T M p)(d^T M d).
  const Eigen::Matrix2d q = mp.head<2>() * mp.head<2>().transpose() - pmp * inner.a.topLeftCorner<2, 2>();
  const double scale = q.norm();
  if (q.determinant() >= -1e-14 * scale * scale) {
    throw Error(Errc::no_tangent, "vertex is not outside the inner conic");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> eig(q);
  const double neg = eig.eigenvalues()(0), pos = eig.eigenvalues()(1);
  const Eigen::Vector2d e_neg = eig.eigenvectors().col(0), e_pos = eig.eigenvectors().col(1);

  for (const double sign : {1.0, -1.0}) {
    const Eigen::Vector2d d2 = std::sqrt(-neg) * e_pos + sign * std::sqrt(pos) * e_neg;
    const Eigen::Vector3d d(d2(0), d2(1), 0.0);
    const double dnd = d.dot(outer.a * d);
    if (dnd == 0.0) continue;
    const double s = -2.0 * pt.dot(outer.a * d) / dnd;
    const cplx z1 = z0 + s * cplx(d(0), d(1));
    const cplx edge = z1 - z0;
    const cplx to_center = inner_center - z0;
    if (std::imag(std::conj(edge) * to_center) > 0.0) return z1;
  }
  throw Error(Errc::no_tangent, "no counterclockwise tangent from this vertex");
}

}  // namespace

double ConicMatrix::form(cplx z) const {
  const Eigen::Vector3d x = homogeneous(z);
  return x.dot(a * x);
}

ConicMatrix conic_to_matrix(const ConicGeneral& c) {
  ConicMatrix m;
  m.a(0, 0) = c.p + 2.0 * c.u.real();
  m.a(1, 1) = c.p - 2.0 * c.u.real();
  m.a(0, 1) = m.a(1, 0) = 2.0 * c.u.imag();
  m.a(0, 2) = m.a(2, 0) = c.v.real();
  m.a(1, 2) = m.a(2, 1) = c.v.imag();
  m.a(2, 2) = c.q;
  return m;
}

ConicGeneral matrix_to_conic(const ConicMatrix& m) {
  ConicGeneral c;
  c.u = cplx(0.25 * (m.a(0, 0) - m.a(1, 1)), 0.5 * m.a(0, 1));
  c.p = 0.5 * (m.a(0, 0) + m.a(1, 1));
  c.v = cplx(m.a(0, 2), m.a(1, 2));
  c.q = m.a(2, 2);
  return c;
}

std::array<double, 4> pencil_determinant(const ConicMatrix& outer, const ConicMatrix& inner) {
  const Eigen::Matrix3d& a = outer.a;
  const Eigen::Matrix3d& b = inner.a;
  return {b.determinant(), (adjugate(b) * a).trace(), (adjugate(a) * b).trace(), a.determinant()};
}

double cayley_c2_residual(const ConicMatrix& outer, const ConicMatrix& inner) {
  const auto f = pencil_determinant(outer, inner);
  const double scale = inner.a.norm();
  if (std::abs(f[0]) <= 1e-14 * scale * scale * scale) {
    throw Error(Errc::singular_inner, "det(inner) vanishes; sqrt(F) has no expansion at s = 0");
  }
  // F(0) = f0, F'(0) = f1, F''(0) = 2 f2.
  const double num = 4.0 * f[0] * f[2] - f[1] * f[1];
  return num / (f[1] * f[1] + 4.0 * std::abs(f[0] * f[2]));
}

PonceletPolygon poncelet_polygon(const ConicGeneral& outer, const ConicGeneral& inner, cplx z0, int n) {
  if (n < 3) throw Error(Errc::invalid_argument, "a polygon needs at least 3 sides");
  require_ellipse(inner, "inner conic");
  const ConicClass outer_class = classify_conic(outer);
  if (outer_class != ConicClass::ellipse && outer_class != ConicClass::circle &&
      outer_class != ConicClass::parabola) {
    throw Error(Errc::degenerate_conic, "outer conic must be an ellipse or a parabola");
  }
  if (std::abs(evaluate_conic(outer, z0)) > 1e-8 * outer.scale() * (1.0 + std::norm(z0))) {
    throw Error(Errc::not_on_conic, "starting vertex is not on the outer conic");
  }
  require_contained(outer, inner);

  const ConicMatrix om = conic_to_matrix(outer);
  const ConicMatrix im = conic_to_matrix(inner);
  const cplx center = conic_center(inner);
  PonceletPolygon poly;
  poly.vertices.push_back(z0);
  for (int i = 0; i < n; ++i) poly.vertices.push_back(tangent_step(om, im, center, poly.vertices.back()));
  poly.closure = std::abs(poly.vertices.back() - z0);
  return poly;
}

double poncelet_closure(const ConicGeneral& outer, const ConicGeneral& inner, cplx z0, int n) {
  return poncelet_polygon(outer, inner, z0, n).closure;
}

double chapple_check(cplx c, double r) { return std::abs(std::norm(c) - (1.0 - 2.0 * r)); }

}  // namespace poncelet
