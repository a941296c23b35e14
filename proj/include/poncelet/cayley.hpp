#pragma once

// Projective matrices of conics, the triangle case of Cayley's criterion,
// Poncelet polygons and Chapple's formula.

#include <array>
#include <vector>

#include <Eigen/Core>

#include "poncelet/conic.hpp"

namespace poncelet {

/// Symmetric matrix of the quadratic form (x, y, 1) A (x, y, 1)^T.
struct ConicMatrix {
  Eigen::Matrix3d a = Eigen::Matrix3d::Zero();

  double form(cplx z) const;
};

ConicMatrix conic_to_matrix(const ConicGeneral& c);
ConicGeneral matrix_to_conic(const ConicMatrix& m);

/// Coefficients (ascending) of F(s) = det(s outer + inner).
std::array<double, 4> pencil_determinant(const ConicMatrix& outer, const ConicMatrix& inner);

/// 2 F F'' - F'^2 at s = 0, divided by F'^2 + |2 F F''|. Vanishes exactly when a
/// triangle is inscribed in `outer` and circumscribed about `inner`.
double cayley_c2_residual(const ConicMatrix& outer, const ConicMatrix& inner);

struct PonceletPolygon {
  std::vector<cplx> vertices;  // n + 1 points, the last one returning near the first
  double closure = 0.0;
};

/// Walks n tangent steps counterclockwise around `inner`, starting at z0 on `outer`.
PonceletPolygon poncelet_polygon(const ConicGeneral& outer, const ConicGeneral& inner, cplx z0, int n);
double poncelet_closure(const ConicGeneral& outer, const ConicGeneral& inner, cplx z0, int n);

/// | |c|^2 - (1 - 2 r) |.
double chapple_check(cplx c, double r);

}  // namespace poncelet
