#pragma once

// Blaschke-like maps on the exterior of the ellipse E_t, obtained by
// conjugating a canonical Blaschke product with the Joukowski map
// phi_t(w) = (t^2 w + 1/w) / (1 + t^2).

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "poncelet/blaschke.hpp"
#include "poncelet/conic.hpp"

namespace poncelet {

class JoukowskiParam {
 public:
  explicit JoukowskiParam(double t);
  double t() const { return t_; }
  /// (t^2 - 1) / (1 + t^2): factor applied to the imaginary part on the boundary.
  double contraction() const;

 private:
  double t_;
};

struct EllipticBlaschkeLike {
  BlaschkeProduct b;
  JoukowskiParam param;
};

cplx phi_forward(const JoukowskiParam& t, cplx w);
/// Boundary form (t^2 w + conj(w)) / (1 + t^2), valid for |w| = 1.
cplx phi_boundary(const JoukowskiParam& t, cplx w);
/// Branch of phi_t^{-1} inside the closed unit disk.
cplx phi_inverse(const JoukowskiParam& t, cplx z);
/// Boundary inverse (conj(z) - t^2 z) / (1 - t^2), valid on E_t.
cplx phi_inverse_boundary(const JoukowskiParam& t, cplx z);

/// t^2 z^2 - (1 + t^4) z conj(z) + t^2 conj(z)^2 + (1 - t^2)^2 = 0.
ConicGeneral ellipse_Et(const JoukowskiParam& t);

cplx blaschke_like_apply(const EllipticBlaschkeLike& m, cplx z);
std::vector<cplx> preimages_on_Et(const EllipticBlaschkeLike& m, cplx lambda_tilde);

/// Interior ellipse of B_{phi_t} for B with zeros {0, a, b}.
ConicGeneral interior_curve_elliptic(cplx a, cplx b, const JoukowskiParam& t);

/// Foci of the interior ellipse from their own quadratic.
std::pair<cplx, cplx> interior_foci(cplx a, cplx b, const JoukowskiParam& t);

struct InteriorRadius {
  double r = 0.0;
  /// Set when the foci coincide and r came from the circle formula instead.
  bool circle_fallback = false;
};
InteriorRadius interior_r(cplx a, cplx b, const JoukowskiParam& t);

/// The two roots r of the quadratic R(r^2) in r^2, as (smaller, larger).
std::pair<double, double> cayley_R(cplx f1, cplx f2, const JoukowskiParam& t);
/// Coefficients (r^4, r^2, 1) of R for diagnostics.
std::array<double, 3> cayley_R_coefficients(cplx f1, cplx f2, const JoukowskiParam& t);

/// Intersection of the unit-circle tangents at omega1, omega2.
cplx exterior_intersection_disk(cplx omega1, cplx omega2);
/// Intersection of the E_t tangents at phi_t(omega1), phi_t(omega2).
cplx exterior_intersection_Et(const JoukowskiParam& t, cplx omega1, cplx omega2);

struct ExteriorSample {
  cplx point;
  double arg_lambda = 0.0;
};

struct ExteriorSamples {
  std::vector<ExteriorSample> points;
  int skipped = 0;
};

/// Pairwise tangent intersections at the preimages of n uniformly spaced lambda.
ExteriorSamples exterior_curve_samples(const EllipticBlaschkeLike& m, int n);
/// Same construction on the unit circle (the undeformed Blaschke product).
ExteriorSamples exterior_curve_samples_disk(const BlaschkeProduct& b, int n);

struct CentroidLocus {
  cplx center;
  double semi_horizontal = 0.0;
  double semi_vertical = 0.0;
  /// Present unless the locus collapses to a point.
  std::optional<EllipseStandard> ellipse;

  bool is_point() const { return !ellipse.has_value(); }
};

/// Vertex-barycenter locus of the preimage polygons of B_{phi_t}.
CentroidLocus centroid_locus_elliptic(const EllipticBlaschkeLike& m);

}  // namespace poncelet
