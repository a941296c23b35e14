#pragma once

// Blaschke-like maps on the non-convex side of the parabola
// P_t : (z - conj z)^2 = 8 t^2 (z + conj z), via
// psi_t(w) = ((1 - w) / (1 + w) + t)^2 - t^2.

#include <vector>

#include "poncelet/blaschke.hpp"
#include "poncelet/conic.hpp"
#include "poncelet/elliptic_exterior.hpp"

namespace poncelet {

class ParabolaParam {
 public:
  explicit ParabolaParam(double t);
  double t() const { return t_; }

  cplx focus() const { return {-t_ * t_, 0.0}; }
  /// The directrix is the vertical line Re z = directrix_re().
  double directrix_re() const { return t_ * t_; }

 private:
  double t_;
};

struct ParabolicBlaschkeLike {
  BlaschkeProduct b;
  ParabolaParam param;
};

cplx psi_forward(const ParabolaParam& t, cplx w);
/// ((1 - 2t) w + (1 + 2t) conj(w) - 2) / (w + conj(w) + 2), valid for |w| = 1.
cplx psi_boundary(const ParabolaParam& t, cplx w);
cplx psi_inverse(const ParabolaParam& t, cplx z);
/// (-(z + conj z + 2) t + z - conj z) / ((z + conj z - 2) t), valid on P_t.
cplx psi_inverse_boundary(const ParabolaParam& t, cplx z);

ConicGeneral parabola_Pt(const ParabolaParam& t);

cplx blaschke_like_apply(const ParabolicBlaschkeLike& m, cplx z);
std::vector<cplx> preimages_on_Pt(const ParabolicBlaschkeLike& m, cplx lambda_hat);

/// Interior ellipse of B_{psi_t} for B with zeros {0, a, b}.
ConicGeneral interior_curve_parabolic(cplx a, cplx b, const ParabolaParam& t);

/// X + iY on the unit circle to (X - 1)/(X + 1) - 2 i Y t / (X + 1) on P_t.
cplx boundary_transform(const ParabolaParam& t, cplx w);

/// Intersection of the P_t tangents at psi_t(omega1) and psi_t(omega2).
cplx exterior_intersection_Pt(const ParabolaParam& t, cplx omega1, cplx omega2);

/// Pairwise tangent intersections at the preimages of n uniform lambda;
/// preimages at w = -1 (the point at infinity) are skipped.
ExteriorSamples exterior_curve_samples_parabolic(const ParabolicBlaschkeLike& m, int n);

}  // namespace poncelet
