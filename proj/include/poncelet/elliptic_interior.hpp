#pragma once

// Conformal map of the unit disk onto the interior of the ellipse
// |z - sqrt(1 - p^2)| + |z + sqrt(1 - p^2)| < 2, built from the inverse
// Jacobi sine and extended to the lower half-disk by reflection.

#include <complex>
#include <functional>
#include <vector>

#include "poncelet/blaschke.hpp"
#include "poncelet/conic.hpp"
#include "poncelet/envelope.hpp"

namespace poncelet {

/// Complete elliptic integral of the first kind, K(k), by the AGM.
double elliptic_K(double k);
/// K'(k) = K(sqrt(1 - k^2)).
double elliptic_Kprime(double k);

struct InteriorMapParam {
  double p = 0.0;
  double k = 0.0;
  double c = 0.0;

  /// log sqrt((1 + p) / (1 - p)), the half-width of the log-annulus.
  double log_ratio() const;
  /// sqrt(1 - p^2): the foci of the target ellipse are at +-focus().
  double focus() const;
};

/// Solves pi K(k) / K'(k) = log sqrt((1+p)/(1-p)) for k by bisection and sets
/// c = log sqrt((1+p)/(1-p)) / K(k).
InteriorMapParam solve_params(double p);

/// Inverse Jacobi sine: integral of d omega / sqrt((1 - omega^2)(1 - k^2 omega^2))
/// along the segment from 0 to u, principal branches. Values on the real axis
/// beyond +-1 are limits from the upper half-plane.
cplx inverse_sn(cplx u, double k);

/// gamma(w) for w in the closed upper half-disk.
cplx gamma_map(const InteriorMapParam& param, cplx w);
/// Extension to the closed disk by conj(gamma(conj w)) on the lower half.
cplx gamma_extended(const InteriorMapParam& param, cplx w);

struct NonEllipseReport {
  bool non_ellipse = false;
  double fit_residual_max = 0.0;
  double fit_residual_mean = 0.0;
  int n_samples = 0;
  int n_envelope_points = 0;
  InteriorMapParam param;
  ChordEnvelope envelope;
};

/// Threshold on the normalized conic-fit residual above which the chord
/// envelope is declared not to be an ellipse.
inline constexpr double kNonEllipseThreshold = 1e-3;

/// Pushes the preimage chords of B through gamma-tilde, envelopes them
/// numerically and fits a conic to the envelope.
NonEllipseReport non_ellipse_experiment(const InteriorMapParam& param, const BlaschkeProduct& b, int n,
                                        int threads = 1);

/// Integrates a complex function over [a, b] with adaptive Gauss-Kronrod (7, 15).
cplx integrate_gk15(const std::function<cplx(double)>& f, double a, double b, double tol, int max_depth = 40);

}  // namespace poncelet
