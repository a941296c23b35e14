#pragma once

// Discrete envelopes of line families and least-squares curve fitting.

#include <array>
#include <functional>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "poncelet/blaschke.hpp"
#include "poncelet/conic.hpp"

namespace poncelet {

/// Intersections of consecutive lines; parallel neighbours are skipped.
std::vector<cplx> envelope_points_numeric(std::span<const RealLine> lines);

struct EnvelopeSample {
  cplx point;
  double arg_lambda = 0.0;
};

struct ChordEnvelope {
  std::vector<EnvelopeSample> points;
  /// Endpoints of every chord, grouped by lambda sample.
  std::vector<std::pair<cplx, cplx>> chords;
};

/// For n uniform lambda = e^{i(phase + 2 pi k / n)}, maps the preimages of B
/// through `boundary` and envelopes each chord family. Preimages are tracked
/// continuously in lambda; the final sample is not paired with the first,
/// since the preimages come back cyclically relabelled.
ChordEnvelope chord_envelope(const BlaschkeProduct& b, int n, const std::function<cplx(cplx)>& boundary,
                             int threads = 1, double phase = 0.0);

struct ConicFit {
  ConicGeneral conic;
  double residual_max = 0.0;
  double residual_mean = 0.0;
};

/// Least-squares conic with unit-norm coefficients, fitted to the points after
/// centring at their centroid and scaling to unit diameter. Residuals are the
/// algebraic values in those normalized coordinates.
ConicFit fit_conic(std::span<const cplx> points);

struct CurveFit {
  int degree = 0;
  /// Exponents (i, j) of x^i y^j, matching `coefficients`.
  std::vector<std::array<int, 2>> monomials;
  /// Coefficients in the normalized coordinates.
  std::vector<double> coefficients;
  double residual_max = 0.0;
  double residual_mean = 0.0;
  int n_points = 0;
};

/// Unit-norm least-squares bivariate polynomial of total degree `degree`.
/// Points farther than `max_radius` from the origin are dropped first.
CurveFit fit_algebraic_curve(std::span<const cplx> points, int degree,
                             double max_radius = std::numeric_limits<double>::infinity());

}  // namespace poncelet
