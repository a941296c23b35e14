#pragma once

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "poncelet/conic.hpp"

namespace poncelet {

/// Canonical Blaschke product B(w) = w * prod_k (w - a_k) / (1 - conj(a_k) w).
///
/// Only the zeros a_1..a_{d-1} are stored; the zero at the origin is implicit,
/// so degree() == zeros().size() + 1. Repeated zeros (including extra zeros at
/// the origin) are allowed.
class BlaschkeProduct {
 public:
  explicit BlaschkeProduct(std::vector<cplx> zeros);

  int degree() const { return static_cast<int>(zeros_.size()) + 1; }
  std::span<const cplx> zeros() const { return zeros_; }

  cplx operator()(cplx w) const { return evaluate(w); }
  cplx evaluate(cplx w) const;
  /// B'(w), used for Newton polishing.
  cplx derivative(cplx w) const;

  /// Coefficients (ascending powers) of the monic degree-d polynomial
  /// w prod (w - a_k) - lambda prod (1 - conj(a_k) w) whose roots are B^{-1}(lambda).
  std::vector<cplx> preimage_polynomial(cplx lambda) const;

 private:
  std::vector<cplx> zeros_;
};

/// e^{i theta} prod_k (z - a_k) / (1 - conj(a_k) z) with an arbitrary zero set.
struct GeneralBlaschke {
  std::vector<cplx> zeros;
  double theta = 0.0;

  cplx evaluate(cplx w) const;
};

/// f1(z) = rotation * z and f2(z) = e^{i psi} (z - shift) / (1 - conj(shift) z),
/// with post_rotation = e^{i psi}.
struct MobiusPair {
  cplx rotation{1.0, 0.0};
  cplx shift{};
  cplx post_rotation{1.0, 0.0};

  cplx f1(cplx z) const { return rotation * z; }
  cplx f2(cplx z) const { return post_rotation * (z - shift) / (1.0 - std::conj(shift) * z); }
  cplx f2_inverse(cplx z) const;
  bool is_identity(double tol = 1e-14) const;
};

struct CanonicalForm {
  BlaschkeProduct product;
  MobiusPair maps;
};

/// Reduces g to a canonical product B' = f2 o g o f1.
CanonicalForm canonicalize(const GeneralBlaschke& g);

/// The d distinct solutions of B(w) = lambda for unimodular lambda, sorted by
/// argument in [0, 2 pi). Roots are Newton-polished but not projected onto the
/// unit circle.
std::vector<cplx> preimages(const BlaschkeProduct& b, cplx lambda);

/// Closed-form interior ellipse of a degree-3 product with zeros {0, a, b}:
/// |w - a| + |w - b| = |1 - conj(a) b|, in general form.
ConicGeneral interior_curve_disk(const BlaschkeProduct& b);

struct Circle {
  cplx center{};
  double radius = 0.0;
};

/// Locus of the vertex barycenter of B^{-1}(lambda) as lambda runs over the circle.
Circle centroid_circle(const BlaschkeProduct& b);

/// Polynomial roots via companion-matrix eigenvalues; coefficients ascending,
/// leading coefficient nonzero.
std::vector<cplx> polynomial_roots(std::span<const cplx> coeffs);

}  // namespace poncelet
