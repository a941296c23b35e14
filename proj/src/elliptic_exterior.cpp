#include "poncelet/elliptic_exterior.hpp"

#include <cmath>
#include <numbers>

#include "poncelet/error.hpp"

namespace poncelet {

namespace {

constexpr double kBoundaryTol = 1e-10;

double conj_sum_real(cplx a, cplx b) { return 2.0 * std::real(a * b); }

}  // namespace

JoukowskiParam::JoukowskiParam(double t) : t_(t) {
  if (!(t > 0.0 && t < 1.0)) {
    throw Error(Errc::invalid_argument, "Joukowski parameter t must lie in (0, 1)");
  }
}

double JoukowskiParam::contraction() const {
  const double t2 = t_ * t_;
  return (t2 - 1.0) / (1.0 + t2);
}

cplx phi_forward(const JoukowskiParam& t, cplx w) {
  if (w == cplx{}) throw Error(Errc::zero_input, "phi_t(0) is the point at infinity");
  if (std::abs(w) > 1.0 + 1e-9) {
    throw Error(Errc::domain_violation, "phi_t is used on the closed unit disk only");
  }
  const double t2 = t.t() * t.t();
  return (t2 * w + 1.0 / w) / (1.0 + t2);
}

cplx phi_boundary(const JoukowskiParam& t, cplx w) {
  const double t2 = t.t() * t.t();
  return (t2 * w + std::conj(w)) / (1.0 + t2);
}

cplx phi_inverse_boundary(const JoukowskiParam& t, cplx z) {
  const double t2 = t.t() * t.t();
  return (std::conj(z) - t2 * z) / (1.0 - t2);
}

cplx phi_inverse(const JoukowskiParam& t, cplx z) {
  const ConicGeneral et = ellipse_Et(t);
  if (std::abs(evaluate_conic(et, z)) <= kBoundaryTol * (1.0 + std::norm(z))) {
    return phi_inverse_boundary(t, z);
  }
  // t^2 w^2 - (1 + t^2) z w + 1 = 0; the roots multiply to 1 / t^2.
  const double t2 = t.t() * t.t();
  const cplx b = -(1.0 + t2) * z;
  const cplx disc = std::sqrt(b * b - 4.0 * t2);
  const cplx s = std::real(std::conj(b) * disc) >= 0.0 ? disc : -disc;
  const cplx big = -0.5 * (b + s) / t2;  // the larger-modulus root
  const cplx small = 1.0 / (t2 * big);
  if (std::abs(small) > 1.0 + 1e-12) {
    throw Error(Errc::inside_ellipse, "point lies inside the ellipse E_t");
  }
  return small;
}

ConicGeneral ellipse_Et(const JoukowskiParam& t) {
  const double t2 = t.t() * t.t();
  return {cplx(t2, 0.0), -(1.0 + t2 * t2), cplx{}, (1.0 - t2) * (1.0 - t2)};
}

cplx blaschke_like_apply(const EllipticBlaschkeLike& m, cplx z) {
  const cplx w = phi_inverse(m.param, z);
  const cplx image = m.b.evaluate(w);
  if (std::abs(image) < 1e-300) {
    throw Error(Errc::pole_input, "B vanishes at phi_t^{-1}(z); the image is infinite");
  }
  return phi_forward(m.param, image);
}

std::vector<cplx> preimages_on_Et(const EllipticBlaschkeLike& m, cplx lambda_tilde) {
  const ConicGeneral et = ellipse_Et(m.param);
  if (std::abs(evaluate_conic(et, lambda_tilde)) > kBoundaryTol * (1.0 + std::norm(lambda_tilde))) {
    throw Error(Errc::not_on_boundary, "lambda is not on E_t");
  }
  cplx lambda = phi_inverse_boundary(m.param, lambda_tilde);
  lambda /= std::abs(lambda);
  std::vector<cplx> out = preimages(m.b, lambda);
  for (cplx& w : out) w = phi_forward(m.param, w);
  return out;
}

ConicGeneral interior_curve_elliptic(cplx a, cplx b, const JoukowskiParam& param) {
  if (!(std::abs(a) < 1.0 && std::abs(b) < 1.0)) {
    throw Error(Errc::invalid_argument, "zeros must lie in the unit disk");
  }
  const double t = param.t();
  const double t2 = t * t;
  const double t4 = t2 * t2;
  const cplx ac = std::conj(a), bc = std::conj(b);
  const double ab2 = std::norm(a * b);
  const double s = std::norm(a + b);
  const double k = 2.0 * ab2 - s + 2.0;

  ConicGeneral g;
  g.u = (a - b) * (a - b) * t4 + 2.0 * k * t2 + (ac - bc) * (ac - bc);
  g.p = -2.0 * (k * (t4 + 1.0) + conj_sum_real(a - b, a - b) * t2);
  g.v = -2.0 * (1.0 - t2) *
        (((ab2 + 1.0) * (a + b) - (a * a + b * b) * (ac + bc)) * t2 +
         (a + b) * (ac * ac + bc * bc) - (ab2 + 1.0) * (ac + bc));
  const double m = ab2 - s - 1.0;
  g.q = (1.0 - t2) * (1.0 - t2) * (m * m - 4.0 * s);
  return g;
}

std::pair<cplx, cplx> interior_foci(cplx a, cplx b, const JoukowskiParam& param) {
  const double t2 = param.t() * param.t();
  const double lead = (t2 + 1.0) * (t2 + 1.0);
  const cplx lin = -(t2 + 1.0) * ((a + b) * t2 + std::conj(a) + std::conj(b));
  const cplx con = (std::conj(a) + t2 * a) * (std::conj(b) + t2 * b) -
                   t2 * (1.0 - std::norm(a)) * (1.0 - std::norm(b));
  const cplx disc = std::sqrt(lin * lin - 4.0 * lead * con);
  const cplx s = std::real(std::conj(lin) * disc) >= 0.0 ? disc : -disc;
  const cplx q = -0.5 * (lin + s);
  if (q == cplx{}) return {cplx{}, cplx{}};
  return {q / lead, con / q};
}

InteriorRadius interior_r(cplx a, cplx b, const JoukowskiParam& t) {
  const ConicGeneral g = interior_curve_elliptic(a, b, t);
  const auto [f1, f2] = interior_foci(a, b, t);
  if (std::abs(f1 - f2) <= 1e-12) {
    const double r2 = 4.0 * (std::norm(g.v) - g.p * g.q) / (g.p * g.p);
    return {std::sqrt(r2), true};
  }
  return {0.5 * std::abs(f1 - f2) * std::sqrt(2.0 + std::abs(g.p / g.u)), false};
}

std::array<double, 3> cayley_R_coefficients(cplx f1, cplx f2, const JoukowskiParam& param) {
  const double t2 = param.t() * param.t();
  const double t4 = t2 * t2;
  const double lead = t4;
  const double mid = (1.0 + t4) * t2 * (conj_sum_real(f1, f2) + 2.0) -
                     2.0 * (std::norm(f1) + std::norm(f2)) * t4 - (1.0 + t4) * (1.0 + t4);
  const cplx c1 = std::conj(f1) * f2 - 1.0;
  const cplx inner = c1 * t4 - (f2 * f2 + std::conj(f1) * std::conj(f1) - 2.0) * t2 + c1;
  return {lead, mid, std::norm(inner)};
}

std::pair<double, double> cayley_R(cplx f1, cplx f2, const JoukowskiParam& t) {
  const auto [a, b, c] = cayley_R_coefficients(f1, f2, t);
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) {
    throw Error(Errc::complex_roots, "R(r^2) has no real roots for these foci");
  }
  const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
  double s1 = q / a;
  double s2 = c / q;
  if (s1 > s2) std::swap(s1, s2);
  if (!(s1 > 0.0)) {
    throw Error(Errc::complex_roots, "R(r^2) has a non-positive root");
  }
  return {std::sqrt(s1), std::sqrt(s2)};
}

namespace {

void check_pair(cplx omega1, cplx omega2) {
  if (std::abs(std::abs(omega1) - 1.0) > 1e-9 || std::abs(std::abs(omega2) - 1.0) > 1e-9) {
    throw Error(Errc::not_unimodular, "tangent points must lie on the unit circle");
  }
  if (std::abs(omega1 + omega2) <= 1e-12) {
    throw Error(Errc::antipodal_points, "antipodal tangent points have parallel tangents");
  }
}

}  // namespace

cplx exterior_intersection_disk(cplx omega1, cplx omega2) {
  check_pair(omega1, omega2);
  return 2.0 * omega1 * omega2 / (omega1 + omega2);
}

cplx exterior_intersection_Et(const JoukowskiParam& param, cplx omega1, cplx omega2) {
  check_pair(omega1, omega2);
  const double t2 = param.t() * param.t();
  return 2.0 * (omega1 * omega2 * t2 + 1.0) / ((t2 + 1.0) * (omega1 + omega2));
}

namespace {

template <typename Intersect>
ExteriorSamples collect_exterior(const BlaschkeProduct& b, int n, Intersect&& intersect) {
  if (n < 3) throw Error(Errc::invalid_argument, "need at least 3 samples");
  ExteriorSamples out;
  for (int k = 0; k < n; ++k) {
    const double arg = 2.0 * std::numbers::pi * k / n;
    const std::vector<cplx> w = preimages(b, std::polar(1.0, arg));
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (std::size_t j = i + 1; j < w.size(); ++j) {
        if (std::abs(w[i] + w[j]) <= 1e-9) {
          ++out.skipped;
          continue;
        }
        out.points.push_back({intersect(w[i], w[j]), arg});
      }
    }
  }
  return out;
}

}  // namespace

ExteriorSamples exterior_curve_samples(const EllipticBlaschkeLike& m, int n) {
  return collect_exterior(m.b, n, [&](cplx a, cplx b) { return exterior_intersection_Et(m.param, a, b); });
}

ExteriorSamples exterior_curve_samples_disk(const BlaschkeProduct& b, int n) {
  return collect_exterior(b, n, [](cplx x, cplx y) { return exterior_intersection_disk(x, y); });
}

CentroidLocus centroid_locus_elliptic(const EllipticBlaschkeLike& m) {
  const Circle circle = centroid_circle(m.b);
  const double s = m.param.contraction();
  CentroidLocus locus;
  locus.center = cplx(circle.center.real(), s * circle.center.imag());
  locus.semi_horizontal = circle.radius;
  locus.semi_vertical = circle.radius * std::abs(s);
  if (circle.radius > 1e-15) {
    const double focal = circle.radius * std::sqrt(1.0 - s * s);
    locus.ellipse = EllipseStandard{locus.center + focal, locus.center - focal, 2.0 * circle.radius};
  }
  return locus;
}

}  // namespace poncelet
