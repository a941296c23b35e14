#include "poncelet/parabolic_exterior.hpp"

#include <cmath>
#include <numbers>

#include "poncelet/error.hpp"

namespace poncelet {

namespace {

constexpr double kPoleTol = 1e-10;

void check_not_pole(cplx w) {
  if (std::abs(w + 1.0) < kPoleTol) {
    throw Error(Errc::pole_input, "psi_t is unbounded at w = -1");
  }
}

// tan(theta / 2) for w = e^{i theta}.
double half_tan(cplx w) { return w.imag() / (1.0 + w.real()); }

}  // namespace

ParabolaParam::ParabolaParam(double t) : t_(t) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw Error(Errc::invalid_argument, "parabola parameter t must be positive");
  }
}

cplx psi_forward(const ParabolaParam& t, cplx w) {
  check_not_pole(w);
  const cplx u = (1.0 - w) / (1.0 + w);
  return u * (u + 2.0 * t.t());
}

cplx psi_boundary(const ParabolaParam& t, cplx w) {
  check_not_pole(w);
  const double tt = t.t();
  return ((1.0 - 2.0 * tt) * w + (1.0 + 2.0 * tt) * std::conj(w) - 2.0) / (w + std::conj(w) + 2.0);
}

cplx psi_inverse_boundary(const ParabolaParam& t, cplx z) {
  const double tt = t.t();
  const cplx zc = std::conj(z);
  return (-(z + zc + 2.0) * tt + z - zc) / ((z + zc - 2.0) * tt);
}

cplx psi_inverse(const ParabolaParam& t, cplx z) {
  const ConicGeneral pt = parabola_Pt(t);
  const double tt = t.t();
  if (std::abs(evaluate_conic(pt, z)) <= 1e-12 * pt.scale() * (1.0 + std::norm(z))) {
    return psi_inverse_boundary(t, z);
  }
  // (u + t)^2 = z + t^2 with u = (1 - w) / (1 + w); Re u > 0 is the unit disk.
  const cplx s = std::sqrt(z + tt * tt);
  for (const cplx u : {-tt + s, -tt - s}) {
    const cplx w = (1.0 - u) / (1.0 + u);
    if (std::abs(w) < 1.0) return w;
  }
  throw Error(Errc::inside_parabola, "point lies on the convex side of P_t");
}

ConicGeneral parabola_Pt(const ParabolaParam& t) {
  const double t2 = t.t() * t.t();
  return {cplx(1.0, 0.0), -2.0, cplx(-8.0 * t2, 0.0), 0.0};
}

cplx blaschke_like_apply(const ParabolicBlaschkeLike& m, cplx z) {
  return psi_forward(m.param, m.b.evaluate(psi_inverse(m.param, z)));
}

std::vector<cplx> preimages_on_Pt(const ParabolicBlaschkeLike& m, cplx lambda_hat) {
  const ConicGeneral pt = parabola_Pt(m.param);
  if (std::abs(evaluate_conic(pt, lambda_hat)) > 1e-10 * pt.scale() * (1.0 + std::norm(lambda_hat))) {
    throw Error(Errc::not_on_boundary, "lambda is not on P_t");
  }
  cplx lambda = psi_inverse_boundary(m.param, lambda_hat);
  lambda /= std::abs(lambda);
  std::vector<cplx> out = preimages(m.b, lambda);
  for (cplx& w : out) w = psi_forward(m.param, w);
  return out;
}

ConicGeneral interior_curve_parabolic(cplx a, cplx b, const ParabolaParam& param) {
  if (!(std::abs(a) < 1.0 && std::abs(b) < 1.0)) {
    throw Error(Errc::invalid_argument, "zeros must lie in the unit disk");
  }
  const double t = param.t();
  const double t2 = t * t;
  const cplx ac = std::conj(a), bc = std::conj(b);
  const double ab2 = std::norm(a * b);
  const double apb2 = std::norm(a + b);
  const double sq_plus = ab2 - std::norm(a + b + 1.0);
  const double lead = sq_plus * sq_plus - 4.0 * std::norm(a + 1.0) * std::norm(b + 1.0);
  const cplx diff2 = (a - b) * (a - b) + (ac - bc) * (ac - bc);  // real-valued

  ConicGeneral g;
  g.u = lead * t2 +
        2.0 * (ab2 * (a + b - ac - bc) - (ac + bc + 1.0) * (a * a + b * b + 1.0) +
               (a + b + 1.0) * (ac * ac + bc * bc + 1.0) + 2.0 * (a * b - ac * bc)) * t +
        diff2 - 2.0 * apb2 + 4.0 * (ab2 + 1.0);
  g.p = 2.0 * lead * t2 - 2.0 * (4.0 * ab2 + diff2.real() - 2.0 * apb2 + 4.0);
  const double sq_minus = ab2 - std::norm(a + b - 1.0);
  g.v = -4.0 * (ab2 * (ab2 - 2.0 * apb2 + 2.0) + (apb2 - 2.0) * (apb2 - 2.0) - diff2 + 1.0) * t2 -
        4.0 * (sq_minus * (a + b - ac - bc) + 2.0 * (ac + bc - 2.0) * (a * b - 1.0) -
               2.0 * (a + b - 2.0) * (ac * bc - 1.0)) * t;
  g.q = 4.0 * (sq_minus * sq_minus - 4.0 * std::norm(a - 1.0) * std::norm(b - 1.0)) * t2;
  return g;
}

cplx boundary_transform(const ParabolaParam& t, cplx w) {
  if (std::abs(std::abs(w) - 1.0) > 1e-9) {
    throw Error(Errc::not_unimodular, "boundary transform needs |w| = 1");
  }
  check_not_pole(w);
  const double x = w.real(), y = w.imag();
  return {(x - 1.0) / (x + 1.0), -2.0 * y * t.t() / (x + 1.0)};
}

cplx exterior_intersection_Pt(const ParabolaParam& t, cplx omega1, cplx omega2) {
  check_not_pole(omega1);
  check_not_pole(omega2);
  // P_t is x = -y^2 / (4 t^2) with y = -2 t tan(theta / 2) on the boundary;
  // tangents at y1, y2 meet at ((-y1 y2) / (4 t^2), (y1 + y2) / 2).
  const double h1 = half_tan(omega1);
  const double h2 = half_tan(omega2);
  return {-h1 * h2, -t.t() * (h1 + h2)};
}

ExteriorSamples exterior_curve_samples_parabolic(const ParabolicBlaschkeLike& m, int n) {
  if (n < 3) throw Error(Errc::invalid_argument, "need at least 3 samples");
  ExteriorSamples out;
  for (int k = 0; k < n; ++k) {
    const double arg = 2.0 * std::numbers::pi * k / n;
    const std::vector<cplx> w = preimages(m.b, std::polar(1.0, arg));
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (std::size_t j = i + 1; j < w.size(); ++j) {
        if (std::abs(w[i] + 1.0) < kPoleTol || std::abs(w[j] + 1.0) < kPoleTol) {
          ++out.skipped;
          continue;
        }
        out.points.push_back({exterior_intersection_Pt(m.param, w[i], w[j]), arg});
      }
    }
  }
  return out;
}

}  // namespace poncelet
