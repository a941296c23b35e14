#include "poncelet/elliptic_interior.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "poncelet/envelope.hpp"
#include "poncelet/error.hpp"

namespace poncelet {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kQuadTol = 1e-13;

constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kKronrod = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd-indexed Kronrod nodes 1, 3, 5, 7.
constexpr std::array<double, 4> kGauss = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  cplx kronrod;
  double error;
};

Panel gk15_panel(const std::function<cplx(double)>& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  cplx k = kKronrod[7] * f(mid);
  cplx g = kGauss[3] * f(mid);
  for (int i = 0; i < 7; ++i) {
    const cplx fl = f(mid - half * kNodes[i]);
    const cplx fr = f(mid + half * kNodes[i]);
    k += kKronrod[i] * (fl + fr);
    if (i % 2 == 1) g += kGauss[i / 2] * (fl + fr);
  }
  return {k * half, std::abs((k - g) * half)};
}

cplx adapt(const std::function<cplx(double)>& f, double a, double b, double tol, int depth) {
  const Panel whole = gk15_panel(f, a, b);
  if (whole.error <= tol) return whole.kronrod;
  if (depth <= 0) {
    throw Error(Errc::no_convergence, "adaptive quadrature did not reach the requested tolerance");
  }
  const double mid = 0.5 * (a + b);
  return adapt(f, a, mid, 0.5 * tol, depth - 1) + adapt(f, mid, b, 0.5 * tol, depth - 1);
}

double agm(double a, double b) {
  for (int i = 0; i < 64 && std::abs(a - b) > 1e-16 * a; ++i) {
    const double next = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = next;
  }
  return 0.5 * (a + b);
}

// Smooth endpoint-clustering map of [0, 1] onto itself and its derivative.
double cluster(double tau) {
  const double s = std::sin(0.5 * kPi * tau);
  return s * s;
}
double cluster_rate(double tau) { return 0.5 * kPi * std::sin(kPi * tau); }

cplx integrand(cplx omega, double k) {
  return 1.0 / (std::sqrt(1.0 - omega * omega) * std::sqrt(1.0 - k * k * omega * omega));
}

// Incomplete integral F(phi, k) = int_0^phi d theta / sqrt(1 - k^2 sin^2 theta).
double incomplete_F(double phi, double k) {
  if (phi == 0.0) return 0.0;
  const auto f = [&](double th) {
    const double s = std::sin(th);
    return cplx(1.0 / std::sqrt(1.0 - k * k * s * s), 0.0);
  };
  return adapt(f, 0.0, phi, kQuadTol, 40).real();
}

// Integral along the straight segment from `from` to `to`, clustered at both ends.
cplx segment_integral(cplx from, cplx to, double k) {
  const cplx delta = to - from;
  if (delta == cplx{}) return {};
  const auto f = [&](double tau) {
    return integrand(from + delta * cluster(tau), k) * delta * cluster_rate(tau);
  };
  return adapt(f, 0.0, 1.0, kQuadTol * (1.0 + std::abs(delta)), 40);
}

// Limit from the upper half-plane of sn^{-1}(x) for 0 <= x <= 1 / sqrt(k).
cplx real_axis_value(double x, double k) {
  if (x <= 1.0) return {incomplete_F(std::asin(x), k), 0.0};
  const double kc = std::sqrt(1.0 - k * k);
  // t^2 = 1 / (1 - k'^2 sin^2 phi) straightens the integral over [1, x].
  const double s = std::sqrt(1.0 - 1.0 / (x * x)) / kc;
  return {elliptic_K(k), incomplete_F(std::asin(std::min(s, 1.0)), kc)};
}

// sn^{-1} on the closed first quadrant with |u| <= 1 / sqrt(k).
cplx first_quadrant(cplx u, double k) {
  if (u.imag() >= 0.25 || u.real() <= 0.75) return segment_integral(0.0, u, k);
  const double base = u.real();
  return real_axis_value(base, k) + segment_integral(cplx(base, 0.0), u, k);
}

// sn^{-1} on the closed upper half-plane; real points are limits from above.
cplx upper_half(cplx u, double k) {
  if (u.real() < 0.0) return -std::conj(upper_half(-std::conj(u), k));
  if (k > 0.0 && std::abs(u) > 1.0 / std::sqrt(k)) {
    // sn(v + iK') = 1 / (k sn v).
    const cplx flipped = std::conj(1.0 / (k * u));
    return cplx(0.0, elliptic_Kprime(k)) + std::conj(first_quadrant(flipped, k));
  }
  return first_quadrant(u, k);
}

cplx inverse_sn_limit(cplx u, double k) {
  if (u.imag() < 0.0) return std::conj(upper_half(std::conj(u), k));
  return upper_half(u, k);
}

void check_modulus(double k, bool allow_zero) {
  const bool low_ok = allow_zero ? k >= 0.0 : k > 0.0;
  if (!(low_ok && k < 1.0)) throw Error(Errc::modulus_out_of_range, "elliptic modulus out of range");
}

cplx gamma_upper(const InteriorMapParam& param, cplx w) {
  const double focus = param.focus();
  if (std::abs(w + 1.0) < 1e-15) return {-1.0, 0.0};
  cplx u = (w - 1.0) / (w + 1.0);
  u.imag(std::max(0.0, u.imag()));
  const cplx v = param.c * inverse_sn_limit(u, param.k);
  const cplx x = std::exp(param.log_ratio() + v);
  return 0.5 * focus * (x + 1.0 / x);
}

}  // namespace

cplx integrate_gk15(const std::function<cplx(double)>& f, double a, double b, double tol, int max_depth) {
  return adapt(f, a, b, tol, max_depth);
}

double elliptic_K(double k) {
  check_modulus(k, true);
  return 0.5 * kPi / agm(1.0, std::sqrt(1.0 - k * k));
}

double elliptic_Kprime(double k) {
  check_modulus(k, false);
  return 0.5 * kPi / agm(1.0, k);
}

double InteriorMapParam::log_ratio() const { return 0.5 * std::log((1.0 + p) / (1.0 - p)); }

double InteriorMapParam::focus() const { return std::sqrt(1.0 - p * p); }

InteriorMapParam solve_params(double p) {
  if (!(p > 0.0 && p < 1.0)) throw Error(Errc::invalid_argument, "p must lie in (0, 1)");
  InteriorMapParam out;
  out.p = p;
  const double target = out.log_ratio();
  const auto ratio = [](double k) { return kPi * elliptic_K(k) / elliptic_Kprime(k); };
  double lo = 0.0, hi = 1.0;
  int iter = 0;
  for (; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (ratio(mid) < target ? lo : hi) = mid;
  }
  const double k = 0.5 * (lo + hi);
  if (!(k > 0.0 && k < 1.0) || std::abs(ratio(k) - target) > 1e-10 * std::max(1.0, target)) {
    throw Error(Errc::no_convergence, "bisection for k stalled in [" + std::to_string(lo) + ", " +
                                          std::to_string(hi) + "]");
  }
  out.k = k;
  out.c = target / elliptic_K(k);
  return out;
}

cplx inverse_sn(cplx u, double k) {
  check_modulus(k, true);
  const auto near = [&](double x) { return std::abs(u - x) <= 1e-14 * std::max(1.0, std::abs(x)); };
  if (near(1.0) || near(-1.0) || (k > 0.0 && (near(1.0 / k) || near(-1.0 / k)))) {
    throw Error(Errc::branch_point_input, "sn^{-1} is not analytic at +-1 and +-1/k");
  }
  return inverse_sn_limit(u, k);
}

cplx gamma_map(const InteriorMapParam& param, cplx w) {
  if (std::abs(w) > 1.0 + 1e-12 || w.imag() < -1e-12) {
    throw Error(Errc::domain_violation, "gamma is defined on the closed upper half-disk");
  }
  try {
    return gamma_upper(param, w);
  } catch (const Error& e) {
    if (e.code() != Errc::no_convergence || std::abs(w) < 1.0 - 1e-9) throw;
    return gamma_upper(param, w * (1.0 - 1e-9));
  }
}

cplx gamma_extended(const InteriorMapParam& param, cplx w) {
  if (std::abs(w) > 1.0 + 1e-12) throw Error(Errc::domain_violation, "gamma-tilde is defined on the closed disk");
  if (w.imag() < 0.0) return std::conj(gamma_map(param, std::conj(w)));
  return gamma_map(param, w);
}

NonEllipseReport non_ellipse_experiment(const InteriorMapParam& param, const BlaschkeProduct& b, int n,
                                        int threads) {
  ChordEnvelope env = chord_envelope(b, n, [&](cplx w) { return gamma_extended(param, w); }, threads);
  std::vector<cplx> pts;
  pts.reserve(env.points.size());
  for (const auto& s : env.points) pts.push_back(s.point);
  const ConicFit fit = fit_conic(pts);

  NonEllipseReport report;
  report.fit_residual_max = fit.residual_max;
  report.fit_residual_mean = fit.residual_mean;
  report.non_ellipse = fit.residual_max > kNonEllipseThreshold;
  report.n_samples = n;
  report.n_envelope_points = static_cast<int>(pts.size());
  report.param = param;
  report.envelope = std::move(env);
  return report;
}

}  // namespace poncelet
