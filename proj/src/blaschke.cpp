#include "poncelet/blaschke.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "poncelet/error.hpp"

namespace poncelet {

namespace {

constexpr double kUnimodularTol = 1e-12;
constexpr double kOnCircleTol = 1e-8;
constexpr double kResidualTol = 1e-9;

void check_in_disk(std::span<const cplx> zeros) {
  for (const cplx& a : zeros) {
    if (!(std::abs(a) < 1.0)) {
      throw Error(Errc::invalid_argument, "Blaschke zero outside the open unit disk");
    }
  }
}

// Ascending coefficients of prod (x - r_k) times `lead`.
std::vector<cplx> poly_from_roots(std::span<const cplx> roots, cplx lead) {
  std::vector<cplx> c{lead};
  for (const cplx& r : roots) {
    c.push_back(cplx{});
    for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = c[i - 1] - r * c[i];
    c[0] = -r * c[0];
  }
  return c;
}

double arg_2pi(cplx w) {
  double a = std::arg(w);
  if (a < 0.0) a += 2.0 * std::numbers::pi;
  return a;
}

}  // namespace

BlaschkeProduct::BlaschkeProduct(std::vector<cplx> zeros) : zeros_(std::move(zeros)) {
  if (zeros_.empty()) {
    throw Error(Errc::invalid_argument, "canonical Blaschke product needs degree >= 2");
  }
  check_in_disk(zeros_);
}

cplx BlaschkeProduct::evaluate(cplx w) const {
  cplx value = w;
  for (const cplx& a : zeros_) {
    const cplx den = 1.0 - std::conj(a) * w;
    if (std::abs(den) < 1e-300) throw Error(Errc::pole_input, "evaluation at a pole");
    value *= (w - a) / den;
  }
  return value;
}

cplx BlaschkeProduct::derivative(cplx w) const {
  // Product rule written without dividing by B(w), so zeros are safe.
  cplx value = 1.0;
  cplx deriv = 0.0;
  auto push = [&](cplx f, cplx df) {
    deriv = deriv * f + value * df;
    value *= f;
  };
  push(w, 1.0);
  for (const cplx& a : zeros_) {
    const cplx den = 1.0 - std::conj(a) * w;
    push((w - a) / den, (1.0 - std::norm(a)) / (den * den));
  }
  return deriv;
}

std::vector<cplx> BlaschkeProduct::preimage_polynomial(cplx lambda) const {
  std::vector<cplx> num = poly_from_roots(zeros_, 1.0);
  num.insert(num.begin(), cplx{});  // times w
  // prod (1 - conj(a) w), ascending.
  std::vector<cplx> den{1.0};
  for (const cplx& a : zeros_) {
    den.push_back(cplx{});
    for (std::size_t i = den.size() - 1; i > 0; --i) den[i] -= std::conj(a) * den[i - 1];
  }
  for (std::size_t i = 0; i < den.size(); ++i) num[i] -= lambda * den[i];
  return num;
}

cplx GeneralBlaschke::evaluate(cplx w) const {
  cplx value = std::polar(1.0, theta);
  for (const cplx& a : zeros) value *= (w - a) / (1.0 - std::conj(a) * w);
  return value;
}

cplx MobiusPair::f2_inverse(cplx z) const {
  const cplx y = z / post_rotation;
  return (y + shift) / (1.0 + std::conj(shift) * y);
}

bool MobiusPair::is_identity(double tol) const {
  return std::abs(rotation - 1.0) <= tol && std::abs(shift) <= tol &&
         std::abs(post_rotation - 1.0) <= tol;
}

std::vector<cplx> polynomial_roots(std::span<const cplx> coeffs) {
  const int n = static_cast<int>(coeffs.size()) - 1;
  if (n < 1 || coeffs.back() == cplx{}) {
    throw Error(Errc::invalid_argument, "polynomial needs degree >= 1 and nonzero leading coefficient");
  }
  if (n == 1) return {-coeffs[0] / coeffs[1]};
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -coeffs[i] / coeffs[n];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success) {
    throw Error(Errc::root_quality_failure, "companion eigenvalue iteration failed");
  }
  const Eigen::VectorXcd ev = solver.eigenvalues();
  return {ev.data(), ev.data() + n};
}

std::vector<cplx> preimages(const BlaschkeProduct& b, cplx lambda) {
  if (std::abs(std::abs(lambda) - 1.0) > kUnimodularTol) {
    throw Error(Errc::not_unimodular, "preimages need |lambda| = 1");
  }
  const std::vector<cplx> poly = b.preimage_polynomial(lambda);
  std::vector<cplx> roots = polynomial_roots(poly);

  for (cplx& w : roots) {
    for (int it = 0; it < 8; ++it) {
      const cplx d = b.derivative(w);
      if (d == cplx{}) break;
      const cplx step = (b.evaluate(w) - lambda) / d;
      w -= step;
      if (std::abs(step) <= 1e-16) break;
    }
  }
  for (const cplx& w : roots) {
    if (std::abs(std::abs(w) - 1.0) > kOnCircleTol || std::abs(b.evaluate(w) - lambda) > kResidualTol) {
      throw Error(Errc::root_quality_failure, "preimage residual above tolerance");
    }
  }
  std::sort(roots.begin(), roots.end(), [](cplx x, cplx y) { return arg_2pi(x) < arg_2pi(y); });
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const cplx next = roots[(i + 1) % roots.size()];
    if (std::abs(roots[i] - next) < 1e-10) {
      throw Error(Errc::root_quality_failure, "preimages collide");
    }
  }
  return roots;
}

CanonicalForm canonicalize(const GeneralBlaschke& g) {
  const std::size_t d = g.zeros.size();
  if (d < 2) throw Error(Errc::invalid_argument, "Blaschke product needs degree >= 2");
  check_in_disk(g.zeros);

  const double theta = std::remainder(g.theta, 2.0 * std::numbers::pi);
  const auto zero_at_origin =
      std::find_if(g.zeros.begin(), g.zeros.end(), [](cplx a) { return std::abs(a) <= 1e-15; });
  if (std::abs(theta) <= 1e-15 && zero_at_origin != g.zeros.end()) {
    std::vector<cplx> rest;
    bool skipped = false;
    for (auto it = g.zeros.begin(); it != g.zeros.end(); ++it) {
      if (!skipped && it == zero_at_origin) {
        skipped = true;
        continue;
      }
      rest.push_back(*it);
    }
    return {BlaschkeProduct(std::move(rest)), MobiusPair{}};
  }

  MobiusPair maps;
  maps.rotation = std::polar(1.0, -theta / static_cast<double>(d));
  maps.shift = g.evaluate(0.0);

  // Zeros of the composite solve g(w) = g(0):
  // e^{i theta} prod (w - a) - c prod (1 - conj(a) w) = 0, then z = w / rotation.
  const cplx c = maps.shift;
  std::vector<cplx> poly = poly_from_roots(g.zeros, std::polar(1.0, theta));
  std::vector<cplx> den{1.0};
  for (const cplx& a : g.zeros) {
    den.push_back(cplx{});
    for (std::size_t i = den.size() - 1; i > 0; --i) den[i] -= std::conj(a) * den[i - 1];
  }
  for (std::size_t i = 0; i < den.size(); ++i) poly[i] -= c * den[i];
  std::vector<cplx> roots = polynomial_roots(poly);
  auto origin = std::min_element(roots.begin(), roots.end(),
                                 [](cplx x, cplx y) { return std::abs(x) < std::abs(y); });
  roots.erase(origin);
  for (cplx& r : roots) r /= maps.rotation;

  BlaschkeProduct product(roots);
  // Fix the unimodular factor by comparing at a boundary point.
  const cplx probe{0.6, 0.8};
  const cplx composite = maps.f2(g.evaluate(maps.f1(probe)));
  maps.post_rotation = product.evaluate(probe) / composite;
  maps.post_rotation /= std::abs(maps.post_rotation);
  return {std::move(product), maps};
}

ConicGeneral interior_curve_disk(const BlaschkeProduct& b) {
  if (b.degree() != 3) {
    throw Error(Errc::invalid_argument, "closed-form interior curve needs degree 3");
  }
  const cplx a1 = b.zeros()[0];
  const cplx a2 = b.zeros()[1];
  const double ab2 = std::norm(a1 * a2);
  const double s = std::norm(a1 + a2);
  ConicGeneral c;
  c.u = (a1 - a2) * (a1 - a2);
  c.p = -2.0 * (2.0 * (1.0 + ab2) - s);
  c.v = 2.0 * ((1.0 + ab2) * (a1 + a2) - (a1 * a1 + a2 * a2) * std::conj(a1 + a2));
  c.q = (1.0 - ab2) * (1.0 - ab2) - s * (2.0 * (1.0 + ab2) - s);
  return c;
}

Circle centroid_circle(const BlaschkeProduct& b) {
  cplx sum{};
  cplx prod{1.0, 0.0};
  for (const cplx& a : b.zeros()) {
    sum += a;
    prod *= a;
  }
  const double d = b.degree();
  return {sum / d, std::abs(prod) / d};
}

}  // namespace poncelet
