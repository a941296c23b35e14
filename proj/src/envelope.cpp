#include "poncelet/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include <Eigen/Core>
#include <Eigen/SVD>

#include "poncelet/error.hpp"
#include "poncelet/parallel.hpp"

namespace poncelet {

namespace {

bool nearly_parallel(const RealLine& a, const RealLine& b) {
  return std::abs(std::imag(a.beta() * std::conj(b.beta()))) < 1e-13;
}

// Reorders `next` so that next[i] is the root closest to prev[i].
std::vector<cplx> match_roots(const std::vector<cplx>& prev, std::vector<cplx> next) {
  const std::size_t d = prev.size();
  std::vector<std::size_t> perm(d), best;
  std::iota(perm.begin(), perm.end(), 0);
  if (d <= 7) {
    double best_cost = std::numeric_limits<double>::infinity();
    do {
      double cost = 0.0;
      for (std::size_t i = 0; i < d; ++i) cost += std::norm(prev[i] - next[perm[i]]);
      if (cost < best_cost) {
        best_cost = cost;
        best = perm;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  } else {
    std::vector<bool> used(d, false);
    best.resize(d);
    for (std::size_t i = 0; i < d; ++i) {
      std::size_t pick = d;
      for (std::size_t j = 0; j < d; ++j) {
        if (!used[j] && (pick == d || std::norm(prev[i] - next[j]) < std::norm(prev[i] - next[pick]))) pick = j;
      }
      used[pick] = true;
      best[i] = pick;
    }
  }
  std::vector<cplx> out(d);
  for (std::size_t i = 0; i < d; ++i) out[i] = next[best[i]];
  return out;
}

struct Normalization {
  cplx center;
  double scale = 1.0;
};

Normalization unit_diameter(std::span<const cplx> points) {
  Normalization n;
  for (const cplx z : points) n.center += z;
  n.center /= static_cast<double>(points.size());
  double diameter = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) diameter = std::max(diameter, std::abs(points[i] - points[j]));
  }
  n.scale = diameter > 0.0 ? diameter : 1.0;
  return n;
}

std::vector<std::array<int, 2>> monomials_up_to(int degree) {
  std::vector<std::array<int, 2>> out;
  for (int total = degree; total >= 0; --total) {
    for (int i = total; i >= 0; --i) out.push_back({i, total - i});
  }
  return out;
}

struct NullVector {
  Eigen::VectorXd coeffs;
  std::vector<double> residuals;
};

NullVector smallest_singular_vector(const Eigen::MatrixXd& design) {
  const long m = design.cols();
  if (design.rows() < m) throw Error(Errc::rank_deficient, "too few points for the requested fit");
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(design, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  if (sigma(m - 2) <= 1e-12 * sigma(0)) {
    throw Error(Errc::rank_deficient, "the points do not determine a unique curve");
  }
  NullVector out;
  out.coeffs = svd.matrixV().col(m - 1);
  const Eigen::VectorXd r = design * out.coeffs;
  out.residuals.assign(r.data(), r.data() + r.size());
  return out;
}

std::pair<double, double> max_mean_abs(const std::vector<double>& values) {
  double mx = 0.0, sum = 0.0;
  for (const double v : values) {
    mx = std::max(mx, std::abs(v));
    sum += std::abs(v);
  }
  return {mx, values.empty() ? 0.0 : sum / static_cast<double>(values.size())};
}

}  // namespace

std::vector<cplx> envelope_points_numeric(std::span<const RealLine> lines) {
  if (lines.size() < 3) throw Error(Errc::invalid_argument, "an envelope needs at least 3 lines");
  std::vector<cplx> out;
  out.reserve(lines.size() - 1);
  for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
    if (nearly_parallel(lines[i], lines[i + 1])) continue;
    out.push_back(intersect(lines[i], lines[i + 1]));
  }
  return out;
}

ChordEnvelope chord_envelope(const BlaschkeProduct& b, int n, const std::function<cplx(cplx)>& boundary,
                             int threads, double phase) {
  if (n < 3) throw Error(Errc::invalid_argument, "need at least 3 samples");
  const int d = b.degree();
  if (d < 2) throw Error(Errc::invalid_argument, "chords need degree at least 2");

  std::vector<std::vector<cplx>> roots(n);
  for (int k = 0; k < n; ++k) {
    std::vector<cplx> w = preimages(b, std::polar(1.0, phase + 2.0 * std::numbers::pi * k / n));
    roots[k] = k == 0 ? std::move(w) : match_roots(roots[k - 1], std::move(w));
  }
  std::vector<std::vector<cplx>> images(n, std::vector<cplx>(d));
  parallel_for(static_cast<std::size_t>(n) * d, threads, [&](std::size_t idx) {
    images[idx / d][idx % d] = boundary(roots[idx / d][idx % d]);
  });

  ChordEnvelope out;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < d; ++i) {
      for (int j = i + 1; j < d; ++j) out.chords.emplace_back(images[k][i], images[k][j]);
    }
  }
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      for (int k = 0; k + 1 < n; ++k) {
        const RealLine l0 = line_through(images[k][i], images[k][j]);
        const RealLine l1 = line_through(images[k + 1][i], images[k + 1][j]);
        if (nearly_parallel(l0, l1)) continue;
        out.points.push_back({intersect(l0, l1), phase + std::numbers::pi * (2 * k + 1) / n});
      }
    }
  }
  return out;
}

ConicFit fit_conic(std::span<const cplx> points) {
  if (points.size() < 6) throw Error(Errc::rank_deficient, "a conic fit needs at least 6 points");
  const Normalization norm = unit_diameter(points);
  Eigen::MatrixXd design(points.size(), 6);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const cplx z = (points[i] - norm.center) / norm.scale;
    const double x = z.real(), y = z.imag();
    design.row(i) << x * x, x * y, y * y, x, y, 1.0;
  }
  const NullVector nv = smallest_singular_vector(design);
  const Eigen::VectorXd& c = nv.coeffs;
  // Conic in the normalized coordinate xi = (z - center) / scale, then
  // multiplied through by scale^2 and rewritten in z.
  const ConicGeneral local = conic_from_real(c(0), c(1), c(2), c(3), c(4), c(5));
  const cplx m = norm.center;
  const double s = norm.scale;
  ConicGeneral g;
  g.u = local.u;
  g.p = local.p;
  g.v = s * local.v - 2.0 * local.u * std::conj(m) - local.p * m;
  g.q = 2.0 * std::real(std::conj(local.u) * m * m) + local.p * std::norm(m) -
        2.0 * s * std::real(std::conj(local.v) * m) + s * s * local.q;

  ConicFit fit;
  fit.conic = g;
  std::tie(fit.residual_max, fit.residual_mean) = max_mean_abs(nv.residuals);
  return fit;
}

CurveFit fit_algebraic_curve(std::span<const cplx> points, int degree, double max_radius) {
  if (degree < 1) throw Error(Errc::invalid_argument, "degree must be positive");
  std::vector<cplx> kept;
  for (const cplx z : points) {
    if (std::abs(z) <= max_radius) kept.push_back(z);
  }
  CurveFit fit;
  fit.degree = degree;
  fit.monomials = monomials_up_to(degree);
  fit.n_points = static_cast<int>(kept.size());
  if (kept.size() < fit.monomials.size()) throw Error(Errc::rank_deficient, "too few points for the requested degree");

  const Normalization norm = unit_diameter(kept);
  Eigen::MatrixXd design(kept.size(), fit.monomials.size());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    const cplx z = (kept[i] - norm.center) / norm.scale;
    for (std::size_t j = 0; j < fit.monomials.size(); ++j) {
      design(i, j) = std::pow(z.real(), fit.monomials[j][0]) * std::pow(z.imag(), fit.monomials[j][1]);
    }
  }
  const NullVector nv = smallest_singular_vector(design);
  fit.coefficients.assign(nv.coeffs.data(), nv.coeffs.data() + nv.coeffs.size());
  std::tie(fit.residual_max, fit.residual_mean) = max_mean_abs(nv.residuals);
  return fit;
}

}  // namespace poncelet
