#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "poncelet/blaschke.hpp"
#include "poncelet/error.hpp"

using namespace poncelet;

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kA(0.2, 0.17), kB(-0.42, -0.17);

std::vector<cplx> random_zeros(std::mt19937_64& rng, int count) {
  std::vector<cplx> out;
  for (int i = 0; i < count; ++i) out.push_back(oracle::random_in_disk(rng, 0.9));
  return out;
}

// Monic polynomial with the given roots, ascending.
std::vector<cplx> expand(const std::vector<cplx>& roots) {
  std::vector<cplx> c{1.0};
  for (const cplx r : roots) {
    c.insert(c.begin(), 0.0);
    for (std::size_t i = 0; i + 1 < c.size(); ++i) c[i] -= r * c[i + 1];
  }
  return c;
}

}  // namespace

TEST_CASE("evaluate examples") {
  const BlaschkeProduct cube({0.0, 0.0});
  CHECK(std::abs(cube.evaluate(std::polar(1.0, kPi / 3)) - cplx(-1.0)) < 1e-15);
  const BlaschkeProduct b({kA, kB});
  CHECK(std::abs(b.evaluate(kA)) < 1e-16);
  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; ++i) {
    const double th = oracle::uniform(rng, 0, 2 * kPi);
    CHECK(std::abs(b.evaluate(std::polar(1.0, th))) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(b.evaluate(oracle::random_in_disk(rng, 0.999))) < 1.0);
  }
  CHECK_THROWS_AS(BlaschkeProduct({cplx(0.5, 0.0)}).evaluate(2.0), Error);
}

TEST_CASE("derivative matches a central difference") {
  const BlaschkeProduct b({kA, kB, cplx(0.1, -0.6)});
  const cplx w(0.3, 0.4);
  const double h = 1e-6;
  const cplx fd = (b.evaluate(w + h) - b.evaluate(w - h)) / (2 * h);
  CHECK(std::abs(b.derivative(w) - fd) < 1e-8);
}

TEST_CASE("constructor validation") {
  CHECK_THROWS_AS(BlaschkeProduct(std::vector<cplx>{}), Error);
  CHECK_THROWS_AS(BlaschkeProduct({cplx(1.0, 0.0)}), Error);
  CHECK_THROWS_AS(BlaschkeProduct({cplx(0.0, 1.5)}), Error);
}

TEST_CASE("preimages of w^3 at 1 are the cube roots of unity") {
  const auto w = preimages(BlaschkeProduct({0.0, 0.0}), 1.0);
  REQUIRE(w.size() == 3);
  for (int k = 0; k < 3; ++k) CHECK(std::abs(w[k] - std::polar(1.0, 2 * kPi * k / 3)) < 1e-12);
}

TEST_CASE("preimages satisfy Vieta: sum = a + b + lambda conj(ab), product = lambda") {
  const BlaschkeProduct b({kA, kB});
  for (int k = 0; k < 36; ++k) {
    const cplx lam = std::polar(1.0, 2 * kPi * k / 36);
    const auto w = preimages(b, lam);
    REQUIRE(w.size() == 3);
    CHECK(std::abs(w[0] + w[1] + w[2] - (kA + kB + lam * std::conj(kA * kB))) < 1e-12);
    CHECK(std::abs(w[0] * w[1] * w[2] - lam) < 1e-12);
    for (const cplx x : w) {
      CHECK(std::abs(std::abs(x) - 1.0) < 1e-8);
      CHECK(std::abs(b.evaluate(x) - lam) < 1e-9);
    }
  }
}

TEST_CASE("preimages are sorted by argument and distinct") {
  const BlaschkeProduct b({kA, kB, cplx(0.5, 0.5)});
  const auto w = preimages(b, std::polar(1.0, 0.7));
  for (std::size_t i = 1; i < w.size(); ++i) {
    auto arg = [](cplx z) { return std::arg(z) < 0 ? std::arg(z) + 2 * kPi : std::arg(z); };
    CHECK(arg(w[i - 1]) < arg(w[i]));
  }
  CHECK_THROWS_AS(preimages(b, 0.9), Error);
}

TEST_CASE("property: roots reconstruct the preimage polynomial") {
  std::mt19937_64 rng(22);
  for (int d = 2; d <= 6; ++d) {
    for (int trial = 0; trial < 10; ++trial) {
      const BlaschkeProduct b(random_zeros(rng, d - 1));
      const cplx lam = std::polar(1.0, oracle::uniform(rng, 0, 2 * kPi));
      const auto poly = b.preimage_polynomial(lam);
      const auto rebuilt = expand(preimages(b, lam));
      REQUIRE(rebuilt.size() == poly.size());
      for (std::size_t i = 0; i < poly.size(); ++i) CHECK(std::abs(rebuilt[i] - poly[i]) < 1e-8);
    }
  }
}

TEST_CASE("property: preimages move continuously in lambda away from the wrap") {
  const BlaschkeProduct b({kA, kB});
  auto prev = preimages(b, std::polar(1.0, 0.001));
  for (int k = 1; k < 360; ++k) {
    const auto cur = preimages(b, std::polar(1.0, 0.001 + 2 * kPi * k / 360 * 0.99));
    // Sorting by argument relabels cyclically when a root crosses arg 0.
    double worst = 1e9;
    for (std::size_t shift = 0; shift < cur.size(); ++shift) {
      double m = 0.0;
      for (std::size_t i = 0; i < cur.size(); ++i) m = std::max(m, std::abs(cur[(i + shift) % cur.size()] - prev[i]));
      worst = std::min(worst, m);
    }
    CHECK(worst < 0.2);
    prev = cur;
  }
}

TEST_CASE("canonicalize: canonical input gives the identity pair") {
  const CanonicalForm f = canonicalize(GeneralBlaschke{{0.0, kA, kB}, 0.0});
  CHECK(f.maps.is_identity());
  REQUIRE(f.product.zeros().size() == 2);
  CHECK(std::abs(f.product.zeros()[0] - kA) < 1e-15);
}

TEST_CASE("canonicalize a general product") {
  const GeneralBlaschke g{{cplx(0.5, 0.0), cplx(0.5, 0.0)}, kPi / 2};
  const CanonicalForm f = canonicalize(g);
  const BlaschkeProduct& b = f.product;
  CHECK(std::abs(b.evaluate(0.0)) < 1e-14);
  std::mt19937_64 rng(23);
  for (int i = 0; i < 20; ++i) {
    const cplx w = std::polar(1.0, oracle::uniform(rng, 0, 2 * kPi));
    CHECK(std::abs(std::abs(b.evaluate(w)) - 1.0) < 1e-13);
    // B' = f2 o g o f1.
    CHECK(std::abs(b.evaluate(w) - f.maps.f2(g.evaluate(f.maps.f1(w)))) < 1e-12);
  }
  // Unimodular factor 1: B'(x) / x -> prod(-a_k) as x -> 0.
  cplx expected{1.0};
  for (const cplx a : b.zeros()) expected *= -a;
  CHECK(std::abs(b.evaluate(1e-9) / 1e-9 - expected) < 1e-8);
}

TEST_CASE("canonical preimage polygons are the general ones rotated by f1") {
  const GeneralBlaschke g{{cplx(0.3, -0.2), cplx(-0.1, 0.6), cplx(0.4, 0.4)}, 1.1};
  const CanonicalForm f = canonicalize(g);
  for (int k = 0; k < 12; ++k) {
    const cplx lam = std::polar(1.0, 2 * kPi * k / 12);
    // B'(w) = lam  <=>  g(f1(w)) = f2^{-1}(lam).
    const cplx target = f.maps.f2_inverse(lam);
    for (const cplx w : preimages(f.product, lam)) CHECK(std::abs(g.evaluate(f.maps.f1(w)) - target) < 1e-10);
  }
}

TEST_CASE("interior_curve_disk examples") {
  const ConicGeneral c0 = interior_curve_disk(BlaschkeProduct({0.0, 0.0}));
  const EllipseStandard e0 = general_to_standard(c0);
  CHECK(classify_conic(c0) == ConicClass::circle);
  CHECK(e0.semi_major() == doctest::Approx(0.5));

  const cplx c(0.3, -0.4);
  const EllipseStandard ec = general_to_standard(interior_curve_disk(BlaschkeProduct({c, c})));
  CHECK(std::abs(ec.center() - c) < 1e-12);
  CHECK(ec.semi_major() == doctest::Approx((1 - std::norm(c)) / 2).epsilon(1e-12));

  const BlaschkeProduct b({kA, kB});
  const ConicGeneral g = interior_curve_disk(b);
  CHECK(conic_distance(g, standard_to_general({kA, kB, std::abs(1.0 - std::conj(kA) * kB)})) < 1e-12);
  double worst = 0.0;
  for (int k = 0; k < 360; ++k) {
    const auto w = preimages(b, std::polar(1.0, 2 * kPi * k / 360));
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) worst = std::max(worst, std::abs(tangency_residual(line_through(w[i], w[j]), g)));
    }
  }
  CHECK(worst < 1e-8);
  CHECK_THROWS_AS(interior_curve_disk(BlaschkeProduct({kA})), Error);
}

TEST_CASE("property: chord tangency via the focal reflection oracle") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 20; ++trial) {
    const cplx a = oracle::random_in_disk(rng, 0.95), b = oracle::random_in_disk(rng, 0.95);
    const BlaschkeProduct p({a, b});
    const double r = std::abs(1.0 - std::conj(a) * b);
    for (int k = 0; k < 36; ++k) {
      const auto w = preimages(p, std::polar(1.0, 2 * kPi * k / 36 + 0.01));
      CHECK(std::abs(oracle::focal_tangency(w[0], w[1], a, b, r)) < 1e-8);
      CHECK(std::abs(oracle::focal_tangency(w[1], w[2], a, b, r)) < 1e-8);
    }
  }
}

TEST_CASE("centroid_circle") {
  const Circle point = centroid_circle(BlaschkeProduct({0.0, 0.0}));
  CHECK(std::abs(point.center) < 1e-15);
  CHECK(point.radius == 0.0);

  const Circle c3 = centroid_circle(BlaschkeProduct({kA, kB}));
  CHECK(std::abs(c3.center - (kA + kB) / 3.0) < 1e-15);
  CHECK(c3.radius == doctest::Approx(std::abs(kA * kB) / 3));

  const BlaschkeProduct b4({cplx(0.3, 0.1), cplx(-0.2, 0.5), cplx(0.1, -0.7)});
  const Circle c4 = centroid_circle(b4);
  for (int k = 0; k < 100; ++k) {
    const auto w = preimages(b4, std::polar(1.0, 2 * kPi * k / 100));
    cplx m{};
    for (const cplx x : w) m += x;
    m /= 4.0;
    CHECK(std::abs(std::abs(m - c4.center) - c4.radius) < 1e-9);
  }
}

TEST_CASE("polynomial_roots") {
  const std::vector<cplx> coeffs{cplx(-6), cplx(11), cplx(-6), cplx(1)};  // (x-1)(x-2)(x-3)
  auto r = polynomial_roots(coeffs);
  std::sort(r.begin(), r.end(), [](cplx a, cplx b) { return a.real() < b.real(); });
  REQUIRE(r.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(std::abs(r[i] - cplx(i + 1)) < 1e-12);
  const std::vector<cplx> bad{cplx(1.0), cplx(0.0)};
  CHECK_THROWS_AS(polynomial_roots(bad), Error);
}
