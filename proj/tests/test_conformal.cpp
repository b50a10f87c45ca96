#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "saddlegap/conformal.hpp"
#include "saddlegap/polynomial.hpp"

using saddlegap::Complex;
using saddlegap::HalfDiscRegion;
using saddlegap::green_halfdisc;
using saddlegap::green_normal_derivative_at_zero;
using saddlegap::green_normal_derivative_at_zero_fd;
using saddlegap::phi_omega;
using saddlegap::scsc_lower_rate;
using saddlegap::scsc_upper_rate;

namespace {
Complex boundary_sample(int k, int n) {
  // first half: arc; second half: diameter segment
  if (k < n / 2) return std::polar(1.0, -M_PI_2 + M_PI * (k + 0.5) / (n / 2));
  return Complex(0.0, -1.0 + 2.0 * (k - n / 2 + 0.5) / (n / 2));
}
}  // namespace

TEST_CASE("hand values of the exterior map") {
  CHECK(std::abs(phi_omega(Complex(0.0, 1.0)) -
                 Complex(-0.5, 0.5 * std::sqrt(3.0))) < 1e-12);
  CHECK(std::abs(phi_omega(Complex(0.0, -1.0)) -
                 Complex(-0.5, -0.5 * std::sqrt(3.0))) < 1e-12);
  CHECK(std::abs(phi_omega(Complex(0.0, 0.0)) - Complex(-1.0, 0.0)) < 1e-10);
  CHECK(std::abs(phi_omega(Complex(-1.0, 0.0)) - Complex(-2.0, 0.0)) < 1e-10);
  CHECK_THROWS_AS(phi_omega(Complex(0.5, 0.1)), std::domain_error);
}

TEST_CASE("unit modulus on the boundary, expansion outside") {
  for (int k = 0; k < 1000; ++k) {
    const Complex z = boundary_sample(k, 1000);
    CHECK(std::abs(std::abs(phi_omega(z)) - 1.0) < 1e-8);
  }
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 1000; ++k) {
    const Complex b = boundary_sample(k, 1000);
    // push outward along the local exterior direction
    const double d = 1e-3 * std::pow(1e4, u(rng));  // in [1e-3, 10]
    const Complex dir = b.real() > 1e-9 ? b / std::abs(b) : Complex(-1.0, 0.0);
    const Complex z = b + d * dir;
    CHECK(std::abs(phi_omega(z)) > 1.0);
  }
}

TEST_CASE("conjugation symmetry") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  int tested = 0;
  while (tested < 200) {
    const Complex z(u(rng), u(rng));
    const HalfDiscRegion unit(0.0, 1.0);
    if (unit.contains(z, 1e-6)) continue;
    ++tested;
    CHECK(std::abs(phi_omega(std::conj(z)) - std::conj(phi_omega(z))) < 1e-10);
  }
}

TEST_CASE("green values, scaling, monotonicity") {
  const HalfDiscRegion unit(0.0, 1.0);
  CHECK(green_halfdisc(Complex(0.0, 1.0), unit) == doctest::Approx(0.0));
  CHECK(green_halfdisc(Complex(-1.0, 0.0), unit) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-10));

  // kappa = 2 region: 0 maps to -1 under the affine rescaling
  const HalfDiscRegion scaled(1.0, 2.0);
  CHECK(green_halfdisc(Complex(0.0, 0.0), scaled) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-10));

  double prev = 0.0;
  for (double s = 0.05; s <= 4.0; s += 0.05) {
    const double g = green_halfdisc(Complex(-s, 0.0), unit);
    CHECK(g > prev);
    prev = g;
  }
}

TEST_CASE("normal derivative at the origin: closed form and difference quotient") {
  CHECK(green_normal_derivative_at_zero(1.0) ==
        doctest::Approx(4.0 / (3.0 * std::sqrt(3.0))).epsilon(1e-15));
  CHECK(green_normal_derivative_at_zero(2.0) ==
        doctest::Approx(0.5 * 4.0 / (3.0 * std::sqrt(3.0))).epsilon(1e-15));
  CHECK(std::abs(green_normal_derivative_at_zero_fd(1.0) -
                 green_normal_derivative_at_zero(1.0)) < 1e-4);
  CHECK(std::abs(green_normal_derivative_at_zero_fd(2.0) -
                 green_normal_derivative_at_zero(2.0)) < 1e-4);
  CHECK_THROWS_AS(green_normal_derivative_at_zero(0.0), std::invalid_argument);
}

TEST_CASE("closed-form rates") {
  CHECK(scsc_lower_rate(2.0, 4) == doctest::Approx(0.0625).epsilon(1e-10));
  CHECK(scsc_lower_rate(2.0, 0) == doctest::Approx(1.0));
  // large kappa: log-rate normalized by T/kappa sits in the asymptotic band
  const double r = scsc_lower_rate(100.0, 1000);
  const double normalized = std::log(r) / (1000.0 / 100.0);
  CHECK(normalized > -0.79);
  CHECK(normalized < -0.7698);

  CHECK(scsc_upper_rate(2.0, 2) == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(scsc_upper_rate(2.0, 4) == doctest::Approx(18.0 / 82.0).epsilon(1e-12));
  CHECK(scsc_upper_rate(1.0, 4) == doctest::Approx(0.0));
  CHECK(scsc_upper_rate(5.0, 0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(scsc_upper_rate(2.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(scsc_lower_rate(1.0, 4), std::invalid_argument);

  // the desk-scale separation: asymmetric beats the symmetric floor.
  // Exact value 0.21620...: the finite-kappa Green value is 0.77757/kappa
  // (vs the asymptotic 0.76980/kappa, which would give exactly 0.2).
  const double ratio = scsc_upper_rate(100.0, 1000) / scsc_lower_rate(100.0, 1000);
  CHECK(ratio == doctest::Approx(0.216204).epsilon(1e-5));
  CHECK(ratio <= 0.22);
}

TEST_CASE("polynomial growth bound off the set") {
  // |p(z)| <= exp(deg * g(z)) * max over boundary |p|
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const HalfDiscRegion unit(0.0, 1.0);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<Complex> c(9);
    for (auto& ck : c) ck = Complex(u(rng), u(rng));
    const saddlegap::Polynomial p(c);
    double sup = 0.0;
    for (int k = 0; k < 4000; ++k)
      sup = std::max(sup, std::abs(p.eval(boundary_sample(k, 4000))));
    for (int k = 0; k < 20; ++k) {
      const Complex b = boundary_sample(k * 97 % 1000, 1000);
      const Complex dir = b.real() > 1e-9 ? b / std::abs(b) : Complex(-1.0, 0.0);
      const double t = u(rng);
      const Complex z = b + (0.01 + t * t) * dir;
      const double bound =
          std::exp(8.0 * green_halfdisc(z, unit)) * sup * (1.0 + 1e-3);
      CHECK(std::abs(p.eval(z)) <= bound);
    }
  }
}
