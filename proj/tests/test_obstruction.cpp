#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "lchkit/errors.hpp"
#include "lchkit/obstruction.hpp"

using namespace lchkit;
using cd = std::complex<double>;

namespace {

FourierBoundary random_boundary(std::mt19937_64& rng, int n_max, double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  FourierBoundary b = constant_boundary(g(rng), g(rng), n_max);
  for (int n = 1; n <= n_max; ++n) {
    b.inner[n] = cd(g(rng), g(rng)) / double(n);
    b.outer[n] = cd(g(rng), g(rng)) / double(n);
  }
  return b;
}

// Central difference of the extension itself, averaged over q by a fine Riemann sum.
double finite_difference_period(const HarmonicExtension& h, int samples) {
  const double dp = 1e-5;
  double sum = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double q = 2 * std::numbers::pi * k / samples;
    sum += -(h.value(dp, q) - h.value(-dp, q)) / (2 * dp);
  }
  return sum * 2 * std::numbers::pi / samples;
}

template <class F>
bool throws_kind(F f, ErrorKind kind) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

}  // namespace

TEST_CASE("affine mode for constant traces") {
  const auto h = harmonic_extend(make_annulus(1.0), constant_boundary(1.0, 0.0));
  for (double p = -1.0; p <= 1.0; p += 0.125) {
    CHECK(h.modes[0].value(p).real() == doctest::Approx((1 - p) / 2).epsilon(1e-15));
    for (std::size_t n = 1; n < h.modes.size(); ++n) CHECK(std::abs(h.modes[n].value(p)) == 0.0);
  }
}

TEST_CASE("first mode by hand") {
  FourierBoundary b = constant_boundary(0.0, 0.0, 3);
  b.outer[1] = 1.0;
  const auto h = harmonic_extend(make_annulus(1.0), b);
  const auto& m = h.modes[1];
  REQUIRE(m.basis == ModeBasis::CoshSinh);
  CHECK(m.c1.real() == doctest::Approx(1 / (2 * std::cosh(1.0))).epsilon(1e-14));
  CHECK(m.c2.real() == doctest::Approx(1 / (2 * std::sinh(1.0))).epsilon(1e-14));
  CHECK(std::abs(m.value(-1.0)) < 1e-15);
  CHECK(std::abs(m.value(1.0) - 1.0) < 1e-15);
}

TEST_CASE("zero data extends to zero") {
  const auto h = harmonic_extend(make_annulus(2.5), constant_boundary(0.0, 0.0, 16));
  for (double p = -2.5; p <= 2.5; p += 0.5) {
    for (double q = 0; q < 6.3; q += 0.7) CHECK(h.value(p, q) == 0.0);
  }
}

TEST_CASE("harmonicity residual and boundary match") {
  std::mt19937_64 rng(11);
  for (double C : {0.1, 1.0, 3.0}) {
    const auto b = random_boundary(rng, 12);
    const auto h = harmonic_extend(make_annulus(C), b);
    for (const auto& m : h.modes) {
      double worst = 0.0;
      for (int k = 0; k <= 100; ++k) {
        const double p = -C + 2 * C * k / 100.0;
        // Analytic second derivative from the basis itself, not from value().
        cd second;
        const double n = m.n;
        switch (m.basis) {
          case ModeBasis::Affine: second = 0.0; break;
          case ModeBasis::CoshSinh: second = n * n * (m.c1 * std::cosh(n * p) + m.c2 * std::sinh(n * p)); break;
          case ModeBasis::Exponential:
            second = n * n * (m.c1 * std::exp(n * (p - C)) + m.c2 * std::exp(-n * (p + C)));
            break;
        }
        worst = std::max(worst, std::abs(second - n * n * m.value(p)));
        worst = std::max(worst, std::abs(m.second_derivative(p) - second));
      }
      CHECK(worst < 1e-10);
      CHECK(std::abs(m.value(-C) - b.inner[m.n]) < 1e-12);
      CHECK(std::abs(m.value(C) - b.outer[m.n]) < 1e-12);
    }
    // Laplacian of the real extension by finite differences.
    const double e = 1e-3;
    for (double p : {-0.5 * C, 0.0, 0.3 * C}) {
      for (double q : {0.0, 1.0, 4.0}) {
        const double lap = (h.value(p + e, q) + h.value(p - e, q) + h.value(p, q + e) + h.value(p, q - e) -
                            4 * h.value(p, q)) / (e * e);
        CHECK(std::abs(lap) < 0.2);
      }
    }
  }
}

TEST_CASE("large modes switch basis") {
  FourierBoundary b = constant_boundary(0.0, 0.0, 400);
  b.inner[400] = 1.0;
  b.outer[400] = 2.0;
  const auto h = harmonic_extend(make_annulus(5.0), b);
  const auto& m = h.modes[400];
  CHECK(m.basis == ModeBasis::Exponential);
  CHECK(std::abs(m.value(-5.0) - 1.0) < 1e-12);
  CHECK(std::abs(m.value(5.0) - 2.0) < 1e-12);
  CHECK(std::abs(m.value(0.0)) < 1e-300);
  CHECK(obstruction_quadrature(h) == doctest::Approx(0.0));
}

TEST_CASE("closed formula against quadrature") {
  const auto h = harmonic_extend(make_annulus(1.0), constant_boundary(1.0, 0.0));
  CHECK(std::abs(obstruction_integral(make_annulus(1.0), constant_boundary(1.0, 0.0)) - std::numbers::pi) < 1e-15);
  CHECK(std::abs(obstruction_quadrature(h) - std::numbers::pi) < 1e-8);
  CHECK(std::abs(finite_difference_period(h, 64) - std::numbers::pi) < 1e-8);
}

TEST_CASE("only the mean matters") {
  std::mt19937_64 rng(5);
  const FlatAnnulus A = make_annulus(1.3);
  for (int trial = 0; trial < 100; ++trial) {
    auto b = random_boundary(rng, 24);
    const double closed = obstruction_integral(A, b);
    auto mean_only = constant_boundary(b.inner[0].real(), b.outer[0].real(), 24);
    CHECK(obstruction_integral(A, mean_only) == closed);
    CHECK(std::abs(obstruction_quadrature(harmonic_extend(A, b)) - closed) < 1e-8);
    CHECK(std::abs(finite_difference_period(harmonic_extend(A, b), 128) - closed) < 1e-6);
  }
  auto b = random_boundary(rng, 8);
  b.outer[0] = b.inner[0];
  CHECK(obstruction_integral(A, b) == 0.0);
}

TEST_CASE("linearity and scaling") {
  std::mt19937_64 rng(9);
  const auto b1 = random_boundary(rng, 6);
  const auto b2 = random_boundary(rng, 6);
  FourierBoundary sum = b1;
  for (int n = 0; n <= 6; ++n) {
    sum.inner[n] += b2.inner[n];
    sum.outer[n] += b2.outer[n];
  }
  const FlatAnnulus A = make_annulus(0.7);
  CHECK(obstruction_integral(A, sum) ==
        doctest::Approx(obstruction_integral(A, b1) + obstruction_integral(A, b2)).epsilon(1e-14));
  for (double s : {0.5, 2.0, 10.0}) {
    CHECK(obstruction_integral(make_annulus(0.7 * s), b1) == doctest::Approx(obstruction_integral(A, b1) / s).epsilon(1e-14));
  }
}

TEST_CASE("zero finding") {
  const FlatAnnulus A = make_annulus(1.0);
  auto odd = [](double T) { return constant_boundary(T, 0.0, 4); };
  auto r = find_obstruction_zero(A, odd, {-1.0, 1.0});
  CHECK(std::abs(r.T) < 1e-9);
  auto shifted = [](double T) { return constant_boundary(T + 3, 0.0, 4); };
  r = find_obstruction_zero(A, shifted, {-5.0, -1.0});
  CHECK(std::abs(r.T + 3) < 1e-9);
  CHECK(std::abs(r.value) < 1e-9);
  CHECK(r.slope == doctest::Approx(std::numbers::pi));
  const auto again = find_obstruction_zero(A, shifted, {-5.0, -1.0});
  CHECK(again.T == r.T);
  CHECK(throws_kind([&] { find_obstruction_zero(A, shifted, {0.0, 2.0}); }, ErrorKind::NoSignChange));
  // Nonlinear family: mean difference T^3 - 2.
  auto cubic = [](double T) { return constant_boundary(T * T * T, 2.0, 2); };
  r = find_obstruction_zero(A, cubic, {0.0, 3.0}, 1e-12);
  CHECK(std::abs(r.T - std::cbrt(2.0)) < 1e-12);
}

TEST_CASE("affine family") {
  AffineFamily f;
  f.C = 2.0;
  f.n_max = 3;
  f.inner_base = {3.0, cd(0.5, 0.2)};
  f.inner_slope = {1.0};
  f.outer_base = {0.0, 0.0, cd(1.0, -1.0)};
  f.bracket = {-5.0, -1.0};
  const auto r = solve_family(f);
  CHECK(std::abs(r.T + 3) < 1e-9);
  CHECK(f.at(1.0).inner[0] == cd(4.0, 0.0));
}

TEST_CASE("invalid inputs") {
  CHECK(throws_kind([] { make_annulus(0.0); }, ErrorKind::InvalidArgument));
  CHECK(throws_kind([] { make_annulus(-1.0); }, ErrorKind::InvalidArgument));
  FourierBoundary b = constant_boundary(1.0, 0.0, 2);
  b.inner[0] = cd(1.0, 1.0);
  CHECK(throws_kind([&] { obstruction_integral(make_annulus(1.0), b); }, ErrorKind::InvalidArgument));
  b = constant_boundary(1.0, 0.0, 2);
  b.outer.pop_back();
  CHECK(throws_kind([&] { harmonic_extend(make_annulus(1.0), b); }, ErrorKind::InvalidArgument));
}
