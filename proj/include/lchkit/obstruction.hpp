#pragma once

#include <complex>
#include <functional>
#include <utility>
#include <vector>

namespace lchkit {

// [-C, C]_p x S^1_q
struct FlatAnnulus {
  double C = 1.0;
};

FlatAnnulus make_annulus(double C);

// Fourier coefficients of the boundary traces for n = 0..n_max.
// Negative modes are the conjugates, so the traces are real.
struct FourierBoundary {
  std::vector<std::complex<double>> inner;  // at p = -C
  std::vector<std::complex<double>> outer;  // at p = +C

  int n_max() const { return static_cast<int>(inner.size()) - 1; }
  std::complex<double> inner_at(int n) const;
  std::complex<double> outer_at(int n) const;
};

FourierBoundary constant_boundary(double inner, double outer, int n_max = 64);
void validate(const FourierBoundary& boundary);

enum class ModeBasis { Affine, CoshSinh, Exponential };

// Affine:      c1 p + c2
// CoshSinh:    c1 cosh(np) + c2 sinh(np)
// Exponential: c1 exp(n(p - C)) + c2 exp(-n(p + C))
struct ModeProfile {
  int n = 0;
  ModeBasis basis = ModeBasis::Affine;
  std::complex<double> c1, c2;
  double C = 1.0;

  std::complex<double> value(double p) const;
  std::complex<double> derivative(double p) const;
  std::complex<double> second_derivative(double p) const;
};

struct HarmonicExtension {
  FlatAnnulus annulus;
  std::vector<ModeProfile> modes;

  double value(double p, double q) const;
  double dp(double p, double q) const;
};

HarmonicExtension harmonic_extend(const FlatAnnulus& annulus, const FourierBoundary& boundary);

// Period of dt o j over {p = 0}, increasing q.
double obstruction_integral(const FlatAnnulus& annulus, const FourierBoundary& boundary);
double obstruction_quadrature(const HarmonicExtension& extension, int samples = 0);

struct ZeroResult {
  double T = 0.0;
  double value = 0.0;
  double slope = 0.0;
  int iterations = 0;
};

using BoundaryFamily = std::function<FourierBoundary(double)>;

ZeroResult find_obstruction_zero(const FlatAnnulus& annulus, const BoundaryFamily& family,
                                 std::pair<double, double> bracket, double tol = 1e-9);

// Coefficients affine in T: coefficient(n) = base[n] + T * slope[n].
struct AffineFamily {
  double C = 1.0;
  int n_max = 64;
  std::vector<std::complex<double>> inner_base, inner_slope, outer_base, outer_slope;
  std::pair<double, double> bracket{-1.0, 1.0};
  double tol = 1e-9;

  FourierBoundary at(double T) const;
};

ZeroResult solve_family(const AffineFamily& family);

}  // namespace lchkit
