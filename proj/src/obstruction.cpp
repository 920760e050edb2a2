#include "lchkit/obstruction.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "lchkit/errors.hpp"

namespace lchkit {

namespace {

using cd = std::complex<double>;

bool finite(cd z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

ModeProfile solve_mode(int n, double C, cd left, cd right) {
  ModeProfile m;
  m.n = n;
  m.C = C;
  if (n == 0) {
    m.basis = ModeBasis::Affine;
    m.c1 = (right - left) / (2.0 * C);
    m.c2 = (right + left) / 2.0;
    return m;
  }
  const double x = n * C;
  const double ch = std::cosh(x);
  const double sh = std::sinh(x);
  if (std::isfinite(ch) && std::isfinite(sh) && sh != 0.0) {
    m.basis = ModeBasis::CoshSinh;
    m.c1 = (left + right) / (2.0 * ch);
    m.c2 = (right - left) / (2.0 * sh);
    if (finite(m.c1) && finite(m.c2) && finite(m.value(C)) && finite(m.value(-C))) return m;
  }
  m.basis = ModeBasis::Exponential;
  const double e = std::exp(-2.0 * x);
  const double det = 1.0 - e * e;
  m.c1 = (right - e * left) / det;
  m.c2 = (left - e * right) / det;
  if (det <= 0.0 || !finite(m.c1) || !finite(m.c2)) {
    throw Error(ErrorKind::IllConditioned, "mode cannot be represented", n);
  }
  return m;
}

}  // namespace

FlatAnnulus make_annulus(double C) {
  if (!(C > 0.0) || !std::isfinite(C)) throw Error(ErrorKind::InvalidArgument, "modulus must be finite and positive");
  return FlatAnnulus{C};
}

cd FourierBoundary::inner_at(int n) const {
  if (std::abs(n) > n_max()) return 0.0;
  return n >= 0 ? inner[n] : std::conj(inner[-n]);
}

cd FourierBoundary::outer_at(int n) const {
  if (std::abs(n) > n_max()) return 0.0;
  return n >= 0 ? outer[n] : std::conj(outer[-n]);
}

FourierBoundary constant_boundary(double inner, double outer, int n_max) {
  if (n_max < 0) throw Error(ErrorKind::InvalidArgument, "negative truncation order");
  FourierBoundary b;
  b.inner.assign(n_max + 1, 0.0);
  b.outer.assign(n_max + 1, 0.0);
  b.inner[0] = inner;
  b.outer[0] = outer;
  return b;
}

void validate(const FourierBoundary& boundary) {
  if (boundary.inner.empty() || boundary.inner.size() != boundary.outer.size()) {
    throw Error(ErrorKind::InvalidArgument, "inner and outer traces need the same nonnegative truncation order");
  }
  if (boundary.inner[0].imag() != 0.0 || boundary.outer[0].imag() != 0.0) {
    throw Error(ErrorKind::InvalidArgument, "mode 0 must be real");
  }
  for (std::size_t n = 0; n < boundary.inner.size(); ++n) {
    if (!finite(boundary.inner[n]) || !finite(boundary.outer[n])) {
      throw Error(ErrorKind::InvalidArgument, "non-finite coefficient", static_cast<long>(n));
    }
  }
}

cd ModeProfile::value(double p) const {
  switch (basis) {
    case ModeBasis::Affine: return c1 * p + c2;
    case ModeBasis::CoshSinh: return c1 * std::cosh(n * p) + c2 * std::sinh(n * p);
    case ModeBasis::Exponential: return c1 * std::exp(n * (p - C)) + c2 * std::exp(-n * (p + C));
  }
  return 0.0;
}

cd ModeProfile::derivative(double p) const {
  switch (basis) {
    case ModeBasis::Affine: return c1;
    case ModeBasis::CoshSinh: return double(n) * (c1 * std::sinh(n * p) + c2 * std::cosh(n * p));
    case ModeBasis::Exponential: return double(n) * (c1 * std::exp(n * (p - C)) - c2 * std::exp(-n * (p + C)));
  }
  return 0.0;
}

cd ModeProfile::second_derivative(double p) const {
  if (basis == ModeBasis::Affine) return 0.0;
  return double(n) * double(n) * value(p);
}

double HarmonicExtension::value(double p, double q) const {
  double t = 0.0;
  for (const auto& m : modes) {
    const cd f = m.value(p);
    t += m.n == 0 ? f.real() : 2.0 * (f * std::polar(1.0, m.n * q)).real();
  }
  return t;
}

double HarmonicExtension::dp(double p, double q) const {
  double t = 0.0;
  for (const auto& m : modes) {
    const cd f = m.derivative(p);
    t += m.n == 0 ? f.real() : 2.0 * (f * std::polar(1.0, m.n * q)).real();
  }
  return t;
}

HarmonicExtension harmonic_extend(const FlatAnnulus& annulus, const FourierBoundary& boundary) {
  make_annulus(annulus.C);
  validate(boundary);
  HarmonicExtension h;
  h.annulus = annulus;
  for (int n = 0; n <= boundary.n_max(); ++n) {
    h.modes.push_back(solve_mode(n, annulus.C, boundary.inner[n], boundary.outer[n]));
  }
  return h;
}

double obstruction_integral(const FlatAnnulus& annulus, const FourierBoundary& boundary) {
  make_annulus(annulus.C);
  validate(boundary);
  return std::numbers::pi / annulus.C * (boundary.inner[0].real() - boundary.outer[0].real());
}

// dt o j (d/dq) = -dt/dp, trapezoid rule in q.
double obstruction_quadrature(const HarmonicExtension& extension, int samples) {
  const int N = extension.modes.empty() ? 0 : extension.modes.back().n;
  if (samples <= 0) samples = 4 * N + 8;
  const double h = 2.0 * std::numbers::pi / samples;
  double sum = 0.0;
  for (int k = 0; k < samples; ++k) sum += -extension.dp(0.0, k * h);
  return sum * h;
}

ZeroResult find_obstruction_zero(const FlatAnnulus& annulus, const BoundaryFamily& family,
                                 std::pair<double, double> bracket, double tol) {
  auto O = [&](double T) { return obstruction_integral(annulus, family(T)); };
  double a = bracket.first, b = bracket.second;
  if (!(tol > 0.0) || !std::isfinite(a) || !std::isfinite(b)) throw Error(ErrorKind::InvalidArgument, "bad bracket or tolerance");
  if (a > b) std::swap(a, b);
  double fa = O(a), fb = O(b);
  ZeroResult r;
  if (std::abs(fa) < tol) {
    r.T = a, r.value = fa;
  } else if (std::abs(fb) < tol) {
    r.T = b, r.value = fb;
  } else {
    if ((fa < 0) == (fb < 0)) throw Error(ErrorKind::NoSignChange, "obstruction has the same sign at both ends of the bracket");
    double T = 0.5 * (a + b), fT = O(T);
    for (int it = 0; it < 400; ++it) {
      ++r.iterations;
      // Secant step, falling back to bisection when it leaves the inner half of the bracket.
      const double s = b - fb * (b - a) / (fb - fa);
      const double lo = a + 0.25 * (b - a), hi = b - 0.25 * (b - a);
      T = (s > lo && s < hi) ? s : 0.5 * (a + b);
      fT = O(T);
      if (std::abs(fT) < tol || b - a <= 4 * std::numeric_limits<double>::epsilon() * (1 + std::abs(T))) break;
      if ((fT < 0) == (fa < 0)) {
        a = T, fa = fT;
      } else {
        b = T, fb = fT;
      }
    }
    r.T = T;
    r.value = fT;
  }
  const double h = 1e-6 * (1.0 + std::abs(r.T));
  r.slope = (O(r.T + h) - O(r.T - h)) / (2 * h);
  return r;
}

FourierBoundary AffineFamily::at(double T) const {
  if (n_max < 0) throw Error(ErrorKind::InvalidArgument, "negative truncation order");
  FourierBoundary b;
  b.inner.assign(n_max + 1, 0.0);
  b.outer.assign(n_max + 1, 0.0);
  auto fill = [&](std::vector<cd>& out, const std::vector<cd>& base, const std::vector<cd>& slope) {
    for (std::size_t n = 0; n < out.size(); ++n) {
      if (n < base.size()) out[n] += base[n];
      if (n < slope.size()) out[n] += T * slope[n];
    }
  };
  fill(b.inner, inner_base, inner_slope);
  fill(b.outer, outer_base, outer_slope);
  return b;
}

ZeroResult solve_family(const AffineFamily& family) {
  return find_obstruction_zero(make_annulus(family.C), [&](double T) { return family.at(T); }, family.bracket, family.tol);
}

}  // namespace lchkit
