#pragma once

#include <complex>
#include <functional>
#include <numbers>
#include <span>
#include <vector>

namespace fourierlab {

using cplx = std::complex<double>;
using RealMap = std::function<double(double)>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// e^{2 pi i m / n} computed from the reduced fraction m mod n, so that equal
/// residues give bit-identical values.
cplx unit_root(long long m, long long n);

/// Neumaier compensated accumulator.
class CompensatedSum {
 public:
  void add(double v);
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Trapezoid rule for a periodic integrand: (period/M) * sum f(a + j*period/M).
/// Spectrally accurate when f is smooth and periodic.
double trapezoid_periodic(const RealMap& f, double a, double period, int nodes);

/// Composite trapezoid over [a,b] with `nodes` intervals (endpoints half weight).
double trapezoid(const RealMap& f, double a, double b, int intervals);

/// Composite Simpson over [a,b]; `intervals` is rounded up to an even count.
double simpson(const RealMap& f, double a, double b, int intervals);

/// Adaptive Simpson with Richardson correction, absolute tolerance `tol`.
double adaptive_simpson(const RealMap& f, double a, double b, double tol, int max_depth = 50);

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Legendre nodes and weights on [-1,1] (Newton on the three-term recurrence).
QuadratureRule gauss_legendre(int n);

/// Composite Gauss-Legendre: `panels` equal panels of an n-point rule.
double gauss_legendre_integrate(const RealMap& f, double a, double b, int n, int panels = 1);

/// Natural cubic spline through uniformly spaced samples on [x0, x0 + h*(n-1)].
class UniformCubicSpline {
 public:
  UniformCubicSpline(double x0, double h, std::vector<double> values);
  double operator()(double x) const;  // clamps x to the sample range

 private:
  double x0_;
  double h_;
  std::vector<double> y_;
  std::vector<double> m_;  // second derivatives at the knots
};

}  // namespace fourierlab
