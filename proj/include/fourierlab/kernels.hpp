#pragma once

#include "fourierlab/numeric.hpp"
#include "fourierlab/periodic.hpp"

namespace fourierlab {

enum class KernelKind { dirichlet, fejer, poisson, conjugate_poisson, gauss_weierstrass };

/// Kernel family plus its order N (Dirichlet, Fejer), radius r (Poisson
/// pair) or width eps (Gauss-Weierstrass).
struct KernelSpec {
  KernelKind kind = KernelKind::dirichlet;
  int order = 0;
  double param = 0.0;

  static KernelSpec dirichlet(int n);
  static KernelSpec fejer(int n);
  static KernelSpec poisson(double r);
  static KernelSpec conjugate_poisson(double r);
  static KernelSpec gauss_weierstrass(double eps);

  /// Throws InvalidArgument unless N >= 0 (Dirichlet), N >= 1 (Fejer),
  /// 0 <= r < 1, or eps > 0.
  void validate() const;
};

/// Closed-form kernel value on the period-1 circle. Near integers, where
/// sin(pi x) vanishes, the Dirichlet and Fejer kernels switch to their
/// exponential sums.
double kernel_eval(const KernelSpec& spec, double x);

/// The Fourier multiplier of the kernel: its k-th coefficient.
cplx kernel_multiplier(const KernelSpec& spec, long k);

/// G(x, eps) = e^{-x^2/eps} / sqrt(pi eps) on the line.
double gauss_weierstrass_line(double x, double eps);

/// Number of lattice translates kept on each side by the periodized kernel.
int gauss_weierstrass_terms(double eps);

/// The kernel as a period-1 signal.
PeriodicSignal kernel_signal(const KernelSpec& spec);

/// (f * g)(x_j) = (1/M) sum_l f(x_j - y_l) g(y_l) on the M-point grid; the
/// result is grid backed. Both factors must have period 1 and M >= 16.
PeriodicSignal periodic_convolution(const PeriodicSignal& f, const PeriodicSignal& g, int nodes);

}  // namespace fourierlab
