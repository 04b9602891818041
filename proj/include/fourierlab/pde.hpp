#pragma once

#include <vector>

#include "fourierlab/numeric.hpp"
#include "fourierlab/periodic.hpp"

namespace fourierlab {

// ---------------------------------------------------------------------------
// Heat equation u_t = u_xx on a rod [0, l] with zero ends

struct HeatProblem {
  double length = 1.0;
  std::vector<double> b;  ///< sine coefficients, b[0] is b_1
  double horizon = 1.0;

  int truncation() const { return static_cast<int>(b.size()); }
  /// Some |b_k| >= 1e-12 among the top max(2, K/8) modes: the datum is not
  /// resolved by the kept modes.
  bool truncation_limited() const;
  void validate() const;
};

/// b_k = (2/l) int_0^l f(x) sin(pi k x / l) dx, k = 1..K, by the periodic
/// trapezoid rule on the odd extension of f to period 2l.
std::vector<double> heat_sine_coefficients(const RealMap& f, double length, int kmax,
                                           int nodes = 0);

HeatProblem heat_problem(const RealMap& datum, double length, double horizon, int kmax);

/// sum_k b_k e^{-pi^2 k^2 t / l^2} sin(pi k x / l); x in [0,l], t in [0,T].
double heat_solve(const HeatProblem& p, double x, double t);

/// int_0^l u(x,t)^2 dx = (l/2) sum b_k^2 e^{-2 pi^2 k^2 t / l^2}.
double heat_energy(const HeatProblem& p, double t);

// ---------------------------------------------------------------------------
// Cellar

struct CellarSpec {
  double diffusivity;     ///< c in cm^2/s
  double period;          ///< P in s
  double amplitude;       ///< surface amplitude A_0 in degrees
  double phase = kPi;     ///< phase shift of the annual wave at the target depth
};

struct CellarDesign {
  double depth;        ///< phase * sqrt(cP/pi); sqrt(pi c P) at phase pi
  double damping;      ///< exp(-sqrt(pi/(cP)) depth)
  double oscillation;  ///< amplitude * damping
};

CellarDesign cellar_design(const CellarSpec& spec);

// ---------------------------------------------------------------------------
// Dirichlet problem on the unit disk. Angles are in turns: theta in [0,1)
// stands for the polar angle 2 pi theta.

class DiskDirichlet {
 public:
  /// Prepares the boundary coefficients for radii up to rmax < 1.
  DiskDirichlet(const PeriodicSignal& boundary, double rmax);

  double operator()(double r, double theta) const;
  double at_point(double x, double y) const;
  int terms() const { return table_.kmax(); }

 private:
  double rmax_;
  CoefficientTable table_;
};

/// Terms kept for radius r: r^k < 1e-16.
int disk_cutoff(double r);

/// sum r^{|k|} f_k e^{2 pi i k theta}.
double disk_dirichlet(const PeriodicSignal& boundary, double r, double theta);

/// (1/M) sum_j f(y_j) P(r, theta - y_j).
double disk_poisson_integral(const PeriodicSignal& boundary, double r, double theta,
                             int nodes = 4096);

// ---------------------------------------------------------------------------
// Unit square with u = 1 on the top side and 0 elsewhere

/// (4/pi) sum_{k<K} sinh((2k+1) pi y)/sinh((2k+1) pi) sin((2k+1) pi x) / (2k+1)
/// for interior points.
double square_dirichlet(double x, double y, int kmax);

struct CornerSample {
  double u;
  double angular;   ///< 2 theta / pi
  double residual;  ///< u - angular
};

/// Value at x = r sin(theta), y = 1 - r cos(theta) near the corner (0,1).
/// kmax = 0 chooses enough terms for the series to settle at that depth.
CornerSample corner_asymptotic(double r, double theta, int kmax = 0);

// ---------------------------------------------------------------------------
// Clamped circular membrane

struct MembraneMode {
  double elasticity;
  double lambda_zero;  ///< positive zero of J_0

  void validate() const;
};

/// J_0(lambda r) cos(sqrt(c) lambda t), r in [0,1].
double membrane_mode(const MembraneMode& mode, double r, double t);

}  // namespace fourierlab
