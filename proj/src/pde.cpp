#include "fourierlab/pde.hpp"

#include <algorithm>
#include <cmath>

#include "fourierlab/error.hpp"
#include "fourierlab/kernels.hpp"
#include "fourierlab/special.hpp"
#include "fourierlab/transforms.hpp"

namespace fourierlab {

// looks at the top modes, not only b_K: symmetric data have structural zeros
bool HeatProblem::truncation_limited() const {
  const std::size_t window = std::max<std::size_t>(2, b.size() / 8);
  for (std::size_t i = b.size() > window ? b.size() - window : 0; i < b.size(); ++i) {
    if (std::abs(b[i]) >= 1e-12) return true;
  }
  return false;
}

void HeatProblem::validate() const {
  require(std::isfinite(length) && length > 0.0, "heat: length must be positive");
  require(std::isfinite(horizon) && horizon > 0.0, "heat: horizon must be positive");
}

std::vector<double> heat_sine_coefficients(const RealMap& f, double length, int kmax, int nodes) {
  require(std::isfinite(length) && length > 0.0, "heat: length must be positive");
  require(kmax >= 1, "heat: need at least one mode");
  if (nodes == 0) nodes = std::max(8192, 8 * kmax);
  require(nodes >= 4 * (kmax + 1), "heat: too few quadrature nodes");
  // Odd extension g on [0, 2l); b_k = (1/l) int_0^{2l} g(y) sin(pi k y / l) dy.
  std::vector<double> g(nodes);
  for (int j = 0; j < nodes; ++j) {
    const double y = 2.0 * length * j / nodes;
    if (j == 0 || 2 * j == nodes) {
      g[j] = 0.0;
    } else {
      g[j] = y < length ? f(y) : -f(2.0 * length - y);
    }
  }
  std::vector<double> b(kmax);
  for (int k = 1; k <= kmax; ++k) {
    CompensatedSum sum;
    for (int j = 0; j < nodes; ++j) sum.add(g[j] * unit_root(static_cast<long long>(k) * j, nodes).imag());
    b[k - 1] = 2.0 * sum.value() / nodes;
  }
  return b;
}

HeatProblem heat_problem(const RealMap& datum, double length, double horizon, int kmax) {
  HeatProblem p{length, heat_sine_coefficients(datum, length, kmax), horizon};
  p.validate();
  return p;
}

double heat_solve(const HeatProblem& p, double x, double t) {
  p.validate();
  require(x >= 0.0 && x <= p.length, "heat_solve: x outside [0, l]");
  require(t >= 0.0 && t <= p.horizon, "heat_solve: t outside [0, T]");
  const double l = p.length;
  CompensatedSum sum;
  for (int k = 1; k <= p.truncation(); ++k) {
    const double b = p.b[k - 1];
    if (b == 0.0) continue;
    const double decay = std::exp(-kPi * kPi * k * k * t / (l * l));
    sum.add(b * decay * std::sin(kPi * k * x / l));
  }
  return sum.value();
}

double heat_energy(const HeatProblem& p, double t) {
  p.validate();
  require(t >= 0.0, "heat_energy: t must be >= 0");
  const double l = p.length;
  CompensatedSum sum;
  for (int k = 1; k <= p.truncation(); ++k) {
    const double b = p.b[k - 1];
    sum.add(b * b * std::exp(-2.0 * kPi * kPi * k * k * t / (l * l)));
  }
  return 0.5 * l * sum.value();
}

CellarDesign cellar_design(const CellarSpec& s) {
  require(s.diffusivity > 0.0 && s.period > 0.0 && s.amplitude > 0.0,
          "cellar: diffusivity, period and amplitude must be positive");
  require(std::isfinite(s.phase) && s.phase > 0.0, "cellar: phase must be positive");
  const double cp = s.diffusivity * s.period;
  const double depth = s.phase * std::sqrt(cp / kPi);
  const double damping = std::exp(-std::sqrt(kPi / cp) * depth);
  return {depth, damping, s.amplitude * damping};
}

int disk_cutoff(double r) {
  require(std::isfinite(r) && r >= 0.0 && r < 1.0, "disk: radius must lie in [0,1)");
  if (r == 0.0) return 0;
  return static_cast<int>(std::ceil(std::log(1e-16) / std::log(r)));
}

DiskDirichlet::DiskDirichlet(const PeriodicSignal& boundary, double rmax) : rmax_(rmax) {
  const int kmax = disk_cutoff(rmax);
  require(boundary.period() == 1.0, "disk: boundary datum must have period 1");
  if (boundary.catalog_entry() || boundary.coefficients()) {
    table_ = coefficients_of(boundary, kmax);
    return;
  }
  std::size_t m = 1024;
  while (m < 4 * static_cast<std::size_t>(kmax + 1)) m *= 2;
  std::vector<cplx> samples(m);
  for (std::size_t j = 0; j < m; ++j) {
    samples[j] = boundary.at_unit(static_cast<double>(j) / static_cast<double>(m));
  }
  const std::vector<cplx> c = fft_gauss(samples, DftPlan::automatic(m));
  table_ = CoefficientTable::generate(kmax, true, [&](long k) { return c[static_cast<std::size_t>(k)]; });
}

double DiskDirichlet::operator()(double r, double theta) const {
  require(std::isfinite(r) && r >= 0.0 && r <= rmax_, "disk: radius outside the prepared range");
  const int n = std::min(disk_cutoff(r), table_.kmax());
  const double u = frac_part(theta);
  cplx sum = table_[0];
  double rk = 1.0;
  for (long k = 1; k <= n; ++k) {
    rk *= r;
    const double angle = kTwoPi * frac_part(static_cast<double>(k) * u);
    sum += 2.0 * rk * (table_[k] * cplx{std::cos(angle), std::sin(angle)}).real();
  }
  return sum.real();
}

double DiskDirichlet::at_point(double x, double y) const {
  const double r = std::hypot(x, y);
  const double theta = r == 0.0 ? 0.0 : std::atan2(y, x) / kTwoPi;
  return (*this)(r, theta);
}

double disk_dirichlet(const PeriodicSignal& boundary, double r, double theta) {
  return DiskDirichlet(boundary, r)(r, theta);
}

double disk_poisson_integral(const PeriodicSignal& boundary, double r, double theta, int nodes) {
  require(nodes >= 16, "disk: need at least 16 nodes");
  const KernelSpec kernel = KernelSpec::poisson(r);
  kernel.validate();
  CompensatedSum sum;
  for (int j = 0; j < nodes; ++j) {
    const double y = static_cast<double>(j) / nodes;
    sum.add(boundary.at_unit(y) * kernel_eval(kernel, theta - y));
  }
  return sum.value() / nodes;
}

double square_dirichlet(double x, double y, int kmax) {
  require(x > 0.0 && x < 1.0 && y > 0.0 && y < 1.0, "square: point must be interior");
  require(kmax >= 1, "square: need at least one term");
  CompensatedSum sum;
  for (int k = 0; k < kmax; ++k) {
    const double a = (2.0 * k + 1.0) * kPi;
    // sinh(a y)/sinh(a) without overflow.
    const double ratio = std::exp(a * (y - 1.0)) * std::expm1(-2.0 * a * y) / std::expm1(-2.0 * a);
    if (ratio == 0.0) break;
    sum.add(ratio * std::sin(a * x) / (2.0 * k + 1.0));
  }
  return 4.0 / kPi * sum.value();
}

CornerSample corner_asymptotic(double r, double theta, int kmax) {
  require(r > 0.0 && r < 1.0, "corner: radius must lie in (0,1)");
  require(theta > 0.0 && theta < kPi / 2.0, "corner: angle must lie in (0, pi/2)");
  const double x = r * std::sin(theta);
  const double y = 1.0 - r * std::cos(theta);
  if (kmax == 0) {
    // Terms decay like e^{-(2k+1) pi r cos(theta)}; stop near e^{-40}.
    kmax = static_cast<int>(std::ceil(40.0 / (kTwoPi * r * std::cos(theta)))) + 8;
  }
  const double u = square_dirichlet(x, y, kmax);
  const double angular = 2.0 * theta / kPi;
  return {u, angular, u - angular};
}

void MembraneMode::validate() const {
  require(std::isfinite(elasticity) && elasticity > 0.0, "membrane: elasticity must be positive");
  require(std::isfinite(lambda_zero) && lambda_zero > 0.0, "membrane: lambda must be positive");
  require(std::abs(bessel_j(0, lambda_zero)) < 1e-10, "membrane: lambda is not a zero of J_0");
}

double membrane_mode(const MembraneMode& mode, double r, double t) {
  mode.validate();
  require(r >= 0.0 && r <= 1.0, "membrane: r must lie in [0,1]");
  return bessel_j(0, mode.lambda_zero * r) * std::cos(std::sqrt(mode.elasticity) * mode.lambda_zero * t);
}

}  // namespace fourierlab
