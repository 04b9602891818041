#include "fourierlab/kernels.hpp"

#include <cmath>

#include "fourierlab/error.hpp"
#include "fourierlab/parallel.hpp"

namespace fourierlab {

KernelSpec KernelSpec::dirichlet(int n) { return {KernelKind::dirichlet, n, 0.0}; }
KernelSpec KernelSpec::fejer(int n) { return {KernelKind::fejer, n, 0.0}; }
KernelSpec KernelSpec::poisson(double r) { return {KernelKind::poisson, 0, r}; }
KernelSpec KernelSpec::conjugate_poisson(double r) { return {KernelKind::conjugate_poisson, 0, r}; }
KernelSpec KernelSpec::gauss_weierstrass(double eps) { return {KernelKind::gauss_weierstrass, 0, eps}; }

void KernelSpec::validate() const {
  switch (kind) {
    case KernelKind::dirichlet:
      require(order >= 0, "dirichlet kernel: order must be >= 0");
      break;
    case KernelKind::fejer:
      require(order >= 1, "fejer kernel: order must be >= 1");
      break;
    case KernelKind::poisson:
    case KernelKind::conjugate_poisson:
      require(std::isfinite(param) && param >= 0.0 && param < 1.0,
              "poisson kernel: radius must lie in [0,1)");
      break;
    case KernelKind::gauss_weierstrass:
      require(std::isfinite(param) && param > 0.0, "gauss-weierstrass kernel: eps must be > 0");
      break;
  }
}

namespace {

constexpr double kSingularGuard = 1e-9;

// sum_{|k|<=n} w_k e^{2 pi i k u} for an even real weight.
template <class Weight>
double even_cosine_sum(int n, double u, Weight w) {
  CompensatedSum sum;
  sum.add(w(0));
  for (int k = 1; k <= n; ++k) sum.add(2.0 * w(k) * std::cos(kTwoPi * frac_part(k * u)));
  return sum.value();
}

}  // namespace

double kernel_eval(const KernelSpec& spec, double x) {
  spec.validate();
  const double u = frac_part(x);
  const double s = std::sin(kPi * u);
  switch (spec.kind) {
    case KernelKind::dirichlet: {
      const int n = spec.order;
      if (std::abs(s) < kSingularGuard) return even_cosine_sum(n, u, [](int) { return 1.0; });
      return std::sin((2.0 * n + 1.0) * kPi * u) / s;
    }
    case KernelKind::fejer: {
      const int n = spec.order;
      if (std::abs(s) < kSingularGuard) {
        return even_cosine_sum(n - 1, u, [n](int k) { return 1.0 - static_cast<double>(k) / n; });
      }
      const double q = std::sin(n * kPi * u) / s;
      return q * q / n;
    }
    case KernelKind::poisson: {
      const double r = spec.param;
      return (1.0 - r * r) / ((1.0 - r) * (1.0 - r) + 4.0 * r * s * s);
    }
    case KernelKind::conjugate_poisson: {
      const double r = spec.param;
      return 2.0 * r * std::sin(kTwoPi * u) / ((1.0 - r) * (1.0 - r) + 4.0 * r * s * s);
    }
    case KernelKind::gauss_weierstrass: {
      const double eps = spec.param;
      const double c = u > 0.5 ? u - 1.0 : u;
      const int terms = gauss_weierstrass_terms(eps);
      CompensatedSum sum;
      for (int k = -terms; k <= terms; ++k) sum.add(gauss_weierstrass_line(c + k, eps));
      return sum.value();
    }
  }
  return 0.0;
}

cplx kernel_multiplier(const KernelSpec& spec, long k) {
  spec.validate();
  const long a = std::labs(k);
  switch (spec.kind) {
    case KernelKind::dirichlet:
      return a <= spec.order ? 1.0 : 0.0;
    case KernelKind::fejer:
      return a < spec.order ? 1.0 - static_cast<double>(a) / spec.order : 0.0;
    case KernelKind::poisson:
      return std::pow(spec.param, static_cast<double>(a));
    case KernelKind::conjugate_poisson: {
      const double sign = k > 0 ? 1.0 : (k < 0 ? -1.0 : 0.0);
      return cplx{0.0, -sign * std::pow(spec.param, static_cast<double>(a))};
    }
    case KernelKind::gauss_weierstrass:
      return std::exp(-kPi * kPi * static_cast<double>(k) * static_cast<double>(k) * spec.param);
  }
  return 0.0;
}

double gauss_weierstrass_line(double x, double eps) {
  require(eps > 0.0, "gauss-weierstrass kernel: eps must be > 0");
  return std::exp(-x * x / eps) / std::sqrt(kPi * eps);
}

int gauss_weierstrass_terms(double eps) {
  return static_cast<int>(std::ceil(6.0 * std::sqrt(eps))) + 3;
}

PeriodicSignal kernel_signal(const KernelSpec& spec) {
  spec.validate();
  return PeriodicSignal::from_unit_map([spec](double u) { return kernel_eval(spec, u); });
}

PeriodicSignal periodic_convolution(const PeriodicSignal& f, const PeriodicSignal& g, int nodes) {
  require(nodes >= 16, "periodic_convolution: need at least 16 nodes");
  require(f.period() == 1.0 && g.period() == 1.0, "periodic_convolution: signals must have period 1");
  const auto m = static_cast<std::size_t>(nodes);
  std::vector<double> fv(m), gv(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double u = static_cast<double>(j) / nodes;
    fv[j] = f.at_unit(u);
    gv[j] = g.at_unit(u);
  }
  std::vector<double> out(m);
  parallel_for(m, [&](std::size_t j) {
    CompensatedSum sum;
    for (std::size_t l = 0; l < m; ++l) sum.add(fv[(j + m - l) % m] * gv[l]);
    out[j] = sum.value() / nodes;
  });
  return PeriodicSignal::from_samples(std::move(out));
}

}  // namespace fourierlab
