#include "fourierlab/signal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "fourierlab/error.hpp"
#include "fourierlab/kernels.hpp"
#include "fourierlab/parallel.hpp"
#include "fourierlab/special.hpp"

namespace fourierlab {

CoefficientTable lowpass(const CoefficientTable& table, int k0) {
  require(k0 >= 0, "lowpass: cutoff must be >= 0");
  return table.map([k0](long k, cplx c) { return std::labs(k) <= k0 ? c : cplx{}; }, true);
}

CoefficientTable threshold_denoise(const CoefficientTable& table, double alpha0) {
  require(std::isfinite(alpha0) && alpha0 >= 0.0, "threshold_denoise: alpha0 must be >= 0");
  return table.map([alpha0](long, cplx c) { return std::abs(c) >= alpha0 ? c : cplx{}; }, true);
}

CoefficientTable gauss_weierstrass_smooth(const CoefficientTable& table, double eps) {
  const KernelSpec spec = KernelSpec::gauss_weierstrass(eps);
  spec.validate();
  return table.map([&spec](long k, cplx c) { return c * kernel_multiplier(spec, k); }, true);
}

double edge_value(const CoefficientTable& table, int n, double x) {
  require(n >= 1 && n <= table.kmax(), "edge_detect: need 1 <= N <= kmax");
  const double u = frac_part(x);
  cplx sum{};
  double scale = 0.0;
  for (long k = 1; k <= n; ++k) {
    const double angle = kTwoPi * frac_part(static_cast<double>(k) * u);
    const cplx e{std::cos(angle), std::sin(angle)};
    const double kd = static_cast<double>(k);
    sum += kd * (table[k] * e - table[-k] * std::conj(e));
    scale += kd * (std::abs(table[k]) + std::abs(table[-k]));
  }
  sum *= cplx{0.0, kPi / n};
  scale *= kPi / n;
  if (table.real_signal() && std::abs(sum.imag()) > 1e-12 * std::max(scale, 1.0)) {
    throw NumericalError("edge_detect: imaginary residue on a real-signal table");
  }
  return sum.real();
}

double edge_value_trig(const TrigCoefficientTable& trig, int n, double x) {
  require(n >= 1 && n <= trig.kmax(), "edge_detect: need 1 <= N <= kmax");
  const double u = frac_part(x);
  CompensatedSum sum;
  for (int k = 1; k <= n; ++k) {
    const double angle = kTwoPi * frac_part(static_cast<double>(k) * u);
    sum.add(k * (trig.b[k] * std::cos(angle) - trig.a[k] * std::sin(angle)));
  }
  return kPi / n * sum.value();
}

std::vector<std::pair<double, double>> edge_detect(const CoefficientTable& table, int n, int grid) {
  require(grid >= 1, "edge_detect: grid must be >= 1");
  std::vector<std::pair<double, double>> out(grid);
  parallel_for(static_cast<std::size_t>(grid), [&](std::size_t j) {
    const double x = static_cast<double>(j) / grid;
    out[j] = {x, edge_value(table, n, x)};
  });
  return out;
}

EdgeProfile edge_profile(const CoefficientTable& table, int n, int grid, double threshold) {
  require(grid >= 3, "edge_profile: grid must be >= 3");
  require(threshold > 0.0, "edge_profile: threshold must be positive");
  const auto values = edge_detect(table, n, grid);
  EdgeProfile profile{{}, {}, n};
  for (int j = 0; j < grid; ++j) {
    const double here = std::abs(values[j].second);
    const double left = std::abs(values[(j + grid - 1) % grid].second);
    const double right = std::abs(values[(j + 1) % grid].second);
    if (here >= threshold && here > left && here >= right) {
      profile.locations.push_back(values[j].first);
      profile.sizes.push_back(values[j].second);
    }
  }
  return profile;
}

HarmonicModel fm_sidebands(double eps, double omega, double omega_p, int kmax) {
  require(std::isfinite(eps) && eps >= 0.0, "fm_sidebands: eps must be >= 0");
  require(std::isfinite(omega) && std::isfinite(omega_p), "fm_sidebands: non-finite frequency");
  require(omega_p != 0.0, "fm_sidebands: modulating frequency must be nonzero");
  require(kmax >= 0, "fm_sidebands: kmax must be >= 0");
  std::vector<int> ks(2 * kmax + 1);
  std::iota(ks.begin(), ks.end(), -kmax);
  if (omega_p < 0.0) std::reverse(ks.begin(), ks.end());
  HarmonicModel model;
  for (int k : ks) {
    model.frequencies.push_back(omega + k * omega_p);
    model.amplitudes.emplace_back(bessel_j(k, eps), 0.0);
  }
  return model;
}

double fm_synthesize(const HarmonicModel& model, double t) {
  CompensatedSum sum;
  for (std::size_t i = 0; i < model.frequencies.size(); ++i) {
    sum.add(model.amplitudes[i].real() * std::sin(kTwoPi * model.frequencies[i] * t));
  }
  return sum.value();
}

double fm_direct(double eps, double omega, double omega_p, double t) {
  return std::sin(kTwoPi * omega * t + eps * std::sin(kTwoPi * omega_p * t));
}

}  // namespace fourierlab
