#include "fourierlab/summation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fourierlab/error.hpp"
#include "fourierlab/parallel.hpp"

namespace fourierlab {

namespace {

// sum_{|k|<=n} w(k) c_k e^{2 pi i k x}, checked for reality.
template <class Weight>
double weighted_sum(const CoefficientTable& table, int n, double x, Weight w) {
  const double u = frac_part(x);
  cplx sum = w(0) * table[0];
  double scale = std::abs(sum);
  for (long k = 1; k <= n; ++k) {
    const double angle = kTwoPi * frac_part(static_cast<double>(k) * u);
    const cplx e{std::cos(angle), std::sin(angle)};
    const cplx pos = w(k) * table[k];
    const cplx neg = w(-k) * table[-k];
    sum += pos * e + neg * std::conj(e);
    scale += std::abs(pos) + std::abs(neg);
  }
  if (std::abs(sum.imag()) > 1e-12 * std::max(scale, 1.0)) {
    throw NumericalError("summation: imaginary residue " + std::to_string(sum.imag()) +
                         " in a sum that should be real");
  }
  return sum.real();
}

}  // namespace

double partial_sum(const CoefficientTable& table, int n, double x) {
  require(n >= 0 && n <= table.kmax(), "partial_sum: need 0 <= N <= kmax");
  return weighted_sum(table, n, x, [](long) { return 1.0; });
}

double cesaro_mean(const CoefficientTable& table, int n, double x) {
  require(n >= 1 && n <= table.kmax() + 1, "cesaro_mean: need 1 <= N <= kmax + 1");
  const double nd = n;
  return weighted_sum(table, n - 1, x, [nd](long k) { return 1.0 - std::abs(k) / nd; });
}

int abel_cutoff(double r) {
  require(std::isfinite(r) && r >= 0.0 && r < 1.0, "abel_mean: radius must lie in [0,1)");
  if (r == 0.0) return 0;
  return static_cast<int>(std::ceil(std::log(1e-16) / std::log(r)));
}

double abel_mean(const CoefficientTable& table, double r, double x) {
  const int n = std::min(abel_cutoff(r), table.kmax());
  return weighted_sum(table, n, x, [r](long k) { return std::pow(r, std::abs(k)); });
}

double conjugate_sum(const CoefficientTable& table, int n, double x) {
  require(n >= 0 && n <= table.kmax(), "conjugate_sum: need 0 <= N <= kmax");
  return weighted_sum(table, n, x, [](long k) {
    return cplx{0.0, k > 0 ? -1.0 : (k < 0 ? 1.0 : 0.0)};
  });
}

std::string_view method_name(SummationMethod method) {
  switch (method) {
    case SummationMethod::partial:
      return "partial";
    case SummationMethod::cesaro:
      return "cesaro";
    case SummationMethod::abel:
      return "abel";
  }
  return "unknown";
}

SummationMethod parse_method(std::string_view name) {
  if (name == "partial") return SummationMethod::partial;
  if (name == "cesaro" || name == "fejer") return SummationMethod::cesaro;
  if (name == "abel" || name == "poisson") return SummationMethod::abel;
  throw InvalidArgument("unknown summation method '" + std::string(name) + "'");
}

SummationReport error_norms(const PeriodicSignal& signal, SummationMethod method,
                            const std::vector<double>& orders,
                            std::optional<std::pair<double, double>> window) {
  require(!orders.empty(), "error_norms: no orders given");
  constexpr int kGrid = 4096;
  int kmax = 0;
  for (double o : orders) {
    if (method == SummationMethod::abel) {
      kmax = std::max(kmax, abel_cutoff(o));
    } else {
      require(o >= 0 && o == std::floor(o), "error_norms: orders must be integers");
      kmax = std::max(kmax, static_cast<int>(o));
    }
  }
  const CoefficientTable table = coefficients_of(signal, kmax);

  std::vector<double> xs;
  for (int j = 0; j < kGrid; ++j) {
    const double u = static_cast<double>(j) / kGrid;
    if (!window || (u >= window->first && u <= window->second)) xs.push_back(u);
  }
  require(!xs.empty(), "error_norms: empty window");

  SummationReport report{method, orders, {}, {}};
  for (double o : orders) {
    std::vector<double> err(xs.size());
    parallel_for(xs.size(), [&](std::size_t i) {
      const double x = xs[i];
      double s = 0.0;
      switch (method) {
        case SummationMethod::partial:
          s = partial_sum(table, static_cast<int>(o), x);
          break;
        case SummationMethod::cesaro:
          s = cesaro_mean(table, static_cast<int>(o), x);
          break;
        case SummationMethod::abel:
          s = abel_mean(table, o, x);
          break;
      }
      err[i] = s - signal.at_unit(x);
    });
    double sup = 0.0;
    CompensatedSum sq;
    for (double e : err) {
      sup = std::max(sup, std::abs(e));
      sq.add(e * e);
    }
    report.sup_error.push_back(sup);
    report.l2_error.push_back(std::sqrt(sq.value() / static_cast<double>(err.size())));
  }
  return report;
}

double sine_integral(double x) {
  return adaptive_simpson(
      [](double t) { return t == 0.0 ? 1.0 : std::sin(t) / t; }, 0.0, x, 1e-14);
}

GibbsConstants gibbs_constants() {
  const double si = sine_integral(kPi);
  return {si, 2.0 * si / kPi, si / kPi - 0.5};
}

GibbsReport gibbs_measure(const WaveformCatalogEntry& entry, int n, std::size_t jump) {
  require(!entry.continuous(), "gibbs_measure: waveform has no jump");
  require(jump < entry.jumps().size(), "gibbs_measure: jump index out of range");
  require(n >= 50, "gibbs_measure: need N >= 50");
  const Jump j = entry.jumps()[jump];
  const CoefficientTable table = coefficient_table(entry, n);
  const double width = 5.0 / (2.0 * n);
  const double start = j.size > 0 ? j.location : j.location - width;

  constexpr int kProbes = 10000;
  std::vector<double> excess(kProbes);
  parallel_for(kProbes, [&](std::size_t i) {
    const double x = start + width * static_cast<double>(i + 1) / (kProbes + 1);
    excess[i] = partial_sum(table, n, x) - entry.value(frac_part(x));
  });
  const double measured = *std::max_element(excess.begin(), excess.end());

  const double sigma = std::abs(j.size);
  const GibbsConstants g = gibbs_constants();
  return {j.location, j.size, measured, sigma * g.si_pi / kPi - sigma / 2.0,
          partial_sum(table, n, j.location + 1.0 / (2.0 * n))};
}

CoefficientTable fejer_example_coefficients(int levels, int kmax) {
  require(levels >= 1 && levels <= 2, "fejer example: only levels 1..2 are representable");
  return CoefficientTable::generate(kmax, true, [levels](long k) {
    double a = 0.0;
    for (int l = 1; l <= levels; ++l) {
      const double m = std::ldexp(1.0, l * l * l) + 1.0;
      const double kk = 2.0 * static_cast<double>(k);
      a += (2.0 / (kPi * l * l)) * (1.0 / (m - kk) + 1.0 / (m + kk));
    }
    return cplx{0.5 * a, 0.0};
  });
}

}  // namespace fourierlab
