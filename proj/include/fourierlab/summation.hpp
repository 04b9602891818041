#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "fourierlab/periodic.hpp"

namespace fourierlab {

/// S_N(x) = sum_{|k|<=N} c_k e^{2 pi i k x}. Requires 0 <= N <= kmax. For
/// real-signal tables the imaginary residue must stay below 1e-12 (relative
/// to sum |c_k|), otherwise NumericalError.
double partial_sum(const CoefficientTable& table, int n, double x);

/// sigma_N(x) = sum_{|k|<=N-1} (1 - |k|/N) c_k e^{2 pi i k x}; 1 <= N <= kmax + 1.
double cesaro_mean(const CoefficientTable& table, int n, double x);

/// A_r(x) = sum r^{|k|} c_k e^{2 pi i k x}, truncated where r^k < 1e-16 or at kmax.
double abel_mean(const CoefficientTable& table, double r, double x);

/// Number of terms abel_mean keeps for radius r (before the kmax cap).
int abel_cutoff(double r);

/// -i sum_{|k|<=N} sign(k) c_k e^{2 pi i k x}.
double conjugate_sum(const CoefficientTable& table, int n, double x);

enum class SummationMethod { partial, cesaro, abel };

std::string_view method_name(SummationMethod method);
SummationMethod parse_method(std::string_view name);

struct SummationReport {
  SummationMethod method;
  std::vector<double> orders;  ///< N for partial/cesaro, r for abel
  std::vector<double> sup_error;
  std::vector<double> l2_error;
};

/// Sup and L2 errors of the chosen means against the signal on the 4096-point
/// grid of one period. `window` = [a,b] restricts the grid (unit coordinates).
SummationReport error_norms(const PeriodicSignal& signal, SummationMethod method,
                            const std::vector<double>& orders,
                            std::optional<std::pair<double, double>> window = std::nullopt);

struct GibbsReport {
  double jump_location;
  double jump_size;
  double measured_overshoot;
  double reference_overshoot;
  double probe_value;
};

/// Overshoot of S_N next to the jump with index `jump`: the largest excess
/// of S_N over f on 10^4 probes in (x0, x0 + 5/(2N)) for an upward jump, or
/// in (x0 - 5/(2N), x0) for a downward one. N >= 50.
GibbsReport gibbs_measure(const WaveformCatalogEntry& entry, int n, std::size_t jump = 0);

struct GibbsConstants {
  double si_pi;   ///< int_0^pi sin(t)/t dt
  double G;       ///< (2/pi) si_pi
  double lambda;  ///< si_pi/pi - 1/2
};

GibbsConstants gibbs_constants();

/// Si(x) = int_0^x sin(t)/t dt by adaptive Simpson to 1e-14.
double sine_integral(double x);

/// Coefficients of the even period-1 signal equal to
/// sum_{l=1}^{levels} l^{-2} sin((2^{l^3} + 1) pi x) on [0, 1/2].
CoefficientTable fejer_example_coefficients(int levels, int kmax);

}  // namespace fourierlab
