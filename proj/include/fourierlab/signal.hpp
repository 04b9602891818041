#pragma once

#include <utility>
#include <vector>

#include "fourierlab/periodic.hpp"
#include "fourierlab/transforms.hpp"

namespace fourierlab {

/// Keeps c_k for |k| <= k0 and zeroes the rest.
CoefficientTable lowpass(const CoefficientTable& table, int k0);

/// Keeps c_k iff |c_k| >= alpha0.
CoefficientTable threshold_denoise(const CoefficientTable& table, double alpha0);

/// Multiplies c_k by e^{-pi^2 k^2 eps}: convolution with the periodized
/// Gauss-Weierstrass kernel.
CoefficientTable gauss_weierstrass_smooth(const CoefficientTable& table, double eps);

/// E_N(x) = (i pi / N) sum_{|k|<=N} k c_k e^{2 pi i k x}. Requires 1 <= N <= kmax.
double edge_value(const CoefficientTable& table, int n, double x);
/// Same value from the cosine/sine form: (pi/N) sum k (b_k cos 2pi kx - a_k sin 2pi kx).
double edge_value_trig(const TrigCoefficientTable& trig, int n, double x);

/// (x_j, E_N(x_j)) at x_j = j / grid.
std::vector<std::pair<double, double>> edge_detect(const CoefficientTable& table, int n, int grid);

struct EdgeProfile {
  std::vector<double> locations;  ///< strictly increasing, in [0,1)
  std::vector<double> sizes;      ///< nonzero jump estimates
  int order;
};

/// Local extrema of |E_N| on the grid that exceed `threshold`.
EdgeProfile edge_profile(const CoefficientTable& table, int n, int grid, double threshold);

/// Carrier omega with sidebands omega + k omega_p carrying J_k(eps), |k| <= kmax.
/// Frequencies are in cycles per unit time; omega_p must be nonzero.
HarmonicModel fm_sidebands(double eps, double omega, double omega_p, int kmax);

/// sum_k a_k sin(2 pi f_k t) for a sideband model.
double fm_synthesize(const HarmonicModel& model, double t);

/// sin(2 pi omega t + eps sin(2 pi omega_p t)).
double fm_direct(double eps, double omega, double omega_p, double t);

}  // namespace fourierlab
