#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "fourierlab/numeric.hpp"

namespace fourierlab {

/// Complex multiplications by a factor other than exactly 1. Counters are
/// passed per call; nothing is accumulated globally.
struct OpCounter {
  std::uint64_t complex_mults = 0;
};

/// Factorization N = N_1 N_2 ... with per-level twiddle tables.
class DftPlan {
 public:
  /// Repeatedly strips the smallest prime factor. Prime N gives the trivial plan (N).
  static DftPlan automatic(std::size_t n);
  /// Explicit factors; their product must equal N and each must be >= 2,
  /// except the single-factor plan (N).
  DftPlan(std::size_t n, std::vector<std::size_t> factors);

  std::size_t size() const { return n_; }
  const std::vector<std::size_t>& factors() const { return factors_; }

 private:
  friend std::vector<cplx> fft_gauss(const std::vector<cplx>&, const DftPlan&, OpCounter*);

  std::size_t n_;
  std::vector<std::size_t> factors_;
  std::vector<std::size_t> level_size_;
  std::vector<std::vector<cplx>> roots_;  // roots_[l][m] = e^{-2 pi i m / level_size_[l]}
};

/// C_h = (1/N) sum_j f_j e^{-2 pi i h j / N} by the defining double sum.
std::vector<cplx> dft_forward(const std::vector<cplx>& samples, OpCounter* ops = nullptr);

/// Same transform by the nested two-stage sums, recursing over the plan factors.
std::vector<cplx> fft_gauss(const std::vector<cplx>& samples, const DftPlan& plan,
                            OpCounter* ops = nullptr);

/// f_j = sum_h C_h e^{2 pi i h j / N}.
std::vector<cplx> dft_inverse(const std::vector<cplx>& coeffs);

/// Modes h(t) = sum_k a_k e^{i w_k t} with strictly increasing frequencies.
struct HarmonicModel {
  std::vector<double> frequencies;
  std::vector<cplx> amplitudes;
  /// Leakage bound per mode; empty when not applicable.
  std::vector<double> error_bounds;
};

/// a_m = (1/T) int_0^T h(t) e^{-i w_m t} dt by the trapezoid rule. nodes = 0
/// picks 64 nodes per shortest period. Frequencies are sorted; duplicates rejected.
/// Each mode carries the bound sum_{k != m} 2|a_k| / (T |w_k - w_m|).
HarmonicModel tide_extract(const std::function<cplx(double)>& h, std::vector<double> frequencies,
                           double horizon, long nodes = 0);

}  // namespace fourierlab
