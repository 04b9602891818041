#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fourierlab/numeric.hpp"

namespace fourierlab {

/// x - floor(x); negative inputs land in [0,1) as well ({-0.1} = 0.9).
double frac_part(double x);

// ---------------------------------------------------------------------------
// Coefficient tables
// ---------------------------------------------------------------------------

/// Dense complex Fourier coefficients c_k for |k| <= kmax.
///
/// A table flagged `real_signal` always satisfies c_{-k} == conj(c_k) bit for
/// bit; the constructor symmetrizes inputs that agree to 1e-12 and rejects the
/// rest.
class CoefficientTable {
 public:
  CoefficientTable() = default;
  CoefficientTable(int kmax, std::vector<cplx> values, bool real_signal);

  static CoefficientTable zeros(int kmax, bool real_signal = true);

  /// Builds a table from a generator. For real signals only k >= 0 is queried
  /// and the negative half is mirrored.
  static CoefficientTable generate(int kmax, bool real_signal,
                                   const std::function<cplx(long)>& coefficient);

  int kmax() const { return kmax_; }
  bool real_signal() const { return real_; }

  /// c_k, or 0 when |k| > kmax.
  cplx operator[](long k) const;

  /// Values ordered k = -kmax .. kmax.
  std::span<const cplx> values() const { return values_; }

  CoefficientTable truncated(int kmax) const;

  /// Multiplies c_k by multiplier(k). Reality is kept when the multiplier
  /// satisfies m(-k) = conj(m(k)) and `keeps_reality` is set.
  CoefficientTable map(const std::function<cplx(long, cplx)>& fn, bool keeps_reality) const;

 private:
  int kmax_ = 0;
  bool real_ = true;
  std::vector<cplx> values_{cplx{}};
};

/// Cosine/sine form: f ~ a_0/2 + sum a_k cos(2 pi k x) + b_k sin(2 pi k x).
/// b[0] is unused and kept at zero so both vectors are indexed by k.
struct TrigCoefficientTable {
  std::vector<double> a;
  std::vector<double> b;

  int kmax() const { return static_cast<int>(a.size()) - 1; }
};

/// a_k = 2 Re c_k, b_k = -2 Im c_k. Requires a real-signal table.
TrigCoefficientTable to_trig(const CoefficientTable& table);
CoefficientTable from_trig(const TrigCoefficientTable& trig);

/// sum_{|k|<=n} c_k e^{2 pi i k x} with no reality assumption.
cplx synthesize(const CoefficientTable& table, int n, double x);

// ---------------------------------------------------------------------------
// Waveform catalog
// ---------------------------------------------------------------------------

enum class Waveform { square, sawtooth, triangular, parabola_x1mx, sine, cosine, constant };

/// A jump discontinuity: f(location+) - f(location-) = size.
struct Jump {
  double location;
  double size;
};

/// Period-1 reference waveforms with closed-form coefficients.
class WaveformCatalogEntry {
 public:
  explicit WaveformCatalogEntry(Waveform id);

  /// Looks up "square", "sawtooth", ...; throws InvalidArgument otherwise.
  static WaveformCatalogEntry parse(std::string_view name);
  static std::vector<std::string_view> names();

  Waveform id() const { return id_; }
  std::string_view name() const;

  /// Value on the unit period, u in [0,1). Jumps take the right-hand value.
  double value(double u) const;
  cplx coefficient(long k) const;
  const std::vector<Jump>& jumps() const { return jumps_; }
  bool continuous() const { return jumps_.empty(); }

 private:
  Waveform id_;
  std::vector<Jump> jumps_;
};

/// Exact coefficient from the catalog closed form.
cplx coeff_exact(const WaveformCatalogEntry& entry, long k);

CoefficientTable coefficient_table(const WaveformCatalogEntry& entry, int kmax);

// ---------------------------------------------------------------------------
// Periodic signals
// ---------------------------------------------------------------------------

/// Real map with a declared period. All backings evaluate through the unit
/// coordinate u = frac(x / period).
class PeriodicSignal {
 public:
  enum class Backing { catalog, grid, coefficients, function };

  static PeriodicSignal from_catalog(const WaveformCatalogEntry& entry, double period = 1.0);
  static PeriodicSignal from_catalog(Waveform id, double period = 1.0);
  /// Uniform samples f(j * period / M), j = 0..M-1; linear interpolation between nodes.
  static PeriodicSignal from_samples(std::vector<double> samples, double period = 1.0);
  static PeriodicSignal from_coefficients(CoefficientTable table, double period = 1.0);
  /// `unit_map` is evaluated on [0,1).
  static PeriodicSignal from_unit_map(RealMap unit_map, double period = 1.0);

  double period() const { return period_; }
  Backing backing() const;

  double operator()(double x) const { return at_unit(frac_part(x / period_)); }
  double at_unit(double u) const;

  const WaveformCatalogEntry* catalog_entry() const;
  const CoefficientTable* coefficients() const;
  std::span<const double> samples() const;
  /// Grid sample with index wrap; grid backing only.
  double sample(long j) const;

  /// Same shape on a new period (rescale_period).
  PeriodicSignal with_period(double period) const;

 private:
  struct Grid {
    std::vector<double> samples;
  };
  using Store = std::variant<WaveformCatalogEntry, Grid, CoefficientTable, RealMap>;

  PeriodicSignal(double period, std::shared_ptr<const Store> store);

  double period_ = 1.0;
  std::shared_ptr<const Store> store_;
};

/// Periodic extension of f given on [0, period).
PeriodicSignal periodic_extend(RealMap f, double period);

/// g(x) = f(x * P / new_period); coefficients are unchanged index by index.
PeriodicSignal rescale_period(const PeriodicSignal& signal, double new_period);

/// Trapezoid estimate of (1/P) int_0^P f(x) e^{-2 pi i k x / P} dx on M nodes.
/// Requires M >= max(16, 4(|k|+1)).
cplx coeff_numeric(const PeriodicSignal& signal, long k, int nodes);

/// All coefficients up to kmax by the same rule (M defaults to max(16, 4(kmax+1), 1024)).
CoefficientTable coefficient_table(const PeriodicSignal& signal, int kmax, int nodes = 0);

/// Best available table for a signal: closed forms for catalog signals, the
/// stored table for coefficient signals, quadrature otherwise.
CoefficientTable coefficients_of(const PeriodicSignal& signal, int kmax);

// ---------------------------------------------------------------------------
// Coefficient algebra
// ---------------------------------------------------------------------------

struct Translate {
  double shift;
};
struct Convolve {
  CoefficientTable other;
};
struct Differentiate {
  int order = 1;
  /// Set when the source signal has jumps; termwise differentiation then
  /// does not represent the classical derivative and a warning is attached.
  bool source_has_jumps = false;
};
using AlgebraRule = std::variant<Translate, Convolve, Differentiate>;

struct AlgebraResult {
  CoefficientTable table;
  std::optional<std::string> warning;
};

/// translate(a): e^{2 pi i k a} c_k; convolve: c_k d_k; differentiate(m): (2 pi i k)^m c_k.
AlgebraResult coefficient_algebra(const AlgebraRule& rule, const CoefficientTable& table);

/// Differentiates catalog coefficients, flagging entries with jumps.
AlgebraResult differentiate(const WaveformCatalogEntry& entry, int kmax, int order);

// ---------------------------------------------------------------------------
// Diagnostics
// ---------------------------------------------------------------------------

struct ParsevalReport {
  double lhs;     ///< sum |c_k|^2 over the table
  double rhs;     ///< (1/P) int f^2 by quadrature
  double defect;  ///< rhs - lhs; Bessel's inequality says >= 0
};

/// `nodes` = 0 picks max(65536, 8(kmax+1)).
ParsevalReport parseval_report(const CoefficientTable& table, const PeriodicSignal& signal,
                               int nodes = 0);

struct DecayFit {
  double alpha;  ///< |c_k| ~ C k^{-alpha}
  double C;
  bool super_polynomial;  ///< alpha > 4
  int points;             ///< number of k used in the fit
};

/// Least squares of log|c_k| against log k over k = 1..kmax, skipping
/// structural zeros (|c_k| <= 1e-300) and values at the roundoff floor
/// (below 1e-14 of the largest |c_k|, k >= 1).
DecayFit decay_fit(const CoefficientTable& table);

}  // namespace fourierlab
