#include "fourierlab/periodic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fourierlab/error.hpp"

namespace fourierlab {

double frac_part(double x) {
  require(std::isfinite(x), "frac_part: input must be finite");
  const double f = x - std::floor(x);
  // x slightly below an integer can round up to exactly 1.
  return f < 1.0 ? f : 0.0;
}

// ---------------------------------------------------------------------------
// CoefficientTable

CoefficientTable::CoefficientTable(int kmax, std::vector<cplx> values, bool real_signal)
    : kmax_(kmax), real_(real_signal), values_(std::move(values)) {
  require(kmax_ >= 0, "CoefficientTable: kmax must be nonnegative");
  require(values_.size() == static_cast<std::size_t>(2 * kmax_ + 1),
          "CoefficientTable: expected 2*kmax+1 values");
  if (!real_) return;
  double scale = 0.0;
  for (const cplx& c : values_) scale = std::max(scale, std::abs(c));
  const double tol = 1e-12 * std::max(scale, 1.0);
  cplx& c0 = values_[kmax_];
  require(std::abs(c0.imag()) <= tol, "CoefficientTable: real signal needs a real c_0");
  c0 = {c0.real(), 0.0};
  for (int k = 1; k <= kmax_; ++k) {
    const cplx pos = values_[kmax_ + k];
    const cplx neg = values_[kmax_ - k];
    require(std::abs(neg - std::conj(pos)) <= tol,
            "CoefficientTable: real signal needs c_{-k} = conj(c_k)");
    values_[kmax_ - k] = std::conj(pos);
  }
}

CoefficientTable CoefficientTable::zeros(int kmax, bool real_signal) {
  return CoefficientTable(kmax, std::vector<cplx>(2 * kmax + 1), real_signal);
}

CoefficientTable CoefficientTable::generate(int kmax, bool real_signal,
                                            const std::function<cplx(long)>& coefficient) {
  require(kmax >= 0, "CoefficientTable: kmax must be nonnegative");
  std::vector<cplx> values(2 * kmax + 1);
  if (real_signal) {
    values[kmax] = {coefficient(0).real(), 0.0};
    for (long k = 1; k <= kmax; ++k) {
      const cplx c = coefficient(k);
      values[kmax + k] = c;
      values[kmax - k] = std::conj(c);
    }
  } else {
    for (long k = -kmax; k <= kmax; ++k) values[kmax + k] = coefficient(k);
  }
  return CoefficientTable(kmax, std::move(values), real_signal);
}

cplx CoefficientTable::operator[](long k) const {
  if (k < -kmax_ || k > kmax_) return {};
  return values_[static_cast<std::size_t>(k + kmax_)];
}

CoefficientTable CoefficientTable::truncated(int kmax) const {
  require(kmax >= 0, "CoefficientTable::truncated: kmax must be nonnegative");
  return generate(kmax, real_, [this](long k) { return (*this)[k]; });
}

CoefficientTable CoefficientTable::map(const std::function<cplx(long, cplx)>& fn,
                                       bool keeps_reality) const {
  const bool real = real_ && keeps_reality;
  return generate(kmax_, real, [&](long k) { return fn(k, (*this)[k]); });
}

TrigCoefficientTable to_trig(const CoefficientTable& table) {
  require(table.real_signal(), "to_trig: trigonometric form needs a real-signal table");
  TrigCoefficientTable trig;
  const int K = table.kmax();
  trig.a.resize(K + 1);
  trig.b.assign(K + 1, 0.0);
  for (int k = 0; k <= K; ++k) {
    trig.a[k] = 2.0 * table[k].real();
    if (k > 0) trig.b[k] = -2.0 * table[k].imag();
  }
  return trig;
}

CoefficientTable from_trig(const TrigCoefficientTable& trig) {
  require(!trig.a.empty() && trig.a.size() == trig.b.size(),
          "from_trig: a and b must have the same nonzero length");
  return CoefficientTable::generate(trig.kmax(), true, [&](long k) {
    if (k == 0) return cplx{0.5 * trig.a[0], 0.0};
    return cplx{0.5 * trig.a[k], -0.5 * trig.b[k]};
  });
}

cplx synthesize(const CoefficientTable& table, int n, double x) {
  n = std::min(n, table.kmax());
  const double u = frac_part(x);
  cplx sum = table[0];
  for (long k = 1; k <= n; ++k) {
    const double angle = kTwoPi * frac_part(static_cast<double>(k) * u);
    const cplx e{std::cos(angle), std::sin(angle)};
    sum += table[k] * e + table[-k] * std::conj(e);
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

struct CatalogName {
  Waveform id;
  std::string_view name;
};

constexpr CatalogName kCatalogNames[] = {
    {Waveform::square, "square"},
    {Waveform::sawtooth, "sawtooth"},
    {Waveform::triangular, "triangular"},
    {Waveform::parabola_x1mx, "parabola_x1mx"},
    {Waveform::sine, "sine"},
    {Waveform::cosine, "cosine"},
    {Waveform::constant, "constant"},
};

}  // namespace

WaveformCatalogEntry::WaveformCatalogEntry(Waveform id) : id_(id) {
  switch (id_) {
    case Waveform::square:
      jumps_ = {{0.0, 2.0}, {0.5, -2.0}};
      break;
    case Waveform::sawtooth:
      jumps_ = {{0.0, -1.0}};
      break;
    default:
      break;
  }
}

WaveformCatalogEntry WaveformCatalogEntry::parse(std::string_view name) {
  for (const auto& entry : kCatalogNames) {
    if (entry.name == name) return WaveformCatalogEntry(entry.id);
  }
  throw InvalidArgument("unknown waveform '" + std::string(name) + "'");
}

std::vector<std::string_view> WaveformCatalogEntry::names() {
  std::vector<std::string_view> out;
  for (const auto& entry : kCatalogNames) out.push_back(entry.name);
  return out;
}

std::string_view WaveformCatalogEntry::name() const {
  for (const auto& entry : kCatalogNames) {
    if (entry.id == id_) return entry.name;
  }
  return "unknown";
}

double WaveformCatalogEntry::value(double u) const {
  switch (id_) {
    case Waveform::square:
      return u < 0.5 ? 1.0 : -1.0;
    case Waveform::sawtooth:
      return u - 0.5;
    case Waveform::triangular:
      return std::min(u, 1.0 - u) - 0.25;
    case Waveform::parabola_x1mx:
      return u * (1.0 - u);
    case Waveform::sine:
      return std::sin(kTwoPi * u);
    case Waveform::cosine:
      return std::cos(kTwoPi * u);
    case Waveform::constant:
      return 1.0;
  }
  return 0.0;
}

cplx WaveformCatalogEntry::coefficient(long k) const {
  const double kd = static_cast<double>(k);
  const bool odd = (k % 2) != 0;
  switch (id_) {
    case Waveform::square:
      return odd ? cplx{0.0, -2.0 / (kPi * kd)} : cplx{};
    case Waveform::sawtooth:
      return k != 0 ? cplx{0.0, 1.0 / (kTwoPi * kd)} : cplx{};
    case Waveform::triangular:
      return odd ? cplx{-1.0 / (kPi * kPi * kd * kd), 0.0} : cplx{};
    case Waveform::parabola_x1mx:
      return k == 0 ? cplx{1.0 / 6.0, 0.0} : cplx{-1.0 / (2.0 * kPi * kPi * kd * kd), 0.0};
    case Waveform::sine:
      if (k == 1) return {0.0, -0.5};
      if (k == -1) return {0.0, 0.5};
      return {};
    case Waveform::cosine:
      return (k == 1 || k == -1) ? cplx{0.5, 0.0} : cplx{};
    case Waveform::constant:
      return k == 0 ? cplx{1.0, 0.0} : cplx{};
  }
  return {};
}

cplx coeff_exact(const WaveformCatalogEntry& entry, long k) { return entry.coefficient(k); }

CoefficientTable coefficient_table(const WaveformCatalogEntry& entry, int kmax) {
  return CoefficientTable::generate(kmax, true, [&](long k) { return entry.coefficient(k); });
}

// ---------------------------------------------------------------------------
// PeriodicSignal

PeriodicSignal::PeriodicSignal(double period, std::shared_ptr<const Store> store)
    : period_(period), store_(std::move(store)) {
  require(std::isfinite(period_) && period_ > 0.0, "PeriodicSignal: period must be positive");
}

PeriodicSignal PeriodicSignal::from_catalog(const WaveformCatalogEntry& entry, double period) {
  return PeriodicSignal(period, std::make_shared<const Store>(entry));
}

PeriodicSignal PeriodicSignal::from_catalog(Waveform id, double period) {
  return from_catalog(WaveformCatalogEntry(id), period);
}

PeriodicSignal PeriodicSignal::from_samples(std::vector<double> samples, double period) {
  require(samples.size() >= 2, "PeriodicSignal: a sample grid needs at least 2 nodes");
  return PeriodicSignal(period, std::make_shared<const Store>(Grid{std::move(samples)}));
}

PeriodicSignal PeriodicSignal::from_coefficients(CoefficientTable table, double period) {
  require(table.real_signal(), "PeriodicSignal: coefficient backing must describe a real signal");
  return PeriodicSignal(period, std::make_shared<const Store>(std::move(table)));
}

PeriodicSignal PeriodicSignal::from_unit_map(RealMap unit_map, double period) {
  require(static_cast<bool>(unit_map), "PeriodicSignal: empty map");
  return PeriodicSignal(period, std::make_shared<const Store>(std::move(unit_map)));
}

PeriodicSignal::Backing PeriodicSignal::backing() const {
  switch (store_->index()) {
    case 0:
      return Backing::catalog;
    case 1:
      return Backing::grid;
    case 2:
      return Backing::coefficients;
    default:
      return Backing::function;
  }
}

double PeriodicSignal::at_unit(double u) const {
  struct Visitor {
    double u;
    double operator()(const WaveformCatalogEntry& e) const { return e.value(u); }
    double operator()(const Grid& g) const {
      const std::size_t m = g.samples.size();
      const double s = u * static_cast<double>(m);
      const double base = std::floor(s);
      const double t = s - base;
      const std::size_t j = static_cast<std::size_t>(base) % m;
      const double left = g.samples[j];
      if (t == 0.0) return left;
      return left + t * (g.samples[(j + 1) % m] - left);
    }
    double operator()(const CoefficientTable& table) const {
      return synthesize(table, table.kmax(), u).real();
    }
    double operator()(const RealMap& f) const { return f(u); }
  };
  return std::visit(Visitor{u}, *store_);
}

const WaveformCatalogEntry* PeriodicSignal::catalog_entry() const {
  return std::get_if<WaveformCatalogEntry>(store_.get());
}

const CoefficientTable* PeriodicSignal::coefficients() const {
  return std::get_if<CoefficientTable>(store_.get());
}

std::span<const double> PeriodicSignal::samples() const {
  if (const auto* g = std::get_if<Grid>(store_.get())) return g->samples;
  return {};
}

double PeriodicSignal::sample(long j) const {
  const auto* g = std::get_if<Grid>(store_.get());
  require(g != nullptr, "PeriodicSignal::sample: signal is not grid-backed");
  const long m = static_cast<long>(g->samples.size());
  long r = j % m;
  if (r < 0) r += m;
  return g->samples[static_cast<std::size_t>(r)];
}

PeriodicSignal PeriodicSignal::with_period(double period) const {
  return PeriodicSignal(period, store_);
}

PeriodicSignal periodic_extend(RealMap f, double period) {
  require(std::isfinite(period) && period > 0.0, "periodic_extend: period must be positive");
  require(static_cast<bool>(f), "periodic_extend: empty map");
  return PeriodicSignal::from_unit_map([f = std::move(f), period](double u) { return f(u * period); },
                                       period);
}

PeriodicSignal rescale_period(const PeriodicSignal& signal, double new_period) {
  require(std::isfinite(new_period) && new_period > 0.0,
          "rescale_period: new period must be positive");
  return signal.with_period(new_period);
}

// ---------------------------------------------------------------------------
// Quadrature coefficients

namespace {

int min_nodes(long k) { return static_cast<int>(std::max<long>(16, 4 * (std::labs(k) + 1))); }

std::vector<double> unit_samples(const PeriodicSignal& signal, int nodes) {
  std::vector<double> f(nodes);
  for (int j = 0; j < nodes; ++j) {
    f[j] = signal.at_unit(static_cast<double>(j) / nodes);
  }
  return f;
}

cplx trapezoid_coefficient(std::span<const double> f, long k, std::span<const cplx> roots) {
  const long m = static_cast<long>(f.size());
  const long kk = std::labs(k) % m;
  CompensatedSum re;
  CompensatedSum im;
  for (long j = 0; j < m; ++j) {
    const cplx e = roots[static_cast<std::size_t>((kk * j) % m)];
    re.add(f[j] * e.real());
    im.add(-f[j] * e.imag());
  }
  const cplx c{re.value() / m, im.value() / m};
  return k < 0 ? std::conj(c) : c;
}

std::vector<cplx> root_table(int nodes) {
  std::vector<cplx> roots(nodes);
  for (int m = 0; m < nodes; ++m) roots[m] = unit_root(m, nodes);
  return roots;
}

}  // namespace

cplx coeff_numeric(const PeriodicSignal& signal, long k, int nodes) {
  require(nodes >= min_nodes(k), "coeff_numeric: need M >= max(16, 4(|k|+1)) nodes");
  const std::vector<double> f = unit_samples(signal, nodes);
  const std::vector<cplx> roots = root_table(nodes);
  return trapezoid_coefficient(f, k, roots);
}

CoefficientTable coefficient_table(const PeriodicSignal& signal, int kmax, int nodes) {
  require(kmax >= 0, "coefficient_table: kmax must be nonnegative");
  if (nodes == 0) nodes = std::max(min_nodes(kmax), 1024);
  require(nodes >= min_nodes(kmax), "coefficient_table: need M >= max(16, 4(kmax+1)) nodes");
  const std::vector<double> f = unit_samples(signal, nodes);
  const std::vector<cplx> roots = root_table(nodes);
  return CoefficientTable::generate(kmax, true,
                                    [&](long k) { return trapezoid_coefficient(f, k, roots); });
}

CoefficientTable coefficients_of(const PeriodicSignal& signal, int kmax) {
  if (const auto* entry = signal.catalog_entry()) return coefficient_table(*entry, kmax);
  if (const auto* table = signal.coefficients()) {
    return CoefficientTable::generate(kmax, true, [&](long k) { return (*table)[k]; });
  }
  return coefficient_table(signal, kmax);
}

// ---------------------------------------------------------------------------
// Algebra

AlgebraResult coefficient_algebra(const AlgebraRule& rule, const CoefficientTable& table) {
  struct Visitor {
    const CoefficientTable& t;
    AlgebraResult operator()(const Translate& r) const {
      const double a = r.shift;
      return {t.map(
                  [a](long k, cplx c) {
                    const double angle = kTwoPi * frac_part(static_cast<double>(k) * a);
                    return c * cplx{std::cos(angle), std::sin(angle)};
                  },
                  true),
              std::nullopt};
    }
    AlgebraResult operator()(const Convolve& r) const {
      require(r.other.kmax() == t.kmax(), "coefficient_algebra: convolution needs equal kmax");
      const bool real = r.other.real_signal();
      return {t.map([&](long k, cplx c) { return c * r.other[k]; }, real), std::nullopt};
    }
    AlgebraResult operator()(const Differentiate& r) const {
      require(r.order >= 0, "coefficient_algebra: derivative order must be nonnegative");
      const int m = r.order;
      AlgebraResult out{t.map(
                            [m](long k, cplx c) {
                              return c * std::pow(cplx{0.0, kTwoPi * static_cast<double>(k)}, m);
                            },
                            true),
                        std::nullopt};
      if (r.source_has_jumps && m > 0) {
        out.warning =
            "termwise derivative of a signal with jumps: the result is not the derivative's series";
      }
      return out;
    }
  };
  return std::visit(Visitor{table}, rule);
}

AlgebraResult differentiate(const WaveformCatalogEntry& entry, int kmax, int order) {
  return coefficient_algebra(Differentiate{order, !entry.continuous()},
                             coefficient_table(entry, kmax));
}

// ---------------------------------------------------------------------------
// Diagnostics

ParsevalReport parseval_report(const CoefficientTable& table, const PeriodicSignal& signal,
                               int nodes) {
  if (nodes == 0) nodes = std::max(65536, 8 * (table.kmax() + 1));
  require(nodes >= 2, "parseval_report: need at least two nodes");
  CompensatedSum lhs;
  for (const cplx& c : table.values()) lhs.add(std::norm(c));
  const double rhs = trapezoid_periodic(
      [&](double u) {
        const double v = signal.at_unit(u);
        return v * v;
      },
      0.0, 1.0, nodes);
  return {lhs.value(), rhs, rhs - lhs.value()};
}

DecayFit decay_fit(const CoefficientTable& table) {
  require(table.kmax() >= 16, "decay_fit: need kmax >= 16");
  double peak = 0.0;
  for (long k = 1; k <= table.kmax(); ++k) {
    peak = std::max({peak, std::abs(table[k]), std::abs(table[-k])});
  }
  require(peak > 1e-300, "decay_fit: all coefficients vanish");
  const double floor = std::max(1e-300, 1e-14 * peak);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (long k = 1; k <= table.kmax(); ++k) {
    const double mag = std::max(std::abs(table[k]), std::abs(table[-k]));
    if (mag <= floor) continue;
    const double x = std::log(static_cast<double>(k));
    const double y = std::log(mag);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  require(n >= 2, "decay_fit: fewer than two usable coefficients");
  const double denom = n * sxx - sx * sx;
  const double slope = (n * sxy - sx * sy) / denom;
  const double intercept = (sy - slope * sx) / n;
  const double alpha = -slope;
  return {alpha, std::exp(intercept), alpha > 4.0, n};
}

}  // namespace fourierlab
