#include "scsa/signals.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "scsa/error.hpp"

namespace scsa {
namespace {

constexpr std::size_t kMinGrid = Signal::kMinSamples;

std::mt19937_64 seeded_engine(std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  return std::mt19937_64(seq);
}

std::vector<double> gaussian_draws(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> out(n);
  for (double& v : out) v = normal(rng);
  return out;
}

double sign(double x) { return static_cast<double>((x > 0.0) - (x < 0.0)); }

// Knot table shared by Blocks and Bumps.
constexpr double kPos[] = {.1, .13, .15, .23, .25, .40, .44, .65, .76, .78, .81};

std::vector<double> bumps_raw(std::size_t n) {
  constexpr double hgt[] = {4, 5, 3, 4, 5, 4.2, 2.1, 4.3, 3.1, 5.1, 4.2};
  constexpr double wth[] = {.005, .005, .006, .01, .01, .03, .01, .01, .005, .008, .005};
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i + 1) / static_cast<double>(n);
    for (std::size_t j = 0; j < std::size(kPos); ++j) {
      out[i] += hgt[j] * std::pow(1.0 + std::abs((t - kPos[j]) / wth[j]), -4.0);
    }
  }
  return out;
}

std::vector<double> blocks_raw(std::size_t n) {
  constexpr double hgt[] = {4, -5, 3, -4, 5, -4.2, 2.1, 4.3, -3.1, 2.1, -4.2};
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i + 1) / static_cast<double>(n);
    for (std::size_t j = 0; j < std::size(kPos); ++j) {
      out[i] += hgt[j] * (1.0 + sign(t - kPos[j])) / 2.0;
    }
  }
  return out;
}

// Piecewise-regular signal, assembled segment by segment with 1-based
// inclusive ranges as in the original WaveLab construction.
std::vector<double> piecewise_regular_raw(std::size_t n) {
  std::vector<double> sig(n, 0.0);
  auto at = [&](std::size_t one_based) -> double& { return sig[one_based - 1]; };

  const std::vector<double> bumps = bumps_raw(n);
  const std::size_t n12 = n / 12, n7 = n / 7, n5 = n / 5, n3 = n / 3, n2 = n / 2, n20 = n / 20;

  std::vector<double> ramp(n12), tail(n7), dip(n3);
  for (std::size_t i = 0; i < n12; ++i) {
    ramp[i] = -std::exp(4.0 * static_cast<double>(i + 1) / static_cast<double>(n12));
  }
  for (std::size_t i = 0; i < n7; ++i) {
    tail[i] = std::exp(4.0 * static_cast<double>(i + 1) / static_cast<double>(n7)) - std::exp(4.0);
  }
  const double s = 6.0 / 40.0;
  for (std::size_t i = 0; i < n3; ++i) {
    const double t = static_cast<double>(i + 1) / static_cast<double>(n3) - 0.5;
    dip[i] = -70.0 * std::exp(-t * t / (2.0 * s * s));
  }

  for (std::size_t i = 1; i <= n7; ++i) at(i) = dip[i - 1];
  for (std::size_t i = n7 + 1; i <= n5; ++i) at(i) = 0.5 * dip[i - 1];
  for (std::size_t i = n5 + 1; i <= n3; ++i) at(i) = dip[i - 1];
  for (std::size_t i = n3 + 1; i <= n2; ++i) at(i) = -15.0 * bumps[i - 1];
  for (std::size_t i = 0; i < n12; ++i) at(n2 + 1 + i) = ramp[i];
  for (std::size_t i = 0; i < n12; ++i) at(n2 + 2 * n12 - i) = ramp[i];
  for (std::size_t i = n2 + 2 * n12 + n20 + 1; i <= n2 + 2 * n12 + 3 * n20; ++i) at(i) = -25.0;
  const std::size_t k = n2 + 2 * n12 + 3 * n20;
  for (std::size_t i = 0; i < n7 && k + 1 + i <= n; ++i) at(k + 1 + i) = tail[i];
  const std::size_t wrap = n - 5 * n5;
  for (std::size_t i = 0; i < wrap; ++i) at(5 * n5 + 1 + i) = at(wrap - i);

  double bias = 0.0;
  for (double v : sig) bias += v;
  bias /= static_cast<double>(n);
  for (double& v : sig) v = bias - v;
  return sig;
}

double sum_squares(std::span<const double> v, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += v[i] * v[i];
  return acc;
}

void require_record_length(const Signal& y, const Signal& a, const Signal& b) {
  if (a.size() < y.size() || b.size() < y.size()) {
    throw Error(ErrorKind::InvalidParams, "noise records are shorter than the signal");
  }
}

}  // namespace

void GaussianPeakSpec::validate() const {
  if (peaks.empty()) throw Error(ErrorKind::InvalidParams, "no peaks given");
  for (const auto& p : peaks) {
    if (!(p.width > 0.0) || !std::isfinite(p.width) || !std::isfinite(p.amplitude) ||
        !std::isfinite(p.position)) {
      throw Error(ErrorKind::InvalidParams, "peak widths must be positive and values finite");
    }
  }
}

GaussianPeakSpec single_peak_spec() { return {{{2.0, 5.0, 15.0}}}; }

GaussianPeakSpec five_peak_spec() {
  return {{{1.0, -150.0, 12.0},
           {2.0, -60.0, 20.0},
           {1.5, -30.0, 8.0},
           {0.8, 60.0, 25.0},
           {1.2, 160.0, 10.0}}};
}

Signal gaussian_peaks(const GaussianPeakSpec& spec, std::size_t n, double t_start, double delta) {
  spec.validate();
  if (n < kMinGrid) throw Error(ErrorKind::InvalidParams, "need at least 8 samples");
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = t_start + static_cast<double>(i) * delta;
    for (const auto& p : spec.peaks) {
      const double z = (t - p.position) / p.width;
      out[i] += p.amplitude * std::exp(-0.5 * z * z);
    }
  }
  return Signal(std::move(out), delta, t_start);
}

Signal gaussian_peaks(const GaussianPeakSpec& spec, std::size_t n) {
  return gaussian_peaks(spec, n, -static_cast<double>(n / 2), 1.0);
}

Signal reflectionless_potential(std::size_t n, double half_width) {
  if (n < kMinGrid) throw Error(ErrorKind::InvalidParams, "need at least 8 samples");
  const double delta = 2.0 * half_width / static_cast<double>(n);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double c = std::cosh(-half_width + static_cast<double>(i) * delta);
    out[i] = 2.0 / (c * c);
  }
  return Signal(std::move(out), delta, -half_width);
}

std::optional<StandardSignal> parse_standard_signal(std::string_view name) {
  if (name == "doppler") return StandardSignal::Doppler;
  if (name == "blocks") return StandardSignal::Blocks;
  if (name == "bumps") return StandardSignal::Bumps;
  if (name == "piecewise-regular" || name == "piece-regular") return StandardSignal::PiecewiseRegular;
  if (name == "heavisine" || name == "sing") return StandardSignal::HeaviSine;
  return std::nullopt;
}

std::string_view to_string(StandardSignal kind) noexcept {
  switch (kind) {
    case StandardSignal::Doppler: return "doppler";
    case StandardSignal::Blocks: return "blocks";
    case StandardSignal::Bumps: return "bumps";
    case StandardSignal::PiecewiseRegular: return "piecewise-regular";
    case StandardSignal::HeaviSine: return "heavisine";
  }
  return "unknown";
}

Signal standard_test_signal(StandardSignal kind, std::size_t n) {
  if (n < 40) throw Error(ErrorKind::InvalidParams, "standard test signals need n >= 40");
  using std::numbers::pi;
  std::vector<double> out(n);
  const auto t_of = [n](std::size_t i) { return static_cast<double>(i + 1) / static_cast<double>(n); };
  switch (kind) {
    case StandardSignal::Doppler:
      for (std::size_t i = 0; i < n; ++i) {
        const double t = t_of(i);
        out[i] = std::sqrt(t * (1.0 - t)) * std::sin(2.0 * pi * 1.05 / (t + 0.05));
      }
      break;
    case StandardSignal::Blocks: out = blocks_raw(n); break;
    case StandardSignal::Bumps: out = bumps_raw(n); break;
    case StandardSignal::PiecewiseRegular: out = piecewise_regular_raw(n); break;
    case StandardSignal::HeaviSine:
      for (std::size_t i = 0; i < n; ++i) {
        const double t = t_of(i);
        out[i] = 4.0 * std::sin(4.0 * pi * t) - sign(t - 0.3) - sign(0.72 - t);
      }
      break;
    default: throw Error(ErrorKind::InvalidParams, "unknown standard signal");
  }
  double peak = 0.0;
  for (double v : out) peak = std::max(peak, std::abs(v));
  for (double& v : out) v /= peak;
  const double delta = 1.0 / static_cast<double>(n);
  return Signal(std::move(out), delta, delta);
}

double white_noise_sigma(const Signal& y, double level_percent) {
  if (!(level_percent > 0.0 && level_percent <= 100.0)) {
    throw Error(ErrorKind::InvalidParams, "noise level must be in (0, 100]");
  }
  return level_percent / 100.0 * y.max_abs();
}

Signal add_white_noise(const Signal& y, double level_percent, std::uint64_t seed) {
  const double sigma = white_noise_sigma(y, level_percent);
  auto rng = seeded_engine(seed);
  std::vector<double> noise = gaussian_draws(y.size(), rng);
  for (std::size_t i = 0; i < noise.size(); ++i) noise[i] = y[i] + sigma * noise[i];
  return y.with_samples(std::move(noise));
}

MixedNoise mix_noise(const Signal& y, const Signal& a, const Signal& b, double target_snr_db) {
  if (!std::isfinite(target_snr_db)) {
    throw Error(ErrorKind::InvalidParams, "target SNR must be finite");
  }
  require_record_length(y, a, b);
  const std::size_t n = y.size();
  const double pa = sum_squares(a.samples(), n);
  const double pb = sum_squares(b.samples(), n);
  const double py = sum_squares(y.samples(), n);
  if (!(pa > 0.0) || !(pb > 0.0) || !(py > 0.0)) {
    throw Error(ErrorKind::DegenerateInput, "signal or noise record has zero power");
  }
  const double ra = std::sqrt(pa / static_cast<double>(n));
  const double rb = std::sqrt(pb / static_cast<double>(n));
  std::vector<double> unit(n);
  for (std::size_t i = 0; i < n; ++i) unit[i] = a[i] / ra + b[i] / rb;
  const double pu = sum_squares(unit, n);
  if (!(pu > 0.0)) throw Error(ErrorKind::DegenerateInput, "noise records cancel out");

  const double k = std::sqrt(py / (pu * std::pow(10.0, target_snr_db / 10.0)));
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = y[i] + k * unit[i];
  return {y.with_samples(std::move(out)), k, k};
}

MixedNoise mix_noise(const Signal& y, const Signal& a, const Signal& b, double k1, double k2) {
  require_record_length(y, a, b);
  std::vector<double> out(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) out[i] = y[i] + k1 * a[i] + k2 * b[i];
  return {y.with_samples(std::move(out)), k1, k2};
}

std::pair<Signal, Signal> synthetic_noise_records(std::size_t n, std::uint64_t seed) {
  constexpr std::size_t kWander = 31;
  auto rng = seeded_engine(seed);
  std::vector<double> broadband = gaussian_draws(n, rng);
  const std::vector<double> raw = gaussian_draws(n + kWander - 1, rng);
  std::vector<double> wander(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < kWander; ++k) wander[i] += raw[i + k];
    wander[i] /= static_cast<double>(kWander);
  }
  return {Signal(std::move(broadband), 1.0), Signal(std::move(wander), 1.0)};
}

}  // namespace scsa
