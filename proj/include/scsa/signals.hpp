#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "scsa/signal.hpp"

namespace scsa {

struct GaussianPeak {
  double amplitude = 1.0;
  double position = 0.0;
  double width = 1.0;
};

struct GaussianPeakSpec {
  std::vector<GaussianPeak> peaks;

  void validate() const;
};

/// One peak with A = 2, u = 5, sigma = 15.
GaussianPeakSpec single_peak_spec();
/// Five peaks of different heights and widths; the second and third overlap.
GaussianPeakSpec five_peak_spec();

/// sum_i A_i exp(-(t - u_i)^2 / (2 sigma_i^2)) at t_start + k delta.
Signal gaussian_peaks(const GaussianPeakSpec& spec, std::size_t n, double t_start, double delta);

/// The preset peak signals on a unit-spaced grid centred on t = 0.
Signal gaussian_peaks(const GaussianPeakSpec& spec, std::size_t n);

/// 2 sech^2(t) on [-half_width, half_width), n points.
Signal reflectionless_potential(std::size_t n, double half_width = 16.0);

enum class StandardSignal { Doppler, Blocks, Bumps, PiecewiseRegular, HeaviSine };

/// Accepts "doppler", "blocks", "bumps", "piecewise-regular", "heavisine"
/// and "sing" (alias of heavisine).
std::optional<StandardSignal> parse_standard_signal(std::string_view name);
std::string_view to_string(StandardSignal kind) noexcept;

/// Classic wavelet-denoising benchmark waveforms sampled at t_i = (i+1)/n,
/// scaled to max|y| = 1.
Signal standard_test_signal(StandardSignal kind, std::size_t n);

/// y + n with n ~ N(0, ((level/100) max|y|)^2), level in (0, 100].
Signal add_white_noise(const Signal& y, double level_percent, std::uint64_t seed);

/// Noise standard deviation used by add_white_noise.
double white_noise_sigma(const Signal& y, double level_percent);

struct MixedNoise {
  Signal noisy;
  double k1 = 0.0;
  double k2 = 0.0;
};

/// y + k (a/rms(a) + b/rms(b)) with k chosen so that
/// 10 log10(sum y^2 / sum n^2) = target_snr_db. k1 = k2 = k weight the
/// unit-power records. Only the first y.size() samples of each record are used.
MixedNoise mix_noise(const Signal& y, const Signal& a, const Signal& b, double target_snr_db);

/// y + k1 a + k2 b on the raw records.
MixedNoise mix_noise(const Signal& y, const Signal& a, const Signal& b, double k1, double k2);

/// Stand-ins for two recorded noise sources: broadband Gaussian noise and a
/// low-frequency wander (Gaussian noise through a 31-point moving average).
std::pair<Signal, Signal> synthetic_noise_records(std::size_t n, std::uint64_t seed);

}  // namespace scsa
