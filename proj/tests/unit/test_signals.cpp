#include <gtest/gtest.h>

#include <cmath>

#include "scsa/curvature.hpp"
#include "scsa/error.hpp"
#include "scsa/signals.hpp"

namespace scsa {
namespace {

TEST(GaussianPeaks, SinglePeakHeightAtCentre) {
  const Signal y = gaussian_peaks(single_peak_spec(), 512, 5.0 - 256.0, 1.0);
  EXPECT_DOUBLE_EQ(y[256], 2.0);
  const Signal preset = gaussian_peaks(single_peak_spec(), 512);
  EXPECT_DOUBLE_EQ(preset.max(), 2.0);
}

TEST(GaussianPeaks, HalfMaximumAtAnalyticOffset) {
  const double sigma = 15.0;
  const double offset = sigma * std::sqrt(2.0 * std::log(2.0));
  const Signal y = gaussian_peaks({{{2.0, 5.0, sigma}}}, 8, 5.0 + offset, 1.0);
  EXPECT_NEAR(y[0], 1.0, 1e-12);
  const Signal left = gaussian_peaks({{{2.0, 5.0, sigma}}}, 8, 5.0 - offset, 1.0);
  EXPECT_NEAR(left[0], 1.0, 1e-12);
}

TEST(GaussianPeaks, CoincidentPeaksDouble) {
  const Signal one = gaussian_peaks({{{1.5, 3.0, 4.0}}}, 64, -20.0, 0.5);
  const Signal two = gaussian_peaks({{{1.5, 3.0, 4.0}, {1.5, 3.0, 4.0}}}, 64, -20.0, 0.5);
  for (std::size_t i = 0; i < one.size(); ++i) EXPECT_DOUBLE_EQ(two[i], 2.0 * one[i]);
}

TEST(GaussianPeaks, InvalidSpec) {
  EXPECT_THROW(gaussian_peaks({{}}, 64, 0.0, 1.0), Error);
  EXPECT_THROW(gaussian_peaks({{{1.0, 0.0, 0.0}}}, 64, 0.0, 1.0), Error);
}

TEST(StandardSignals, BlocksCurvatureOnlyNearJumps) {
  const Signal y = standard_test_signal(StandardSignal::Blocks, 512);
  const CurvatureProfile k = discrete_curvature(y);
  std::size_t nonzero = 0;
  for (std::size_t m = 0; m < k.values.size(); ++m) {
    if (k.values[m] > 1e-12) {
      ++nonzero;
      // sample m + 1 must be next to a jump
      const std::size_t i = m + 1;
      EXPECT_TRUE(y[i + 1] != y[i] || y[i] != y[i - 1]) << i;
    }
  }
  EXPECT_GT(nonzero, 0u);
  EXPECT_LE(nonzero, 2u * 11u);
}

TEST(StandardSignals, DeterministicAndUnitAmplitude) {
  for (auto kind : {StandardSignal::Doppler, StandardSignal::Blocks, StandardSignal::Bumps,
                    StandardSignal::PiecewiseRegular, StandardSignal::HeaviSine}) {
    for (std::size_t n : {256u, 512u, 1024u, 2048u}) {
      const Signal a = standard_test_signal(kind, n);
      const Signal b = standard_test_signal(kind, n);
      EXPECT_EQ(a.values(), b.values());
      EXPECT_DOUBLE_EQ(a.max_abs(), 1.0) << to_string(kind) << " " << n;
      EXPECT_DOUBLE_EQ(a.delta(), 1.0 / static_cast<double>(n));
    }
  }
}

TEST(StandardSignals, SingIsHeaviSineAlias) {
  EXPECT_EQ(parse_standard_signal("sing"), StandardSignal::HeaviSine);
  EXPECT_EQ(parse_standard_signal("piecewise-regular"), StandardSignal::PiecewiseRegular);
  EXPECT_FALSE(parse_standard_signal("chirp").has_value());
}

TEST(WhiteNoise, SeededAndReproducible) {
  const Signal y = gaussian_peaks(single_peak_spec(), 256);
  EXPECT_EQ(add_white_noise(y, 5.0, 9).values(), add_white_noise(y, 5.0, 9).values());
  EXPECT_NE(add_white_noise(y, 5.0, 9).values(), add_white_noise(y, 5.0, 10).values());
}

TEST(WhiteNoise, TinyLevelStaysClose) {
  const Signal y = gaussian_peaks(single_peak_spec(), 256);
  const double sigma = white_noise_sigma(y, 1e-6);
  const Signal out = add_white_noise(y, 1e-6, 1);
  for (std::size_t i = 0; i < y.size(); ++i) EXPECT_LE(std::abs(out[i] - y[i]), 5.0 * sigma);
}

TEST(WhiteNoise, EmpiricalStdMatches) {
  const Signal y = gaussian_peaks(single_peak_spec(), 4096, -2048.0, 1.0);
  const double sigma = white_noise_sigma(y, 8.0);
  const Signal out = add_white_noise(y, 8.0, 77);
  double mean = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) mean += out[i] - y[i];
  mean /= 4096.0;
  double var = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) var += std::pow(out[i] - y[i] - mean, 2);
  const double sd = std::sqrt(var / 4095.0);
  EXPECT_NEAR(sd / sigma, 1.0, 0.05);
  EXPECT_LE(std::abs(mean), 3.0 * sigma / 64.0);
}

TEST(WhiteNoise, RejectsLevelOutOfRange) {
  const Signal y = gaussian_peaks(single_peak_spec(), 64);
  EXPECT_THROW(add_white_noise(y, 0.0, 1), Error);
  EXPECT_THROW(add_white_noise(y, 101.0, 1), Error);
}

double input_snr_db(const Signal& clean, const Signal& noisy) {
  double ps = 0.0, pn = 0.0;
  for (std::size_t i = 0; i < clean.size(); ++i) {
    ps += clean[i] * clean[i];
    pn += (noisy[i] - clean[i]) * (noisy[i] - clean[i]);
  }
  return 10.0 * std::log10(ps / pn);
}

TEST(MixNoise, HitsTargetSnr) {
  const Signal y = gaussian_peaks(five_peak_spec(), 512);
  const auto [a, b] = synthetic_noise_records(600, 3);
  for (double target : {7.0, 10.0, 14.0, -3.0}) {
    const MixedNoise m = mix_noise(y, a, b, target);
    EXPECT_NEAR(input_snr_db(y, m.noisy), target, 0.01);
    EXPECT_EQ(m.k1, m.k2);
  }
}

TEST(MixNoise, EqualRecordsGiveRequestedPower) {
  const Signal y = gaussian_peaks(single_peak_spec(), 256);
  const Signal a = synthetic_noise_records(256, 4).first;
  const MixedNoise m = mix_noise(y, a, a, 10.0);
  double ps = 0.0, pn = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    ps += y[i] * y[i];
    pn += std::pow(m.noisy[i] - y[i], 2);
  }
  EXPECT_NEAR(pn, ps / 10.0, 1e-9 * ps);
}

TEST(MixNoise, InvalidInputs) {
  const Signal y = gaussian_peaks(single_peak_spec(), 64);
  const Signal zero(std::vector<double>(64, 0.0), 1.0);
  const auto [a, b] = synthetic_noise_records(64, 1);
  EXPECT_THROW(mix_noise(y, a, b, std::numeric_limits<double>::infinity()), Error);
  try {
    mix_noise(y, zero, b, 10.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateInput);
  }
  const auto [sa, sb] = synthetic_noise_records(32, 1);
  EXPECT_THROW(mix_noise(y, sa, sb, 10.0), Error);
}

TEST(MixNoise, ExplicitWeights) {
  const Signal y = gaussian_peaks(single_peak_spec(), 64);
  const auto [a, b] = synthetic_noise_records(64, 1);
  const MixedNoise m = mix_noise(y, a, b, 0.5, 2.0);
  for (std::size_t i = 0; i < y.size(); ++i) EXPECT_DOUBLE_EQ(m.noisy[i], y[i] + 0.5 * a[i] + 2.0 * b[i]);
}

}  // namespace
}  // namespace scsa
