#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "scsa/error.hpp"
#include "scsa/metrics.hpp"
#include "scsa/signals.hpp"

namespace scsa {
namespace {

Signal pad(std::vector<double> v) {
  v.resize(8, 0.0);
  return Signal(v, 1.0);
}

TEST(Mse, Basics) {
  const Signal a = gaussian_peaks(single_peak_spec(), 64);
  EXPECT_EQ(mse(a, a), 0.0);
  std::vector<double> shifted = a.values();
  for (double& v : shifted) v += 0.5;
  EXPECT_NEAR(mse(a, a.with_samples(shifted)), 0.25, 1e-15);
  // (0,3) vs (4,3) padded with equal zeros: sum of squares 16 over 8 samples.
  EXPECT_DOUBLE_EQ(mse(pad({0, 3}), pad({4, 3})), 2.0);
}

TEST(SnrOut, PerturbationFormula) {
  const Signal y = gaussian_peaks(single_peak_spec(), 64);
  std::vector<double> h = y.values();
  const double eps = 1e-3;
  h[10] += eps;
  double num = 0.0;
  for (double v : h) num += v * v;
  EXPECT_NEAR(snr_out(y, y.with_samples(h)), 10.0 * std::log10(num / (eps * eps)), 1e-9);
}

TEST(SnrOut, Sentinels) {
  const Signal y = gaussian_peaks(single_peak_spec(), 64);
  EXPECT_EQ(snr_out(y, y), std::numeric_limits<double>::infinity());
  const Signal zero(std::vector<double>(64, 0.0), 1.0);
  EXPECT_EQ(snr_out(y, zero), -std::numeric_limits<double>::infinity());
}

TEST(SnrOut, ScaleInvariant) {
  const Signal y = gaussian_peaks(single_peak_spec(), 64);
  const Signal h = add_white_noise(y, 5.0, 2);
  std::vector<double> y2 = y.values(), h2 = h.values();
  for (double& v : y2) v *= 2.0;
  for (double& v : h2) v *= 2.0;
  EXPECT_NEAR(snr_out(y, h), snr_out(y.with_samples(y2), h.with_samples(h2)), 1e-12);
}

TEST(SnrOut, CleanPowerConvention) {
  const Signal y = gaussian_peaks(single_peak_spec(), 64);
  const Signal h = add_white_noise(y, 5.0, 2);
  double ps = 0.0, pe = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    ps += y[i] * y[i];
    pe += (y[i] - h[i]) * (y[i] - h[i]);
  }
  EXPECT_NEAR(snr_out(y, h, SnrConvention::CleanPower), 10.0 * std::log10(ps / pe), 1e-12);
}

TEST(DetectPeak, GaussianHeightAndWidth) {
  const Signal y = gaussian_peaks(single_peak_spec(), 512);
  const PeakInfo p = detect_peak(y);
  EXPECT_DOUBLE_EQ(p.height, 2.0);
  EXPECT_EQ(p.index, 261u);
  EXPECT_NEAR(p.fwhm, 2.0 * std::sqrt(2.0 * std::log(2.0)) * 15.0, y.delta());
}

TEST(DetectPeak, TriangleWidth) {
  // Triangle of height 1 on [0, 2] sampled at 0.25 inside a zero background.
  std::vector<double> v(17, 0.0);
  for (int i = 0; i <= 8; ++i) v[4 + i] = 1.0 - std::abs(i - 4) / 4.0;
  const PeakInfo p = detect_peak(Signal(v, 0.25));
  EXPECT_DOUBLE_EQ(p.height, 1.0);
  EXPECT_NEAR(p.fwhm, 1.0, 1e-12);
}

TEST(DetectPeak, RampHasNoPeak) {
  std::vector<double> v(16);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<double>(i);
  try {
    detect_peak(Signal(v, 1.0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PeakNotFound);
  }
}

TEST(DetectPeak, MissingCrossingIsReported) {
  std::vector<double> v{1.6, 1.7, 1.8, 2.0, 1.5, 0.2, 0.1, 0.0};
  EXPECT_THROW(detect_peak(Signal(v, 1.0)), Error);
}

TEST(PeakErrors, Arithmetic) {
  const PeakInfo clean{2.0, 10, 30.0};
  EXPECT_EQ(peak_height_error(clean, clean), 0.0);
  EXPECT_NEAR(peak_height_error({1.9, 10, 30.0}, clean), 5.0, 1e-12);
  EXPECT_NEAR(peak_height_error({2.1, 10, 30.0}, clean), 5.0, 1e-12);
  EXPECT_EQ(peak_width_error(clean, clean), 0.0);
  EXPECT_NEAR(peak_width_error({2.0, 10, 36.0}, clean), 20.0, 1e-12);
  EXPECT_NEAR(peak_width_error({2.0, 10, 24.0}, clean), peak_width_error({2.0, 10, 36.0}, clean), 1e-12);
}

TEST(PeakErrors, ZeroReferenceRejected) {
  EXPECT_THROW(peak_height_error({1.0, 1, 1.0}, {0.0, 1, 1.0}), Error);
  EXPECT_THROW(peak_width_error({1.0, 1, 1.0}, {1.0, 1, 0.0}), Error);
}

}  // namespace
}  // namespace scsa
