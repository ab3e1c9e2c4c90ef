#pragma once

#include <cstddef>

#include "scsa/signal.hpp"

namespace scsa {

struct PeakInfo {
  double height = 0.0;
  std::size_t index = 0;
  /// Full width at half maximum, in time units.
  double fwhm = 0.0;
};

enum class SnrConvention {
  /// 10 log10(sum y_h^2 / sum (y - y_h)^2), the reconstruction's power on top.
  ReconstructionPower,
  /// 10 log10(sum y^2 / sum (y - y_h)^2).
  CleanPower,
};

double mse(const Signal& a, const Signal& b);

/// Output SNR in dB. Returns +infinity when y_h == y_clean exactly and
/// -infinity when the numerator power is zero.
double snr_out(const Signal& y_clean, const Signal& y_h,
               SnrConvention convention = SnrConvention::ReconstructionPower);

/// Global maximum (first argmax) and its FWHM from linearly interpolated
/// half-height crossings found walking outward. Throws PeakNotFound when the
/// maximum sits on the boundary or a side never drops below half height.
PeakInfo detect_peak(const Signal& y);

/// |M_h - M_c| / M_c * 100.
double peak_height_error(const PeakInfo& denoised, const PeakInfo& clean);
/// |W_h - W_c| / W_c * 100.
double peak_width_error(const PeakInfo& denoised, const PeakInfo& clean);

}  // namespace scsa
