#include "scsa/metrics.hpp"

#include <cmath>
#include <limits>

#include "scsa/error.hpp"

namespace scsa {

double mse(const Signal& a, const Signal& b) {
  require_same_grid(a, b);
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return acc / static_cast<double>(a.size());
}

double snr_out(const Signal& y_clean, const Signal& y_h, SnrConvention convention) {
  require_same_grid(y_clean, y_h);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < y_clean.size(); ++i) {
    const double ref = convention == SnrConvention::ReconstructionPower ? y_h[i] : y_clean[i];
    const double d = y_clean[i] - y_h[i];
    num += ref * ref;
    den += d * d;
  }
  if (den == 0.0) return std::numeric_limits<double>::infinity();
  if (num == 0.0) return -std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(num / den);
}

PeakInfo detect_peak(const Signal& y) {
  const std::size_t n = y.size();
  std::size_t top = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (y[i] > y[top]) top = i;
  }
  if (top == 0 || top == n - 1) {
    throw Error(ErrorKind::PeakNotFound, "maximum lies on the signal boundary");
  }
  const double height = y[top];
  if (!(height > 0.0)) throw Error(ErrorKind::PeakNotFound, "maximum is not positive");
  const double half = height / 2.0;

  // Fractional index where the signal crosses `half` between i and j.
  const auto crossing = [&](std::size_t inside, std::size_t outside) {
    const double a = y[inside];
    const double b = y[outside];
    const double frac = (a - half) / (a - b);
    return static_cast<double>(inside) +
           frac * (static_cast<double>(outside) - static_cast<double>(inside));
  };

  std::size_t left = top;
  while (left > 0 && y[left - 1] >= half) --left;
  if (left == 0) throw Error(ErrorKind::PeakNotFound, "no half-height crossing left of the peak");
  std::size_t right = top;
  while (right + 1 < n && y[right + 1] >= half) ++right;
  if (right == n - 1) {
    throw Error(ErrorKind::PeakNotFound, "no half-height crossing right of the peak");
  }

  const double width = (crossing(right, right + 1) - crossing(left, left - 1)) * y.delta();
  return {height, top, width};
}

double peak_height_error(const PeakInfo& denoised, const PeakInfo& clean) {
  if (clean.height == 0.0) throw Error(ErrorKind::InvalidInput, "clean peak height is zero");
  return std::abs(denoised.height - clean.height) / std::abs(clean.height) * 100.0;
}

double peak_width_error(const PeakInfo& denoised, const PeakInfo& clean) {
  if (!(clean.fwhm > 0.0)) throw Error(ErrorKind::InvalidInput, "clean peak width is not positive");
  return std::abs(denoised.fwhm - clean.fwhm) / clean.fwhm * 100.0;
}

}  // namespace scsa
