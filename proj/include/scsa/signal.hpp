#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace scsa {

/// Uniformly sampled real series. Samples are finite, delta > 0 and there
/// are at least kMinSamples of them; the constructor enforces all three.
class Signal {
 public:
  static constexpr std::size_t kMinSamples = 8;

  Signal(std::vector<double> samples, double delta, double t0 = 0.0);

  std::span<const double> samples() const noexcept { return samples_; }
  const std::vector<double>& values() const noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.size(); }
  double delta() const noexcept { return delta_; }
  /// Time of the first sample.
  double t0() const noexcept { return t0_; }
  double time(std::size_t i) const noexcept { return t0_ + static_cast<double>(i) * delta_; }
  double operator[](std::size_t i) const noexcept { return samples_[i]; }

  double min() const noexcept;
  double max() const noexcept;
  double max_abs() const noexcept;

  /// Same grid, new values.
  Signal with_samples(std::vector<double> samples) const;

 private:
  std::vector<double> samples_;
  double delta_;
  double t0_;
};

/// Throws InvalidInput unless both signals share length and spacing.
void require_same_grid(const Signal& a, const Signal& b);

}  // namespace scsa
