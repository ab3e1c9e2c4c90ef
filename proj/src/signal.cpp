#include "scsa/signal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "scsa/error.hpp"

namespace scsa {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidGrid: return "InvalidGrid";
    case ErrorKind::InvalidSignal: return "InvalidSignal";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::NumericalFailure: return "NumericalFailure";
    case ErrorKind::PeakNotFound: return "PeakNotFound";
    case ErrorKind::Io: return "Io";
    case ErrorKind::MalformedData: return "MalformedData";
  }
  return "Unknown";
}

Signal::Signal(std::vector<double> samples, double delta, double t0)
    : samples_(std::move(samples)), delta_(delta), t0_(t0) {
  if (samples_.size() < kMinSamples) {
    throw Error(ErrorKind::InvalidSignal,
                "signal needs at least " + std::to_string(kMinSamples) + " samples, got " +
                    std::to_string(samples_.size()));
  }
  if (!(delta_ > 0.0) || !std::isfinite(delta_)) {
    throw Error(ErrorKind::InvalidSignal, "sampling interval must be positive and finite");
  }
  if (!std::isfinite(t0_)) throw Error(ErrorKind::InvalidSignal, "start time must be finite");
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    if (!std::isfinite(samples_[i])) {
      throw Error(ErrorKind::InvalidSignal, "non-finite sample at index " + std::to_string(i));
    }
  }
}

double Signal::min() const noexcept { return *std::min_element(samples_.begin(), samples_.end()); }

double Signal::max() const noexcept { return *std::max_element(samples_.begin(), samples_.end()); }

double Signal::max_abs() const noexcept {
  double m = 0.0;
  for (double v : samples_) m = std::max(m, std::abs(v));
  return m;
}

Signal Signal::with_samples(std::vector<double> samples) const {
  return Signal(std::move(samples), delta_, t0_);
}

void require_same_grid(const Signal& a, const Signal& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::InvalidInput, "length mismatch: " + std::to_string(a.size()) + " vs " +
                                             std::to_string(b.size()));
  }
  if (std::abs(a.delta() - b.delta()) > 1e-12 * std::max(a.delta(), b.delta())) {
    throw Error(ErrorKind::InvalidInput, "sampling interval mismatch");
  }
}

}  // namespace scsa
