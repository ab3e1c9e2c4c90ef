#pragma once

#include <cstddef>
#include <vector>

#include "scsa/signal.hpp"

namespace scsa {

struct SGParams {
  std::size_t window = 29;
  std::size_t order = 4;

  void validate() const;
};

/// Least-squares smoothing weights for the sample at `position` inside a
/// window of p.window points (position = window / 2 gives the centred filter).
std::vector<double> savgol_coefficients(const SGParams& p, std::size_t position);

/// Savitzky-Golay smoothing. Samples closer than window/2 to an edge take the
/// polynomial fitted to the first (or last) full window.
Signal savitzky_golay(const Signal& y, const SGParams& p);

/// Centred mean; the window shrinks near the edges.
Signal moving_average(const Signal& y, std::size_t window);

}  // namespace scsa
