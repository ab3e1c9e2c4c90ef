#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "scsa/execution.hpp"
#include "scsa/signal.hpp"

namespace scsa {

/// Curvature k_m at interior samples m = 1..N-2 (zero-based). Values are >= 0.
struct CurvatureProfile {
  std::vector<double> values;
  double delta = 1.0;

  double total() const noexcept;
};

/// Parameters of the jointly Gaussian first differences x_m, w_m:
/// common standard deviation sigma, correlation rho, grid spacing delta.
struct NoiseModelParams {
  double sigma = 1.0;
  double rho = 0.0;
  double delta = 1.0;

  void validate() const;
};

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
};

/// k_m = |x_m - w_m| / (delta^2 (1 + (x_m + w_m)^2 / (4 delta^2))^{3/2}),
/// x_m = y_{m+1} - y_m, w_m = y_m - y_{m-1}. Needs at least 3 samples.
CurvatureProfile discrete_curvature(std::span<const double> y, double delta);
CurvatureProfile discrete_curvature(const Signal& y);

double total_curvature(std::span<const double> y, double delta);
double total_curvature(const Signal& y);

/// Closed-form expectation of k_m under the Gaussian difference model,
/// reduced to a one-dimensional integral and evaluated by adaptive quadrature.
double expected_curvature(const NoiseModelParams& p);

/// Brute-force estimate of the same expectation: draws (x, w) from the joint
/// Gaussian and averages k. Samples are drawn in fixed blocks with one
/// seeded stream per block, so the result is independent of thread count.
McEstimate mc_curvature_estimate(const NoiseModelParams& p, std::size_t n_samples,
                                 std::uint64_t seed, Execution exec = Execution::Parallel);

double mc_expected_curvature(const NoiseModelParams& p, std::size_t n_samples, std::uint64_t seed,
                             Execution exec = Execution::Parallel);

}  // namespace scsa
