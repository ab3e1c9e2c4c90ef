#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "scsa/execution.hpp"
#include "scsa/signal.hpp"

namespace scsa {

/// Closed index range [first, last].
struct IndexInterval {
  std::size_t first = 0;
  std::size_t last = 0;

  std::size_t length() const noexcept { return last - first + 1; }
};

/// Curvature-penalized selection. With mu unset, mu = auto_mu(y_noisy, nu)
/// is computed once from the noisy input and held fixed over the scan.
struct CscsaConfig {
  std::optional<double> mu;
  int nu = 0;
};

/// Peak-region residual plus alpha / SNR estimated on a noise-dominant interval.
struct AlphaScsaConfig {
  double alpha = 1.0;
  std::vector<IndexInterval> peak_regions;
  IndexInterval noise_interval;
};

using CostConfig = std::variant<CscsaConfig, AlphaScsaConfig>;

/// Throws InvalidParams if parameters are out of range or intervals fall outside [0, n).
void validate(const CostConfig& cfg, std::size_t n);

struct HGrid {
  double h_min = 0.0;
  double h_max = 0.0;
  std::size_t count = 0;

  void validate() const;
  /// Geometric grid from h_min to h_max (both included), strictly increasing.
  std::vector<double> values() const;
};

struct CostTerms {
  double fidelity = 0.0;
  /// Weighted second term, so total = fidelity + penalty.
  double penalty = 0.0;

  double total() const noexcept { return fidelity + penalty; }
};

struct TraceEntry {
  double h = 0.0;
  double cost = 0.0;
  std::size_t n_h = 0;
  double fidelity = 0.0;
  double penalty = 0.0;
};

struct GridFailure {
  double h = 0.0;
  std::string message;
};

struct DenoiseResult {
  double h_star = 0.0;
  Signal y_h;
  std::size_t n_h = 0;
  double cost = 0.0;
  /// Resolved C-SCSA weight; unset for the alpha variant.
  std::optional<double> mu;
  std::vector<TraceEntry> trace;
  std::vector<GridFailure> failures;
};

CostTerms cost_cscsa_terms(const Signal& y_noisy, const Signal& y_h, double mu);
/// sum_i (y_noisy - y_h)^2 + mu * total_curvature(y_h).
double cost_cscsa(const Signal& y_noisy, const Signal& y_h, double mu);

/// (max|y_noisy| / total_curvature(y_noisy)) * 10^nu.
double auto_mu(const Signal& y_noisy, int nu = 0);

/// max|y_h| over all samples / population std of y_h on the interval.
double snr_estimate(const Signal& y_h, IndexInterval noise_interval);

CostTerms cost_alpha_scsa_terms(const Signal& y_noisy, const Signal& y_h,
                                const AlphaScsaConfig& cfg);
double cost_alpha_scsa(const Signal& y_noisy, const Signal& y_h, const AlphaScsaConfig& cfg);

/// h_max = (N delta / pi) sqrt(max(y_shifted)), h_min = h_max / 200.
HGrid default_h_grid(const Signal& y, std::size_t count = 50);

/// Index of the trace minimizer. Costs within a relative 1e-9 of the minimum
/// count as ties and the largest h among them wins. Trace must be non-empty.
std::size_t select_minimizer(std::span<const TraceEntry> trace);

/// Runs the SCSA transform at every grid point and keeps the cost minimizer.
/// Grid points whose transform or cost fails are reported in failures; if
/// all of them fail, throws NumericalFailure.
DenoiseResult scan_h(const Signal& y_noisy, const HGrid& grid, const CostConfig& cfg,
                     Execution exec = Execution::Parallel);

}  // namespace scsa
