#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace scsa::testing {

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool passed() const noexcept { return cases > 0 && failures == 0; }
};

// Each check draws `cases` random inputs from seeds base_seed, base_seed + 1, ...
PropertyResult check_eigenfunctions_orthonormal(std::size_t cases, std::uint64_t base_seed);
PropertyResult check_kappa_bounds(std::size_t cases, std::uint64_t base_seed);
PropertyResult check_reconstruction_above_negative_shift(std::size_t cases, std::uint64_t base_seed);
PropertyResult check_count_monotone_in_h(std::size_t cases, std::uint64_t base_seed);
PropertyResult check_curvature_invariances(std::size_t cases, std::uint64_t base_seed);
PropertyResult check_cost_nonnegative_and_monotone(std::size_t cases, std::uint64_t base_seed);
PropertyResult check_snr_scale_invariance(std::size_t cases, std::uint64_t base_seed);
PropertyResult check_mse_metric(std::size_t cases, std::uint64_t base_seed);
PropertyResult check_filter_linearity(std::size_t cases, std::uint64_t base_seed);
PropertyResult check_scan_deterministic(std::size_t cases, std::uint64_t base_seed);
PropertyResult check_noise_deterministic(std::size_t cases, std::uint64_t base_seed);

std::vector<PropertyResult> run_all_properties(std::size_t cases = 100, std::uint64_t base_seed = 20240601);

}  // namespace scsa::testing
