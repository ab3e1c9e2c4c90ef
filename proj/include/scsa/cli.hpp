#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "scsa/baselines.hpp"
#include "scsa/error.hpp"
#include "scsa/execution.hpp"
#include "scsa/param_select.hpp"
#include "scsa/signal.hpp"

namespace scsa::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kIo = 2, kMalformed = 3, kNumerical = 4 };

int exit_code_for(ErrorKind kind) noexcept;

struct MethodOptions {
  CscsaConfig cscsa;
  std::optional<AlphaScsaConfig> alpha;
  SGParams sg;
  std::size_t ma_window = 5;
  std::size_t grid_count = 50;
  std::optional<double> h_min;
  std::optional<double> h_max;
};

struct MethodOutcome {
  Signal denoised;
  std::optional<DenoiseResult> scan;
};

/// Methods: cscsa, alpha_scsa, sg, ma, none (identity).
MethodOutcome run_method(const std::string& method, const Signal& noisy, const MethodOptions& opts,
                         Execution exec = Execution::Parallel);

/// gaussian, five-peak, sech2, or any standard test signal name.
Signal make_clean_signal(const std::string& kind, std::size_t n);

enum class NoiseMode { White, Mixture };

struct BenchConfig {
  std::vector<std::string> signals{"gaussian"};
  std::size_t n = 512;
  std::size_t seeds = 3;
  std::uint64_t seed = 0;
  NoiseMode mode = NoiseMode::White;
  /// Percent levels (white) or target input SNRs in dB (mixture).
  std::vector<double> noise_values{5.0};
  std::optional<std::filesystem::path> record_a;
  std::optional<std::filesystem::path> record_b;
  std::vector<std::string> methods{"cscsa", "sg"};
  MethodOptions options;
  bool parallel = true;

  void validate() const;
};

/// INI-style file; see docs/bench_config.md for the schema.
BenchConfig load_bench_config(const std::filesystem::path& path);

struct BenchRow {
  std::string signal;
  std::size_t n = 0;
  double noise = 0.0;
  std::string method;
  std::uint64_t seed = 0;
  double mse = 0.0;
  double snr_out_db = 0.0;
  double peak_height_err = 0.0;
  double peak_width_err = 0.0;
};

/// Rows ordered by (signal, noise, method, seed) in config order, whatever
/// the execution mode. Per-cell failures become NaN rows plus a warning.
std::vector<BenchRow> run_bench(const BenchConfig& cfg, std::vector<std::string>* warnings = nullptr);

void write_bench_detail(const std::filesystem::path& path, const std::vector<BenchRow>& rows);
/// Per (signal, n, noise, method) means over seeds, ignoring non-finite values.
void write_bench_aggregate(const std::filesystem::path& path, const std::vector<BenchRow>& rows);

/// Relative output paths are placed under $SCSA_OUTPUT_DIR when it is set.
std::filesystem::path resolve_output(const std::filesystem::path& path);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace scsa::cli
