#include "scsa/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <map>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "CLI11.hpp"
#include "scsa/csv.hpp"
#include "scsa/curvature.hpp"
#include "scsa/metrics.hpp"
#include "scsa/signals.hpp"
#include "scsa/spectral.hpp"

namespace scsa::cli {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t\r");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

double to_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) {
    throw Error(ErrorKind::InvalidParams, "not a number: '" + s + "'");
  }
  return v;
}

std::size_t to_index(const std::string& s) {
  const double v = to_double(s);
  if (v < 0.0 || v != std::floor(v)) throw Error(ErrorKind::InvalidParams, "not an index: '" + s + "'");
  return static_cast<std::size_t>(v);
}

IndexInterval parse_interval(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 2) throw Error(ErrorKind::InvalidParams, "interval must be 'first:last'");
  return {to_index(parts[0]), to_index(parts[1])};
}

std::vector<IndexInterval> parse_intervals(const std::string& text) {
  std::vector<IndexInterval> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_interval(part));
  return out;
}

/// "a, b, c" or "start:stop:step" (stop included when reached).
std::vector<double> parse_values(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() == 3) {
    const double start = to_double(parts[0]);
    const double stop = to_double(parts[1]);
    const double step = to_double(parts[2]);
    if (!(step > 0.0) || stop < start) throw Error(ErrorKind::InvalidParams, "bad range '" + text + "'");
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i) out[i] = start + static_cast<double>(i) * step;
    return out;
  }
  std::vector<double> out;
  for (const auto& part : split(text, ',')) out.push_back(to_double(part));
  if (out.empty()) throw Error(ErrorKind::InvalidParams, "empty value list");
  return out;
}

GaussianPeakSpec parse_peaks(const std::string& text) {
  GaussianPeakSpec spec;
  for (const auto& part : split(text, ';')) {
    const auto fields = split(part, ':');
    if (fields.size() != 3) throw Error(ErrorKind::InvalidParams, "peak must be 'A:u:sigma'");
    spec.peaks.push_back({to_double(fields[0]), to_double(fields[1]), to_double(fields[2])});
  }
  return spec;
}

HGrid grid_for(const Signal& noisy, const MethodOptions& opts) {
  HGrid grid = default_h_grid(noisy, opts.grid_count);
  if (opts.h_min) grid.h_min = *opts.h_min;
  if (opts.h_max) grid.h_max = *opts.h_max;
  grid.validate();
  return grid;
}

double mean_finite(const std::vector<double>& values) {
  double sum = 0.0;
  std::size_t count = 0;
  for (double v : values) {
    if (std::isfinite(v)) {
      sum += v;
      ++count;
    }
  }
  return count ? sum / static_cast<double>(count) : kNaN;
}

void print_summary(std::ostream& out, double h, std::size_t n_h, double cost) {
  out << "h_star=" << format_number(h) << " n_h=" << n_h << " cost=" << format_number(cost) << '\n';
}

// Shared by run(): maps library errors onto the exit-code contract.
template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kIo;
  }
}

struct DenoiseFlags {
  std::string in, out, method = "cscsa", trace;
  std::optional<double> h, mu, alpha, h_min, h_max;
  int nu = 0;
  std::size_t grid_count = 50, window = 0, order = 4;
  std::string peak_regions, noise_interval;
};

int cmd_denoise(const DenoiseFlags& f, std::ostream& out) {
  MethodOptions opts;
  opts.cscsa.mu = f.mu;
  opts.cscsa.nu = f.nu;
  opts.grid_count = f.grid_count;
  opts.h_min = f.h_min;
  opts.h_max = f.h_max;
  if (f.method == "sg") {
    opts.sg = SGParams{f.window ? f.window : 29, f.order};
    opts.sg.validate();
  } else if (f.method == "ma") {
    opts.ma_window = f.window ? f.window : 5;
  } else if (f.method == "alpha_scsa") {
    if (!f.alpha || f.peak_regions.empty() || f.noise_interval.empty()) {
      throw Error(ErrorKind::InvalidParams,
                  "alpha_scsa needs --alpha, --peak-regions and --noise-interval");
    }
    opts.alpha = AlphaScsaConfig{*f.alpha, parse_intervals(f.peak_regions),
                                 parse_interval(f.noise_interval)};
  } else if (f.method != "cscsa") {
    throw Error(ErrorKind::InvalidParams, "unknown method '" + f.method + "'");
  }

  const Signal noisy = read_signal_csv(f.in);
  const bool scsa_method = f.method == "cscsa" || f.method == "alpha_scsa";
  if (scsa_method && opts.alpha) validate(CostConfig{*opts.alpha}, noisy.size());

  if (scsa_method && f.h) {
    const ScsaResult r = scsa_transform(noisy, *f.h);
    double cost = kNaN;
    try {
      cost = opts.alpha ? cost_alpha_scsa(noisy, r.reconstruction, *opts.alpha)
                        : cost_cscsa(noisy, r.reconstruction,
                                     f.mu ? *f.mu : auto_mu(noisy, f.nu));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DegenerateInput) throw;
    }
    write_signal_csv(resolve_output(f.out), r.reconstruction);
    print_summary(out, *f.h, r.spectrum.count(), cost);
    return kOk;
  }

  const MethodOutcome outcome = run_method(f.method, noisy, opts);
  write_signal_csv(resolve_output(f.out), outcome.denoised);
  if (outcome.scan) {
    const auto& s = *outcome.scan;
    if (!f.trace.empty()) {
      std::vector<std::vector<std::string>> rows;
      for (const auto& e : s.trace) {
        rows.push_back({format_number(e.h), format_number(e.cost), std::to_string(e.n_h),
                        format_number(e.fidelity), format_number(e.penalty)});
      }
      write_table_csv(resolve_output(f.trace), {"h", "cost", "n_h", "fidelity", "penalty"}, rows);
    }
    print_summary(out, s.h_star, s.n_h, s.cost);
  }
  return kOk;
}

struct GenFlags {
  std::string kind = "gaussian", out, peaks, noise_a, noise_b;
  std::size_t n = 512;
  std::optional<double> t0, delta, noise_level, snr_db;
  std::uint64_t seed = 0;
};

int cmd_gen(const GenFlags& f, std::ostream& out) {
  Signal y = [&] {
    if (!f.peaks.empty() || ((f.kind == "gaussian" || f.kind == "five-peak") && (f.t0 || f.delta))) {
      const GaussianPeakSpec spec = !f.peaks.empty() ? parse_peaks(f.peaks)
                                    : f.kind == "five-peak" ? five_peak_spec()
                                                            : single_peak_spec();
      const double delta = f.delta.value_or(1.0);
      return gaussian_peaks(spec, f.n, f.t0.value_or(-static_cast<double>(f.n / 2) * delta), delta);
    }
    return make_clean_signal(f.kind, f.n);
  }();

  if (f.noise_level) y = add_white_noise(y, *f.noise_level, f.seed);
  if (!f.noise_a.empty() || !f.noise_b.empty() || f.snr_db) {
    if (f.noise_a.empty() || f.noise_b.empty() || !f.snr_db) {
      throw Error(ErrorKind::InvalidParams, "mixture noise needs --noise-a, --noise-b and --snr-db");
    }
    const MixedNoise mixed =
        mix_noise(y, read_signal_csv(f.noise_a), read_signal_csv(f.noise_b), *f.snr_db);
    out << "k1=" << format_number(mixed.k1) << " k2=" << format_number(mixed.k2) << '\n';
    y = mixed.noisy;
  }
  write_signal_csv(resolve_output(f.out), y);
  return kOk;
}

int cmd_curvature(const std::string& in, const std::string& profile, std::ostream& out) {
  const Signal y = read_signal_csv(in);
  const CurvatureProfile k = discrete_curvature(y);
  out << "total_curvature=" << format_number(k.total()) << '\n';
  if (!profile.empty()) {
    std::vector<std::vector<std::string>> rows;
    rows.reserve(k.values.size());
    for (std::size_t m = 0; m < k.values.size(); ++m) {
      rows.push_back({format_number(y.time(m + 1)), format_number(k.values[m])});
    }
    write_table_csv(resolve_output(profile), {"t", "k"}, rows);
  }
  return kOk;
}

struct BenchFlags {
  std::string config, out, aggregate;
  std::optional<std::size_t> seeds;
  bool serial = false;
};

int cmd_bench(const BenchFlags& f, std::ostream& err) {
  BenchConfig cfg = load_bench_config(f.config);
  if (f.seeds) cfg.seeds = *f.seeds;
  if (f.serial) cfg.parallel = false;
  cfg.validate();

  std::vector<std::string> warnings;
  const auto rows = run_bench(cfg, &warnings);
  for (const auto& w : warnings) err << "warning: " << w << '\n';

  const std::filesystem::path detail = resolve_output(f.out);
  std::filesystem::path aggregate = f.aggregate.empty() ? std::filesystem::path{} : resolve_output(f.aggregate);
  if (aggregate.empty()) {
    aggregate = detail;
    aggregate.replace_filename(detail.stem().string() + "_aggregate" + detail.extension().string());
  }
  write_bench_detail(detail, rows);
  write_bench_aggregate(aggregate, rows);
  return kOk;
}

}  // namespace

int exit_code_for(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidParams: return kUsage;
    case ErrorKind::Io: return kIo;
    case ErrorKind::NumericalFailure: return kNumerical;
    case ErrorKind::InvalidGrid:
    case ErrorKind::InvalidSignal:
    case ErrorKind::InvalidInput:
    case ErrorKind::DegenerateInput:
    case ErrorKind::PeakNotFound:
    case ErrorKind::MalformedData: return kMalformed;
  }
  return kUsage;
}

std::filesystem::path resolve_output(const std::filesystem::path& path) {
  if (path.is_absolute()) return path;
  if (const char* dir = std::getenv("SCSA_OUTPUT_DIR"); dir && *dir) {
    return std::filesystem::path(dir) / path;
  }
  return path;
}

MethodOutcome run_method(const std::string& method, const Signal& noisy, const MethodOptions& opts,
                         Execution exec) {
  if (method == "cscsa" || method == "alpha_scsa") {
    CostConfig cfg = opts.cscsa;
    if (method == "alpha_scsa") {
      if (!opts.alpha) throw Error(ErrorKind::InvalidParams, "alpha_scsa needs its parameters");
      cfg = *opts.alpha;
    }
    DenoiseResult result = scan_h(noisy, grid_for(noisy, opts), cfg, exec);
    Signal y = result.y_h;
    return {std::move(y), std::move(result)};
  }
  if (method == "sg") return {savitzky_golay(noisy, opts.sg), std::nullopt};
  if (method == "ma") return {moving_average(noisy, opts.ma_window), std::nullopt};
  if (method == "none") return {noisy, std::nullopt};
  throw Error(ErrorKind::InvalidParams, "unknown method '" + method + "'");
}

Signal make_clean_signal(const std::string& kind, std::size_t n) {
  if (kind == "gaussian") return gaussian_peaks(single_peak_spec(), n);
  if (kind == "five-peak") return gaussian_peaks(five_peak_spec(), n);
  if (kind == "sech2") return reflectionless_potential(n);
  if (const auto standard = parse_standard_signal(kind)) return standard_test_signal(*standard, n);
  throw Error(ErrorKind::InvalidParams, "unknown signal kind '" + kind + "'");
}

void BenchConfig::validate() const {
  if (signals.empty()) throw Error(ErrorKind::InvalidParams, "no signals configured");
  if (methods.empty()) throw Error(ErrorKind::InvalidParams, "no methods configured");
  if (seeds == 0) throw Error(ErrorKind::InvalidParams, "seed count must be positive");
  if (noise_values.empty()) throw Error(ErrorKind::InvalidParams, "no noise values configured");
  if (record_a.has_value() != record_b.has_value()) {
    throw Error(ErrorKind::InvalidParams, "give both noise records or neither");
  }
  for (const auto& s : signals) make_clean_signal(s, n);
  for (const auto& m : methods) {
    if (m != "cscsa" && m != "alpha_scsa" && m != "sg" && m != "ma" && m != "none") {
      throw Error(ErrorKind::InvalidParams, "unknown method '" + m + "'");
    }
    if (m == "alpha_scsa" && !options.alpha) {
      throw Error(ErrorKind::InvalidParams, "alpha_scsa needs an [alpha_scsa] section");
    }
  }
  if (mode == NoiseMode::White) {
    for (double v : noise_values) white_noise_sigma(Signal(std::vector<double>(8, 1.0), 1.0), v);
  }
  options.sg.validate();
  if (options.ma_window % 2 == 0) throw Error(ErrorKind::InvalidParams, "ma window must be odd");
  if (options.alpha) scsa::validate(CostConfig{*options.alpha}, n);
}

BenchConfig load_bench_config(const std::filesystem::path& path) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  try {
    pt::read_ini(path.string(), tree);
  } catch (const pt::ini_parser_error& e) {
    const bool missing = !std::filesystem::exists(path);
    throw Error(missing ? ErrorKind::Io : ErrorKind::InvalidParams, e.what());
  }

  BenchConfig cfg;
  try {
    const auto text = [&](const char* key) { return tree.get_optional<std::string>(key); };
    if (auto v = text("bench.n")) cfg.n = to_index(*v);
    if (auto v = text("bench.seeds")) cfg.seeds = to_index(*v);
    if (auto v = text("bench.seed")) cfg.seed = to_index(*v);
    if (auto v = text("bench.parallel")) cfg.parallel = (*v == "true" || *v == "1" || *v == "yes");
    if (auto v = text("signals.kinds")) cfg.signals = split(*v, ',');
    if (auto v = text("noise.mode")) {
      if (*v == "white") cfg.mode = NoiseMode::White;
      else if (*v == "mixture") cfg.mode = NoiseMode::Mixture;
      else throw Error(ErrorKind::InvalidParams, "noise.mode must be white or mixture");
    }
    if (cfg.mode == NoiseMode::White) {
      if (auto v = text("noise.levels")) cfg.noise_values = parse_values(*v);
    } else {
      cfg.noise_values = {10.0};
      if (auto v = text("noise.snr_db")) cfg.noise_values = parse_values(*v);
    }
    if (auto v = text("noise.record_a")) cfg.record_a = *v;
    if (auto v = text("noise.record_b")) cfg.record_b = *v;
    if (auto v = text("methods.list")) cfg.methods = split(*v, ',');

    auto& o = cfg.options;
    if (auto v = text("cscsa.mu")) o.cscsa.mu = to_double(*v);
    if (auto v = text("cscsa.nu")) o.cscsa.nu = static_cast<int>(to_double(*v));
    if (auto v = text("cscsa.grid_count")) o.grid_count = to_index(*v);
    if (auto v = text("cscsa.h_min")) o.h_min = to_double(*v);
    if (auto v = text("cscsa.h_max")) o.h_max = to_double(*v);
    if (auto v = text("sg.window")) o.sg.window = to_index(*v);
    if (auto v = text("sg.order")) o.sg.order = to_index(*v);
    if (auto v = text("ma.window")) o.ma_window = to_index(*v);
    if (tree.get_child_optional("alpha_scsa")) {
      AlphaScsaConfig a;
      if (auto v = text("alpha_scsa.alpha")) a.alpha = to_double(*v);
      if (auto v = text("alpha_scsa.peak_regions")) a.peak_regions = parse_intervals(*v);
      if (auto v = text("alpha_scsa.noise_interval")) a.noise_interval = parse_interval(*v);
      o.alpha = a;
    }
  } catch (const pt::ptree_error& e) {
    throw Error(ErrorKind::InvalidParams, e.what());
  }
  cfg.validate();
  return cfg;
}

std::vector<BenchRow> run_bench(const BenchConfig& cfg, std::vector<std::string>* warnings) {
  cfg.validate();
  std::optional<Signal> record_a, record_b;
  if (cfg.record_a) {
    record_a = read_signal_csv(*cfg.record_a);
    record_b = read_signal_csv(*cfg.record_b);
  }

  std::vector<Signal> clean;
  std::vector<std::optional<PeakInfo>> clean_peak;
  for (const auto& name : cfg.signals) {
    clean.push_back(make_clean_signal(name, cfg.n));
    try {
      clean_peak.push_back(detect_peak(clean.back()));
    } catch (const Error&) {
      clean_peak.emplace_back();
    }
  }

  const std::size_t n_sig = cfg.signals.size();
  const std::size_t n_noise = cfg.noise_values.size();
  const std::size_t n_method = cfg.methods.size();
  const std::size_t n_seed = cfg.seeds;
  const std::size_t cells = n_sig * n_noise * n_seed;

  std::vector<BenchRow> rows(cells * n_method);
  std::vector<std::string> cell_warnings(cells);
  const auto row_index = [&](std::size_t s, std::size_t l, std::size_t m, std::size_t k) {
    return ((s * n_noise + l) * n_method + m) * n_seed + k;
  };

  const auto run_cell = [&](std::size_t cell) {
    const std::size_t k = cell % n_seed;
    const std::size_t l = (cell / n_seed) % n_noise;
    const std::size_t s = cell / (n_seed * n_noise);
    const std::uint64_t seed = cfg.seed + k;
    const double noise = cfg.noise_values[l];

    std::optional<Signal> noisy;
    std::string problem;
    try {
      if (cfg.mode == NoiseMode::White) {
        noisy = add_white_noise(clean[s], noise, seed);
      } else if (record_a) {
        noisy = mix_noise(clean[s], *record_a, *record_b, noise).noisy;
      } else {
        const auto [a, b] = synthetic_noise_records(cfg.n, seed);
        noisy = mix_noise(clean[s], a, b, noise).noisy;
      }
    } catch (const Error& e) {
      problem = e.what();
    }

    for (std::size_t m = 0; m < n_method; ++m) {
      BenchRow& row = rows[row_index(s, l, m, k)];
      row = {cfg.signals[s], cfg.n, noise, cfg.methods[m], seed, kNaN, kNaN, kNaN, kNaN};
      if (!noisy) continue;
      try {
        const MethodOutcome outcome = run_method(cfg.methods[m], *noisy, cfg.options, Execution::Serial);
        row.mse = mse(clean[s], outcome.denoised);
        row.snr_out_db = snr_out(clean[s], outcome.denoised);
        if (clean_peak[s]) {
          try {
            const PeakInfo p = detect_peak(outcome.denoised);
            row.peak_height_err = peak_height_error(p, *clean_peak[s]);
            row.peak_width_err = peak_width_error(p, *clean_peak[s]);
          } catch (const Error&) {
          }
        }
      } catch (const Error& e) {
        problem += (problem.empty() ? "" : "; ") + cfg.methods[m] + ": " + e.what();
      }
    }
    if (!problem.empty()) {
      cell_warnings[cell] = cfg.signals[s] + " noise=" + format_number(noise) +
                            " seed=" + std::to_string(seed) + ": " + problem;
    }
  };

  if (cfg.parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t cell = 0; cell < cells; ++cell) run_cell(cell);
  } else {
    for (std::size_t cell = 0; cell < cells; ++cell) run_cell(cell);
  }

  if (warnings) {
    for (auto& w : cell_warnings) {
      if (!w.empty()) warnings->push_back(std::move(w));
    }
  }
  return rows;
}

void write_bench_detail(const std::filesystem::path& path, const std::vector<BenchRow>& rows) {
  std::vector<std::vector<std::string>> cells;
  cells.reserve(rows.size());
  for (const auto& r : rows) {
    cells.push_back({r.signal, std::to_string(r.n), format_number(r.noise), r.method,
                     std::to_string(r.seed), format_number(r.mse), format_number(r.snr_out_db),
                     format_number(r.peak_height_err), format_number(r.peak_width_err)});
  }
  write_table_csv(path,
                  {"signal", "n", "noise", "method", "seed", "mse", "snr_out_db",
                   "peak_height_err", "peak_width_err"},
                  cells);
}

void write_bench_aggregate(const std::filesystem::path& path, const std::vector<BenchRow>& rows) {
  // Rows arrive grouped by (signal, noise, method); seeds are contiguous.
  std::vector<std::vector<std::string>> cells;
  std::size_t i = 0;
  while (i < rows.size()) {
    std::size_t j = i;
    std::vector<double> m, s, ph, pw;
    while (j < rows.size() && rows[j].signal == rows[i].signal && rows[j].noise == rows[i].noise &&
           rows[j].method == rows[i].method && rows[j].n == rows[i].n) {
      m.push_back(rows[j].mse);
      s.push_back(rows[j].snr_out_db);
      ph.push_back(rows[j].peak_height_err);
      pw.push_back(rows[j].peak_width_err);
      ++j;
    }
    cells.push_back({rows[i].signal, std::to_string(rows[i].n), format_number(rows[i].noise),
                     rows[i].method, std::to_string(j - i), format_number(mean_finite(m)),
                     format_number(mean_finite(s)), format_number(mean_finite(ph)),
                     format_number(mean_finite(pw))});
    i = j;
  }
  write_table_csv(path,
                  {"signal", "n", "noise", "method", "runs", "mse", "snr_out_db",
                   "peak_height_err", "peak_width_err"},
                  cells);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Semi-classical signal analysis denoising toolkit", "scsa"};
  app.require_subcommand(1);

  GenFlags gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a test signal as t,y CSV");
  gen_cmd->add_option("--kind", gen.kind,
                      "gaussian | five-peak | sech2 | doppler | blocks | bumps | "
                      "piecewise-regular | heavisine | sing");
  gen_cmd->add_option("--n", gen.n, "Sample count")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--t0", gen.t0, "Start time (peak signals)");
  gen_cmd->add_option("--delta", gen.delta, "Sampling interval (peak signals)")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--peaks", gen.peaks, "Custom peaks 'A:u:sigma;A:u:sigma'");
  gen_cmd->add_option("--noise-level", gen.noise_level, "White noise level in percent");
  gen_cmd->add_option("--noise-a", gen.noise_a, "First noise record CSV");
  gen_cmd->add_option("--noise-b", gen.noise_b, "Second noise record CSV");
  gen_cmd->add_option("--snr-db", gen.snr_db, "Target input SNR for the record mixture");
  gen_cmd->add_option("--seed", gen.seed, "Noise seed");
  gen_cmd->add_option("--out", gen.out, "Output CSV")->required();

  DenoiseFlags den;
  auto* den_cmd = app.add_subcommand("denoise", "Denoise a t,y CSV");
  den_cmd->set_help_flag("--help", "Print this help message and exit");
  den_cmd->add_option("--in", den.in, "Input CSV")->required();
  den_cmd->add_option("--out", den.out, "Output CSV")->required();
  den_cmd->add_option("--method", den.method, "cscsa | alpha_scsa | sg | ma");
  den_cmd->add_option("--h", den.h, "Fixed h instead of a scan")->check(CLI::PositiveNumber);
  den_cmd->add_option("--mu", den.mu, "Curvature weight (default: automatic)");
  den_cmd->add_option("--nu", den.nu, "Exponent for the automatic curvature weight");
  den_cmd->add_option("--grid-count", den.grid_count, "Number of h grid points");
  den_cmd->add_option("--h-min", den.h_min, "Smallest h in the grid");
  den_cmd->add_option("--h-max", den.h_max, "Largest h in the grid");
  den_cmd->add_option("--alpha", den.alpha, "alpha_scsa weight");
  den_cmd->add_option("--peak-regions", den.peak_regions, "alpha_scsa peaks 'a:b,c:d' (indices)");
  den_cmd->add_option("--noise-interval", den.noise_interval, "alpha_scsa noise interval 'a:b'");
  den_cmd->add_option("--window", den.window, "Window length (sg, ma)");
  den_cmd->add_option("--order", den.order, "Polynomial order (sg)");
  den_cmd->add_option("--trace", den.trace, "Write the h-scan trace CSV");

  BenchFlags bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run a denoising benchmark from a config file");
  bench_cmd->add_option("--config", bench.config, "Benchmark config (INI)")->required();
  bench_cmd->add_option("--out", bench.out, "Detail CSV")->required();
  bench_cmd->add_option("--aggregate", bench.aggregate, "Aggregate CSV (default <out>_aggregate.csv)");
  bench_cmd->add_option("--seeds", bench.seeds, "Override the seed count");
  bench_cmd->add_flag("--serial", bench.serial, "Disable OpenMP over benchmark cells");

  std::string curv_in, curv_profile;
  auto* curv_cmd = app.add_subcommand("curvature", "Total discrete curvature of a t,y CSV");
  curv_cmd->add_option("--in", curv_in, "Input CSV")->required();
  curv_cmd->add_option("--profile", curv_profile, "Write per-sample curvature CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return kOk;
    const auto chosen = app.get_subcommands();
    err << (chosen.empty() ? app.help() : chosen.front()->help());
    return kUsage;
  }

  return guarded(err, [&] {
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*den_cmd) return cmd_denoise(den, out);
    if (*bench_cmd) return cmd_bench(bench, err);
    return cmd_curvature(curv_in, curv_profile, out);
  });
}

}  // namespace scsa::cli
