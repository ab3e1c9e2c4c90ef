#include "scsa/param_select.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "scsa/curvature.hpp"
#include "scsa/error.hpp"
#include "scsa/spectral.hpp"

namespace scsa {
namespace {

constexpr double kTieTolerance = 1e-9;

void check_interval(const IndexInterval& iv, std::size_t n, const char* what) {
  if (iv.first > iv.last || iv.last >= n) {
    throw Error(ErrorKind::InvalidParams, std::string(what) + " [" + std::to_string(iv.first) +
                                              ", " + std::to_string(iv.last) +
                                              "] is empty or outside the signal");
  }
}

struct Visitor {
  std::size_t n;
  void operator()(const CscsaConfig& c) const {
    if (c.mu && !(*c.mu > 0.0 && std::isfinite(*c.mu))) {
      throw Error(ErrorKind::InvalidParams, "mu must be positive");
    }
  }
  void operator()(const AlphaScsaConfig& c) const {
    if (!(c.alpha > 0.0) || !std::isfinite(c.alpha)) {
      throw Error(ErrorKind::InvalidParams, "alpha must be positive");
    }
    if (c.peak_regions.empty()) throw Error(ErrorKind::InvalidParams, "no peak regions given");
    for (const auto& r : c.peak_regions) check_interval(r, n, "peak region");
    auto sorted = c.peak_regions;
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < sorted.size(); ++i) {
      if (sorted[i].first <= sorted[i - 1].last) {
        throw Error(ErrorKind::InvalidParams, "peak regions overlap");
      }
    }
    check_interval(c.noise_interval, n, "noise interval");
    if (c.noise_interval.length() < 2) {
      throw Error(ErrorKind::InvalidParams, "noise interval needs at least 2 samples");
    }
  }
};

}  // namespace

void validate(const CostConfig& cfg, std::size_t n) { std::visit(Visitor{n}, cfg); }

void HGrid::validate() const {
  if (!(h_min > 0.0) || !(h_max > h_min) || !std::isfinite(h_max)) {
    throw Error(ErrorKind::InvalidParams, "h grid needs 0 < h_min < h_max");
  }
  if (count < 2) throw Error(ErrorKind::InvalidParams, "h grid needs at least 2 points");
}

std::vector<double> HGrid::values() const {
  validate();
  std::vector<double> out(count);
  const double log_ratio = std::log(h_max / h_min) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = h_min * std::exp(log_ratio * static_cast<double>(i));
  }
  out.front() = h_min;
  out.back() = h_max;
  return out;
}

CostTerms cost_cscsa_terms(const Signal& y_noisy, const Signal& y_h, double mu) {
  require_same_grid(y_noisy, y_h);
  CostTerms terms;
  for (std::size_t i = 0; i < y_noisy.size(); ++i) {
    const double r = y_noisy[i] - y_h[i];
    terms.fidelity += r * r;
  }
  terms.penalty = mu * total_curvature(y_h);
  return terms;
}

double cost_cscsa(const Signal& y_noisy, const Signal& y_h, double mu) {
  return cost_cscsa_terms(y_noisy, y_h, mu).total();
}

double auto_mu(const Signal& y_noisy, int nu) {
  const double curvature = total_curvature(y_noisy);
  const double peak = y_noisy.max_abs();
  if (!(curvature > 0.0) || !(peak > 0.0)) {
    throw Error(ErrorKind::DegenerateInput,
                "input has zero total curvature or zero amplitude; supply mu directly");
  }
  return peak / curvature * std::pow(10.0, nu);
}

double snr_estimate(const Signal& y_h, IndexInterval noise_interval) {
  check_interval(noise_interval, y_h.size(), "noise interval");
  if (noise_interval.length() < 2) {
    throw Error(ErrorKind::InvalidParams, "noise interval needs at least 2 samples");
  }
  const auto values = y_h.samples().subspan(noise_interval.first, noise_interval.length());
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  double var = 0.0;
  for (double v : values) var += (v - mean) * (v - mean);
  var /= static_cast<double>(values.size());
  const double sd = std::sqrt(var);
  if (!(sd > 0.0)) {
    throw Error(ErrorKind::DegenerateInput, "reconstruction is constant on the noise interval");
  }
  return y_h.max_abs() / sd;
}

CostTerms cost_alpha_scsa_terms(const Signal& y_noisy, const Signal& y_h,
                                const AlphaScsaConfig& cfg) {
  require_same_grid(y_noisy, y_h);
  validate(CostConfig{cfg}, y_noisy.size());
  CostTerms terms;
  for (const auto& region : cfg.peak_regions) {
    for (std::size_t i = region.first; i <= region.last; ++i) {
      const double r = y_noisy[i] - y_h[i];
      terms.fidelity += r * r;
    }
  }
  terms.penalty = cfg.alpha / std::abs(snr_estimate(y_h, cfg.noise_interval));
  return terms;
}

double cost_alpha_scsa(const Signal& y_noisy, const Signal& y_h, const AlphaScsaConfig& cfg) {
  return cost_alpha_scsa_terms(y_noisy, y_h, cfg).total();
}

HGrid default_h_grid(const Signal& y, std::size_t count) {
  if (count < 2) throw Error(ErrorKind::InvalidParams, "h grid needs at least 2 points");
  const double lowest = y.min();
  const double top = lowest < 0.0 ? y.max() - lowest : y.max();
  if (!(top > 0.0)) {
    throw Error(ErrorKind::DegenerateInput, "shifted signal is identically zero");
  }
  const double length = static_cast<double>(y.size()) * y.delta();
  HGrid grid;
  grid.h_max = length / std::numbers::pi * std::sqrt(top);
  grid.h_min = grid.h_max / 200.0;
  grid.count = count;
  return grid;
}

std::size_t select_minimizer(std::span<const TraceEntry> trace) {
  if (trace.empty()) throw Error(ErrorKind::InvalidInput, "empty trace");
  double best = std::numeric_limits<double>::infinity();
  for (const auto& e : trace) best = std::min(best, e.cost);
  const double slack = kTieTolerance * std::abs(best);
  std::size_t pick = trace.size();
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (trace[i].cost - best <= slack && (pick == trace.size() || trace[i].h > trace[pick].h)) {
      pick = i;
    }
  }
  return pick;
}

DenoiseResult scan_h(const Signal& y_noisy, const HGrid& grid, const CostConfig& cfg,
                     Execution exec) {
  validate(cfg, y_noisy.size());
  const std::vector<double> hs = grid.values();
  const OperatorMatrix diff2 = fourier_diff2_matrix(y_noisy.size(), y_noisy.delta());

  std::optional<double> mu;
  if (const auto* c = std::get_if<CscsaConfig>(&cfg)) mu = c->mu ? *c->mu : auto_mu(y_noisy, c->nu);

  struct Slot {
    std::optional<TraceEntry> entry;
    std::optional<Signal> reconstruction;
    std::string failure;
  };
  std::vector<Slot> slots(hs.size());

  const auto evaluate = [&](std::size_t i) {
    Slot& slot = slots[i];
    try {
      ScsaResult r = scsa_transform(y_noisy, hs[i], diff2);
      const CostTerms terms =
          mu ? cost_cscsa_terms(y_noisy, r.reconstruction, *mu)
             : cost_alpha_scsa_terms(y_noisy, r.reconstruction, std::get<AlphaScsaConfig>(cfg));
      slot.entry = TraceEntry{hs[i], terms.total(), r.spectrum.count(), terms.fidelity,
                              terms.penalty};
      slot.reconstruction = std::move(r.reconstruction);
    } catch (const Error& e) {
      slot.failure = e.what();
    }
  };

  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < hs.size(); ++i) evaluate(i);
  } else {
    for (std::size_t i = 0; i < hs.size(); ++i) evaluate(i);
  }

  std::vector<TraceEntry> trace;
  std::vector<std::size_t> slot_of;
  std::vector<GridFailure> failures;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (slots[i].entry) {
      trace.push_back(*slots[i].entry);
      slot_of.push_back(i);
    } else {
      failures.push_back({hs[i], slots[i].failure});
    }
  }
  if (trace.empty()) {
    std::ostringstream msg;
    msg << "every grid point failed:";
    for (const auto& f : failures) msg << "\n  h=" << f.h << ": " << f.message;
    throw Error(ErrorKind::NumericalFailure, msg.str());
  }

  const std::size_t best = select_minimizer(trace);
  Slot& chosen = slots[slot_of[best]];
  return DenoiseResult{trace[best].h,   std::move(*chosen.reconstruction),
                       trace[best].n_h, trace[best].cost,
                       mu,              std::move(trace),
                       std::move(failures)};
}

}  // namespace scsa
