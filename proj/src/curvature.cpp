#include "scsa/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "scsa/error.hpp"

namespace scsa {
namespace {

constexpr std::size_t kMinMcSamples = 100'000;
constexpr std::size_t kMcBlock = 1u << 16;

inline double curvature_at(double x, double w, double delta) {
  const double slope = (x + w) / (2.0 * delta);
  const double base = 1.0 + slope * slope;
  return std::abs(x - w) / (delta * delta * base * std::sqrt(base));
}

struct BlockSums {
  double sum = 0.0;
  double sum_sq = 0.0;
};

BlockSums mc_block(const NoiseModelParams& p, std::uint64_t seed, std::size_t block,
                   std::size_t count) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> normal(0.0, 1.0);
  const double cross = std::sqrt(1.0 - p.rho * p.rho);

  BlockSums out;
  for (std::size_t i = 0; i < count; ++i) {
    const double z1 = normal(rng);
    const double z2 = normal(rng);
    // Cholesky factor of [[s^2, rho s^2], [rho s^2, s^2]].
    const double x = p.sigma * z1;
    const double w = p.sigma * (p.rho * z1 + cross * z2);
    const double k = curvature_at(x, w, p.delta);
    out.sum += k;
    out.sum_sq += k * k;
  }
  return out;
}

}  // namespace

double CurvatureProfile::total() const noexcept {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum;
}

void NoiseModelParams::validate() const {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw Error(ErrorKind::InvalidParams, "sigma must be positive");
  }
  if (!(std::abs(rho) < 1.0)) throw Error(ErrorKind::InvalidParams, "|rho| must be < 1");
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw Error(ErrorKind::InvalidParams, "delta must be positive");
  }
}

CurvatureProfile discrete_curvature(std::span<const double> y, double delta) {
  if (y.size() < 3) {
    throw Error(ErrorKind::InvalidSignal, "curvature needs at least 3 samples");
  }
  if (!(delta > 0.0)) throw Error(ErrorKind::InvalidSignal, "delta must be positive");
  CurvatureProfile profile;
  profile.delta = delta;
  profile.values.resize(y.size() - 2);
  for (std::size_t m = 1; m + 1 < y.size(); ++m) {
    profile.values[m - 1] = curvature_at(y[m + 1] - y[m], y[m] - y[m - 1], delta);
  }
  return profile;
}

CurvatureProfile discrete_curvature(const Signal& y) {
  return discrete_curvature(y.samples(), y.delta());
}

double total_curvature(std::span<const double> y, double delta) {
  return discrete_curvature(y, delta).total();
}

double total_curvature(const Signal& y) { return discrete_curvature(y).total(); }

double expected_curvature(const NoiseModelParams& p) {
  p.validate();
  using std::numbers::pi;
  const double decay = (p.delta * p.delta) / (p.sigma * p.sigma * (1.0 + p.rho));
  double integral = 0.0;
  double error = 0.0;
  if (decay <= 1.0) {
    // eta = tan(theta): (1 + eta^2)^{-3/2} d eta = cos(theta) d theta.
    auto integrand = [decay](double theta) {
      const double t = std::tan(theta);
      const double g = std::exp(-decay * t * t);
      return g == 0.0 ? 0.0 : std::cos(theta) * g;
    };
    integral = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(integrand, 0.0, pi / 2.0, 15,
                                                                              1e-12, &error);
  } else {
    // eta = s / sqrt(decay) keeps the Gaussian at unit width; e^{-s^2} underflows before s = 40.
    auto integrand = [decay](double s) { return std::exp(-s * s) * std::pow(1.0 + s * s / decay, -1.5); };
    const double scale = 1.0 / std::sqrt(decay);
    integral = scale * boost::math::quadrature::gauss_kronrod<double, 31>::integrate(integrand, 0.0, 40.0, 15,
                                                                                      1e-12, &error);
    error *= scale;
  }
  if (!std::isfinite(integral) || error > 1e-10) {
    throw Error(ErrorKind::NumericalFailure, "curvature expectation quadrature did not converge");
  }
  const double prefactor = 4.0 / (pi * p.delta) * std::sqrt((1.0 - p.rho) / (1.0 + p.rho));
  return prefactor * integral;
}

McEstimate mc_curvature_estimate(const NoiseModelParams& p, std::size_t n_samples,
                                 std::uint64_t seed, Execution exec) {
  p.validate();
  if (n_samples < kMinMcSamples) {
    throw Error(ErrorKind::InvalidParams,
                "Monte-Carlo estimate needs at least " + std::to_string(kMinMcSamples) + " samples");
  }
  const std::size_t blocks = (n_samples + kMcBlock - 1) / kMcBlock;
  std::vector<BlockSums> partial(blocks);
  const auto run = [&](std::size_t b) {
    const std::size_t count = std::min(kMcBlock, n_samples - b * kMcBlock);
    partial[b] = mc_block(p, seed, b, count);
  };

  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t b = 0; b < blocks; ++b) run(b);
  } else {
    for (std::size_t b = 0; b < blocks; ++b) run(b);
  }

  BlockSums total;
  for (const auto& s : partial) {
    total.sum += s.sum;
    total.sum_sq += s.sum_sq;
  }
  const double n = static_cast<double>(n_samples);
  const double mean = total.sum / n;
  const double var = std::max(0.0, total.sum_sq / n - mean * mean) * n / (n - 1.0);
  return {mean, std::sqrt(var / n)};
}

double mc_expected_curvature(const NoiseModelParams& p, std::size_t n_samples, std::uint64_t seed,
                             Execution exec) {
  return mc_curvature_estimate(p, n_samples, seed, exec).mean;
}

}  // namespace scsa
