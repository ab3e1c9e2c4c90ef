#include "scsa/baselines.hpp"

#include <algorithm>
#include <string>

#include <Eigen/Dense>

#include "scsa/error.hpp"

namespace scsa {

void SGParams::validate() const {
  if (window < 3 || window % 2 == 0) {
    throw Error(ErrorKind::InvalidParams, "Savitzky-Golay window must be odd and >= 3");
  }
  if (order >= window) {
    throw Error(ErrorKind::InvalidParams, "Savitzky-Golay order must be smaller than the window");
  }
}

std::vector<double> savgol_coefficients(const SGParams& p, std::size_t position) {
  p.validate();
  if (position >= p.window) throw Error(ErrorKind::InvalidParams, "position outside the window");

  const auto rows = static_cast<Eigen::Index>(p.window);
  const auto cols = static_cast<Eigen::Index>(p.order + 1);
  const double centre = static_cast<double>(p.window / 2);
  // Vandermonde on offsets from the window centre keeps the system well scaled.
  Eigen::MatrixXd v(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const double x = static_cast<double>(i) - centre;
    double power = 1.0;
    for (Eigen::Index j = 0; j < cols; ++j) {
      v(i, j) = power;
      power *= x;
    }
  }
  Eigen::VectorXd eval(cols);
  const double x0 = static_cast<double>(position) - centre;
  double power = 1.0;
  for (Eigen::Index j = 0; j < cols; ++j) {
    eval[j] = power;
    power *= x0;
  }
  // Weights w with w^T y = eval^T (V^T V)^{-1} V^T y.
  const Eigen::VectorXd w = v * (v.transpose() * v).ldlt().solve(eval);
  return {w.data(), w.data() + w.size()};
}

Signal savitzky_golay(const Signal& y, const SGParams& p) {
  p.validate();
  const std::size_t n = y.size();
  if (n < p.window) {
    throw Error(ErrorKind::InvalidParams, "signal shorter than the Savitzky-Golay window");
  }
  const std::size_t half = p.window / 2;

  std::vector<std::vector<double>> weights(p.window);
  for (std::size_t pos = 0; pos < p.window; ++pos) weights[pos] = savgol_coefficients(p, pos);

  std::vector<double> out(n);
  const auto data = y.samples();
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t start = 0;
    std::size_t pos = half;
    if (i < half) {
      pos = i;
    } else if (i + half >= n) {
      start = n - p.window;
      pos = i - start;
    } else {
      start = i - half;
    }
    const auto& w = weights[pos];
    double acc = 0.0;
    for (std::size_t k = 0; k < p.window; ++k) acc += w[k] * data[start + k];
    out[i] = acc;
  }
  return y.with_samples(std::move(out));
}

Signal moving_average(const Signal& y, std::size_t window) {
  if (window < 1 || window % 2 == 0) {
    throw Error(ErrorKind::InvalidParams, "moving-average window must be odd");
  }
  const std::size_t n = y.size();
  if (n < window) throw Error(ErrorKind::InvalidParams, "signal shorter than the window");
  const std::size_t half = window / 2;
  const auto data = y.samples();

  std::vector<double> out(n);
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lo = i >= half ? i - half : 0;
    const std::size_t hi = std::min(n - 1, i + half);
    double acc = 0.0;
    for (std::size_t k = lo; k <= hi; ++k) acc += data[k];
    out[i] = acc / static_cast<double>(hi - lo + 1);
  }
  return y.with_samples(std::move(out));
}

}  // namespace scsa
