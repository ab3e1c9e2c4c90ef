#include "scsa/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <string>

#include <lapacke.h>

#include "scsa/error.hpp"

extern "C" void openblas_set_num_threads(int num_threads);

namespace scsa {
namespace {

// One eigendecomposition per thread of control; parallelism lives in the h scan.
void pin_blas_to_single_thread() {
  static std::once_flag once;
  std::call_once(once, [] { openblas_set_num_threads(1); });
}

}  // namespace

OperatorMatrix::OperatorMatrix(Eigen::MatrixXd entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) {
    throw Error(ErrorKind::InvalidInput, "operator matrix must be square");
  }
  const double scale = entries_.size() == 0 ? 0.0 : entries_.cwiseAbs().maxCoeff();
  const double asym =
      entries_.size() == 0 ? 0.0 : (entries_ - entries_.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-10 * scale) {
    throw Error(ErrorKind::InvalidInput, "operator matrix is not symmetric");
  }
}

void SchrodingerSpectrum::validate(double norm_tol) const {
  if (static_cast<std::size_t>(eigenfunctions.cols()) != kappas.size()) {
    throw Error(ErrorKind::InvalidInput, "eigenfunction count does not match kappa count");
  }
  for (std::size_t n = 0; n < kappas.size(); ++n) {
    if (!(kappas[n] > 0.0)) throw Error(ErrorKind::InvalidInput, "kappa must be positive");
    if (n > 0 && kappas[n] > kappas[n - 1]) {
      throw Error(ErrorKind::InvalidInput, "kappas must be sorted in descending order");
    }
    const double norm = eigenfunctions.col(static_cast<Eigen::Index>(n)).squaredNorm() * delta;
    if (std::abs(norm - 1.0) > norm_tol) {
      throw Error(ErrorKind::InvalidInput,
                  "eigenfunction " + std::to_string(n) + " is not L2-normalized");
    }
  }
}

OperatorMatrix fourier_diff2_matrix(std::size_t n, double delta) {
  if (n < Signal::kMinSamples || n % 2 != 0) {
    throw Error(ErrorKind::InvalidGrid,
                "Fourier differentiation needs an even grid of at least 8 points, got " +
                    std::to_string(n));
  }
  if (!(delta > 0.0)) throw Error(ErrorKind::InvalidGrid, "grid spacing must be positive");

  using std::numbers::pi;
  const double period = static_cast<double>(n) * delta;
  const double scale = (2.0 * pi / period) * (2.0 * pi / period);

  // Symmetric Toeplitz: entries depend only on |i - j|.
  std::vector<double> band(n);
  band[0] = -pi * pi / (3.0 * delta * delta) - scale / 6.0;
  for (std::size_t k = 1; k < n; ++k) {
    const double s = std::sin(pi * static_cast<double>(k) / static_cast<double>(n));
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    band[k] = -scale * sign / (2.0 * s * s);
  }

  const auto size = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd d(size, size);
  for (Eigen::Index j = 0; j < size; ++j) {
    for (Eigen::Index i = 0; i < size; ++i) {
      d(i, j) = band[static_cast<std::size_t>(std::abs(i - j))];
    }
  }
  return OperatorMatrix(std::move(d));
}

AssembledOperator assemble_operator(const Signal& y, double h) {
  return assemble_operator(y, h, fourier_diff2_matrix(y.size(), y.delta()));
}

AssembledOperator assemble_operator(const Signal& y, double h, const OperatorMatrix& diff2) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw Error(ErrorKind::InvalidParams, "semi-classical parameter h must be positive");
  }
  if (static_cast<std::size_t>(diff2.size()) != y.size()) {
    throw Error(ErrorKind::InvalidInput, "differentiation matrix does not match signal length");
  }
  const double lowest = y.min();
  const double shift = lowest < 0.0 ? -lowest : 0.0;

  Eigen::MatrixXd a = -(h * h) * diff2.entries();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    a(i, i) -= y[static_cast<std::size_t>(i)] + shift;
  }
  return {OperatorMatrix(std::move(a)), shift};
}

SchrodingerSpectrum negative_eigenpairs(const OperatorMatrix& a, double delta,
                                        std::optional<double> tol) {
  if (!(delta > 0.0)) throw Error(ErrorKind::InvalidGrid, "grid spacing must be positive");
  pin_blas_to_single_thread();

  const lapack_int n = static_cast<lapack_int>(a.size());
  const double threshold = tol.value_or(1e-12 * a.max_abs());

  SchrodingerSpectrum spectrum;
  spectrum.delta = delta;
  if (n == 0) {
    spectrum.eigenfunctions.resize(0, 0);
    return spectrum;
  }

  Eigen::MatrixXd work = a.entries();
  Eigen::VectorXd values(n);
  Eigen::MatrixXd vectors(n, n);
  std::vector<lapack_int> support(2 * static_cast<std::size_t>(n));
  lapack_int found = 0;

  // Only eigenvalues in (-inf, -tol) are requested.
  const double upper = std::nextafter(-threshold, -std::numeric_limits<double>::infinity());
  const double lower = -std::numeric_limits<double>::max();
  const lapack_int info = LAPACKE_dsyevr(LAPACK_COL_MAJOR, 'V', 'V', 'L', n, work.data(), n,
                                         lower, upper, 0, 0, LAPACKE_dlamch('S'), &found,
                                         values.data(), vectors.data(), n, support.data());
  if (info != 0) {
    throw Error(ErrorKind::NumericalFailure,
                "symmetric eigensolver failed (info = " + std::to_string(info) + ")");
  }

  // dsyevr returns ascending eigenvalues, i.e. descending kappa.
  spectrum.kappas.resize(static_cast<std::size_t>(found));
  spectrum.eigenfunctions.resize(n, found);
  const double norm = 1.0 / std::sqrt(delta);
  for (lapack_int k = 0; k < found; ++k) {
    spectrum.kappas[static_cast<std::size_t>(k)] = std::sqrt(-values[k]);
    auto column = spectrum.eigenfunctions.col(k);
    column = vectors.col(k) * (norm / vectors.col(k).norm());
    Eigen::Index peak = 0;
    column.cwiseAbs().maxCoeff(&peak);
    if (column[peak] < 0.0) column = -column;
  }
  return spectrum;
}

Signal reconstruct(const SchrodingerSpectrum& spectrum) {
  spectrum.validate();
  const auto n = static_cast<Eigen::Index>(spectrum.grid_size());
  std::vector<double> out(static_cast<std::size_t>(n), 0.0);
  for (std::size_t k = 0; k < spectrum.count(); ++k) {
    const double weight = 4.0 * spectrum.h * spectrum.kappas[k];
    const auto column = spectrum.eigenfunctions.col(static_cast<Eigen::Index>(k));
    for (Eigen::Index i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] += weight * column[i] * column[i];
  }
  for (double& v : out) v -= spectrum.shift;
  return Signal(std::move(out), spectrum.delta, spectrum.t0);
}

ScsaResult scsa_transform(const Signal& y, double h) {
  return scsa_transform(y, h, fourier_diff2_matrix(y.size(), y.delta()));
}

ScsaResult scsa_transform(const Signal& y, double h, const OperatorMatrix& diff2) {
  AssembledOperator op = assemble_operator(y, h, diff2);
  SchrodingerSpectrum spectrum = negative_eigenpairs(op.matrix, y.delta());
  spectrum.h = h;
  spectrum.shift = op.shift;
  spectrum.t0 = y.t0();
  Signal reconstruction = reconstruct(spectrum);
  return {std::move(spectrum), std::move(reconstruction)};
}

}  // namespace scsa
