#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "scsa/signal.hpp"

namespace scsa {

/// Dense real symmetric matrix. Construction checks squareness and symmetry
/// (max|A - A^T| <= 1e-10 max|A|).
class OperatorMatrix {
 public:
  explicit OperatorMatrix(Eigen::MatrixXd entries);

  const Eigen::MatrixXd& entries() const noexcept { return entries_; }
  Eigen::Index size() const noexcept { return entries_.rows(); }
  double max_abs() const noexcept { return entries_.cwiseAbs().maxCoeff(); }

 private:
  Eigen::MatrixXd entries_;
};

struct AssembledOperator {
  OperatorMatrix matrix;
  /// Added to the potential so it is non-negative; subtracted again after reconstruction.
  double shift;
};

/// Negative part of the Schrodinger spectrum for one h. Column n of
/// eigenfunctions holds psi_n on the grid with sum psi^2 * delta = 1; kappas
/// are sqrt(-lambda) in non-increasing order.
struct SchrodingerSpectrum {
  double h = 0.0;
  double shift = 0.0;
  double delta = 1.0;
  double t0 = 0.0;
  std::vector<double> kappas;
  Eigen::MatrixXd eigenfunctions;

  std::size_t count() const noexcept { return kappas.size(); }
  std::size_t grid_size() const noexcept { return static_cast<std::size_t>(eigenfunctions.rows()); }

  /// Throws InvalidInput if the ordering, positivity, shape or normalization invariant is broken.
  void validate(double norm_tol = 1e-9) const;
};

struct ScsaResult {
  SchrodingerSpectrum spectrum;
  Signal reconstruction;
};

/// Periodic Fourier pseudo-spectral approximation of d^2/dt^2 on n points
/// spaced delta apart (period n*delta). n must be even and >= 8.
OperatorMatrix fourier_diff2_matrix(std::size_t n, double delta);

/// -h^2 D - diag(y + shift), shift = -min(y) when y dips below zero.
AssembledOperator assemble_operator(const Signal& y, double h);
AssembledOperator assemble_operator(const Signal& y, double h, const OperatorMatrix& diff2);

/// All eigenpairs with lambda < -tol (default tol = 1e-12 max|A|). The
/// returned spectrum has h = shift = 0; callers fill them in.
SchrodingerSpectrum negative_eigenpairs(const OperatorMatrix& a, double delta,
                                        std::optional<double> tol = std::nullopt);

/// y_h = 4h sum_n kappa_n psi_n^2 - shift.
Signal reconstruct(const SchrodingerSpectrum& spectrum);

ScsaResult scsa_transform(const Signal& y, double h);
/// Same as above with a precomputed fourier_diff2_matrix(y.size(), y.delta()).
ScsaResult scsa_transform(const Signal& y, double h, const OperatorMatrix& diff2);

}  // namespace scsa
