#pragma once

#include <Eigen/Dense>
#include <complex>

#include "interferoq/errors.hpp"

namespace iq {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kSupportTolDefault = 1e-10;

// Largest |entry|, zero for empty matrices.
double max_abs(const Matrix& m);

// max_ij |M_ij - conj(M_ji)| <= tol * max|M|
bool is_hermitian(const Matrix& m, double tol = kHermitianTol);

bool is_diagonal(const Matrix& m, double tol = kHermitianTol);

// Eigen-decomposition of a Hermitian matrix, eigenvalues sorted descending.
struct SpectralDecomposition {
  RealVector eigenvalues;  // descending
  Matrix eigenvectors;     // column i pairs with eigenvalues[i]
  double support_tol = kSupportTolDefault;

  // Number of leading eigenvalues above support_tol.
  int support_dim() const;
  // Total weight in eigenvalues at or below support_tol.
  double discarded_weight() const;
};

// Throws SymmetryError unless the input is Hermitian within kHermitianTol.
SpectralDecomposition eigendecompose_hermitian(const Matrix& m,
                                               double support_tol = kSupportTolDefault);

}  // namespace iq
