#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace fqg {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RowVector = Eigen::RowVectorXcd;
using Index = Eigen::Index;

/// Kronecker product with the left factor slowest (row-major tensor order).
Matrix kron(const Matrix& a, const Matrix& b);

/// Permutation matrix of the flip x⊗y ↦ y⊗x on ℂ^dimA ⊗ ℂ^dimB.
Matrix flip_matrix(Index dimA, Index dimB);

/// Column-stacked copy of a matrix, row-major over (row, col).
Vector vectorize(const Matrix& m);
Matrix unvectorize(const Vector& v, Index rows, Index cols);

/// Numerical rank: singular values above tol * max(1, σ_max).
Index numerical_rank(const Matrix& m, double tol);

Eigen::VectorXd singular_values(const Matrix& m);

/// Least-squares projector onto the column span of a matrix.
///
/// Membership of a vector in the span is decided by the residual of the
/// projection; coefficients are only meaningful when the columns are
/// linearly independent.
class SpanProjector {
 public:
  SpanProjector() = default;
  explicit SpanProjector(const Matrix& columns);

  Index ambient_dim() const { return columns_.rows(); }
  Index size() const { return columns_.cols(); }
  Index rank() const { return qr_.rank(); }
  const Matrix& columns() const { return columns_; }

  Vector coefficients(const Vector& v) const;
  /// ‖v − P v‖ for the orthogonal projection P onto the span.
  double residual(const Vector& v) const;

 private:
  Matrix columns_;
  Eigen::ColPivHouseholderQR<Matrix> qr_;
};

}  // namespace fqg
