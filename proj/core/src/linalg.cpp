#include "fqg/linalg.hpp"

#include <algorithm>

#include "fqg/error.hpp"

namespace fqg {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix flip_matrix(Index dimA, Index dimB) {
  if (dimA < 1 || dimB < 1) {
    throw Error(ErrorCode::InvalidArgument, "flip dimensions must be positive");
  }
  Matrix out = Matrix::Zero(dimA * dimB, dimA * dimB);
  for (Index a = 0; a < dimA; ++a) {
    for (Index b = 0; b < dimB; ++b) {
      out(b * dimA + a, a * dimB + b) = 1.0;
    }
  }
  return out;
}

Vector vectorize(const Matrix& m) {
  Vector v(m.size());
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) v(i * m.cols() + j) = m(i, j);
  }
  return v;
}

Matrix unvectorize(const Vector& v, Index rows, Index cols) {
  if (v.size() != rows * cols) {
    throw Error(ErrorCode::DimensionMismatch, "unvectorize: size does not match shape");
  }
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) m(i, j) = v(i * cols + j);
  }
  return m;
}

Eigen::VectorXd singular_values(const Matrix& m) {
  if (m.size() == 0) return {};
  return Eigen::BDCSVD<Matrix>(m).singularValues();
}

Index numerical_rank(const Matrix& m, double tol) {
  const Eigen::VectorXd s = singular_values(m);
  if (s.size() == 0) return 0;
  const double threshold = tol * std::max(1.0, s(0));
  return static_cast<Index>(std::count_if(s.begin(), s.end(), [&](double x) { return x > threshold; }));
}

SpanProjector::SpanProjector(const Matrix& columns) : columns_(columns), qr_(columns) {}

Vector SpanProjector::coefficients(const Vector& v) const {
  if (v.size() != columns_.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "span projection: vector length mismatch");
  }
  return qr_.solve(v);
}

double SpanProjector::residual(const Vector& v) const {
  return (columns_ * coefficients(v) - v).norm();
}

}  // namespace fqg
